#include "bggkit/dense.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace bggkit {

MatrixZ clear_denominators(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(i, j)));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = boost::multiprecision::numerator(m(i, j)) *
                  (scale / boost::multiprecision::denominator(m(i, j)));
    }
  }
  return out;
}

Eigen::Index rank(const MatrixQ& m) {
  if (m.size() == 0) return 0;
  return domain_rank(clear_denominators(m));
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::int64_t block_rank(std::int64_t rows, std::int64_t cols, std::span<const Entry> entries) {
  // Sum duplicates and drop zeros first so that cancelled entries do not glue blocks.
  std::vector<Entry> merged(entries.begin(), entries.end());
  std::sort(merged.begin(), merged.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  std::size_t kept = 0;
  for (std::size_t k = 0; k < merged.size();) {
    Entry acc = std::move(merged[k]);
    std::size_t next = k + 1;
    while (next < merged.size() && merged[next].row == acc.row && merged[next].col == acc.col) {
      acc.value += merged[next].value;
      ++next;
    }
    if (acc.value != 0) merged[kept++] = std::move(acc);
    k = next;
  }
  merged.resize(kept);
  if (merged.empty()) return 0;

  // Vertices: rows are 0..rows-1, columns are rows..rows+cols-1.
  DisjointSets sets(static_cast<std::size_t>(rows + cols));
  for (const auto& e : merged) {
    sets.unite(static_cast<std::size_t>(e.row), static_cast<std::size_t>(rows + e.col));
  }
  std::vector<std::pair<std::size_t, std::size_t>> by_block;  // (root, entry index)
  by_block.reserve(merged.size());
  for (std::size_t k = 0; k < merged.size(); ++k) {
    by_block.emplace_back(sets.find(static_cast<std::size_t>(merged[k].row)), k);
  }
  std::sort(by_block.begin(), by_block.end());

  std::int64_t total = 0;
  std::vector<std::int64_t> block_rows;
  std::vector<std::int64_t> block_cols;
  for (std::size_t start = 0; start < by_block.size();) {
    std::size_t stop = start;
    while (stop < by_block.size() && by_block[stop].first == by_block[start].first) ++stop;
    block_rows.clear();
    block_cols.clear();
    for (std::size_t k = start; k < stop; ++k) {
      block_rows.push_back(merged[by_block[k].second].row);
      block_cols.push_back(merged[by_block[k].second].col);
    }
    std::sort(block_rows.begin(), block_rows.end());
    block_rows.erase(std::unique(block_rows.begin(), block_rows.end()), block_rows.end());
    std::sort(block_cols.begin(), block_cols.end());
    block_cols.erase(std::unique(block_cols.begin(), block_cols.end()), block_cols.end());
    if (block_rows.size() == 1 || block_cols.size() == 1) {
      total += 1;  // connected, nonzero, and a single row or column
    } else {
      MatrixQ dense = MatrixQ::Zero(static_cast<Eigen::Index>(block_rows.size()),
                                    static_cast<Eigen::Index>(block_cols.size()));
      for (std::size_t k = start; k < stop; ++k) {
        const Entry& e = merged[by_block[k].second];
        auto r = std::lower_bound(block_rows.begin(), block_rows.end(), e.row) - block_rows.begin();
        auto c = std::lower_bound(block_cols.begin(), block_cols.end(), e.col) - block_cols.begin();
        dense(r, c) = e.value;
      }
      total += rank(dense);
    }
    start = stop;
  }
  return total;
}

MatrixQ to_dense(std::int64_t rows, std::int64_t cols, std::span<const Entry> entries) {
  MatrixQ out = MatrixQ::Zero(rows, cols);
  for (const auto& e : entries) out(e.row, e.col) += e.value;
  return out;
}

}  // namespace bggkit
