#include "bggkit/exterior.hpp"

#include <algorithm>

namespace bggkit {

ModuleAxiomError::ModuleAxiomError(const AxiomWitness& w)
    : InputError(w.i == w.k
                     ? "E-module axiom violated: e_" + std::to_string(w.i + 1) + "^2 != 0 on piece " +
                           std::to_string(w.piece)
                     : "E-module axiom violated: e_" + std::to_string(w.i + 1) + " e_" +
                           std::to_string(w.k + 1) + " + e_" + std::to_string(w.k + 1) + " e_" +
                           std::to_string(w.i + 1) + " != 0 on piece " + std::to_string(w.piece)),
      witness_(w) {}

void validate_shapes(const ExteriorModule& m) {
  if (m.q < 1) throw InputError("q must be positive");
  if (m.piece_dims.empty()) throw InputError("module needs at least one piece");
  for (auto dim : m.piece_dims) {
    if (dim < 0) throw InputError("piece dimensions must be non-negative");
  }
  const std::int64_t d = m.top_index();
  if (static_cast<std::int64_t>(m.actions.size()) != m.q) {
    throw InputError("expected " + std::to_string(m.q) + " action lists, got " + std::to_string(m.actions.size()));
  }
  for (std::int64_t i = 0; i < m.q; ++i) {
    const auto& list = m.actions[static_cast<std::size_t>(i)];
    if (static_cast<std::int64_t>(list.size()) != d) {
      throw InputError("action of e_" + std::to_string(i + 1) + " must have " + std::to_string(d) + " matrices");
    }
    for (std::int64_t j = 0; j < d; ++j) {
      const auto& a = list[static_cast<std::size_t>(j)];
      if (a.rows() != m.piece_dims[static_cast<std::size_t>(j + 1)] ||
          a.cols() != m.piece_dims[static_cast<std::size_t>(j)]) {
        throw InputError("action of e_" + std::to_string(i + 1) + " on piece " + std::to_string(j) +
                         " has shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         ", expected " + std::to_string(m.piece_dims[static_cast<std::size_t>(j + 1)]) + "x" +
                         std::to_string(m.piece_dims[static_cast<std::size_t>(j)]));
      }
    }
  }
}

std::optional<AxiomWitness> find_axiom_violation(const ExteriorModule& m) {
  const std::int64_t d = m.top_index();
  for (std::int64_t j = 0; j + 1 < d; ++j) {
    for (std::int64_t i = 0; i < m.q; ++i) {
      for (std::int64_t k = i; k < m.q; ++k) {
        MatrixQ sum = m.action(k, j + 1) * m.action(i, j);
        if (k != i) sum += m.action(i, j + 1) * m.action(k, j);
        if (!sum.isZero()) return AxiomWitness{i, k, j};
      }
    }
  }
  return std::nullopt;
}

void validate_module(const ExteriorModule& m) {
  validate_shapes(m);
  if (auto w = find_axiom_violation(m)) throw ModuleAxiomError(*w);
}

ExteriorModule direct_sum(const ExteriorModule& a, const ExteriorModule& b) {
  validate_shapes(a);
  validate_shapes(b);
  if (a.q != b.q) throw InputError("direct sum needs modules over the same exterior algebra");
  const std::size_t pieces = std::max(a.piece_dims.size(), b.piece_dims.size());
  auto dim = [](const ExteriorModule& m, std::size_t j) -> std::int64_t {
    return j < m.piece_dims.size() ? m.piece_dims[j] : 0;
  };
  ExteriorModule out;
  out.q = a.q;
  for (std::size_t j = 0; j < pieces; ++j) out.piece_dims.push_back(dim(a, j) + dim(b, j));
  out.actions.resize(static_cast<std::size_t>(a.q));
  for (std::int64_t i = 0; i < a.q; ++i) {
    for (std::size_t j = 0; j + 1 < pieces; ++j) {
      MatrixQ block = MatrixQ::Zero(out.piece_dims[j + 1], out.piece_dims[j]);
      if (j + 1 < a.piece_dims.size()) {
        block.topLeftCorner(dim(a, j + 1), dim(a, j)) = a.action(i, static_cast<std::int64_t>(j));
      }
      if (j + 1 < b.piece_dims.size()) {
        block.bottomRightCorner(dim(b, j + 1), dim(b, j)) = b.action(i, static_cast<std::int64_t>(j));
      }
      out.actions[static_cast<std::size_t>(i)].push_back(std::move(block));
    }
  }
  return out;
}

}  // namespace bggkit
