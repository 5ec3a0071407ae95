#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bggkit/dense.hpp"
#include "bggkit/error.hpp"

namespace bggkit {

/// Finite graded module over the exterior algebra on a q-dimensional space V.
/// Piece j (j = 0..d) has module degree d - j; the basis vector e_i of V acts
/// P_j -> P_{j+1} by actions[i][j], a piece_dims[j+1] x piece_dims[j] matrix.
struct ExteriorModule {
  std::int64_t q = 0;
  std::vector<std::int64_t> piece_dims;
  std::vector<std::vector<MatrixQ>> actions;

  std::int64_t top_index() const { return static_cast<std::int64_t>(piece_dims.size()) - 1; }
  const MatrixQ& action(std::int64_t i, std::int64_t j) const {
    return actions.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
};

/// Where an E-module identity fails: e_i e_k + e_k e_i != 0 on piece j (i == k
/// for the square-zero identity).
struct AxiomWitness {
  std::int64_t i = 0;
  std::int64_t k = 0;
  std::int64_t piece = 0;
};

class ModuleAxiomError : public InputError {
 public:
  explicit ModuleAxiomError(const AxiomWitness& w);
  const AxiomWitness& witness() const { return witness_; }

 private:
  AxiomWitness witness_;
};

/// Throws InputError on inconsistent shapes.
void validate_shapes(const ExteriorModule& m);

/// First violated square-zero / anticommutation identity, if any (shapes must be valid).
std::optional<AxiomWitness> find_axiom_violation(const ExteriorModule& m);

/// Shape check plus the E-module identities; throws ModuleAxiomError with a witness.
void validate_module(const ExteriorModule& m);

/// Direct sum, aligned at piece 0 and padded with zero pieces.
ExteriorModule direct_sum(const ExteriorModule& a, const ExteriorModule& b);

}  // namespace bggkit
