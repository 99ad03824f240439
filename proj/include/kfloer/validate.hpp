#pragma once

#include "kfloer/complex.hpp"

#include <array>
#include <string>
#include <vector>

namespace kfloer {

enum class ComplexRole { KComplex, Acyclic, Invalid };

std::string_view role_name(ComplexRole role) noexcept;

struct AxiomCheck {
  std::string name;
  bool passed = true;
  /// Advisory checks are reported but never reject a complex.
  bool advisory = false;
  /// On failure, what went wrong and where (generator names).
  std::string witness;
};

/// Homology of one connected component of the arrow graph.
struct ComponentSummary {
  std::vector<std::string> generators;
  /// dim H_g for g = -1, 0, 1, 2.
  std::array<std::size_t, 4> homology{};
  ComplexRole role = ComplexRole::Invalid;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  /// dim H_g of the whole complex for g = -1, 0, 1, 2.
  std::array<std::size_t, 4> homology{};
  ComplexRole role = ComplexRole::Invalid;
  std::vector<ComponentSummary> components;

  /// Accepted as a K-complex by the engine.
  bool ok() const noexcept { return role == ComplexRole::KComplex; }
  /// First failed mandatory check, or nullptr.
  const AxiomCheck* first_failure() const noexcept;
};

/// Checks grading drop, filtration monotonicity, d^2 = 0, the homology of
/// the full complex (on slices -1..2), the normalization gamma(0) = gamma(2) = 0
/// and, as an advisory, the swap symmetry of the bifiltration multiset.
ValidationReport validate(const ModelComplex& c);

/// Throws InvalidComplexError naming the first failed check unless c is a K-complex.
void require_kcomplex(const ModelComplex& c);

}  // namespace kfloer
