#pragma once

#include "kfloer/f2.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace kfloer {

/// Bifiltration level: i is the algebraic filtration, j the Alexander filtration.
struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);
std::string to_string(const LatticePoint& p);

struct Generator {
  std::string name;
  std::int64_t grading = 0;
  LatticePoint point;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// U^u_power . target, where target indexes the generator list.
struct BoundaryTerm {
  std::int64_t u_power = 0;
  std::size_t target = 0;

  friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
  friend auto operator<=>(const BoundaryTerm&, const BoundaryTerm&) = default;
};

/// A finite model C' of a complex C = C' (x) F[U, U^-1].
///
/// Generators carry a Maslov grading and a lattice point; the boundary of
/// each generator is a set of U-power terms over F2 (repeated terms cancel
/// in pairs when the complex is built). The value is immutable after
/// construction. Structural problems (duplicate names, dangling targets,
/// negative U powers) are rejected here; the homological axioms are checked
/// by validate().
class ModelComplex {
 public:
  /// Builder keyed by generator names.
  class Builder {
   public:
    Builder& generator(std::string name, std::int64_t grading, LatticePoint point);
    /// Adds U^u_power . to to the boundary of from.
    Builder& arrow(const std::string& from, const std::string& to, std::int64_t u_power = 0);
    ModelComplex build() const;

   private:
    std::vector<Generator> generators_;
    std::vector<std::tuple<std::string, std::string, std::int64_t>> arrows_;
  };

  ModelComplex() = default;
  ModelComplex(std::vector<Generator> generators, std::vector<std::vector<BoundaryTerm>> boundary);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const Generator& generator(std::size_t k) const { return generators_.at(k); }
  const std::vector<BoundaryTerm>& boundary(std::size_t k) const { return boundary_.at(k); }
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const ModelComplex& a, const ModelComplex& b) {
    return a.generators_ == b.generators_ && a.boundary_ == b.boundary_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<std::vector<BoundaryTerm>> boundary_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Generator `gen` translated by U^u_power; lives at grading(gen) - 2 u_power.
struct SliceElement {
  std::size_t gen = 0;
  std::int64_t u_power = 0;
  LatticePoint point;
};

/// All elements of the full complex in one grading. Ordered by generator
/// declaration order; each generator of matching parity contributes exactly
/// one element.
struct GradedSlice {
  std::int64_t grading = 0;
  std::vector<SliceElement> elements;
  /// position_of[gen] = index in `elements`, or -1 when gen has the other parity.
  std::vector<std::int64_t> position_of;

  std::size_t size() const noexcept { return elements.size(); }
};

GradedSlice grading_slice(const ModelComplex& c, std::int64_t grading);

/// Boundary map from slice g to slice g-1 (rows: slice g-1, columns: slice g).
F2Matrix slice_boundary(const ModelComplex& c, std::int64_t grading);

/// dim H_g of the full complex.
std::size_t homology_dimension(const ModelComplex& c, std::int64_t grading);

/// Cycles of grading 0 representing the nontrivial class of H_0:
/// exactly { z0 + b : b in span(boundaries) }.
struct CycleCoset {
  GradedSlice slice;
  F2Vector z0;
  /// Basis of the image of the boundary map into grading 0.
  std::vector<F2Vector> boundaries;
};

/// Throws InvalidComplexError when dim H_0 != 1.
CycleCoset generator_coset(const ModelComplex& c);

/// Mirror complex: gradings and points negated, boundary transposed.
/// Generator names gain a trailing '*' (or lose one), so dual(dual(C)) == C.
ModelComplex dual(const ModelComplex& c);

/// Tensor product over F2[U,U^-1]; generator names are "x.y" (composite
/// factor names are parenthesised).
ModelComplex tensor(const ModelComplex& a, const ModelComplex& b);
/// a (x) a (x) ... (x) a, n >= 1 factors.
ModelComplex tensor_power(const ModelComplex& a, int n);
/// Disjoint union. Names of the second summand that clash get primes appended.
ModelComplex direct_sum(const ModelComplex& a, const ModelComplex& b);

/// The empty complex (identity for direct_sum).
ModelComplex empty_complex();

}  // namespace kfloer
