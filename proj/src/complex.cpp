#include "kfloer/complex.hpp"

#include "kfloer/errors.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace kfloer {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.i << ',' << p.j << ')';
}

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

ModelComplex::Builder& ModelComplex::Builder::generator(std::string name, std::int64_t grading,
                                                        LatticePoint point) {
  generators_.push_back({std::move(name), grading, point});
  return *this;
}

ModelComplex::Builder& ModelComplex::Builder::arrow(const std::string& from, const std::string& to,
                                                    std::int64_t u_power) {
  arrows_.emplace_back(from, to, u_power);
  return *this;
}

ModelComplex ModelComplex::Builder::build() const {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < generators_.size(); ++k) index.emplace(generators_[k].name, k);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw InvalidComplexError("unknown generator '" + name + "'");
    return it->second;
  };
  std::vector<std::vector<BoundaryTerm>> boundary(generators_.size());
  for (const auto& [from, to, u] : arrows_) boundary[lookup(from)].push_back({u, lookup(to)});
  return ModelComplex(generators_, std::move(boundary));
}

ModelComplex::ModelComplex(std::vector<Generator> generators,
                           std::vector<std::vector<BoundaryTerm>> boundary)
    : generators_(std::move(generators)), boundary_(std::move(boundary)) {
  if (boundary_.size() != generators_.size())
    throw InvalidComplexError("boundary list does not match the generator list");
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (generators_[k].name.empty()) throw InvalidComplexError("generator with empty name");
    if (!index_.emplace(generators_[k].name, k).second)
      throw InvalidComplexError("duplicate generator '" + generators_[k].name + "'");
  }
  for (auto& terms : boundary_) {
    for (const auto& t : terms) {
      if (t.target >= generators_.size())
        throw InvalidComplexError("boundary term refers to a missing generator");
      if (t.u_power < 0) throw InvalidComplexError("negative U power in boundary term");
    }
    // Coefficients live in F2: equal terms cancel in pairs.
    std::sort(terms.begin(), terms.end());
    std::vector<BoundaryTerm> reduced;
    for (const auto& t : terms) {
      if (!reduced.empty() && reduced.back() == t) {
        reduced.pop_back();
      } else {
        reduced.push_back(t);
      }
    }
    terms = std::move(reduced);
  }
}

std::optional<std::size_t> ModelComplex::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool even(std::int64_t n) { return n % 2 == 0; }

}  // namespace

GradedSlice grading_slice(const ModelComplex& c, std::int64_t grading) {
  GradedSlice slice;
  slice.grading = grading;
  slice.position_of.assign(c.size(), -1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& g = c.generator(k);
    if (!even(g.grading - grading)) continue;
    const std::int64_t u = (g.grading - grading) / 2;
    slice.position_of[k] = static_cast<std::int64_t>(slice.elements.size());
    slice.elements.push_back({k, u, {g.point.i - u, g.point.j - u}});
  }
  return slice;
}

F2Matrix slice_boundary(const ModelComplex& c, std::int64_t grading) {
  const GradedSlice source = grading_slice(c, grading);
  const GradedSlice target = grading_slice(c, grading - 1);
  F2Matrix m(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& el = source.elements[col];
    for (const auto& term : c.boundary(el.gen)) {
      const std::int64_t row = target.position_of[term.target];
      // A term of the wrong parity breaks the grading axiom; validate() reports it.
      if (row < 0) continue;
      m.flip(static_cast<std::size_t>(row), col);
    }
  }
  return m;
}

std::size_t homology_dimension(const ModelComplex& c, std::int64_t grading) {
  const F2Matrix out = slice_boundary(c, grading);
  const F2Matrix in = slice_boundary(c, grading + 1);
  return out.cols() - f2_rank(out) - f2_rank(in);
}

CycleCoset generator_coset(const ModelComplex& c) {
  CycleCoset coset;
  coset.slice = grading_slice(c, 0);
  const F2Matrix d0 = slice_boundary(c, 0);
  const F2Matrix d1 = slice_boundary(c, 1);
  coset.boundaries = f2_column_basis(d1);
  const std::vector<F2Vector> cycles = f2_kernel(d0);
  if (cycles.size() != coset.boundaries.size() + 1) {
    throw InvalidComplexError("dim H_0 = " +
                              std::to_string(cycles.size() - coset.boundaries.size()) +
                              ", expected 1");
  }
  F2Echelon ech(coset.slice.size());
  for (const auto& b : coset.boundaries) ech.insert(b);
  for (const auto& z : cycles) {
    if (!ech.contains(z)) {
      coset.z0 = z;
      return coset;
    }
  }
  throw ConsistencyError("no cycle outside the boundary space despite dim H_0 = 1");
}

namespace {

std::string dual_name(const std::string& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

std::string factor_name(const std::string& name) {
  if (name.find('.') == std::string::npos) return name;
  return "(" + name + ")";
}

}  // namespace

ModelComplex dual(const ModelComplex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators())
    gens.push_back({dual_name(g.name), -g.grading, {-g.point.i, -g.point.j}});
  std::vector<std::vector<BoundaryTerm>> boundary(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (const auto& term : c.boundary(x)) boundary[term.target].push_back({term.u_power, x});
  }
  return ModelComplex(std::move(gens), std::move(boundary));
}

ModelComplex tensor(const ModelComplex& a, const ModelComplex& b) {
  const std::size_t nb = b.size();
  std::vector<Generator> gens;
  gens.reserve(a.size() * nb);
  for (const auto& ga : a.generators()) {
    for (const auto& gb : b.generators()) {
      gens.push_back({factor_name(ga.name) + "." + factor_name(gb.name), ga.grading + gb.grading,
                      ga.point + gb.point});
    }
  }
  std::vector<std::vector<BoundaryTerm>> boundary(gens.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      auto& terms = boundary[x * nb + y];
      for (const auto& t : a.boundary(x)) terms.push_back({t.u_power, t.target * nb + y});
      for (const auto& t : b.boundary(y)) terms.push_back({t.u_power, x * nb + t.target});
    }
  }
  return ModelComplex(std::move(gens), std::move(boundary));
}

ModelComplex tensor_power(const ModelComplex& a, int n) {
  if (n < 1) throw DomainError("tensor power needs n >= 1");
  ModelComplex out = a;
  for (int k = 1; k < n; ++k) out = tensor(out, a);
  return out;
}

ModelComplex direct_sum(const ModelComplex& a, const ModelComplex& b) {
  std::vector<Generator> gens = a.generators();
  std::set<std::string> taken;
  for (const auto& g : gens) taken.insert(g.name);
  const std::size_t offset = a.size();
  for (const auto& g : b.generators()) {
    Generator copy = g;
    while (taken.contains(copy.name)) copy.name += "'";
    taken.insert(copy.name);
    gens.push_back(std::move(copy));
  }
  std::vector<std::vector<BoundaryTerm>> boundary;
  boundary.reserve(gens.size());
  for (std::size_t x = 0; x < a.size(); ++x) boundary.push_back(a.boundary(x));
  for (std::size_t y = 0; y < b.size(); ++y) {
    auto terms = b.boundary(y);
    for (auto& t : terms) t.target += offset;
    boundary.push_back(std::move(terms));
  }
  return ModelComplex(std::move(gens), std::move(boundary));
}

ModelComplex empty_complex() { return ModelComplex(); }

}  // namespace kfloer
