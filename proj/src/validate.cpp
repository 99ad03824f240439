#include "kfloer/validate.hpp"

#include "kfloer/errors.hpp"
#include "kfloer/upsilon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kfloer {

std::string_view role_name(ComplexRole role) noexcept {
  switch (role) {
    case ComplexRole::KComplex: return "K-complex";
    case ComplexRole::Acyclic: return "acyclic";
    case ComplexRole::Invalid: return "invalid";
  }
  return "invalid";
}

const AxiomCheck* ValidationReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed && !c.advisory) return &c;
  }
  return nullptr;
}

namespace {

std::string term_str(const ModelComplex& c, const BoundaryTerm& t) {
  std::string s = t.u_power > 0 ? "U^" + std::to_string(t.u_power) + " " : "";
  return s + c.generator(t.target).name;
}

AxiomCheck check_grading(const ModelComplex& c) {
  AxiomCheck check{"grading-drop"};
  for (std::size_t x = 0; x < c.size() && check.passed; ++x) {
    const auto& gx = c.generator(x);
    for (const auto& t : c.boundary(x)) {
      const auto& gy = c.generator(t.target);
      if (gy.grading - 2 * t.u_power != gx.grading - 1) {
        check.passed = false;
        check.witness = "d(" + gx.name + ") contains " + term_str(c, t) + " of grading " +
                        std::to_string(gy.grading - 2 * t.u_power) + ", expected " +
                        std::to_string(gx.grading - 1);
        break;
      }
    }
  }
  return check;
}

AxiomCheck check_filtration(const ModelComplex& c) {
  AxiomCheck check{"filtration"};
  for (std::size_t x = 0; x < c.size() && check.passed; ++x) {
    const auto& gx = c.generator(x);
    for (const auto& t : c.boundary(x)) {
      const auto& gy = c.generator(t.target);
      if (gy.point.i - t.u_power > gx.point.i || gy.point.j - t.u_power > gx.point.j) {
        check.passed = false;
        check.witness = "d(" + gx.name + ") contains " + term_str(c, t) +
                        " at a higher filtration level";
        break;
      }
    }
  }
  return check;
}

AxiomCheck check_d_squared(const ModelComplex& c) {
  AxiomCheck check{"d-squared"};
  for (std::size_t x = 0; x < c.size(); ++x) {
    std::map<BoundaryTerm, int> count;
    for (const auto& t : c.boundary(x)) {
      for (const auto& t2 : c.boundary(t.target)) ++count[{t.u_power + t2.u_power, t2.target}];
    }
    std::vector<BoundaryTerm> odd;
    for (const auto& [term, n] : count) {
      if (n % 2 != 0) odd.push_back(term);
    }
    if (!odd.empty()) {
      check.passed = false;
      std::string rhs;
      for (const auto& t : odd) rhs += (rhs.empty() ? "" : " + ") + term_str(c, t);
      check.witness = "dd(" + c.generator(x).name + ") = " + rhs;
      break;
    }
  }
  return check;
}

std::array<std::size_t, 4> slice_homology(const ModelComplex& c) {
  std::array<std::size_t, 4> h{};
  for (std::int64_t g = -1; g <= 2; ++g) h[static_cast<std::size_t>(g + 1)] = homology_dimension(c, g);
  return h;
}

constexpr std::array<std::size_t, 4> kKHomology{0, 1, 0, 1};
constexpr std::array<std::size_t, 4> kAcyclic{0, 0, 0, 0};

std::string homology_str(const std::array<std::size_t, 4>& h) {
  std::ostringstream os;
  os << "dim H_{-1,0,1,2} = (" << h[0] << "," << h[1] << "," << h[2] << "," << h[3] << ")";
  return os.str();
}

/// Translate by a power of U so the grading lands in {0, 1}.
std::tuple<std::int64_t, std::int64_t, std::int64_t> canonical_translate(const Generator& g) {
  const std::int64_t k = g.grading >= 0 ? g.grading / 2 : -((1 - g.grading) / 2);
  return {g.grading - 2 * k, g.point.i - k, g.point.j - k};
}

AxiomCheck check_symmetry(const ModelComplex& c) {
  AxiomCheck check{"swap-symmetry", true, true};
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> a, b;
  for (const auto& g : c.generators()) {
    auto [gr, i, j] = canonical_translate(g);
    a.emplace_back(gr, i, j);
    b.emplace_back(gr, j, i);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    check.passed = false;
    check.witness = "bifiltration multiset is not invariant under (i,j) -> (j,i)";
  }
  return check;
}

ModelComplex restrict_to(const ModelComplex& c, const std::vector<std::size_t>& members) {
  std::vector<std::int64_t> new_index(c.size(), -1);
  std::vector<Generator> gens;
  for (auto m : members) {
    new_index[m] = static_cast<std::int64_t>(gens.size());
    gens.push_back(c.generator(m));
  }
  std::vector<std::vector<BoundaryTerm>> boundary;
  for (auto m : members) {
    std::vector<BoundaryTerm> terms;
    for (const auto& t : c.boundary(m))
      terms.push_back({t.u_power, static_cast<std::size_t>(new_index[t.target])});
    boundary.push_back(std::move(terms));
  }
  return ModelComplex(std::move(gens), std::move(boundary));
}

std::vector<ComponentSummary> components(const ModelComplex& c) {
  std::vector<std::size_t> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (const auto& t : c.boundary(x)) parent[root(x)] = root(t.target);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < c.size(); ++x) groups[root(x)].push_back(x);
  std::vector<std::vector<std::size_t>> ordered;
  for (auto& [r, members] : groups) ordered.push_back(std::move(members));
  std::sort(ordered.begin(), ordered.end());

  std::vector<ComponentSummary> out;
  for (const auto& members : ordered) {
    ComponentSummary s;
    for (auto m : members) s.generators.push_back(c.generator(m).name);
    s.homology = slice_homology(restrict_to(c, members));
    s.role = s.homology == kAcyclic    ? ComplexRole::Acyclic
             : s.homology == kKHomology ? ComplexRole::KComplex
                                        : ComplexRole::Invalid;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

ValidationReport validate(const ModelComplex& c) {
  ValidationReport report;
  report.checks.push_back(check_grading(c));
  report.checks.push_back(check_filtration(c));
  report.checks.push_back(check_d_squared(c));
  const bool structural = std::all_of(report.checks.begin(), report.checks.end(),
                                      [](const AxiomCheck& k) { return k.passed; });

  AxiomCheck homology{"homology"};
  AxiomCheck normalization{"normalization"};
  if (structural) {
    report.homology = slice_homology(c);
    report.components = components(c);
    if (report.homology == kKHomology) {
      const CycleCoset coset = generator_coset(c);
      const Rational g0 = gamma_level(coset, 0).level;
      const Rational g2 = gamma_level(coset, 2).level;
      if (g0 != 0 || g2 != 0) {
        normalization.passed = false;
        normalization.witness = "gamma(0) = " + g0.str() + ", gamma(2) = " + g2.str() +
                                "; both must be 0";
      }
      report.role = normalization.passed ? ComplexRole::KComplex : ComplexRole::Invalid;
    } else {
      homology.passed = false;
      homology.witness = homology_str(report.homology) + ", expected (0,1,0,1)";
      normalization.witness = "not applicable";
      report.role = report.homology == kAcyclic ? ComplexRole::Acyclic : ComplexRole::Invalid;
    }
  } else {
    homology.passed = false;
    homology.witness = "skipped: structural axioms fail";
    normalization.passed = false;
    normalization.witness = "skipped: structural axioms fail";
  }
  report.checks.push_back(std::move(homology));
  report.checks.push_back(std::move(normalization));
  report.checks.push_back(check_symmetry(c));
  return report;
}

void require_kcomplex(const ModelComplex& c) {
  const ValidationReport report = validate(c);
  if (report.ok()) return;
  const AxiomCheck* failure = report.first_failure();
  std::string msg = "not a K-complex (" + std::string(role_name(report.role)) + ")";
  if (failure != nullptr) msg += ": " + failure->name + " check failed: " + failure->witness;
  throw InvalidComplexError(msg);
}

}  // namespace kfloer
