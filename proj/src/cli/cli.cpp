#include "kfloer/cli.hpp"

#include "kfloer/bounds.hpp"
#include "kfloer/complex_io.hpp"
#include "kfloer/constructors.hpp"
#include "kfloer/errors.hpp"
#include "kfloer/expression.hpp"
#include "kfloer/upsilon2.hpp"
#include "kfloer/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>

namespace kfloer::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

const char* const kInfiniteNote =
    "Z- and Z+ intersect, so the connecting chain is empty: gamma^2 = -inf and "
    "Upsilon^2 = +inf under the literal definition. A convention that reports 0 "
    "here is not applied.";

struct Options {
  std::string expr;
  std::string t_text;
  std::vector<std::string> t_list;
  bool json = false;
  bool quiet = false;
  std::string csv_path;
  std::size_t samples = 201;
};

std::string frac(const Rational& r) { return r.fraction_str(); }

std::string extended_str(const ExtendedRational& r) { return r.str(); }

Json point_json(const LatticePoint& p) { return Json::array({p.i, p.j}); }

Json pl_json(const PLFunction& f) {
  Json out;
  out["breakpoints"] = Json::array();
  out["pieces"] = Json::array();
  if (f.is_finite()) {
    for (const auto& b : f.breakpoints())
      out["breakpoints"].push_back({{"x", frac(b.x)}, {"y", frac(b.y)}});
    for (const auto& p : f.pieces())
      out["pieces"].push_back({{"from", frac(p.x0)},
                               {"to", frac(p.x1)},
                               {"slope", frac(p.slope)},
                               {"intercept", frac(p.intercept)}});
  }
  out["infinite"] = f.is_finite()                                  ? "none"
                    : f.infinity() == PLFunction::Infinity::Pos ? "+inf"
                                                                  : "-inf";
  return out;
}

// "14/5 - 11s", "-s", "-2"
std::string affine_str(const Rational& intercept, const Rational& slope, char var) {
  if (slope == 0) return intercept.str();
  const Rational mag = slope.abs();
  std::string term = mag == 1 ? std::string(1, var)
                     : mag.den() == 1 ? mag.str() + var
                                      : "(" + mag.str() + ")" + var;
  if (intercept == 0) return (slope < 0 ? "-" : "") + term;
  return intercept.str() + (slope < 0 ? " - " : " + ") + term;
}

void print_pl(std::ostream& out, const PLFunction& f, const std::string& name, char var) {
  if (!f.is_finite()) {
    out << "  " << name << " = " << (f.infinity() == PLFunction::Infinity::Pos ? "+inf" : "-inf")
        << '\n';
    return;
  }
  for (const auto& p : f.pieces())
    out << "  [" << p.x0.str() << ", " << p.x1.str() << "]  " << name << " = "
        << affine_str(p.intercept, p.slope, var) << '\n';
}

void write_csv(const std::string& path, const PLFunction& f, std::size_t samples,
               const std::string& header) {
  std::ofstream csv(path);
  if (!csv) throw DomainError("cannot write CSV file '" + path + "'");
  csv << header << '\n' << std::setprecision(17);
  for (std::size_t k = 0; k < samples; ++k) {
    const Rational x(BigInt(2 * k), BigInt(samples - 1));
    const ExtendedRational y = f.evaluate(x);
    csv << x.to_double() << ',';
    if (y.is_finite())
      csv << y.value().to_double();
    else
      csv << (y == ExtendedRational::pos_inf() ? "inf" : "-inf");
    csv << '\n';
  }
}

Rational parse_t(const std::string& text) {
  const Rational t = Rational::parse(text);
  if (t <= 0 || t >= 2) throw DomainError("t = " + t.str() + " must lie in (0,2)");
  return t;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(opt.quiet ? null_ : out), err_(err) {}

  ModelComplex load() {
    try {
      return complex_from_expression(opt_.expr);
    } catch (const ParseError& e) {
      if (!e.expected().empty()) {
        err_ << "  " << opt_.expr << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
      }
      throw;
    }
  }

  int validate_cmd() {
    const ModelComplex c = load();
    const ValidationReport r = kfloer::validate(c);
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["role"] = std::string(role_name(r.role));
      j["ok"] = r.ok();
      j["homology"] = {{"-1", r.homology[0]}, {"0", r.homology[1]}, {"1", r.homology[2]},
                       {"2", r.homology[3]}};
      j["checks"] = Json::array();
      for (const auto& ch : r.checks)
        j["checks"].push_back({{"name", ch.name},
                               {"passed", ch.passed},
                               {"advisory", ch.advisory},
                               {"witness", ch.witness}});
      j["components"] = Json::array();
      for (const auto& comp : r.components)
        j["components"].push_back({{"generators", comp.generators},
                                   {"homology", comp.homology},
                                   {"role", std::string(role_name(comp.role))}});
      out_ << j.dump(2) << '\n';
    } else {
      out_ << opt_.expr << ": " << c.size() << " generators, role " << role_name(r.role) << '\n';
      for (const auto& ch : r.checks) {
        out_ << "  " << (ch.passed ? "ok  " : ch.advisory ? "warn" : "FAIL") << ' ' << ch.name;
        if (!ch.witness.empty()) out_ << ": " << ch.witness;
        out_ << '\n';
      }
      out_ << "  homology dims (gr -1,0,1,2): " << r.homology[0] << ' ' << r.homology[1] << ' '
           << r.homology[2] << ' ' << r.homology[3] << '\n';
      if (r.components.size() > 1) {
        for (const auto& comp : r.components)
          out_ << "  component of " << comp.generators.size() << " generators ("
               << comp.generators.front() << ", ...): " << role_name(comp.role) << '\n';
      }
    }
    if (!r.ok()) {
      const AxiomCheck* failure = r.first_failure();
      err_ << "error: not a K-complex";
      if (failure != nullptr) err_ << ": " << failure->name << " failed: " << failure->witness;
      err_ << '\n';
      return kDomain;
    }
    return kOk;
  }

  int upsilon_cmd() {
    const PLFunction f = upsilon(load());
    if (!opt_.csv_path.empty()) write_csv(opt_.csv_path, f, opt_.samples, "t,upsilon");
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["function"] = "upsilon";
      j.update(pl_json(f));
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "Upsilon(t) for " << opt_.expr << ":\n";
      print_pl(out_, f, "Upsilon", 't');
    }
    return kOk;
  }

  int upsilon2_cmd() {
    const Rational t = parse_t(opt_.t_text);
    const PreparedComplex c(load());
    const Upsilon2Result r = upsilon2(c, t);
    if (!opt_.csv_path.empty()) write_csv(opt_.csv_path, r.upsilon2, opt_.samples, "s,upsilon2");
    std::vector<std::string> notes;
    if (!r.upsilon2.is_finite()) notes.emplace_back(kInfiniteNote);
    if (r.smooth_point)
      notes.emplace_back("Upsilon is linear at t (p- = p+); the definition is evaluated as stated.");
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["function"] = "upsilon2";
      j["t"] = frac(t);
      j["gamma_t"] = frac(r.gamma_t);
      j["upsilon_t"] = frac(r.upsilon_t);
      j["smooth_point"] = r.smooth_point;
      j["disjoint"] = r.disjoint;
      j.update(pl_json(r.upsilon2));
      j["witnesses"] = Json::array();
      for (const auto& w : r.witnesses)
        j["witnesses"].push_back(
            {{"from", frac(w.s0)}, {"to", frac(w.s1)}, {"point", point_json(w.point)}});
      j["notes"] = notes;
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "Upsilon^2_t(s) for " << opt_.expr << " at t = " << t.str()
           << " (Upsilon(t) = " << r.upsilon_t.str() << ", Z-/Z+ "
           << (r.disjoint ? "disjoint" : "intersect") << "):\n";
      print_pl(out_, r.upsilon2, "Upsilon^2", 's');
      for (const auto& w : r.witnesses)
        out_ << "  on [" << w.s0.str() << ", " << w.s1.str() << "] the connecting chain sits at "
             << to_string(w.point) << '\n';
      for (const auto& n : notes) out_ << "  note: " << n << '\n';
    }
    return kOk;
  }

  int pivots_cmd() {
    const Rational t = parse_t(opt_.t_text);
    const PreparedComplex c(load());
    const PivotData p = pivot_points(c, t);
    const Rational jump = delta_upsilon_prime(c, t);
    const ZSets z = z_sets(c, t);
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["t"] = frac(t);
      j["gamma_t"] = frac(p.gamma_t);
      j["upsilon_t"] = frac(Rational(-2) * p.gamma_t);
      j["p_minus"] = point_json(p.p_minus);
      j["p_plus"] = point_json(p.p_plus);
      j["on_line"] = Json::array();
      for (const auto& q : p.on_line) j["on_line"].push_back(point_json(q));
      j["delta"] = frac(p.delta);
      j["delta_upsilon_prime"] = frac(jump);
      j["z_sets_disjoint"] = z.disjoint;
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "pivots of " << opt_.expr << " at t = " << t.str() << ":\n"
           << "  gamma(t) = " << p.gamma_t.str() << ", Upsilon(t) = " << (Rational(-2) * p.gamma_t).str()
           << '\n'
           << "  p- = " << to_string(p.p_minus) << ", p+ = " << to_string(p.p_plus) << '\n'
           << "  points on the support line:";
      for (const auto& q : p.on_line) out_ << ' ' << to_string(q);
      out_ << "\n  slope jump of Upsilon = " << jump.str() << " (= (2/t)(i(p+) - i(p-)))\n"
           << "  Z- and Z+ " << (z.disjoint ? "disjoint" : "intersect") << '\n';
    }
    return kOk;
  }

  int v2_cmd() {
    const ExtendedRational v = upsilon2_scalar(load());
    std::vector<std::string> notes;
    if (!v.is_finite()) notes.emplace_back(kInfiniteNote);
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["v2"] = v.is_finite() ? frac(v.value()) : extended_str(v);
      j["notes"] = notes;
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "v2(" << opt_.expr << ") = " << extended_str(v) << '\n';
      for (const auto& n : notes) out_ << "  note: " << n << '\n';
    }
    return kOk;
  }

  int bounds_cmd() {
    const PreparedComplex c(load());
    std::vector<Rational> ts;
    if (opt_.t_list.empty()) {
      // Every slope jump of Upsilon plus the midpoint.
      std::set<Rational> unique{Rational(1)};
      for (const auto& x : upsilon(c).interior_breakpoints()) unique.insert(x);
      ts.assign(unique.begin(), unique.end());
    } else {
      for (const auto& text : opt_.t_list) ts.push_back(parse_t(text));
    }
    const GenusReport r = genus_report(c.complex(), ts);
    const std::int64_t width = diagonal_width(c.complex());
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["t"] = Json::array();
      for (const auto& t : ts) j["t"].push_back(frac(t));
      j["parts"] = Json::array();
      for (const auto& p : r.parts) {
        Json part{{"source", p.source},
                  {"max_abs_slope", frac(p.max_abs_slope)},
                  {"slope_bound", p.slope_bound},
                  {"breakpoints", Json::array()},
                  {"combined", p.combined}};
        for (const auto& b : p.breakpoint_bounds)
          part["breakpoints"].push_back({{"x", frac(b.location)}, {"bound", b.bound}});
        j["parts"].push_back(std::move(part));
      }
      j["skipped"] = Json::array();
      for (const auto& t : r.skipped) j["skipped"].push_back(frac(t));
      j["combined"] = r.combined;
      j["diagonal_width"] = width;
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "concordance genus bounds for " << opt_.expr << ":\n";
      for (const auto& p : r.parts) {
        out_ << "  " << p.source << ": |slope| <= " << p.max_abs_slope.str() << " gives g_c >= "
             << p.slope_bound;
        for (const auto& b : p.breakpoint_bounds)
          out_ << "; jump at " << b.location.str() << " gives g_c >= " << b.bound;
        out_ << '\n';
      }
      for (const auto& t : r.skipped)
        out_ << "  Upsilon2[t=" << t.str() << "]: infinite, skipped\n";
      out_ << "  combined: g_c >= " << r.combined << '\n'
           << "  diagonal width of the model: " << width << '\n';
    }
    return kOk;
  }

  int catalog_cmd() {
    Json list = Json::array();
    for (const auto& name : catalog_names()) {
      const ModelComplex c = catalog(name);
      const ValidationReport r = kfloer::validate(c);
      if (opt_.json)
        list.push_back({{"name", name},
                        {"generators", c.size()},
                        {"role", std::string(role_name(r.role))}});
      else
        out_ << std::left << std::setw(10) << name << ' ' << std::setw(5) << c.size()
             << " generators  " << role_name(r.role) << '\n';
    }
    if (opt_.json) out_ << list.dump(2) << '\n';
    return kOk;
  }

  int show_cmd() {
    const ModelComplex c = load();
    if (opt_.json) {
      Json j;
      j["expression"] = opt_.expr;
      j["generators"] = Json::array();
      for (std::size_t x = 0; x < c.size(); ++x) {
        const auto& g = c.generator(x);
        Json d = Json::array();
        for (const auto& t : c.boundary(x))
          d.push_back({{"u", t.u_power}, {"target", c.generator(t.target).name}});
        j["generators"].push_back({{"name", g.name},
                                   {"grading", g.grading},
                                   {"point", point_json(g.point)},
                                   {"boundary", std::move(d)}});
      }
      out_ << j.dump(2) << '\n';
    } else {
      out_ << format_complex(c);
    }
    return kOk;
  }

 private:
  struct NullBuffer : std::streambuf {
    int overflow(int c) override { return c; }
  };

  const Options& opt_;
  NullBuffer null_buf_;
  std::ostream null_{&null_buf_};
  std::ostream& out_;
  std::ostream& err_;
};

// CLI11 would read "-T(3,4)" as an option; a leading space keeps it positional
// and the expression parser skips it.
std::vector<std::string> protect_dual_prefix(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  bool after_separator = false;
  for (const auto& a : args) {
    if (a == "--") after_separator = true;
    const bool looks_like_expr = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h" &&
                                 !std::isdigit(static_cast<unsigned char>(a[1]));
    out.push_back(!after_separator && looks_like_expr ? " " + a : a);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact Upsilon and secondary Upsilon invariants of model knot Floer complexes",
               "knotinv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto add_expr = [&](CLI::App* sub) {
    sub->add_option("EXPR", opt.expr, "Complex expression, e.g. \"T(3,4) # -T(2,5)\" or @file.txt")
        ->required();
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Exact JSON output");
    sub->add_flag("--quiet", opt.quiet, "Suppress standard output");
  };
  const auto add_csv = [&](CLI::App* sub) {
    sub->add_option("--csv", opt.csv_path, "Write decimal samples to PATH");
    sub->add_option("--samples", opt.samples, "Number of CSV samples on [0,2]")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the K-complex axioms");
  add_expr(validate_cmd);
  add_common(validate_cmd);

  auto* upsilon_cmd = app.add_subcommand("upsilon", "Upsilon(t) on [0,2]");
  add_expr(upsilon_cmd);
  add_common(upsilon_cmd);
  add_csv(upsilon_cmd);

  auto* upsilon2_cmd = app.add_subcommand("upsilon2", "Upsilon^2_t(s) on [0,2]");
  add_expr(upsilon2_cmd);
  upsilon2_cmd->add_option("--t", opt.t_text, "Parameter t in (0,2) as P/Q")->required();
  add_common(upsilon2_cmd);
  add_csv(upsilon2_cmd);

  auto* pivots_cmd = app.add_subcommand("pivots", "Pivot points and slope jump at t");
  add_expr(pivots_cmd);
  pivots_cmd->add_option("--t", opt.t_text, "Parameter t in (0,2) as P/Q")->required();
  add_common(pivots_cmd);

  auto* v2_cmd = app.add_subcommand("v2", "Scalar invariant Upsilon^2_1(1)");
  add_expr(v2_cmd);
  add_common(v2_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Concordance genus lower bounds");
  add_expr(bounds_cmd);
  bounds_cmd->add_option("--t", opt.t_list,
                         "Values of t for Upsilon^2 (default: 1 and every slope jump of Upsilon)");
  add_common(bounds_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "List the named complexes");
  add_common(catalog_cmd);

  auto* show_cmd = app.add_subcommand("show", "Print a complex in the text format");
  add_expr(show_cmd);
  add_common(show_cmd);

  std::vector<std::string> argv_storage{"knotinv"};
  for (auto& a : protect_dual_prefix(args)) argv_storage.push_back(std::move(a));
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!opt.expr.empty() && opt.expr.starts_with(" -")) opt.expr.erase(0, 1);

  Runner runner(opt, out, err);
  try {
    if (validate_cmd->parsed()) return runner.validate_cmd();
    if (upsilon_cmd->parsed()) return runner.upsilon_cmd();
    if (upsilon2_cmd->parsed()) return runner.upsilon2_cmd();
    if (pivots_cmd->parsed()) return runner.pivots_cmd();
    if (v2_cmd->parsed()) return runner.v2_cmd();
    if (bounds_cmd->parsed()) return runner.bounds_cmd();
    if (catalog_cmd->parsed()) return runner.catalog_cmd();
    if (show_cmd->parsed()) return runner.show_cmd();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace kfloer::cli
