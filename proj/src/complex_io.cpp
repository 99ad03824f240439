#include "kfloer/complex_io.hpp"

#include "kfloer/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace kfloer {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

std::int64_t parse_int(std::string_view s, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("line " + std::to_string(line) + ": malformed " + what + " '" +
                         std::string(s) + "'",
                     line);
  return v;
}

void check_name(std::string_view name, std::size_t line) {
  if (name.empty() || name.find_first_of("=+#") != std::string_view::npos ||
      name.starts_with("U^"))
    throw ParseError("line " + std::to_string(line) + ": invalid generator name '" +
                         std::string(name) + "'",
                     line);
}

struct PendingTerm {
  std::string from;
  std::string to;
  std::int64_t u_power;
  std::size_t line;
};

}  // namespace

ModelComplex parse_complex(std::string_view text) {
  std::vector<Generator> gens;
  std::unordered_map<std::string, std::size_t> index;
  std::unordered_map<std::string, std::size_t> boundary_line;
  std::vector<PendingTerm> terms;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
    };

    const auto tokens = split_ws(line);
    if (tokens[0] == "gen") {
      if (tokens.size() != 5) fail("expected 'gen NAME GRADING I J'");
      check_name(tokens[1], line_no);
      std::string name(tokens[1]);
      if (index.contains(name)) fail("duplicate generator '" + name + "'");
      index.emplace(name, gens.size());
      gens.push_back({name, parse_int(tokens[2], line_no, "grading"),
                      {parse_int(tokens[3], line_no, "i coordinate"),
                       parse_int(tokens[4], line_no, "j coordinate")}});
    } else if (tokens[0] == "d") {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) fail("expected 'd NAME = ...'");
      const auto lhs = split_ws(line.substr(0, eq));
      if (lhs.size() != 2) fail("expected 'd NAME = ...'");
      check_name(lhs[1], line_no);
      std::string from(lhs[1]);
      if (!boundary_line.emplace(from, line_no).second)
        fail("boundary of '" + from + "' given twice");
      const std::string_view rhs = trim(line.substr(eq + 1));
      if (rhs.empty()) fail("empty right-hand side (write 0 for a cycle)");
      if (rhs == "0") continue;
      std::size_t start = 0;
      while (start <= rhs.size()) {
        const auto plus = rhs.find('+', start);
        const std::string_view term =
            trim(rhs.substr(start, plus == std::string_view::npos ? rhs.npos : plus - start));
        start = plus == std::string_view::npos ? rhs.size() + 1 : plus + 1;
        const auto parts = split_ws(term);
        if (parts.empty()) fail("empty term");
        std::int64_t k = 0;
        std::string_view target;
        if (parts.size() == 2 && parts[0].starts_with("U^")) {
          k = parse_int(parts[0].substr(2), line_no, "U power");
          if (k < 1) fail("U power must be at least 1");
          target = parts[1];
        } else if (parts.size() == 1) {
          target = parts[0];
        } else {
          fail("malformed term '" + std::string(term) + "'");
        }
        check_name(target, line_no);
        terms.push_back({from, std::string(target), k, line_no});
      }
    } else {
      fail("unknown statement '" + std::string(tokens[0]) + "'");
    }
  }

  std::vector<std::vector<BoundaryTerm>> boundary(gens.size());
  for (const auto& [name, line] : boundary_line) {
    if (!index.contains(name))
      throw ParseError("line " + std::to_string(line) + ": unknown generator '" + name + "'", line);
  }
  for (const auto& t : terms) {
    auto to = index.find(t.to);
    if (to == index.end())
      throw ParseError("line " + std::to_string(t.line) + ": unknown generator '" + t.to + "'",
                       t.line);
    boundary[index.at(t.from)].push_back({t.u_power, to->second});
  }
  return ModelComplex(std::move(gens), std::move(boundary));
}

ModelComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file '" + path.string() + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

std::string format_complex(const ModelComplex& c) {
  std::ostringstream os;
  for (const auto& g : c.generators())
    os << "gen " << g.name << ' ' << g.grading << ' ' << g.point.i << ' ' << g.point.j << '\n';
  for (std::size_t x = 0; x < c.size(); ++x) {
    os << "d " << c.generator(x).name << " =";
    if (c.boundary(x).empty()) os << " 0";
    bool first = true;
    for (const auto& t : c.boundary(x)) {
      os << (first ? " " : " + ");
      if (t.u_power > 0) os << "U^" << t.u_power << ' ';
      os << c.generator(t.target).name;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace kfloer
