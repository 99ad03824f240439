#include "kfloer/expression.hpp"

#include "kfloer/complex_io.hpp"
#include "kfloer/constructors.hpp"
#include "kfloer/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace kfloer {

const std::vector<std::string>& catalog_identifiers() {
  static const std::vector<std::string> names = {"unknot", "fig8",   "figure6",
                                                  "hom-C1", "hom-C2", "hom-K"};
  return names;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = sum();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'#'", "end of input"});
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected, std::string found = {}) {
    skip_ws();
    if (found.empty())
      found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    std::string msg = "at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k > 0) msg += k + 1 == expected.size() ? " or " : ", ";
      msg += expected[k];
    }
    msg += ", found " + found;
    throw ParseError(msg, pos_, std::move(expected));
  }

  void expect(char c) {
    if (peek() != c) fail({"'" + std::string(1, c) + "'"});
    ++pos_;
  }

  std::int64_t integer() {
    if (!is_digit(peek())) fail({"integer"});
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail({"integer"}, "out-of-range integer");
    }
    return v;
  }

  Expr sum() {
    Expr lhs = tensor();
    while (peek() == '+') {
      const std::size_t at = pos_++;
      Expr node{Expr::Kind::Sum, {}, {}, {std::move(lhs), tensor()}, at};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr tensor() {
    Expr lhs = power();
    while (peek() == '#') {
      const std::size_t at = pos_++;
      Expr node{Expr::Kind::Tensor, {}, {}, {std::move(lhs), power()}, at};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr power() {
    if (!is_digit(peek())) return unary();
    const std::size_t at = pos_;
    const std::int64_t n = integer();
    if (n <= 0) {
      pos_ = at;
      fail({"positive integer"}, std::to_string(n));
    }
    expect('*');
    return {Expr::Kind::Power, {}, {n}, {power()}, at};
  }

  Expr unary() {
    if (peek() == '-') {
      const std::size_t at = pos_++;
      return {Expr::Kind::Dual, {}, {}, {unary()}, at};
    }
    return primary();
  }

  Expr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      if (peek() != ')') fail({"')'", "'+'", "'#'"});
      ++pos_;
      return inner;
    }
    if (c == '@') return file_ref();
    if (is_ident_start(c)) return named_atom();
    fail({"complex name", "'@'", "'('", "'-'", "integer"});
  }

  Expr file_ref() {
    const std::size_t at = pos_++;
    const std::size_t start = pos_;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           std::string_view(")#+").find(src_[pos_]) == std::string_view::npos)
      ++pos_;
    if (pos_ == start) fail({"file path"});
    return {Expr::Kind::File, std::string(src_.substr(start, pos_ - start)), {}, {}, at};
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (is_ident_char(src_[pos_]) ||
            (src_[pos_] == '-' && pos_ + 1 < src_.size() && is_ident_char(src_[pos_ + 1]))))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr named_atom() {
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "T") {
      expect('(');
      const std::int64_t p = integer();
      expect(',');
      const std::int64_t q = integer();
      expect(')');
      return {Expr::Kind::Torus, {}, {p, q}, {}, at};
    }
    if (name == "box" || name == "nK") {
      expect('(');
      const std::int64_t n = integer();
      expect(')');
      return {name == "box" ? Expr::Kind::Box : Expr::Kind::NK, {}, {n}, {}, at};
    }
    if (name == "stair") {
      expect('[');
      std::vector<std::int64_t> steps{integer()};
      while (peek() == ',') {
        ++pos_;
        steps.push_back(integer());
      }
      if (peek() != ']') fail({"','", "']'"});
      ++pos_;
      return {Expr::Kind::Stair, {}, std::move(steps), {}, at};
    }
    const auto& known = catalog_identifiers();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      pos_ = at;
      std::vector<std::string> expected = {"T(p,q)", "box(n)", "nK(n)", "stair[...]"};
      expected.insert(expected.end(), known.begin(), known.end());
      fail(std::move(expected), "unknown complex '" + name + "'");
    }
    return {Expr::Kind::Catalog, name, {}, {}, at};
  }
};

std::string join_args(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string describe(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Catalog: return e.text;
    case Expr::Kind::Torus: return "T(" + join_args(e.args) + ")";
    case Expr::Kind::Box: return "box(" + join_args(e.args) + ")";
    case Expr::Kind::NK: return "nK(" + join_args(e.args) + ")";
    case Expr::Kind::Stair: return "stair[" + join_args(e.args) + "]";
    case Expr::Kind::File: return "@" + e.text;
    case Expr::Kind::Dual: return "dual(" + describe(e.children[0]) + ")";
    case Expr::Kind::Tensor:
      return "tensor(" + describe(e.children[0]) + ", " + describe(e.children[1]) + ")";
    case Expr::Kind::Sum:
      return "sum(" + describe(e.children[0]) + ", " + describe(e.children[1]) + ")";
    case Expr::Kind::Power:
      return "power(" + std::to_string(e.args[0]) + ", " + describe(e.children[0]) + ")";
  }
  return {};
}

ModelComplex evaluate(const Expr& e, const std::filesystem::path& base) {
  switch (e.kind) {
    case Expr::Kind::Catalog: return catalog(e.text);
    case Expr::Kind::Torus: return torus_knot_complex(e.args[0], e.args[1]);
    case Expr::Kind::Box: return box_complex(e.args[0]);
    case Expr::Kind::NK:
      if (e.args[0] > 64) throw DomainError("nK(n) is limited to n <= 64");
      return nk_complex(static_cast<int>(e.args[0]));
    case Expr::Kind::Stair: return stairway(e.args);
    case Expr::Kind::File: {
      std::filesystem::path p(e.text);
      if (p.is_relative() && !base.empty()) p = base / p;
      return load_complex(p);
    }
    case Expr::Kind::Dual: return dual(evaluate(e.children[0], base));
    case Expr::Kind::Tensor:
      return tensor(evaluate(e.children[0], base), evaluate(e.children[1], base));
    case Expr::Kind::Sum:
      return direct_sum(evaluate(e.children[0], base), evaluate(e.children[1], base));
    case Expr::Kind::Power:
      if (e.args[0] > 64) throw DomainError("tensor powers are limited to n <= 64");
      return tensor_power(evaluate(e.children[0], base), static_cast<int>(e.args[0]));
  }
  throw ConsistencyError("unhandled expression node");
}

ModelComplex complex_from_expression(std::string_view text, const std::filesystem::path& base) {
  return evaluate(parse_expression(text), base);
}

}  // namespace kfloer
