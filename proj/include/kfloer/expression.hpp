#pragma once

#include "kfloer/complex.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kfloer {

// Complex expressions, loosest binding first:
//
//   sum     := tensor ('+' tensor)*          direct sum
//   tensor  := power ('#' power)*            tensor product (connected sum)
//   power   := INT '*' power | unary         n-fold tensor power, n >= 1
//   unary   := '-' unary | primary           dual (mirror)
//   primary := atom | '(' sum ')'
//   atom    := NAME | T(p,q) | box(n) | nK(n) | stair[a1,...] | @path

struct Expr {
  enum class Kind { Catalog, Torus, Box, NK, Stair, File, Dual, Tensor, Sum, Power };

  Kind kind = Kind::Catalog;
  /// Catalog name or file path.
  std::string text;
  /// T: {p, q}; box/nK: {n}; stair: steps; power: {n}.
  std::vector<std::int64_t> args;
  std::vector<Expr> children;
  /// Byte offset of the node's first token.
  std::size_t offset = 0;
};

/// Throws ParseError with the byte offset and the expected-token set.
Expr parse_expression(std::string_view text);

/// Fully parenthesized rendering, e.g. "tensor(stair[2,2], dual(stair[1,1,1,1]))".
std::string describe(const Expr& e);

/// Builds the complex. '@' paths are resolved against `base` when relative.
ModelComplex evaluate(const Expr& e, const std::filesystem::path& base = {});

/// parse_expression + evaluate.
ModelComplex complex_from_expression(std::string_view text, const std::filesystem::path& base = {});

/// Plain identifiers accepted as catalog atoms.
const std::vector<std::string>& catalog_identifiers();

}  // namespace kfloer
