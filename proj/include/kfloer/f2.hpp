#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kfloer {

/// Bit-packed vector over the two-element field.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Vector of the given length with ones exactly at `indices`.
  static F2Vector with_ones(std::size_t size, std::initializer_list<std::size_t> indices);
  static F2Vector with_ones(std::size_t size, std::span<const std::size_t> indices);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static F2Vector from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t k) const;
  void set(std::size_t k, bool value = true);
  void flip(std::size_t k);

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  bool intersects(const F2Vector& other) const;
  std::optional<std::size_t> lowest_set() const noexcept;
  std::vector<std::size_t> support() const;

  F2Vector& operator^=(const F2Vector& other);
  F2Vector& operator&=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
  friend F2Vector operator&(F2Vector a, const F2Vector& b) { return a &= b; }

  /// XOR `other` into the first other.size() coordinates; other.size() <= size().
  void xor_prefix(const F2Vector& other);
  /// Grow or shrink, zero-filling new coordinates.
  void resize(std::size_t size);

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// "0110..." with index 0 first.
  std::string str() const;

  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend auto operator<=>(const F2Vector&, const F2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored by columns (each column is an F2Vector of length rows()).
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols, F2Vector(rows)) {}

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_columns(std::size_t rows, std::vector<F2Vector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  bool get(std::size_t r, std::size_t c) const { return columns_.at(c).get(r); }
  void set(std::size_t r, std::size_t c, bool value = true) { columns_.at(c).set(r, value); }
  void flip(std::size_t r, std::size_t c) { columns_.at(c).flip(r); }

  const F2Vector& column(std::size_t c) const { return columns_.at(c); }
  std::span<const F2Vector> columns() const noexcept { return columns_; }

  /// Matrix-vector product M x.
  F2Vector apply(const F2Vector& x) const;
  /// Matrix product (*this) * rhs.
  F2Matrix operator*(const F2Matrix& rhs) const;

  bool is_zero() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::vector<F2Vector> columns_;
};

/// Incremental row-echelon basis with combination tracking.
///
/// Inserted vectors are numbered 0, 1, ... in insertion order. Reduction
/// walks the stored rows in insertion order and pivots on the lowest set
/// bit, so results are deterministic.
class F2Echelon {
 public:
  explicit F2Echelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Inserts v; returns true if it was independent of the earlier vectors.
  bool insert(const F2Vector& v);

  bool contains(const F2Vector& v) const;
  /// Residual of v after reduction (zero iff v is in the span).
  F2Vector reduce(const F2Vector& v) const;
  /// A combination c (length inserted()) of inserted vectors with sum v, if any.
  std::optional<F2Vector> express(const F2Vector& v) const;
  /// Combinations of inserted vectors summing to zero, one per dependent insertion.
  /// Together they form a basis of the relation space. Each has length inserted().
  std::vector<F2Vector> relations() const;

 private:
  struct Row {
    F2Vector vec;
    F2Vector combo;
    std::size_t pivot;
  };

  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<F2Vector> relations_;
};

/// Some x with M x = b, or nullopt when b is outside the column span.
std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b);
/// Whether v lies in the span of `basis`.
bool f2_member(std::span<const F2Vector> basis, const F2Vector& v);
std::size_t f2_rank(const F2Matrix& m);
/// Basis of { x : M x = 0 }.
std::vector<F2Vector> f2_kernel(const F2Matrix& m);
/// Basis of the column span of M (a subset of its columns).
std::vector<F2Vector> f2_column_basis(const F2Matrix& m);

}  // namespace kfloer
