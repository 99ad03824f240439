#include "kfloer/f2.hpp"

#include "kfloer/errors.hpp"
#include "kfloer/f2_kernels.hpp"

#include <bit>

namespace kfloer {

namespace {

void check_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw DomainError(std::string("dimension mismatch in ") + op + ": " + std::to_string(a) +
                      " vs " + std::to_string(b));
}

}  // namespace

F2Vector F2Vector::with_ones(std::size_t size, std::initializer_list<std::size_t> indices) {
  return with_ones(size, std::span<const std::size_t>(indices.begin(), indices.size()));
}

F2Vector F2Vector::with_ones(std::size_t size, std::span<const std::size_t> indices) {
  F2Vector v(size);
  for (auto k : indices) v.set(k);
  return v;
}

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      v.set(k);
    } else if (bits[k] != '0') {
      throw ParseError("bit string may only contain 0 and 1", k);
    }
  }
  return v;
}

bool F2Vector::get(std::size_t k) const {
  if (k >= size_) throw DomainError("F2Vector index out of range");
  return (words_[k / 64] >> (k % 64)) & 1U;
}

void F2Vector::set(std::size_t k, bool value) {
  if (k >= size_) throw DomainError("F2Vector index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (k % 64);
  if (value) {
    words_[k / 64] |= bit;
  } else {
    words_[k / 64] &= ~bit;
  }
}

void F2Vector::flip(std::size_t k) {
  if (k >= size_) throw DomainError("F2Vector index out of range");
  words_[k / 64] ^= std::uint64_t{1} << (k % 64);
}

bool F2Vector::is_zero() const noexcept {
  return simd::active_kernels().is_zero(words_.data(), words_.size());
}

std::size_t F2Vector::popcount() const noexcept {
  return simd::active_kernels().popcount(words_.data(), words_.size());
}

bool F2Vector::intersects(const F2Vector& other) const {
  check_same_size(size_, other.size_, "intersects");
  return simd::active_kernels().intersects(words_.data(), other.words_.data(), words_.size());
}

std::optional<std::size_t> F2Vector::lowest_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> F2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  check_same_size(size_, other.size_, "xor");
  simd::active_kernels().xor_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

F2Vector& F2Vector::operator&=(const F2Vector& other) {
  check_same_size(size_, other.size_, "and");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

void F2Vector::xor_prefix(const F2Vector& other) {
  if (other.size_ > size_) throw DomainError("xor_prefix: operand longer than target");
  simd::active_kernels().xor_into(words_.data(), other.words_.data(), other.words_.size());
}

void F2Vector::resize(std::size_t size) {
  size_ = size;
  words_.resize((size + 63) / 64, 0);
  if (size % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size % 64)) - 1;
}

std::string F2Vector::str() const {
  std::string s(size_, '0');
  for (auto k : support()) s[k] = '1';
  return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k);
  return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::vector<F2Vector> columns) {
  for (const auto& c : columns) check_same_size(c.size(), rows, "from_columns");
  F2Matrix m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
  check_same_size(x.size(), cols(), "apply");
  F2Vector out(rows_);
  for (auto c : x.support()) out ^= columns_[c];
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  check_same_size(cols(), rhs.rows(), "matrix product");
  std::vector<F2Vector> cols_out;
  cols_out.reserve(rhs.cols());
  for (const auto& c : rhs.columns_) cols_out.push_back(apply(c));
  return from_columns(rows_, std::move(cols_out));
}

bool F2Matrix::is_zero() const noexcept {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool F2Echelon::insert(const F2Vector& v) {
  check_same_size(v.size(), dim_, "F2Echelon::insert");
  const std::size_t index = inserted_++;
  F2Vector vec = v;
  F2Vector combo(inserted_);
  combo.set(index);
  for (const auto& row : rows_) {
    if (vec.get(row.pivot)) {
      vec ^= row.vec;
      combo.xor_prefix(row.combo);
    }
  }
  auto pivot = vec.lowest_set();
  if (!pivot) {
    relations_.push_back(std::move(combo));
    return false;
  }
  rows_.push_back({std::move(vec), std::move(combo), *pivot});
  return true;
}

F2Vector F2Echelon::reduce(const F2Vector& v) const {
  check_same_size(v.size(), dim_, "F2Echelon::reduce");
  F2Vector vec = v;
  for (const auto& row : rows_) {
    if (vec.get(row.pivot)) vec ^= row.vec;
  }
  return vec;
}

bool F2Echelon::contains(const F2Vector& v) const { return reduce(v).is_zero(); }

std::optional<F2Vector> F2Echelon::express(const F2Vector& v) const {
  check_same_size(v.size(), dim_, "F2Echelon::express");
  F2Vector vec = v;
  F2Vector combo(inserted_);
  for (const auto& row : rows_) {
    if (vec.get(row.pivot)) {
      vec ^= row.vec;
      combo.xor_prefix(row.combo);
    }
  }
  if (!vec.is_zero()) return std::nullopt;
  return combo;
}

std::vector<F2Vector> F2Echelon::relations() const {
  std::vector<F2Vector> out = relations_;
  for (auto& r : out) r.resize(inserted_);
  return out;
}

std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b) {
  check_same_size(b.size(), m.rows(), "f2_solve");
  F2Echelon ech(m.rows());
  for (const auto& c : m.columns()) ech.insert(c);
  return ech.express(b);
}

bool f2_member(std::span<const F2Vector> basis, const F2Vector& v) {
  F2Echelon ech(v.size());
  for (const auto& b : basis) ech.insert(b);
  return ech.contains(v);
}

std::size_t f2_rank(const F2Matrix& m) {
  F2Echelon ech(m.rows());
  for (const auto& c : m.columns()) ech.insert(c);
  return ech.rank();
}

std::vector<F2Vector> f2_kernel(const F2Matrix& m) {
  F2Echelon ech(m.rows());
  for (const auto& c : m.columns()) ech.insert(c);
  return ech.relations();
}

std::vector<F2Vector> f2_column_basis(const F2Matrix& m) {
  F2Echelon ech(m.rows());
  std::vector<F2Vector> out;
  for (const auto& c : m.columns()) {
    if (ech.insert(c)) out.push_back(c);
  }
  return out;
}

}  // namespace kfloer
