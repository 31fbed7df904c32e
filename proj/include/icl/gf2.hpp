#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace icl {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= bit;
    else words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // Sizes must match.
  BitVector& operator^=(const BitVector& other);
  // XOR `other` into positions [0, other.size()); other may be shorter.
  void xor_prefix(const BitVector& other);

  bool any() const;
  std::size_t count() const;
  // Parity of the AND with other (GF(2) inner product).
  bool dot(const BitVector& other) const;
  // Lowest set index, or size() when empty.
  std::size_t first_set() const;

  BitVector slice(std::size_t begin, std::size_t length) const;
  void resize(std::size_t size);

  // "0101..." in index order.
  std::string to_string() const;
  static BitVector from_string(const std::string& bits);
  // Bits packed MSB-first into hex nibbles, last nibble zero-padded.
  std::string to_hex() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool operator==(const BitVector& other) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  void append_row(BitVector row);
  void append_rows(const Gf2Matrix& other);

  Gf2Matrix select_columns(const std::vector<std::size_t>& columns) const;
  // Matrix-vector product over GF(2).
  BitVector multiply(const BitVector& x) const;
  // Indices of columns holding at least one 1.
  std::vector<std::size_t> nonzero_columns() const;

  std::size_t rank() const;
  // Basis of {x : M x = 0}.
  std::vector<BitVector> nullspace() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

std::size_t rank_gf2(const Gf2Matrix& m);

// Row-reduced echelon form of a GF(2) system whose right-hand sides are bit
// vectors (one independent system per right-hand-side position).
struct Gf2SolveResult {
  bool consistent = true;
  std::vector<bool> determined;     // per variable
  std::vector<BitVector> values;    // valid where determined
};

Gf2SolveResult solve_gf2_system(Gf2Matrix coefficients, std::vector<BitVector> rhs);

}  // namespace icl
