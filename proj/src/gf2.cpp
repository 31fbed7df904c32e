#include "icl/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace icl {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

void BitVector::xor_prefix(const BitVector& other) {
  if (other.size_ > size_) throw std::invalid_argument("xor_prefix: operand longer than target");
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

BitVector BitVector::slice(std::size_t begin, std::size_t length) const {
  if (begin + length > size_) throw std::out_of_range("BitVector::slice");
  BitVector out(length);
  if (length == 0) return out;
  const std::size_t shift = begin & 63;
  const std::size_t base = begin >> 6;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t v = words_[base + w] >> shift;
    if (shift && base + w + 1 < words_.size()) v |= words_[base + w + 1] << (64 - shift);
    out.words_[w] = v;
  }
  if (length & 63) out.words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
  return out;
}

void BitVector::resize(std::size_t size) {
  words_.resize((size + 63) / 64, 0);
  if (size & 63) words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
  size_ = size;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v.set(i);
    else if (bits[i] != '0') throw std::invalid_argument("bit string must contain only 0 and 1");
  }
  return v;
}

std::string BitVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < size_; i += 4) {
    int nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) nibble = (nibble << 1) | (i + b < size_ && get(i + b) ? 1 : 0);
    out += digits[nibble];
  }
  return out;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  Gf2Matrix m(0, rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void Gf2Matrix::append_row(BitVector row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row width does not match matrix");
  rows_.push_back(std::move(row));
}

void Gf2Matrix::append_rows(const Gf2Matrix& other) {
  for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<std::size_t>& columns) const {
  Gf2Matrix out(rows(), columns.size());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (get(r, columns[c])) out.set(r, c);
  return out;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: width mismatch");
  BitVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].dot(x)) y.set(r);
  return y;
}

std::vector<std::size_t> Gf2Matrix::nonzero_columns() const {
  BitVector acc(cols_);
  for (const auto& r : rows_)
    for (std::size_t w = 0; w < r.words().size(); ++w) acc.words()[w] |= r.words()[w];
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (acc.get(c)) out.push_back(c);
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> reduce(std::vector<BitVector>& rows, std::size_t cols, std::vector<BitVector>* rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        if (rhs) (*rhs)[r] ^= (*rhs)[next];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
  std::vector<BitVector> work = rows_;
  return reduce(work, cols_).size();
}

std::vector<BitVector> Gf2Matrix::nullspace() const {
  std::vector<BitVector> work = rows_;
  const auto pivots = reduce(work, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols_);
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (work[r].get(f)) v.set(pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_gf2(const Gf2Matrix& m) { return m.rank(); }

Gf2SolveResult solve_gf2_system(Gf2Matrix coefficients, std::vector<BitVector> rhs) {
  const std::size_t cols = coefficients.cols();
  std::vector<BitVector> rows;
  rows.reserve(coefficients.rows());
  for (std::size_t r = 0; r < coefficients.rows(); ++r) rows.push_back(coefficients.row(r));
  if (rhs.size() != rows.size()) throw std::invalid_argument("solve_gf2_system: rhs count mismatch");
  const auto pivots = reduce(rows, cols, &rhs);

  Gf2SolveResult out;
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rhs[r].any()) out.consistent = false;
  out.determined.assign(cols, false);
  out.values.assign(cols, BitVector(rhs.empty() ? 0 : rhs.front().size()));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    // A pivot variable is fixed when its row has no free-column entries.
    if (rows[r].count() == 1) {
      out.determined[pivots[r]] = true;
      out.values[pivots[r]] = rhs[r];
    }
  }
  return out;
}

}  // namespace icl
