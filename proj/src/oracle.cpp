#include "icl/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>

namespace icl::oracle {

namespace {

int demanded_min_bits(const IndexCodingInstance& inst, const std::vector<int>& bits) {
  int best = -1;
  for (const auto& u : inst.users)
    for (MessageId m : u.demands) {
      const int b = bits[static_cast<std::size_t>(m - 1)];
      if (best < 0 || b < best) best = b;
    }
  return std::max(best, 0);
}

}  // namespace

ScalarLinearResult best_scalar_linear_rate(const IndexCodingInstance& inst, const SearchBudget& budget) {
  if (inst.num_messages > 4) throw BudgetExceeded("oracle search supports at most 4 messages");
  if (budget.max_channel_bits > 2 || budget.max_channel_bits < 1) throw BudgetExceeded("oracle search supports 1 or 2 channel bits");
  const int n = inst.num_messages;
  const int lmax = budget.max_message_bits;

  // Count candidates up front.
  std::vector<std::vector<int>> lengths;
  {
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    for (;;) {
      lengths.push_back(l);
      int i = n - 1;
      while (i >= 0 && l[static_cast<std::size_t>(i)] == lmax) l[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++l[static_cast<std::size_t>(i)];
    }
  }
  std::uint64_t total = 0;
  for (int c = 1; c <= budget.max_channel_bits; ++c)
    for (const auto& l : lengths) {
      int width = 0;
      for (int x : l) width += x;
      if (c * width >= 40) throw BudgetExceeded("encoding-matrix space too large");
      total += std::uint64_t{1} << (c * width);
    }
  if (total > budget.max_candidates) throw BudgetExceeded("candidate count " + std::to_string(total) + " exceeds budget");

  const auto start = std::chrono::steady_clock::now();
  ScalarLinearResult res;
  res.rate = 0;
  res.witness.msg_bits.assign(static_cast<std::size_t>(n), 0);
  res.witness.channel_bits = 1;
  for (int c = 1; c <= budget.max_channel_bits; ++c) {
    for (const auto& l : lengths) {
      const int min_bits = demanded_min_bits(inst, l);
      const Rational rate = make_rational(min_bits, c);
      if (min_bits == 0 || rate <= res.rate) {
        std::size_t width = 0;
        for (int x : l) width += static_cast<std::size_t>(x);
        res.candidates += std::uint64_t{1} << (static_cast<std::size_t>(c) * width);
        continue;
      }
      LinearScheme s;
      s.msg_bits = l;
      s.channel_bits = c;
      MessageSet support;
      for (int i = 0; i < n; ++i)
        if (l[static_cast<std::size_t>(i)] > 0) support.insert(i + 1);
      const std::size_t width = s.total_bits();
      const std::uint64_t cells = static_cast<std::uint64_t>(c) * width;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
        ++res.candidates;
        if ((res.candidates & 0xfff) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.time_cap_seconds)
          throw BudgetExceeded("oracle time cap reached");
        Gf2Matrix m(static_cast<std::size_t>(c), width);
        for (std::uint64_t b = 0; b < cells; ++b)
          if (code >> b & 1u) m.set(static_cast<std::size_t>(b / width), static_cast<std::size_t>(b % width));
        s.composites = {{support, m}};
        if (zero_error_decode_check(inst, s, DecodeMode::Algebraic).all_ok()) {
          res.rate = rate;
          res.witness = s;
          break;
        }
      }
    }
  }
  return res;
}

namespace {

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_lp_vertices(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const auto& cons = lp.constraints();
  const int m = static_cast<int>(cons.size());
  if (n > 6 || m > 10) throw TooLarge("vertex enumeration limited to 6 variables and 10 constraints");

  // Hyperplanes: constraint rows first, then x_j = 0.
  const int h = m + n;
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(h), std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> rhs(static_cast<std::size_t>(h));
  for (int i = 0; i < m; ++i) {
    for (const auto& t : cons[static_cast<std::size_t>(i)].terms) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.var)] += t.coef;
    rhs[static_cast<std::size_t>(i)] = cons[static_cast<std::size_t>(i)].rhs;
  }
  for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(m + j)][static_cast<std::size_t>(j)] = 1;

  std::vector<std::vector<Rational>> vertices;
  if (n == 0) {
    if (lp.is_feasible({})) vertices.emplace_back();
    return vertices;
  }
  std::vector<int> pick(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    bool has_all_equalities = true;
    for (int i = 0; i < m; ++i)
      if (cons[static_cast<std::size_t>(i)].relation == Relation::Equal &&
          std::find(pick.begin(), pick.end(), i) == pick.end())
        has_all_equalities = false;
    if (has_all_equalities) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int p : pick) {
        a.push_back(rows[static_cast<std::size_t>(p)]);
        b.push_back(rhs[static_cast<std::size_t>(p)]);
      }
      if (auto x = solve_exact(std::move(a), std::move(b)); x && lp.is_feasible(*x)) vertices.push_back(std::move(*x));
    }
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == h - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

EntropyByEnumeration conditional_entropy_by_enumeration(const LinearScheme& scheme, const MessageSet& known,
                                                        std::uint64_t known_bits) {
  const std::size_t width = scheme.total_bits();
  if (width > 24) throw TooLarge("entropy enumeration limited to 24 message bits");
  std::vector<bool> is_known(width, false);
  for (std::size_t c : scheme.columns_of(known)) is_known[c] = true;
  std::vector<std::size_t> free_cols, known_cols;
  for (std::size_t c = 0; c < width; ++c) (is_known[c] ? known_cols : free_cols).push_back(c);

  const Gf2Matrix global = scheme.global_matrix();
  std::map<std::string, std::uint64_t> histogram;
  const std::uint64_t count = std::uint64_t{1} << free_cols.size();
  for (std::uint64_t v = 0; v < count; ++v) {
    BitVector x(width);
    for (std::size_t i = 0; i < known_cols.size(); ++i)
      if (known_bits >> i & 1u) x.set(known_cols[i]);
    for (std::size_t i = 0; i < free_cols.size(); ++i)
      if (v >> i & 1u) x.set(free_cols[i]);
    ++histogram[global.multiply(x).to_string()];
  }
  EntropyByEnumeration out;
  out.support = histogram.size();
  out.uniform = true;
  const std::uint64_t first = histogram.begin()->second;
  for (const auto& [value, hits] : histogram) {
    if (hits != first) out.uniform = false;
    const double p = static_cast<double>(hits) / static_cast<double>(count);
    out.bits -= p * std::log2(p);
  }
  return out;
}

}  // namespace icl::oracle
