#pragma once

#include <random>

#include "icl/scheme.hpp"

// Random linear scheme over 2..4 messages with at most `max_bits` message
// bits; every composite's rows are confined to its support.
inline icl::LinearScheme random_scheme(std::uint64_t seed, int max_bits = 10) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  icl::LinearScheme s;
  const int n = pick(2, 4);
  int budget = max_bits;
  for (int i = 0; i < n; ++i) {
    const int l = std::min(budget, pick(0, 3));
    s.msg_bits.push_back(l);
    budget -= l;
  }
  s.channel_bits = pick(1, 4);
  const std::size_t width = s.total_bits();
  const int composites = pick(1, 4);
  for (int k = 0; k < composites; ++k) {
    icl::CompositeMap c;
    for (int i = 1; i <= n; ++i)
      if (pick(0, 1)) c.support.insert(i);
    if (c.support.empty()) c.support.insert(pick(1, n));
    const auto cols = s.columns_of(c.support);
    c.map = icl::Gf2Matrix(static_cast<std::size_t>(pick(1, 3)), width);
    for (std::size_t r = 0; r < c.map.rows(); ++r)
      for (std::size_t col : cols)
        if (pick(0, 1)) c.map.set(r, col);
    s.composites.push_back(std::move(c));
  }
  return s;
}

// Random multiple-unicast instance on n messages; each user knows each other
// message with probability 1/2.
inline icl::IndexCodingInstance random_unicast(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  icl::IndexCodingInstance inst;
  inst.num_messages = n;
  for (int i = 1; i <= n; ++i) {
    icl::UserSpec u;
    u.demands = {i};
    for (int j = 1; j <= n; ++j)
      if (j != i && (rng() & 1u)) u.knows.insert(j);
    inst.users.push_back(std::move(u));
  }
  return inst;
}
