#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "icl/instance.hpp"
#include "icl/lp.hpp"
#include "icl/rational.hpp"
#include "icl/scheme.hpp"

// Exponential brute-force baselines. Only the test suites link this library.
namespace icl::oracle {

struct SearchBudget {
  int max_channel_bits = 2;
  int max_message_bits = 1;
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
  double time_cap_seconds = 120.0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScalarLinearResult {
  Rational rate;  // min over demanded messages of L_i / c
  LinearScheme witness;
  std::uint64_t candidates = 0;
};

// Every encoding matrix over GF(2) with c <= budget.max_channel_bits rows and
// L_i <= budget.max_message_bits; keeps zero-error decodable ones.
ScalarLinearResult best_scalar_linear_rate(const IndexCodingInstance& inst, const SearchBudget& budget = {});

// Basic feasible solutions of lp (x >= 0) by enumerating every choice of
// n tight hyperplanes; duplicates removed, lexicographically sorted.
std::vector<std::vector<Rational>> enumerate_lp_vertices(const LinearProgram& lp);

struct EntropyByEnumeration {
  double bits = 0;           // Shannon entropy of X given the fixed known bits
  std::uint64_t support = 0; // distinct outputs
  bool uniform = false;      // every output equally likely
};

// Fixes the known messages' bits to `known_bits` (in column order), tries
// every assignment of the remaining bits and tallies the outputs X.
EntropyByEnumeration conditional_entropy_by_enumeration(const LinearScheme& scheme, const MessageSet& known,
                                                        std::uint64_t known_bits = 0);

}  // namespace icl::oracle
