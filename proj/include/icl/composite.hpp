#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icl/instance.hpp"
#include "icl/lp.hpp"
#include "icl/rational.hpp"

namespace icl {

// Per-user decoding sets K_j with D_j <= K_j <= complement(A_j).
struct DecodingChoice {
  std::vector<MessageSet> sets;

  bool operator==(const DecodingChoice&) const = default;
};

bool is_valid_choice(const IndexCodingInstance& inst, const DecodingChoice& choice);
DecodingChoice demands_only_choice(const IndexCodingInstance& inst);

// Composite index rates S_P for nonempty P; absent entries are zero.
struct CompositeAllocation {
  std::map<MessageSet, Rational> rates;

  Rational at(const MessageSet& p) const;
};

class SearchSpaceOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompositeOptions {
  std::optional<int> per_user_cap;
  std::uint64_t max_choices = std::uint64_t{1} << 24;
  int max_messages = 16;  // the LP has 2^N' variables
  int threads = 1;
};

// Cross product of per-user decoding sets. User 1 varies slowest; each
// user's sets are in lexicographic order of their sorted elements, so index
// order equals lexicographic order of choices.
class DecodingChoiceSpace {
 public:
  DecodingChoiceSpace(const IndexCodingInstance& inst, const CompositeOptions& options = {});

  std::uint64_t size() const { return size_; }
  bool capped() const { return capped_; }
  std::size_t options_for_user(int user) const { return per_user_[static_cast<std::size_t>(user)].size(); }
  DecodingChoice at(std::uint64_t index) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
  }

 private:
  std::vector<std::vector<MessageSet>> per_user_;
  std::uint64_t size_ = 1;
  bool capped_ = false;
};

// Variable 0 is R (or R_1..R_N' in weighted mode); S_P follow in increasing
// bitmask order of P. Strict inequalities are closed to <=.
LinearProgram build_composite_lp(const IndexCodingInstance& inst, const DecodingChoice& choice);
LinearProgram build_composite_lp_weighted(const IndexCodingInstance& inst, const DecodingChoice& choice,
                                          const std::vector<Rational>& weights);

struct CompositeResult {
  Rational symmetric_rate;  // bits per channel use
  DecodingChoice best_choice;
  CompositeAllocation allocation;
  std::uint64_t choices_evaluated = 0;
  bool under_approximation = false;  // per-user cap was active

  Rational normalized_rate(int channel_bits) const { return symmetric_rate / channel_bits; }
};

CompositeResult max_symmetric_rate(const IndexCodingInstance& inst, const CompositeOptions& options = {});

// Per-choice optimum of the symmetric LP.
CompositeResult symmetric_rate_for_choice(const IndexCodingInstance& inst, const DecodingChoice& choice);

struct WeightedCompositeResult {
  Rational value;
  std::vector<Rational> rates;  // R_1..R_N'
  DecodingChoice best_choice;
  CompositeAllocation allocation;
  std::uint64_t choices_evaluated = 0;
  bool under_approximation = false;
};

// Max of weights . R over the union of per-choice polyhedra.
WeightedCompositeResult max_weighted_rate(const IndexCodingInstance& inst, const std::vector<Rational>& weights,
                                          const CompositeOptions& options = {});

// Re-evaluates decompression and decoding constraints at the certificate.
bool check_composite_certificate(const IndexCodingInstance& inst, const DecodingChoice& choice,
                                 const std::vector<Rational>& rates, const CompositeAllocation& allocation);
bool check_composite_certificate(const IndexCodingInstance& inst, const CompositeResult& result);

}  // namespace icl
