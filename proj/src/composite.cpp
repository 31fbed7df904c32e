#include "icl/composite.hpp"

#include <algorithm>
#include <bit>

#include "icl/parallel.hpp"

namespace icl {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const MessageSet& s) {
  Mask m = 0;
  for (MessageId i : s) m |= Mask{1} << (i - 1);
  return m;
}

MessageSet from_mask(Mask m) {
  MessageSet s;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) s.insert(i + 1);
  return s;
}

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::string s_name(Mask p) { return "S" + format_set(from_mask(p)); }

void check_size(const IndexCodingInstance& inst, int max_messages) {
  if (inst.num_messages > max_messages || inst.num_messages > 30)
    throw SearchSpaceOverflow("composite LP needs 2^N' variables; N' = " + std::to_string(inst.num_messages) +
                              " exceeds the limit " + std::to_string(max_messages));
}

// Shared constraint generator. `rate_terms(J)` returns the left-hand side
// rate terms for the decoding constraint of J.
template <class RateTerms>
void add_composite_constraints(LinearProgram& lp, const IndexCodingInstance& inst, const DecodingChoice& choice,
                               int first_s, RateTerms&& rate_terms) {
  const Mask full = (Mask{1} << inst.num_messages) - 1;
  auto s_var = [&](Mask p) { return first_s + static_cast<int>(p) - 1; };
  for (int j = 0; j < inst.num_users(); ++j) {
    const Mask a = to_mask(inst.users[static_cast<std::size_t>(j)].knows);
    std::vector<LinearTerm> terms;
    for (Mask p = 1; p <= full; ++p)
      if (!subset_of(p, a)) terms.push_back({s_var(p), Rational(1)});
    lp.add_constraint(std::move(terms), Relation::LessEqual, Rational(inst.channel_bits));
  }
  for (int j = 0; j < inst.num_users(); ++j) {
    const Mask a = to_mask(inst.users[static_cast<std::size_t>(j)].knows);
    const Mask k = to_mask(choice.sets[static_cast<std::size_t>(j)]);
    const Mask ak = a | k;
    // Nonempty J <= K, enumerated as submasks.
    for (Mask jm = k; jm != 0; jm = (jm - 1) & k) {
      std::vector<LinearTerm> terms = rate_terms(jm);
      for (Mask p = ak; p != 0; p = (p - 1) & ak)
        if (p & jm) terms.push_back({s_var(p), Rational(-1)});
      lp.add_constraint(std::move(terms), Relation::LessEqual, Rational(0));
    }
  }
}

CompositeAllocation extract_allocation(const IndexCodingInstance& inst, const std::vector<Rational>& x, int first_s) {
  CompositeAllocation alloc;
  const Mask full = (Mask{1} << inst.num_messages) - 1;
  for (Mask p = 1; p <= full; ++p) {
    const Rational& v = x[static_cast<std::size_t>(first_s) + p - 1];
    if (v != 0) alloc.rates[from_mask(p)] = v;
  }
  return alloc;
}

}  // namespace

bool is_valid_choice(const IndexCodingInstance& inst, const DecodingChoice& choice) {
  if (choice.sets.size() != inst.users.size()) return false;
  for (std::size_t j = 0; j < inst.users.size(); ++j) {
    const auto& u = inst.users[j];
    const auto& k = choice.sets[j];
    if (!std::includes(k.begin(), k.end(), u.demands.begin(), u.demands.end())) return false;
    for (MessageId m : k)
      if (m < 1 || m > inst.num_messages || u.knows.count(m)) return false;
  }
  return true;
}

DecodingChoice demands_only_choice(const IndexCodingInstance& inst) {
  DecodingChoice c;
  for (const auto& u : inst.users) c.sets.push_back(u.demands);
  return c;
}

Rational CompositeAllocation::at(const MessageSet& p) const {
  auto it = rates.find(p);
  return it == rates.end() ? Rational(0) : it->second;
}

DecodingChoiceSpace::DecodingChoiceSpace(const IndexCodingInstance& inst, const CompositeOptions& options) {
  check_size(inst, options.max_messages);
  const Mask full = (Mask{1} << inst.num_messages) - 1;
  for (const auto& u : inst.users) {
    const Mask d = to_mask(u.demands);
    const Mask free = full & ~to_mask(u.knows) & ~d;
    std::vector<MessageSet> sets;
    for (Mask x = free;; x = (x - 1) & free) {
      if (!options.per_user_cap || std::popcount(x) <= *options.per_user_cap) sets.push_back(from_mask(d | x));
      else capped_ = true;
      if (x == 0) break;
    }
    std::sort(sets.begin(), sets.end());
    if (size_ > options.max_choices / sets.size())
      throw SearchSpaceOverflow("decoding-choice space exceeds the limit of " + std::to_string(options.max_choices));
    size_ *= sets.size();
    per_user_.push_back(std::move(sets));
  }
  if (size_ > options.max_choices)
    throw SearchSpaceOverflow("decoding-choice space exceeds the limit of " + std::to_string(options.max_choices));
}

DecodingChoice DecodingChoiceSpace::at(std::uint64_t index) const {
  DecodingChoice c;
  c.sets.resize(per_user_.size());
  for (std::size_t j = per_user_.size(); j-- > 0;) {
    const auto n = per_user_[j].size();
    c.sets[j] = per_user_[j][index % n];
    index /= n;
  }
  return c;
}

LinearProgram build_composite_lp(const IndexCodingInstance& inst, const DecodingChoice& choice) {
  check_size(inst, 30);
  LinearProgram lp;
  const int r = lp.add_variable("R");
  lp.set_objective(r, Rational(1));
  const Mask full = (Mask{1} << inst.num_messages) - 1;
  for (Mask p = 1; p <= full; ++p) lp.add_variable(s_name(p));
  add_composite_constraints(lp, inst, choice, 1, [&](Mask jm) {
    return std::vector<LinearTerm>{{r, Rational(std::popcount(jm))}};
  });
  return lp;
}

LinearProgram build_composite_lp_weighted(const IndexCodingInstance& inst, const DecodingChoice& choice,
                                          const std::vector<Rational>& weights) {
  check_size(inst, 30);
  if (static_cast<int>(weights.size()) != inst.num_messages)
    throw std::invalid_argument("weights must have one entry per message");
  LinearProgram lp;
  for (int i = 1; i <= inst.num_messages; ++i) lp.set_objective(lp.add_variable("R" + std::to_string(i)), weights[static_cast<std::size_t>(i - 1)]);
  const Mask full = (Mask{1} << inst.num_messages) - 1;
  for (Mask p = 1; p <= full; ++p) lp.add_variable(s_name(p));
  add_composite_constraints(lp, inst, choice, inst.num_messages, [&](Mask jm) {
    std::vector<LinearTerm> terms;
    for (int i = 0; i < inst.num_messages; ++i)
      if (jm & (Mask{1} << i)) terms.push_back({i, Rational(1)});
    return terms;
  });
  return lp;
}

CompositeResult symmetric_rate_for_choice(const IndexCodingInstance& inst, const DecodingChoice& choice) {
  const LinearProgram lp = build_composite_lp(inst, choice);
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error(std::string("composite LP unexpectedly ") + to_string(sol.status));
  CompositeResult res;
  res.symmetric_rate = sol.optimum;
  res.best_choice = choice;
  res.allocation = extract_allocation(inst, sol.assignment, 1);
  res.choices_evaluated = 1;
  return res;
}

namespace {

struct Best {
  bool set = false;
  Rational value;
  std::uint64_t index = 0;
  std::vector<Rational> x;
};

// Keeps the largest value; equal values keep the smaller index.
void offer(Best& best, const Rational& value, std::uint64_t index, const std::vector<Rational>& x) {
  if (!best.set || value > best.value || (value == best.value && index < best.index)) {
    best.set = true;
    best.value = value;
    best.index = index;
    best.x = x;
  }
}

template <class BuildLp>
Best search(const DecodingChoiceSpace& space, int threads, BuildLp&& build) {
  const int workers = std::max(1, threads);
  std::vector<Best> local(static_cast<std::size_t>(workers));
  parallel_for(space.size(), workers, [&](std::uint64_t i, int w) {
    const LinearProgram lp = build(space.at(i));
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error(std::string("composite LP unexpectedly ") + to_string(sol.status));
    offer(local[static_cast<std::size_t>(w)], sol.optimum, i, sol.assignment);
  });
  Best best;
  for (const auto& b : local)
    if (b.set) offer(best, b.value, b.index, b.x);
  return best;
}

}  // namespace

CompositeResult max_symmetric_rate(const IndexCodingInstance& inst, const CompositeOptions& options) {
  const DecodingChoiceSpace space(inst, options);
  const Best best = search(space, options.threads, [&](const DecodingChoice& c) { return build_composite_lp(inst, c); });
  CompositeResult res;
  res.symmetric_rate = best.value;
  res.best_choice = space.at(best.index);
  res.allocation = extract_allocation(inst, best.x, 1);
  res.choices_evaluated = space.size();
  res.under_approximation = space.capped();
  return res;
}

WeightedCompositeResult max_weighted_rate(const IndexCodingInstance& inst, const std::vector<Rational>& weights,
                                          const CompositeOptions& options) {
  const DecodingChoiceSpace space(inst, options);
  const Best best = search(space, options.threads,
                           [&](const DecodingChoice& c) { return build_composite_lp_weighted(inst, c, weights); });
  WeightedCompositeResult res;
  res.value = best.value;
  res.rates.assign(best.x.begin(), best.x.begin() + inst.num_messages);
  res.best_choice = space.at(best.index);
  res.allocation = extract_allocation(inst, best.x, inst.num_messages);
  res.choices_evaluated = space.size();
  res.under_approximation = space.capped();
  return res;
}

bool check_composite_certificate(const IndexCodingInstance& inst, const DecodingChoice& choice,
                                 const std::vector<Rational>& rates, const CompositeAllocation& allocation) {
  if (!is_valid_choice(inst, choice) || static_cast<int>(rates.size()) != inst.num_messages) return false;
  for (const auto& r : rates)
    if (r < 0) return false;
  for (const auto& [p, s] : allocation.rates)
    if (s < 0 || p.empty()) return false;
  for (std::size_t j = 0; j < inst.users.size(); ++j) {
    const auto& a = inst.users[j].knows;
    Rational load = 0;
    for (const auto& [p, s] : allocation.rates)
      if (!std::includes(a.begin(), a.end(), p.begin(), p.end())) load += s;
    if (load > inst.channel_bits) return false;

    const Mask am = to_mask(a);
    const Mask k = to_mask(choice.sets[j]);
    for (Mask jm = k; jm != 0; jm = (jm - 1) & k) {
      Rational lhs = 0;
      for (int i = 0; i < inst.num_messages; ++i)
        if (jm & (Mask{1} << i)) lhs += rates[static_cast<std::size_t>(i)];
      Rational v = 0;
      for (const auto& [p, s] : allocation.rates) {
        const Mask pm = to_mask(p);
        if (subset_of(pm, am | k) && (pm & jm)) v += s;
      }
      if (lhs > v) return false;
    }
  }
  return true;
}

bool check_composite_certificate(const IndexCodingInstance& inst, const CompositeResult& result) {
  return check_composite_certificate(inst, result.best_choice,
                                     std::vector<Rational>(static_cast<std::size_t>(inst.num_messages), result.symmetric_rate),
                                     result.allocation);
}

}  // namespace icl
