// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any requested criterion fails.
//
//   icl_acceptance            run every criterion
//   icl_acceptance 3 5        run criteria 3 and 5

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icl/caching.hpp"
#include "icl/composite.hpp"
#include "icl/oracle.hpp"
#include "icl/outer.hpp"
#include "icl/parallel.hpp"
#include "icl/scheme.hpp"
#include "random_lp.hpp"
#include "random_scheme.hpp"

using namespace icl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CompositeResult example1_composite(double* secs) {
  CompositeOptions opt;
  opt.threads = default_threads();
  const auto start = std::chrono::steady_clock::now();
  auto r = max_symmetric_rate(builtin_instance("example1"), opt);
  if (secs) *secs = seconds_since(start);
  return r;
}

Outcome criterion_1() {
  double secs = 0;
  const auto r = example1_composite(&secs);
  const bool cert = check_composite_certificate(builtin_instance("example1"), r);
  const std::string four = to_decimal_string(r.symmetric_rate, 4);
  std::ostringstream os;
  os << "Example 1 composite rate " << describe(r.symmetric_rate) << " rounds to " << four
     << " (expected 0.2963); " << r.choices_evaluated << " choices in " << static_cast<int>(secs) << " s"
     << (cert ? ", certificate ok" : ", CERTIFICATE FAILED");
  return {four == "0.2963" && secs <= 600 && cert, os.str()};
}

Outcome criterion_2() {
  const auto inst = builtin_instance("example1");
  const auto scheme = builtin_scheme("example2");
  const auto v = check_scheme(inst, scheme, demands_only_choice(inst));
  const bool alg = zero_error_decode_check(inst, scheme, DecodeMode::Algebraic).all_ok();
  const bool en = zero_error_decode_check(inst, scheme, DecodeMode::Enumerate).all_ok();
  const auto comp = example1_composite(nullptr);
  const Rational third = make_rational(1, 3);
  std::ostringstream os;
  os << "linear scheme " << (v.pass() ? "PASS" : "FAIL") << " at c = " << scheme.channel_bits << ", rate "
     << describe(v.symmetric_rate) << "; zero-error algebraic " << (alg ? "ok" : "FAIL") << ", enumerate "
     << (en ? "ok" : "FAIL") << "; composite " << to_fraction_string(comp.symmetric_rate)
     << (comp.symmetric_rate < third ? " < 1/3" : " NOT < 1/3");
  return {v.pass() && alg && en && scheme.channel_bits == 3 && v.symmetric_rate == third &&
              comp.symmetric_rate < third,
          os.str()};
}

Outcome criterion_3() {
  const auto inst = builtin_instance("example1");
  const auto r = mais(build_side_info_graph(inst));
  const auto v = check_scheme(inst, builtin_scheme("example2"), demands_only_choice(inst));
  std::ostringstream os;
  os << "MAIS " << r.mais_size << " witness " << format_set(r.witness) << ", bound "
     << to_fraction_string(r.symmetric_upper) << ", achieved " << to_fraction_string(v.symmetric_rate);
  return {r.mais_size == 3 && r.symmetric_upper == make_rational(1, 3) && v.pass() &&
              v.symmetric_rate == r.symmetric_upper,
          os.str()};
}

Outcome criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t runs = 0, failures = 0;
  std::string first_failure;
  for (int K = 1; K <= 5; ++K)
    for (int N = 1; N <= 5; ++N)
      for (int t = 0; t <= K; ++t) {
        const std::size_t B = 2 * binomial(K, t);
        const auto lib = FileLibrary::random(N, B, static_cast<std::uint64_t>(1000 * K + 100 * N + t));
        const auto placement = cman_place(K, t, N, B);
        const Rational full_expected = make_rational(static_cast<std::int64_t>(binomial(K, t + 1)),
                                                     static_cast<std::int64_t>(binomial(K, t)));
        for (const auto& d : all_demands(K, N)) {
          const int distinct = static_cast<int>(distinct_files(d).size());
          const Rational reduced_expected =
              make_rational(static_cast<std::int64_t>(binomial(K, t + 1)) - static_cast<std::int64_t>(binomial(K - distinct, t + 1)),
                            static_cast<std::int64_t>(binomial(K, t)));
          for (auto mode : {DeliveryMode::Full, DeliveryMode::Reduced}) {
            ++runs;
            const auto tr = deliver(placement, lib, d, mode);
            const auto dec = decode_all_users(placement, lib, tr, d);
            bool ok = tr.load() == (mode == DeliveryMode::Full ? full_expected : reduced_expected);
            for (std::size_t k = 0; k < dec.size(); ++k)
              ok = ok && dec[k].ok && dec[k].file == lib.file(d[k]);
            if (!ok && failures++ == 0) first_failure = load_csv_row(K, N, t, d, to_string(mode), tr.load());
          }
        }
      }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << runs << " deliveries (K,N <= 5, every t and demand), " << failures << " failures, " << static_cast<int>(secs)
     << " s";
  if (failures) os << "; first: " << first_failure;
  return {failures == 0 && secs <= 900, os.str()};
}

Outcome criterion_5() {
  int cases = 0, failures = 0;
  std::string first_failure;
  for (int K = 1; K <= 5; ++K)
    for (int N = 1; N <= 5; ++N)
      for (int t = 0; t <= K; ++t) {
        ++cases;
        const auto d = worst_case_demand(K, N);
        const auto r = verify_theorem4(K, N, t, d);
        const bool ok = r.pass && r.load_from_rate == r_c_opt(K, N, t);
        if (!ok && failures++ == 0) {
          std::ostringstream f;
          f << "K=" << K << " N=" << N << " t=" << t << " " << r.detail;
          first_failure = f.str();
        }
      }
  std::ostringstream os;
  os << cases << " (K,N,t) with worst-case demand: synthesized scheme certified and 1/(binom(K,t) * rate) equals "
     << "the optimal centralized load in " << cases - failures << "/" << cases;
  if (failures) os << "; first failure: " << first_failure;
  return {failures == 0, os.str()};
}

Outcome criterion_6() {
  const std::vector<Rational> fractions{make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)};
  const int seeds = 20;
  int pairs = 0, shrinking = 0;
  bool all_decode = true, all_close = true;
  std::ostringstream worst;
  double worst_rel = 0;
  for (int K = 2; K <= 4; ++K)
    for (const auto& frac : fractions) {
      const int N = K;
      const Rational M = frac * N;
      const DemandVector d = worst_case_demand(K, N);
      const double formula = r_d_opt(K, N, M).get_d();
      double mean_large = 0;
      for (int s = 1; s <= seeds; ++s) {
        double deviation[2];
        int idx = 0;
        for (std::size_t B : {std::size_t{1000}, std::size_t{100000}}) {
          const auto seed = static_cast<std::uint64_t>(10000 * K + 100 * s) + B;
          const auto lib = FileLibrary::random(N, B, seed + 1);
          const auto placement = dman_place(K, N, M, B, seed);
          const auto tr = dman_deliver(placement, lib, d);
          const auto dec = decode_all_users(placement, lib, tr, d);
          for (std::size_t k = 0; k < dec.size(); ++k)
            all_decode = all_decode && dec[k].ok && dec[k].file == lib.file(d[k]);
          const double load = tr.load().get_d();
          deviation[idx++] = std::abs(load - formula);
          if (B == 100000) mean_large += load / seeds;
        }
        ++pairs;
        if (deviation[1] < deviation[0]) ++shrinking;
      }
      const double rel = std::abs(mean_large - formula) / formula;
      if (rel > 0.10) all_close = false;
      if (rel >= worst_rel) {
        worst_rel = rel;
        worst.str("");
        worst << "K=" << K << " M/N=" << to_fraction_string(frac) << " mean " << mean_large << " vs " << formula;
      }
    }
  std::ostringstream os;
  os << "9 configurations x " << seeds << " seeds: decoding " << (all_decode ? "ok" : "FAILED")
     << "; worst mean-load gap " << std::round(worst_rel * 10000) / 100 << "% (" << worst.str() << ")"
     << "; deviation shrinks from B=10^3 to 10^5 in " << shrinking << "/" << pairs << " seed pairs";
  return {all_decode && all_close && shrinking * 10 >= pairs * 9, os.str()};
}

Outcome criterion_7() {
  int lp_ok = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto lp = random_small_lp(seed);
    const auto vertices = oracle::enumerate_lp_vertices(lp);
    const auto sol = solve_lp(lp);
    const auto exact = solve_lp_exact(lp);
    bool ok;
    if (vertices.empty()) {
      ok = sol.status == LpStatus::Infeasible && exact.status == LpStatus::Infeasible;
    } else {
      Rational best = lp.evaluate_objective(vertices.front());
      for (const auto& v : vertices) best = std::max(best, lp.evaluate_objective(v));
      ok = sol.status == LpStatus::Optimal && sol.optimum == best && exact.status == LpStatus::Optimal &&
           exact.optimum == best;
    }
    lp_ok += ok;
  }

  int entropy_ok = 0;
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto s = random_scheme(seed, 10);
    MessageSet known;
    for (int i = 1; i <= s.num_messages(); ++i)
      if (rng() & 1u) known.insert(i);
    const auto e = oracle::conditional_entropy_by_enumeration(s, known, rng());
    const int rank = conditional_entropy(s, known);
    entropy_ok += e.uniform && e.support == (std::uint64_t{1} << rank) && std::abs(e.bits - rank) < 1e-12;
  }

  // Independent composite blocks: H(X | U_A) and kappa must equal the
  // composite-coding sums for the LP certificate scaled to integers.
  int embed_ok = 0;
  for (const char* name : {"xor2", "no-side-info(3)"}) {
    const auto inst = builtin_instance(name);
    const auto r = max_symmetric_rate(inst);
    mpz_class scale = r.symmetric_rate.get_den();
    for (const auto& [p, v] : r.allocation.rates) scale = lcm(scale, mpz_class(v.get_den()));
    std::map<MessageSet, int> bits;
    for (const auto& [p, v] : r.allocation.rates) bits[p] = static_cast<int>(mpz_class(v * scale).get_si());
    const int c = static_cast<int>(scale.get_si()) * inst.channel_bits;
    const auto s = scheme_from_composite_bits(inst.num_messages, bits, c);
    bool ok = zero_error_decode_check(inst, s, DecodeMode::Algebraic).all_ok();
    for (int j = 0; j < inst.num_users(); ++j) {
      const auto& u = inst.users[static_cast<std::size_t>(j)];
      const MessageSet& k = r.best_choice.sets[static_cast<std::size_t>(j)];
      MessageSet ak = u.knows;
      ak.insert(k.begin(), k.end());
      int outside = 0;
      for (const auto& [p, b] : bits)
        if (!std::includes(u.knows.begin(), u.knows.end(), p.begin(), p.end())) outside += b;
      ok = ok && conditional_entropy(s, u.knows) == outside && outside <= c;
      const std::vector<MessageId> kv(k.begin(), k.end());
      for (unsigned mask = 1; mask < (1u << kv.size()); ++mask) {
        MessageSet jset;
        for (std::size_t i = 0; i < kv.size(); ++i)
          if (mask >> i & 1u) jset.insert(kv[i]);
        if (std::none_of(jset.begin(), jset.end(), [&](MessageId m) { return u.demands.count(m) > 0; })) continue;
        int v = 0;
        for (const auto& [p, b] : bits) {
          const bool inside = std::includes(ak.begin(), ak.end(), p.begin(), p.end());
          if (inside && std::any_of(p.begin(), p.end(), [&](MessageId m) { return jset.count(m) > 0; })) v += b;
        }
        ok = ok && kappa(s, inst, j, jset, k) == v;
      }
    }
    embed_ok += ok;
  }

  std::ostringstream os;
  os << "LP vs vertex enumeration " << lp_ok << "/100; rank entropy vs enumeration " << entropy_ok
     << "/50; composite-block embedding " << embed_ok << "/2 (xor2, no-side-info(3))";
  return {lp_ok == 100 && entropy_ok == 50 && embed_ok == 2, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion: " << argv[i] << "\n";
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty())
    for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) selected.push_back(n);

  int failed = 0;
  for (int n : selected) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
