// icl: command-line front end for the index-coding / coded-caching toolkit.
//
// Exit status: 0 success, 1 computation-reported failure, 2 usage error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icl/caching.hpp"
#include "icl/composite.hpp"
#include "icl/instance.hpp"
#include "icl/outer.hpp"
#include "icl/parallel.hpp"
#include "icl/rational.hpp"
#include "icl/scheme.hpp"

namespace {

using namespace icl;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv };

struct Common {
  std::string instance;
  std::string scheme;
  int threads = 1;
  std::string format = "table";

  Format fmt() const { return format == "csv" ? Format::Csv : Format::Table; }
};

IndexCodingInstance resolve_instance(const std::string& what) {
  if (what.empty()) throw UsageError("--instance is required");
  if (std::filesystem::exists(what)) return load_instance(what);
  try {
    return builtin_instance(what);
  } catch (const UnknownName&) {
    throw UsageError("no such instance file or builtin: " + what);
  }
}

LinearScheme resolve_scheme(const std::string& what) {
  if (what.empty()) throw UsageError("--scheme is required");
  if (std::filesystem::exists(what)) return load_scheme(what);
  try {
    return builtin_scheme(what);
  } catch (const std::exception&) {
    throw UsageError("no such scheme file or builtin: " + what);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

std::string choice_string(const DecodingChoice& c) {
  std::string out;
  for (std::size_t j = 0; j < c.sets.size(); ++j) {
    if (j) out += ' ';
    out += "K" + std::to_string(j + 1) + "=" + format_set(c.sets[j]);
  }
  return out;
}

int cmd_validate(const Common& o) {
  const auto inst = resolve_instance(o.instance);
  const auto report = validate_instance(inst);
  if (report.ok()) {
    std::cout << "ok: " << inst.num_messages << " messages, " << inst.num_users() << " users\n";
    return 0;
  }
  for (const auto& v : report.violations)
    std::cout << (v.user ? "user " + std::to_string(v.user) : std::string("instance")) << ": " << v.rule << "\n";
  return 1;
}

int cmd_composite(const Common& o, std::optional<int> cap, const std::string& weights_text) {
  const auto inst = resolve_instance(o.instance);
  if (!validate_instance(inst).ok()) throw UsageError("instance is not valid; run 'icl validate'");
  CompositeOptions opt;
  opt.per_user_cap = cap;
  opt.threads = o.threads;
  const auto start = std::chrono::steady_clock::now();
  if (!weights_text.empty()) {
    std::vector<Rational> w;
    std::stringstream ss(weights_text);
    for (std::string item; std::getline(ss, item, ',');) w.push_back(parse_rational(item));
    if (static_cast<int>(w.size()) != inst.num_messages)
      throw UsageError("--weights needs one entry per message");
    const auto r = max_weighted_rate(inst, w, opt);
    if (o.fmt() == Format::Csv) {
      std::cout << "value_num,value_den,choices,capped\n"
                << r.value.get_num() << ',' << r.value.get_den() << ',' << r.choices_evaluated << ','
                << (r.under_approximation ? 1 : 0) << "\n";
    } else {
      std::cout << "weighted value: " << describe(r.value) << "\n";
      for (std::size_t i = 0; i < r.rates.size(); ++i)
        std::cout << "  R" << i + 1 << " = " << describe(r.rates[i]) << "\n";
      std::cout << "best choice: " << choice_string(r.best_choice) << "\n";
      std::cout << "choices evaluated: " << r.choices_evaluated << (r.under_approximation ? " (capped)" : "") << "\n";
    }
    return 0;
  }
  const auto r = max_symmetric_rate(inst, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!check_composite_certificate(inst, r)) {
    std::cerr << "certificate check failed\n";
    return 1;
  }
  const Rational norm = r.normalized_rate(inst.channel_bits);
  if (o.fmt() == Format::Csv) {
    std::cout << "rate_num,rate_den,normalized_num,normalized_den,choices,capped\n"
              << r.symmetric_rate.get_num() << ',' << r.symmetric_rate.get_den() << ',' << norm.get_num() << ','
              << norm.get_den() << ',' << r.choices_evaluated << ',' << (r.under_approximation ? 1 : 0) << "\n";
  } else {
    std::cout << "symmetric rate: " << describe(r.symmetric_rate) << " bits per channel use\n";
    std::cout << "normalized (per channel bit): " << describe(norm) << "\n";
    std::cout << "best choice: " << choice_string(r.best_choice) << "\n";
    std::cout << "allocation:";
    for (const auto& [p, s] : r.allocation.rates)
      if (s != 0) std::cout << " S" << format_set(p) << "=" << to_fraction_string(s);
    std::cout << "\n";
    std::cout << "choices evaluated: " << r.choices_evaluated << (r.under_approximation ? " (capped: lower bound)" : "")
              << "  [" << to_decimal_string(Rational(static_cast<long>(secs * 1000)) / 1000, 3) << " s]\n";
  }
  return 0;
}

int cmd_linear_check(const Common& o) {
  const auto inst = resolve_instance(o.instance);
  const auto scheme = resolve_scheme(o.scheme);
  validate_scheme(scheme, inst);
  const auto v = check_scheme(inst, scheme, demands_only_choice(inst));
  if (o.fmt() == Format::Csv) {
    std::cout << "user,channel_entropy,channel_ok,mac_ok\n";
    for (int j = 0; j < inst.num_users(); ++j)
      std::cout << j + 1 << ',' << v.channel_entropy[static_cast<std::size_t>(j)] << ','
                << (v.channel_ok[static_cast<std::size_t>(j)] ? 1 : 0) << ',' << (v.mac_ok(j) ? 1 : 0) << "\n";
  } else {
    std::cout << "channel bits c = " << scheme.channel_bits << "\n";
    for (int j = 0; j < inst.num_users(); ++j) {
      std::cout << "user " << j + 1 << ": H(X|A)=" << v.channel_entropy[static_cast<std::size_t>(j)]
                << (v.channel_ok[static_cast<std::size_t>(j)] ? " ok" : " EXCEEDS c");
      for (const auto& m : v.mac)
        if (m.user == j)
          std::cout << "  J=" << format_set(m.subset) << " kappa=" << m.kappa << " need=" << m.demand_bits
                    << (m.ok ? "" : "!");
      std::cout << "\n";
    }
  }
  std::cout << (v.pass() ? "PASS" : "FAIL") << " symmetric rate " << describe(v.symmetric_rate) << " of c = "
            << scheme.channel_bits << " bits\n";
  return v.pass() ? 0 : 1;
}

int cmd_zero_error(const Common& o, const std::string& mode) {
  const auto inst = resolve_instance(o.instance);
  const auto scheme = resolve_scheme(o.scheme);
  validate_scheme(scheme, inst);
  const DecodeMode m = mode == "enumerate" ? DecodeMode::Enumerate : DecodeMode::Algebraic;
  const auto r = zero_error_decode_check(inst, scheme, m);
  for (std::size_t j = 0; j < r.user_ok.size(); ++j)
    std::cout << "user " << j + 1 << ": " << (r.user_ok[j] ? "decodes" : "FAILS") << "\n";
  std::cout << (r.all_ok() ? "PASS" : "FAIL") << " (" << mode << ")\n";
  return r.all_ok() ? 0 : 1;
}

int cmd_mais(const Common& o) {
  const auto inst = resolve_instance(o.instance);
  const auto g = build_side_info_graph(inst);
  const auto r = mais(g, inst.channel_bits);
  if (o.fmt() == Format::Csv) {
    std::cout << "mais,bound_num,bound_den\n"
              << r.mais_size << ',' << r.symmetric_upper.get_num() << ',' << r.symmetric_upper.get_den() << "\n";
  } else {
    std::cout << "MAIS size: " << r.mais_size << "  witness " << format_set(r.witness) << "\n";
    std::cout << "symmetric rate upper bound: " << describe(r.symmetric_upper) << "\n";
  }
  return 0;
}

int cmd_sandwich(const Common& o) {
  const auto inst = resolve_instance(o.instance);
  CompositeOptions opt;
  opt.threads = o.threads;
  const auto comp = max_symmetric_rate(inst, opt);
  const Rational comp_norm = comp.normalized_rate(inst.channel_bits);
  std::optional<Rational> lin;
  bool lin_pass = false;
  if (!o.scheme.empty()) {
    const auto scheme = resolve_scheme(o.scheme);
    validate_scheme(scheme, inst);
    const auto v = check_scheme(inst, scheme, demands_only_choice(inst));
    lin_pass = v.pass() && zero_error_decode_check(inst, scheme, DecodeMode::Algebraic).all_ok();
    lin = v.symmetric_rate;
  }
  const auto outer = mais(build_side_info_graph(inst), 1);
  const Rational upper = outer.symmetric_upper;
  bool ordered = comp_norm <= upper;
  if (lin) ordered = ordered && comp_norm <= *lin && *lin <= upper;
  if (o.fmt() == Format::Csv) {
    std::cout << "bound,num,den\n";
    std::cout << "composite," << comp_norm.get_num() << ',' << comp_norm.get_den() << "\n";
    if (lin) std::cout << "linear," << lin->get_num() << ',' << lin->get_den() << "\n";
    std::cout << "mais," << upper.get_num() << ',' << upper.get_den() << "\n";
  } else {
    std::cout << "rates normalized by the channel size\n";
    std::cout << "  composite coding : " << describe(comp_norm) << "\n";
    if (lin) std::cout << "  linear scheme    : " << describe(*lin) << (lin_pass ? "" : " (scheme FAILS)") << "\n";
    std::cout << "  acyclic bound    : " << describe(upper) << " (MAIS " << outer.mais_size << ")\n";
    std::cout << (ordered ? "ordered" : "NOT ordered") << "\n";
  }
  return ordered && (!lin || lin_pass) ? 0 : 1;
}

struct CacheArgs {
  int K = 0;
  int N = 0;
  int t = 0;
  std::string demands;
  std::size_t B = 0;
  std::string mode = "reduced";
  bool decentralized = false;
  std::string M;
  std::uint64_t seed = 1;
  int trials = 1;
  bool log = false;
  int k_bits = 1;
  std::string out;
  std::string instance_out;
  std::string scheme_out;
};

DemandVector demand_or_worst(const CacheArgs& a) {
  if (a.demands.empty()) return worst_case_demand(a.K, a.N);
  auto d = parse_int_list(a.demands);
  if (static_cast<int>(d.size()) != a.K) throw UsageError("--demands needs K entries");
  for (int f : d)
    if (f < 1 || f > a.N) throw UsageError("demanded file out of range 1..N");
  return d;
}

void check_kn(const CacheArgs& a) {
  if (a.K < 1 || a.N < 1) throw UsageError("--K and --N must be positive");
  if (a.K > 20) throw UsageError("--K at most 20");
}

int cmd_cache_sim(const Common& o, const CacheArgs& a) {
  check_kn(a);
  const auto d = demand_or_worst(a);
  if (a.decentralized) {
    if (a.M.empty()) throw UsageError("--decentralized needs --M");
    const Rational M = parse_rational(a.M);
    const std::size_t B = a.B ? a.B : 10000;
    const Rational formula = r_d_opt(a.K, a.N, M);
    if (o.fmt() == Format::Csv) std::cout << "K,N,M,seed,B,load_num,load_den,decoded\n";
    bool all_ok = true;
    Rational total = 0;
    for (int trial = 0; trial < a.trials; ++trial) {
      const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(trial);
      const auto lib = FileLibrary::random(a.N, B, seed);
      const auto placement = dman_place(a.K, a.N, M, B, seed);
      const auto tr = dman_deliver(placement, lib, d);
      const auto dec = decode_all_users(placement, lib, tr, d);
      bool ok = true;
      for (const auto& u : dec) ok = ok && u.ok;
      all_ok = all_ok && ok;
      const Rational load = tr.load();
      total += load;
      if (o.fmt() == Format::Csv) {
        std::cout << a.K << ',' << a.N << ',' << to_fraction_string(M) << ',' << seed << ',' << B << ','
                  << load.get_num() << ',' << load.get_den() << ',' << (ok ? 1 : 0) << "\n";
      } else {
        std::cout << "seed " << seed << ": load " << describe(load) << (ok ? "" : "  DECODE FAILURE") << "\n";
      }
      if (a.log) std::cout << tr.log();
    }
    if (o.fmt() == Format::Table) {
      std::cout << "mean load " << to_decimal_string(total / a.trials) << " vs formula " << describe(formula) << "\n";
      std::cout << (all_ok ? "all users decoded" : "decoding FAILED") << "\n";
    }
    return all_ok ? 0 : 1;
  }
  if (a.t < 0 || a.t > a.K) throw UsageError("--t must lie in 0..K");
  const std::size_t B = a.B ? a.B : binomial(a.K, a.t);
  if (a.mode != "full" && a.mode != "reduced") throw UsageError("--mode must be full or reduced");
  const DeliveryMode mode = a.mode == "full" ? DeliveryMode::Full : DeliveryMode::Reduced;
  const auto lib = FileLibrary::random(a.N, B, a.seed);
  const auto placement = cman_place(a.K, a.t, a.N, B);
  const auto tr = deliver(placement, lib, d, mode);
  const auto dec = decode_all_users(placement, lib, tr, d);
  bool ok = true;
  for (const auto& u : dec) ok = ok && u.ok;
  if (o.fmt() == Format::Csv) {
    std::cout << load_csv_header() << "\n" << load_csv_row(a.K, a.N, a.t, d, a.mode, tr.load()) << "\n";
  } else {
    std::cout << "demand (" << format_demand(d, ',') << "), " << tr.payloads.size() << " payloads, "
              << tr.total_bits() << " bits\n";
    std::cout << "load " << describe(tr.load()) << "\n";
    std::cout << (ok ? "all users decoded" : "decoding FAILED") << "\n";
  }
  if (a.log) std::cout << tr.log();
  return ok ? 0 : 1;
}

int cmd_cache_formulas(const Common& o, const CacheArgs& a) {
  check_kn(a);
  if (o.fmt() == Format::Csv) std::cout << "t,M_num,M_den,cman_num,cman_den,opt_num,opt_den\n";
  else std::cout << std::left << std::setw(4) << "t" << std::setw(8) << "M" << std::setw(24) << "cMAN"
                  << "optimal (leader-reduced)\n";
  for (int t = 0; t <= a.K; ++t) {
    const Rational M = make_rational(t * a.N, a.K);
    const Rational rc = r_cman(a.K, t);
    const Rational ro = r_c_opt(a.K, a.N, t);
    if (o.fmt() == Format::Csv) {
      std::cout << t << ',' << M.get_num() << ',' << M.get_den() << ',' << rc.get_num() << ',' << rc.get_den() << ','
                << ro.get_num() << ',' << ro.get_den() << "\n";
    } else {
      std::cout << std::left << std::setw(4) << t << std::setw(8) << to_fraction_string(M) << std::setw(24)
                << describe(rc) << describe(ro) << "\n";
    }
  }
  if (!a.M.empty()) {
    const Rational M = parse_rational(a.M);
    std::cout << "at M = " << to_fraction_string(M) << ": centralized envelope " << describe(r_c_opt_envelope(a.K, a.N, M));
    if (M > 0 && M < a.N)
      std::cout << ", decentralized " << describe(r_dman(a.K, a.N, M)) << ", decentralized reduced "
                << describe(r_d_opt(a.K, a.N, M));
    std::cout << "\n";
  }
  return 0;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int cmd_cache_reduce(const CacheArgs& a) {
  check_kn(a);
  if (a.t < 0 || a.t > a.K) throw UsageError("--t must lie in 0..K");
  const auto d = demand_or_worst(a);
  const std::size_t B = a.B ? a.B : binomial(a.K, a.t);
  const auto placement = cman_place(a.K, a.t, a.N, B);
  const auto red = reduce_to_index_coding(placement.subfiles, d, a.k_bits);
  std::ostringstream text;
  text << "# K=" << a.K << " N=" << a.N << " t=" << a.t << " d=" << format_demand(d, ',') << "\n";
  for (std::size_t m = 0; m < red.labels.size(); ++m)
    text << "# message " << m + 1 << " = " << format_subfile(red.labels[m]) << "\n";
  for (std::size_t j = 0; j < red.user_of.size(); ++j)
    text << "# user " << j + 1 << " = cache user " << red.user_of[j] << "\n";
  for (int u : red.dropped_users) text << "# cache user " << u << " dropped (file fully cached)\n";
  text << format_instance(red.instance);
  write_text(a.out, text.str());
  return 0;
}

int cmd_cache_synthesize(const CacheArgs& a) {
  check_kn(a);
  if (a.t < 0 || a.t > a.K) throw UsageError("--t must lie in 0..K");
  const auto d = demand_or_worst(a);
  const auto syn = synthesize_theorem4_scheme(a.K, a.N, a.t, d, a.k_bits);
  write_text(a.instance_out, format_instance(syn.reduction.instance));
  if (a.scheme_out.empty() && (a.instance_out.empty() || a.instance_out == "-")) std::cout << "----\n";
  write_text(a.scheme_out, format_scheme(syn.scheme));
  if (!a.instance_out.empty() && a.instance_out != "-" && !a.scheme_out.empty() && a.scheme_out != "-") {
    const auto report = verify_theorem4(a.K, a.N, a.t, d, a.k_bits);
    std::cout << (report.pass ? "PASS" : "FAIL") << " certified rate " << describe(report.certified_rate)
              << ", load " << describe(report.load_from_rate) << " (expected " << describe(report.expected_load)
              << ")\n";
    return report.pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index coding and coded caching toolkit"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool scheme) {
    sub->add_option("--instance", common.instance, "instance file or builtin name");
    if (scheme) sub->add_option("--scheme", common.scheme, "scheme file or builtin name");
    sub->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", common.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  };

  auto* validate = app.add_subcommand("validate", "check an instance file");
  add_common(validate, false);

  std::optional<int> cap;
  std::string weights;
  auto* composite = app.add_subcommand("composite-rate", "composite coding symmetric (or weighted) rate");
  add_common(composite, false);
  composite->add_option("--cap", cap, "limit decoding-set options per user")->check(CLI::PositiveNumber);
  composite->add_option("--weights", weights, "comma-separated weights, one per message");

  auto* linear = app.add_subcommand("linear-check", "certify a GF(2) linear scheme");
  add_common(linear, true);

  std::string decode_mode = "algebraic";
  auto* zero = app.add_subcommand("zero-error", "zero-error decodability of a linear scheme");
  add_common(zero, true);
  zero->add_option("--mode", decode_mode, "algebraic or enumerate")
      ->check(CLI::IsMember({"algebraic", "enumerate"}));

  auto* mais_cmd = app.add_subcommand("mais", "maximum acyclic induced subgraph bound");
  add_common(mais_cmd, false);

  auto* sandwich = app.add_subcommand("sandwich", "composite / linear / acyclic bounds side by side");
  add_common(sandwich, true);

  CacheArgs ca;
  auto* cache = app.add_subcommand("cache", "coded caching");
  cache->require_subcommand(1);
  auto add_kn = [&](CLI::App* sub) {
    sub->add_option("--K", ca.K, "users")->required();
    sub->add_option("--N", ca.N, "files")->required();
    sub->add_option("--format", common.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  };
  auto add_demand = [&](CLI::App* sub) {
    sub->add_option("--t", ca.t, "centralized parameter t = KM/N");
    sub->add_option("--demands", ca.demands, "d_1,...,d_K (default: worst case)");
    sub->add_option("--B", ca.B, "bits per file");
    sub->add_option("--k-bits", ca.k_bits, "bits per subfile in the index coding view")->check(CLI::PositiveNumber);
  };
  auto* sim = cache->add_subcommand("sim", "place, deliver and decode");
  add_kn(sim);
  add_demand(sim);
  sim->add_option("--mode", ca.mode, "full or reduced")->check(CLI::IsMember({"full", "reduced"}));
  sim->add_flag("--decentralized", ca.decentralized, "random placement");
  sim->add_option("--M", ca.M, "cache size in files (decentralized)");
  sim->add_option("--seed", ca.seed, "random seed");
  sim->add_option("--trials", ca.trials, "seeds seed..seed+trials-1")->check(CLI::PositiveNumber);
  sim->add_flag("--log", ca.log, "print the transcript");

  auto* formulas = cache->add_subcommand("formulas", "closed-form worst-case loads");
  add_kn(formulas);
  formulas->add_option("--M", ca.M, "also evaluate at this cache size");

  auto* reduce = cache->add_subcommand("reduce", "emit the index coding instance of a delivery");
  add_kn(reduce);
  add_demand(reduce);
  reduce->add_option("--out", ca.out, "output file (default stdout)");

  auto* synth = cache->add_subcommand("synthesize", "emit instance + linear scheme for leader-reduced delivery");
  add_kn(synth);
  add_demand(synth);
  synth->add_option("--instance-out", ca.instance_out, "instance file (default stdout)");
  synth->add_option("--scheme-out", ca.scheme_out, "scheme file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(common);
    if (*composite) return cmd_composite(common, cap, weights);
    if (*linear) return cmd_linear_check(common);
    if (*zero) return cmd_zero_error(common, decode_mode);
    if (*mais_cmd) return cmd_mais(common);
    if (*sandwich) return cmd_sandwich(common);
    if (*sim) return cmd_cache_sim(common, ca);
    if (*formulas) return cmd_cache_formulas(common, ca);
    if (*reduce) return cmd_cache_reduce(ca);
    if (*synth) return cmd_cache_synthesize(ca);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidScheme& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
