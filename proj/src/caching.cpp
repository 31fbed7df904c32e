#include "icl/caching.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace icl {

MessageSet users_of(UserMask mask) {
  MessageSet s;
  for (int k = 1; mask != 0; ++k, mask >>= 1)
    if (mask & 1u) s.insert(k);
  return s;
}

UserMask mask_of(const MessageSet& users) {
  UserMask m = 0;
  for (int k : users) m |= UserMask{1} << (k - 1);
  return m;
}

std::vector<UserMask> subsets_of_size(int K, int size) {
  std::vector<MessageSet> sets;
  for (UserMask m = 0; m < (UserMask{1} << K); ++m)
    if (std::popcount(m) == size) sets.push_back(users_of(m));
  std::sort(sets.begin(), sets.end());
  std::vector<UserMask> out;
  for (const auto& s : sets) out.push_back(mask_of(s));
  return out;
}

FileLibrary FileLibrary::random(int num_files, std::size_t bits_per_file, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FileLibrary lib;
  for (int i = 0; i < num_files; ++i) {
    BitVector f(bits_per_file);
    for (auto& w : f.words()) w = rng();
    f.resize(bits_per_file);  // clears bits past the end
    lib.files.push_back(std::move(f));
  }
  return lib;
}

std::string format_subfile(const SubfileKey& key) {
  return "F" + std::to_string(key.file) + format_set(users_of(key.users));
}

SubfileMap::SubfileMap(int num_users, int num_files, std::size_t bits_per_file)
    : num_users_(num_users), num_files_(num_files), bits_per_file_(bits_per_file), parts_(static_cast<std::size_t>(num_files)) {}

const std::vector<std::uint32_t>& SubfileMap::positions(const SubfileKey& key) const {
  static const std::vector<std::uint32_t> empty;
  const auto& p = parts_.at(static_cast<std::size_t>(key.file - 1));
  auto it = p.find(key.users);
  return it == p.end() ? empty : it->second;
}

void SubfileMap::assign(const SubfileKey& key, std::vector<std::uint32_t> positions) {
  auto& p = parts_.at(static_cast<std::size_t>(key.file - 1));
  if (positions.empty()) p.erase(key.users);
  else p[key.users] = std::move(positions);
}

const std::map<UserMask, std::vector<std::uint32_t>>& SubfileMap::parts(int file) const {
  return parts_.at(static_cast<std::size_t>(file - 1));
}

BitVector SubfileMap::extract(const FileLibrary& library, const SubfileKey& key) const {
  const auto& pos = positions(key);
  const BitVector& f = library.file(key.file);
  BitVector out(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (f.get(pos[i])) out.set(i);
  return out;
}

bool SubfileMap::is_partition() const {
  for (const auto& p : parts_) {
    std::vector<bool> seen(bits_per_file_, false);
    std::size_t covered = 0;
    for (const auto& [w, pos] : p) {
      for (auto b : pos) {
        if (b >= bits_per_file_ || seen[b]) return false;
        seen[b] = true;
        ++covered;
      }
    }
    if (covered != bits_per_file_) return false;
  }
  return true;
}

std::size_t Placement::cached_bits(int user) const {
  std::size_t n = 0;
  for (const auto& key : cache.contents.at(static_cast<std::size_t>(user - 1))) n += subfiles.size(key);
  return n;
}

namespace {

void fill_contents(Placement& p) {
  const int K = p.subfiles.num_users();
  p.cache.contents.assign(static_cast<std::size_t>(K), {});
  for (int i = 1; i <= p.subfiles.num_files(); ++i)
    for (const auto& [w, pos] : p.subfiles.parts(i))
      for (int k = 1; k <= K; ++k)
        if (w >> (k - 1) & 1u) p.cache.contents[static_cast<std::size_t>(k - 1)].insert({i, w});
}

void check_users(int K) {
  if (K < 1 || K > 20) throw DomainError("number of users must be in [1, 20]");
}

}  // namespace

Placement cman_place(int K, int t, int num_files, std::size_t bits_per_file) {
  check_users(K);
  if (t < 0 || t > K) throw DomainError("t must lie in [0, K]");
  if (num_files < 1 || bits_per_file < 1) throw DomainError("need N >= 1 and B >= 1");
  const std::uint64_t parts = binomial(K, t);
  if (bits_per_file % parts != 0)
    throw Indivisible("binom(" + std::to_string(K) + "," + std::to_string(t) + ") = " + std::to_string(parts) +
                      " does not divide B = " + std::to_string(bits_per_file));
  const std::size_t len = bits_per_file / parts;
  Placement p;
  p.subfiles = SubfileMap(K, num_files, bits_per_file);
  const auto ws = subsets_of_size(K, t);
  for (int i = 1; i <= num_files; ++i) {
    for (std::size_t r = 0; r < ws.size(); ++r) {
      std::vector<std::uint32_t> pos(len);
      for (std::size_t b = 0; b < len; ++b) pos[b] = static_cast<std::uint32_t>(r * len + b);
      p.subfiles.assign({i, ws[r]}, std::move(pos));
    }
  }
  p.cache.num_users = K;
  p.cache.kind = PlacementKind::Centralized;
  p.cache.t = t;
  p.cache.cache_files = make_rational(t * num_files, K);
  p.cache.cache_files.canonicalize();
  fill_contents(p);
  return p;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

}  // namespace

Placement dman_place(int K, int num_files, const Rational& M, std::size_t bits_per_file, std::uint64_t seed) {
  check_users(K);
  if (num_files < 1 || bits_per_file < 1) throw DomainError("need N >= 1 and B >= 1");
  if (M <= 0 || M >= num_files) throw DomainError("decentralized placement needs 0 < M < N");
  const Rational fraction = M / num_files;
  mpz_class cached = mpz_class(static_cast<unsigned long>(bits_per_file)) * fraction.get_num() / fraction.get_den();
  const std::size_t per_file = cached.get_ui();

  std::mt19937_64 rng(seed);
  // who[i][b]: users caching bit b of file i.
  std::vector<std::vector<UserMask>> who(static_cast<std::size_t>(num_files), std::vector<UserMask>(bits_per_file, 0));
  std::vector<std::uint32_t> perm(bits_per_file);
  for (int k = 1; k <= K; ++k) {
    for (int i = 1; i <= num_files; ++i) {
      for (std::size_t b = 0; b < bits_per_file; ++b) perm[b] = static_cast<std::uint32_t>(b);
      for (std::size_t s = 0; s < per_file; ++s) {
        const std::size_t j = s + static_cast<std::size_t>(uniform_below(rng, bits_per_file - s));
        std::swap(perm[s], perm[j]);
        who[static_cast<std::size_t>(i - 1)][perm[s]] |= UserMask{1} << (k - 1);
      }
    }
  }
  Placement p;
  p.subfiles = SubfileMap(K, num_files, bits_per_file);
  for (int i = 1; i <= num_files; ++i) {
    std::map<UserMask, std::vector<std::uint32_t>> groups;
    const auto& w = who[static_cast<std::size_t>(i - 1)];
    for (std::size_t b = 0; b < bits_per_file; ++b) groups[w[b]].push_back(static_cast<std::uint32_t>(b));
    for (auto& [mask, pos] : groups) p.subfiles.assign({i, mask}, std::move(pos));
  }
  p.cache.num_users = K;
  p.cache.kind = PlacementKind::Decentralized;
  p.cache.seed = seed;
  p.cache.cache_files = M;
  fill_contents(p);
  return p;
}

std::set<int> distinct_files(const DemandVector& d) { return {d.begin(), d.end()}; }

std::set<int> leaders(const DemandVector& d) {
  std::set<int> files, out;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (files.insert(d[k]).second) out.insert(static_cast<int>(k) + 1);
  return out;
}

DemandVector worst_case_demand(int K, int N) {
  DemandVector d;
  for (int k = 0; k < K; ++k) d.push_back(k % N + 1);
  return d;
}

std::vector<DemandVector> all_demands(int K, int N) {
  std::vector<DemandVector> out;
  DemandVector d(static_cast<std::size_t>(K), 1);
  for (;;) {
    out.push_back(d);
    int k = K - 1;
    while (k >= 0 && d[static_cast<std::size_t>(k)] == N) d[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++d[static_cast<std::size_t>(k)];
  }
  return out;
}

const char* to_string(DeliveryMode m) { return m == DeliveryMode::Full ? "full" : "reduced"; }

std::size_t DeliveryTranscript::total_bits() const {
  std::size_t n = 0;
  for (const auto& p : payloads) n += p.bits.size();
  return n;
}

Rational DeliveryTranscript::load() const {
  if (file_bits == 0) return Rational(0);
  Rational r(mpz_class(static_cast<unsigned long>(total_bits())), mpz_class(static_cast<unsigned long>(file_bits)));
  r.canonicalize();
  return r;
}

std::string DeliveryTranscript::log() const {
  std::ostringstream out;
  for (const auto& p : payloads) out << "S=" << format_set(users_of(p.users)) << " bits=" << p.bits.to_hex() << "\n";
  return out.str();
}

namespace {

void check_demand(const DemandVector& d, int K, int N) {
  if (static_cast<int>(d.size()) != K) throw DomainError("demand vector must have one entry per user");
  for (int f : d)
    if (f < 1 || f > N) throw DomainError("demanded file out of range");
}

// XOR of F_{d_s, S\{s}} over s in S; empty components are skipped and the
// payload is as long as its longest component.
Payload make_payload(const Placement& placement, const FileLibrary& library, const DemandVector& d, UserMask s_mask) {
  Payload p;
  p.users = s_mask;
  std::size_t len = 0;
  for (int s : users_of(s_mask)) {
    const SubfileKey key{d[static_cast<std::size_t>(s - 1)], s_mask & ~(UserMask{1} << (s - 1))};
    const std::size_t n = placement.subfiles.size(key);
    if (n == 0) continue;
    p.components.push_back(key);
    len = std::max(len, n);
  }
  p.bits = BitVector(len);
  for (const auto& key : p.components) p.bits.xor_prefix(placement.subfiles.extract(library, key));
  return p;
}

bool touches(UserMask s, const std::set<int>& users) {
  for (int u : users)
    if (s >> (u - 1) & 1u) return true;
  return false;
}

}  // namespace

DeliveryTranscript deliver(const Placement& placement, const FileLibrary& library, const DemandVector& d,
                           DeliveryMode mode) {
  if (placement.cache.kind != PlacementKind::Centralized) throw DomainError("deliver needs centralized placement");
  const int K = placement.cache.num_users;
  check_demand(d, K, placement.subfiles.num_files());
  DeliveryTranscript tr;
  tr.file_bits = placement.subfiles.bits_per_file();
  const auto lead = leaders(d);
  const int t = placement.cache.t;
  if (t >= K) return tr;
  for (UserMask s : subsets_of_size(K, t + 1)) {
    if (mode == DeliveryMode::Reduced && !touches(s, lead)) continue;
    tr.payloads.push_back(make_payload(placement, library, d, s));
  }
  return tr;
}

DeliveryTranscript dman_deliver(const Placement& placement, const FileLibrary& library, const DemandVector& d) {
  if (placement.cache.kind != PlacementKind::Decentralized) throw DomainError("dman_deliver needs decentralized placement");
  const int K = placement.cache.num_users;
  check_demand(d, K, placement.subfiles.num_files());
  DeliveryTranscript tr;
  tr.file_bits = placement.subfiles.bits_per_file();
  const auto lead = leaders(d);
  for (int t = 0; t < K; ++t) {
    for (UserMask s : subsets_of_size(K, t + 1)) {
      if (!touches(s, lead)) continue;
      Payload p = make_payload(placement, library, d, s);
      if (p.bits.size() > 0) tr.payloads.push_back(std::move(p));
    }
  }
  return tr;
}

std::vector<UserDecode> decode_all_users(const Placement& placement, const FileLibrary& library,
                                         const DeliveryTranscript& transcript, const DemandVector& d) {
  const int K = placement.cache.num_users;
  check_demand(d, K, placement.subfiles.num_files());
  std::vector<UserDecode> out;
  for (int k = 1; k <= K; ++k) {
    // Unknowns: uncached components appearing in the transcript.
    std::map<SubfileKey, std::size_t> var;
    std::vector<SubfileKey> keys;
    std::set<std::size_t> cuts{0};
    for (const auto& p : transcript.payloads) {
      cuts.insert(p.bits.size());
      for (const auto& key : p.components) {
        cuts.insert(placement.subfiles.size(key));
        if (!placement.cache.caches(k, key) && var.emplace(key, keys.size()).second) keys.push_back(key);
      }
    }
    std::map<SubfileKey, BitVector> known_bits;
    auto known = [&](const SubfileKey& key) -> const BitVector& {
      auto it = known_bits.find(key);
      if (it == known_bits.end()) it = known_bits.emplace(key, placement.subfiles.extract(library, key)).first;
      return it->second;
    };

    std::vector<BitVector> recovered(keys.size());
    std::vector<bool> complete(keys.size(), true);
    for (std::size_t v = 0; v < keys.size(); ++v) recovered[v] = BitVector(placement.subfiles.size(keys[v]));

    // Between consecutive cut points every component is either fully
    // present or absent, so each segment is one linear system.
    const std::vector<std::size_t> cut(cuts.begin(), cuts.end());
    for (std::size_t c = 0; c + 1 < cut.size(); ++c) {
      const std::size_t a = cut[c], len = cut[c + 1] - cut[c];
      Gf2Matrix coef(0, keys.size());
      std::vector<BitVector> rhs;
      for (const auto& p : transcript.payloads) {
        if (p.bits.size() <= a) continue;
        BitVector row(keys.size());
        BitVector r = p.bits.slice(a, len);
        for (const auto& key : p.components) {
          if (placement.subfiles.size(key) <= a) continue;
          if (placement.cache.caches(k, key)) r ^= known(key).slice(a, len);
          else row.set(var.at(key));
        }
        coef.append_row(std::move(row));
        rhs.push_back(std::move(r));
      }
      const Gf2SolveResult sol = solve_gf2_system(std::move(coef), std::move(rhs));
      for (std::size_t v = 0; v < keys.size(); ++v) {
        if (placement.subfiles.size(keys[v]) <= a) continue;
        if (!sol.determined[v]) {
          complete[v] = false;
          continue;
        }
        for (std::size_t b = 0; b < len; ++b)
          if (sol.values[v].get(b)) recovered[v].set(a + b);
      }
    }

    UserDecode res;
    res.ok = true;
    const int want = d[static_cast<std::size_t>(k - 1)];
    res.file = BitVector(placement.subfiles.bits_per_file());
    for (const auto& [w, pos] : placement.subfiles.parts(want)) {
      const SubfileKey key{want, w};
      const BitVector* bits = nullptr;
      if (placement.cache.caches(k, key)) {
        bits = &known(key);
      } else {
        auto it = var.find(key);
        if (it == var.end() || !complete[it->second]) {
          res.ok = false;
          continue;
        }
        bits = &recovered[it->second];
      }
      for (std::size_t b = 0; b < pos.size(); ++b)
        if (bits->get(b)) res.file.set(pos[b]);
    }
    if (res.ok && !(res.file == library.file(want))) res.ok = false;
    out.push_back(std::move(res));
  }
  return out;
}

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
  r.canonicalize();
  return r;
}

void check_kt(int K, int t) {
  if (K < 1 || K > 60) throw DomainError("K must lie in [1, 60]");
  if (t < 0 || t > K) throw DomainError("t must lie in [0, K]");
}

Rational power(const Rational& base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Rational decentralized(int K, int N, const Rational& M, int exponent) {
  if (K < 1 || N < 1) throw DomainError("need K >= 1 and N >= 1");
  if (M <= 0 || M > N) throw DomainError("decentralized load needs 0 < M <= N");
  const Rational p = M / N;
  const Rational q = 1 - p;
  Rational r = q / p * (1 - power(q, exponent));
  r.canonicalize();
  return r;
}

}  // namespace

Rational r_cman(int K, int t) {
  check_kt(K, t);
  return ratio(binomial(K, t + 1), binomial(K, t));
}

Rational r_c_reduced(int K, int t, int distinct) {
  check_kt(K, t);
  if (distinct < 1 || distinct > K) throw DomainError("number of distinct demands must lie in [1, K]");
  return ratio(binomial(K, t + 1) - binomial(K - distinct, t + 1), binomial(K, t));
}

Rational r_c_opt(int K, int N, int t) {
  if (N < 1) throw DomainError("N must be positive");
  check_kt(K, t);
  return r_c_reduced(K, t, std::min(K, N));
}

Rational r_c_opt_envelope(int K, int N, const Rational& M) {
  if (K < 1 || N < 1) throw DomainError("need K >= 1 and N >= 1");
  if (M < 0 || M > N) throw DomainError("M must lie in [0, N]");
  // Grid point t sits at M = t N / K.
  const Rational pos = M * K / N;
  mpz_class floor_t = pos.get_num() / pos.get_den();
  const int t = static_cast<int>(floor_t.get_si());
  if (t >= K) return r_c_opt(K, N, K);
  const Rational frac = pos - t;
  Rational r = (1 - frac) * r_c_opt(K, N, t) + frac * r_c_opt(K, N, t + 1);
  r.canonicalize();
  return r;
}

Rational r_dman(int K, int N, const Rational& M) { return decentralized(K, N, M, K); }

Rational r_d_opt(int K, int N, const Rational& M) { return decentralized(K, N, M, std::min(K, N)); }

MessageId IndexCodingReduction::message_of(const SubfileKey& key) const {
  auto it = std::find(labels.begin(), labels.end(), key);
  return it == labels.end() ? 0 : static_cast<MessageId>(it - labels.begin()) + 1;
}

IndexCodingReduction reduce_to_index_coding(const SubfileMap& subfiles, const DemandVector& d, int channel_bits) {
  const int K = subfiles.num_users();
  check_demand(d, K, subfiles.num_files());
  const auto files = distinct_files(d);

  // Messages: nonempty F_{i,W}, i in N(d); ordered by file, then |W|, then W.
  std::vector<SubfileKey> candidates;
  for (int i : files) {
    std::vector<UserMask> ws;
    for (const auto& [w, pos] : subfiles.parts(i)) ws.push_back(w);
    std::sort(ws.begin(), ws.end(), [](UserMask a, UserMask b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return users_of(a) < users_of(b);
    });
    for (UserMask w : ws) candidates.push_back({i, w});
  }

  IndexCodingReduction red;
  std::vector<std::vector<SubfileKey>> demands, knows;
  for (int k = 1; k <= K; ++k) {
    std::vector<SubfileKey> dk, ak;
    for (const auto& key : candidates) {
      const bool cached = key.users >> (k - 1) & 1u;
      if (cached) ak.push_back(key);
      else if (key.file == d[static_cast<std::size_t>(k - 1)]) dk.push_back(key);
    }
    if (dk.empty()) {
      red.dropped_users.push_back(k);
      continue;
    }
    red.user_of.push_back(k);
    demands.push_back(std::move(dk));
    knows.push_back(std::move(ak));
  }
  if (red.user_of.empty()) throw EmptyDemand("every user already caches its demanded file");

  // Keep only messages some remaining user demands or knows.
  std::set<SubfileKey> used;
  for (std::size_t j = 0; j < demands.size(); ++j) {
    used.insert(demands[j].begin(), demands[j].end());
    used.insert(knows[j].begin(), knows[j].end());
  }
  for (const auto& key : candidates)
    if (used.count(key)) red.labels.push_back(key);
  std::map<SubfileKey, MessageId> id;
  for (std::size_t m = 0; m < red.labels.size(); ++m) id[red.labels[m]] = static_cast<MessageId>(m) + 1;

  red.instance.num_messages = static_cast<int>(red.labels.size());
  red.instance.channel_bits = channel_bits;
  for (std::size_t j = 0; j < demands.size(); ++j) {
    UserSpec u;
    for (const auto& key : demands[j]) u.demands.insert(id.at(key));
    for (const auto& key : knows[j]) u.knows.insert(id.at(key));
    red.instance.users.push_back(std::move(u));
  }
  return red;
}

Theorem4Synthesis synthesize_theorem4_scheme(int K, int N, int t, const DemandVector& d, int k_bits) {
  if (k_bits < 1) throw DomainError("k_bits must be positive");
  check_kt(K, t);
  if (N < 1) throw DomainError("N must be positive");
  check_demand(d, K, N);
  const Placement placement = cman_place(K, t, N, static_cast<std::size_t>(k_bits) * binomial(K, t));
  const auto lead = leaders(d);
  std::vector<UserMask> sent;
  if (t < K)
    for (UserMask s : subsets_of_size(K, t + 1))
      if (touches(s, lead)) sent.push_back(s);

  Theorem4Synthesis syn;
  syn.payloads = static_cast<int>(sent.size());
  syn.reduction = reduce_to_index_coding(placement.subfiles, d, k_bits * syn.payloads);
  const auto& inst = syn.reduction.instance;

  LinearScheme& scheme = syn.scheme;
  scheme.channel_bits = inst.channel_bits;
  scheme.msg_bits.assign(static_cast<std::size_t>(inst.num_messages), k_bits);
  const std::size_t width = scheme.total_bits();
  std::map<MessageSet, std::size_t> by_support;
  for (UserMask s : sent) {
    MessageSet support;
    for (int u : users_of(s)) {
      const SubfileKey key{d[static_cast<std::size_t>(u - 1)], s & ~(UserMask{1} << (u - 1))};
      if (const MessageId m = syn.reduction.message_of(key)) support.insert(m);
    }
    Gf2Matrix rows(static_cast<std::size_t>(k_bits), width);
    for (MessageId m : support)
      for (int b = 0; b < k_bits; ++b) rows.set(static_cast<std::size_t>(b), scheme.offset(m) + static_cast<std::size_t>(b));
    auto [it, inserted] = by_support.emplace(support, scheme.composites.size());
    if (inserted) scheme.composites.push_back({support, std::move(rows)});
    else scheme.composites[it->second].map.append_rows(rows);
  }
  syn.choice = demands_only_choice(inst);
  return syn;
}

Theorem4Report verify_theorem4(int K, int N, int t, const DemandVector& d, int k_bits) {
  Theorem4Report rep;
  check_demand(d, K, N);
  const int distinct = static_cast<int>(distinct_files(d).size());
  rep.expected_load = r_c_reduced(K, t, distinct);

  // Bit-exact reduced delivery for comparison.
  const std::size_t B = static_cast<std::size_t>(k_bits) * binomial(K, t);
  const FileLibrary lib = FileLibrary::random(N, B, 0x5eed0000u + static_cast<std::uint64_t>(K * 100 + N * 10 + t));
  const Placement placement = cman_place(K, t, N, B);
  const DeliveryTranscript tr = deliver(placement, lib, d, DeliveryMode::Reduced);
  rep.simulated_load = tr.load();
  const auto decoded = decode_all_users(placement, lib, tr, d);
  rep.simulation_ok = std::all_of(decoded.begin(), decoded.end(), [](const UserDecode& u) { return u.ok; });

  if (t == K) {
    // Every demand is already cached; nothing to certify.
    rep.scheme_ok = rep.decode_ok = true;
    rep.load_from_rate = 0;
    rep.pass = rep.simulation_ok && rep.simulated_load == 0 && rep.expected_load == 0;
    rep.detail = "t = K: all demands served from cache";
    return rep;
  }

  const Theorem4Synthesis syn = synthesize_theorem4_scheme(K, N, t, d, k_bits);
  const SchemeVerdict verdict = check_scheme(syn.reduction.instance, syn.scheme, syn.choice);
  rep.scheme_ok = verdict.pass();
  rep.decode_ok = zero_error_decode_check(syn.reduction.instance, syn.scheme, DecodeMode::Algebraic).all_ok();
  rep.certified_rate = verdict.symmetric_rate;
  rep.load_from_rate = 1 / (Rational(static_cast<unsigned long>(binomial(K, t))) * rep.certified_rate);
  rep.load_from_rate.canonicalize();

  rep.pass = rep.scheme_ok && rep.decode_ok && rep.simulation_ok && rep.load_from_rate == rep.expected_load &&
             rep.simulated_load == rep.expected_load;
  std::ostringstream detail;
  detail << "payloads=" << syn.payloads << " messages=" << syn.reduction.instance.num_messages
         << " c=" << syn.scheme.channel_bits << " rate=" << to_fraction_string(rep.certified_rate)
         << " load=" << to_fraction_string(rep.load_from_rate);
  rep.detail = detail.str();
  return rep;
}

std::string format_demand(const DemandVector& d, char sep) {
  std::string out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(d[k]);
  }
  return out;
}

std::string load_csv_header() { return "K,N,t,d,mode,load_num,load_den"; }

std::string load_csv_row(int K, int N, int t, const DemandVector& d, const std::string& mode, const Rational& load) {
  std::ostringstream out;
  out << K << ',' << N << ',' << t << ',' << format_demand(d) << ',' << mode << ',' << load.get_num().get_str() << ','
      << load.get_den().get_str();
  return out.str();
}

}  // namespace icl
