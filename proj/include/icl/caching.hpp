#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "icl/composite.hpp"
#include "icl/gf2.hpp"
#include "icl/instance.hpp"
#include "icl/rational.hpp"
#include "icl/scheme.hpp"

namespace icl {

// Bit k-1 set <=> user k belongs to the set.
using UserMask = std::uint32_t;

MessageSet users_of(UserMask mask);
UserMask mask_of(const MessageSet& users);
// All masks over K users with exactly `size` members, ascending in
// lexicographic order of their sorted members.
std::vector<UserMask> subsets_of_size(int K, int size);

struct FileLibrary {
  std::vector<BitVector> files;  // F_1..F_N

  int num_files() const { return static_cast<int>(files.size()); }
  std::size_t bits_per_file() const { return files.empty() ? 0 : files.front().size(); }
  const BitVector& file(int i) const { return files.at(static_cast<std::size_t>(i - 1)); }

  static FileLibrary random(int num_files, std::size_t bits_per_file, std::uint64_t seed);
};

struct SubfileKey {
  int file = 0;         // 1-based
  UserMask users = 0;   // W

  auto operator<=>(const SubfileKey&) const = default;
};

std::string format_subfile(const SubfileKey& key);  // "F1{2,3}"

// Bit positions of F_{i,W}: the bits of file i cached by exactly the users in W.
class SubfileMap {
 public:
  SubfileMap() = default;
  SubfileMap(int num_users, int num_files, std::size_t bits_per_file);

  int num_users() const { return num_users_; }
  int num_files() const { return num_files_; }
  std::size_t bits_per_file() const { return bits_per_file_; }

  const std::vector<std::uint32_t>& positions(const SubfileKey& key) const;
  std::size_t size(const SubfileKey& key) const { return positions(key).size(); }
  void assign(const SubfileKey& key, std::vector<std::uint32_t> positions);
  // Nonempty subfiles of one file, ascending by W mask.
  const std::map<UserMask, std::vector<std::uint32_t>>& parts(int file) const;

  BitVector extract(const FileLibrary& library, const SubfileKey& key) const;
  // True when each file's subfiles are disjoint and cover every bit.
  bool is_partition() const;

 private:
  int num_users_ = 0;
  int num_files_ = 0;
  std::size_t bits_per_file_ = 0;
  std::vector<std::map<UserMask, std::vector<std::uint32_t>>> parts_;
};

enum class PlacementKind { Centralized, Decentralized };

struct CacheState {
  int num_users = 0;
  Rational cache_files;  // M
  PlacementKind kind = PlacementKind::Centralized;
  int t = 0;               // centralized only
  std::uint64_t seed = 0;  // decentralized only
  std::vector<std::set<SubfileKey>> contents;  // Z_1..Z_K

  bool caches(int user, const SubfileKey& key) const { return (key.users >> (user - 1)) & 1u; }
};

struct Placement {
  CacheState cache;
  SubfileMap subfiles;

  std::size_t cached_bits(int user) const;
};

class Indivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EmptyDemand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Centralized placement with parameter t: binom(K,t) equal subfiles per file.
Placement cman_place(int K, int t, int num_files, std::size_t bits_per_file);
// Each user caches a uniformly random subset of floor(M/N * B) bits of each file.
Placement dman_place(int K, int num_files, const Rational& M, std::size_t bits_per_file, std::uint64_t seed);

using DemandVector = std::vector<int>;  // d_1..d_K, 1-based files

std::set<int> distinct_files(const DemandVector& d);
// Lowest-indexed user (1-based) per distinct demanded file.
std::set<int> leaders(const DemandVector& d);
DemandVector worst_case_demand(int K, int N);
// All N^K demand vectors in lexicographic order.
std::vector<DemandVector> all_demands(int K, int N);

enum class DeliveryMode { Full, Reduced };

const char* to_string(DeliveryMode m);

struct Payload {
  UserMask users = 0;                   // S
  std::vector<SubfileKey> components;   // F_{d_s, S\{s}}, s ascending
  BitVector bits;                       // XOR, shorter parts zero-padded
};

struct DeliveryTranscript {
  std::vector<Payload> payloads;
  std::size_t file_bits = 0;

  std::size_t total_bits() const;
  Rational load() const;
  // One line per payload: "S=<set> bits=<hex>".
  std::string log() const;
};

DeliveryTranscript deliver(const Placement& placement, const FileLibrary& library, const DemandVector& d,
                           DeliveryMode mode);
// Reduced delivery run separately on each group {F_{i,W} : |W| = t}, t < K.
DeliveryTranscript dman_deliver(const Placement& placement, const FileLibrary& library, const DemandVector& d);

struct UserDecode {
  bool ok = false;
  BitVector file;
};

std::vector<UserDecode> decode_all_users(const Placement& placement, const FileLibrary& library,
                                         const DeliveryTranscript& transcript, const DemandVector& d);

// Closed-form loads; all arguments are validated (DomainError).
Rational r_cman(int K, int t);
// binom(K,t+1) - binom(K-distinct,t+1) over binom(K,t) for a demand with
// `distinct` distinct files.
Rational r_c_reduced(int K, int t, int distinct);
Rational r_c_opt(int K, int N, int t);
Rational r_c_opt_envelope(int K, int N, const Rational& M);
Rational r_dman(int K, int N, const Rational& M);
Rational r_d_opt(int K, int N, const Rational& M);

struct IndexCodingReduction {
  IndexCodingInstance instance;
  std::vector<SubfileKey> labels;   // message id m -> labels[m-1]
  std::vector<int> user_of;         // instance user j -> original user user_of[j-1]
  std::vector<int> dropped_users;   // users whose file is fully cached

  MessageId message_of(const SubfileKey& key) const;  // 0 when absent
};

// Throws EmptyDemand only when every user is dropped.
IndexCodingReduction reduce_to_index_coding(const SubfileMap& subfiles, const DemandVector& d, int channel_bits);

struct Theorem4Synthesis {
  IndexCodingReduction reduction;
  LinearScheme scheme;
  DecodingChoice choice;
  int payloads = 0;
};

Theorem4Synthesis synthesize_theorem4_scheme(int K, int N, int t, const DemandVector& d, int k_bits = 1);

struct Theorem4Report {
  bool pass = false;
  bool scheme_ok = false;
  bool decode_ok = false;
  bool simulation_ok = false;
  Rational certified_rate;   // min L_i / c
  Rational load_from_rate;   // 1 / (binom(K,t) * certified_rate)
  Rational expected_load;    // closed form for this demand's |N(d)|
  Rational simulated_load;   // reduced-mode delivery, bit-exact
  std::string detail;
};

Theorem4Report verify_theorem4(int K, int N, int t, const DemandVector& d, int k_bits = 1);

std::string format_demand(const DemandVector& d, char sep = ';');
std::string load_csv_header();
std::string load_csv_row(int K, int N, int t, const DemandVector& d, const std::string& mode, const Rational& load);

}  // namespace icl
