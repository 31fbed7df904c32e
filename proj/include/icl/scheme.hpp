#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "icl/composite.hpp"
#include "icl/gf2.hpp"
#include "icl/instance.hpp"
#include "icl/rational.hpp"

namespace icl {

// X_P = map * (U_1 | U_2 | ... ) where map may only touch columns of the
// messages in `support`.
struct CompositeMap {
  MessageSet support;
  Gf2Matrix map;
};

struct LinearScheme {
  std::vector<int> msg_bits;  // L_1..L_N'
  int channel_bits = 1;
  std::vector<CompositeMap> composites;

  int num_messages() const { return static_cast<int>(msg_bits.size()); }
  std::size_t total_bits() const;
  std::size_t offset(MessageId m) const;
  // Concatenated message-bit columns of the given messages, ascending.
  std::vector<std::size_t> columns_of(const MessageSet& messages) const;
  // All composite rows stacked in declaration order.
  Gf2Matrix global_matrix() const;
};

class InvalidScheme : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDecodingSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws InvalidScheme on shape errors or maps reaching outside their support.
void validate_scheme(const LinearScheme& scheme);
// Also checks the scheme against the instance's message count.
void validate_scheme(const LinearScheme& scheme, const IndexCodingInstance& inst);

// H(all X_P | U_known) in bits: rank of the global matrix on the columns of
// messages outside `known`.
int conditional_entropy(const LinearScheme& scheme, const MessageSet& known);

// I(U_J ; X | U_{A_j u K_j \ J}) for user j (0-based).
int kappa(const LinearScheme& scheme, const IndexCodingInstance& inst, int user, const MessageSet& J,
          const MessageSet& K);

struct MacCheck {
  int user = 0;  // 0-based
  MessageSet subset;
  int kappa = 0;
  int demand_bits = 0;
  bool ok = false;
};

struct SchemeVerdict {
  std::vector<bool> channel_ok;
  std::vector<int> channel_entropy;  // H(X | U_{A_j})
  std::vector<MacCheck> mac;
  std::vector<int> rate_vector;  // L_i
  Rational symmetric_rate;       // min over demanded messages of L_i / c

  bool mac_ok(int user) const;
  bool pass() const;
};

SchemeVerdict check_scheme(const IndexCodingInstance& inst, const LinearScheme& scheme, const DecodingChoice& choice);

enum class DecodeMode { Algebraic, Enumerate };

struct DecodeReport {
  std::vector<bool> user_ok;
  bool all_ok() const;
};

DecodeReport zero_error_decode_check(const IndexCodingInstance& inst, const LinearScheme& scheme, DecodeMode mode,
                                     int enumerate_limit_bits = 20);

// "example2".
LinearScheme builtin_scheme(const std::string& name);

LinearScheme parse_scheme(std::istream& in);
LinearScheme parse_scheme_string(const std::string& text);
LinearScheme load_scheme(const std::string& path);
std::string format_scheme(const LinearScheme& scheme);

// Realizes integer composite rates (bits) as independent XOR blocks:
// message i gets L_i = sum of S_P over P containing i, and every message bit
// feeds exactly one output row.
LinearScheme scheme_from_composite_bits(int num_messages, const std::map<MessageSet, int>& composite_bits,
                                        int channel_bits);

}  // namespace icl
