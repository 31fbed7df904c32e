#include "icl/scheme.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace icl {

std::size_t LinearScheme::total_bits() const {
  std::size_t n = 0;
  for (int l : msg_bits) n += static_cast<std::size_t>(l);
  return n;
}

std::size_t LinearScheme::offset(MessageId m) const {
  std::size_t off = 0;
  for (MessageId i = 1; i < m; ++i) off += static_cast<std::size_t>(msg_bits[static_cast<std::size_t>(i - 1)]);
  return off;
}

std::vector<std::size_t> LinearScheme::columns_of(const MessageSet& messages) const {
  std::vector<std::size_t> cols;
  for (MessageId m : messages) {
    if (m < 1 || m > num_messages()) continue;
    const std::size_t off = offset(m);
    for (int b = 0; b < msg_bits[static_cast<std::size_t>(m - 1)]; ++b) cols.push_back(off + static_cast<std::size_t>(b));
  }
  return cols;
}

Gf2Matrix LinearScheme::global_matrix() const {
  Gf2Matrix m(0, total_bits());
  for (const auto& c : composites) m.append_rows(c.map);
  return m;
}

void validate_scheme(const LinearScheme& scheme) {
  if (scheme.channel_bits < 0) throw InvalidScheme("channel_bits must be non-negative");
  for (int l : scheme.msg_bits)
    if (l < 0) throw InvalidScheme("message bit-lengths must be non-negative");
  const std::size_t width = scheme.total_bits();
  for (const auto& c : scheme.composites) {
    if (c.support.empty()) throw InvalidScheme("composite with empty support");
    for (MessageId m : c.support)
      if (m < 1 || m > scheme.num_messages()) throw InvalidScheme("composite support " + format_set(c.support) + " out of range");
    if (c.map.cols() != width && c.map.rows() > 0)
      throw InvalidScheme("composite " + format_set(c.support) + " has " + std::to_string(c.map.cols()) +
                          " columns, expected " + std::to_string(width));
    const auto allowed = scheme.columns_of(c.support);
    for (std::size_t col : c.map.nonzero_columns())
      if (!std::binary_search(allowed.begin(), allowed.end(), col))
        throw InvalidScheme("composite " + format_set(c.support) + " uses bits outside its support");
  }
}

void validate_scheme(const LinearScheme& scheme, const IndexCodingInstance& inst) {
  validate_scheme(scheme);
  if (scheme.num_messages() != inst.num_messages)
    throw InvalidScheme("scheme has " + std::to_string(scheme.num_messages()) + " messages, instance has " +
                        std::to_string(inst.num_messages));
}

namespace {

MessageSet complement(const MessageSet& s, int n) {
  MessageSet out;
  for (MessageId i = 1; i <= n; ++i)
    if (!s.count(i)) out.insert(i);
  return out;
}

MessageSet set_union(const MessageSet& a, const MessageSet& b) {
  MessageSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

MessageSet set_minus(const MessageSet& a, const MessageSet& b) {
  MessageSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool intersects(const MessageSet& a, const MessageSet& b) {
  for (MessageId m : a)
    if (b.count(m)) return true;
  return false;
}

int rank_outside(const Gf2Matrix& global, const LinearScheme& scheme, const MessageSet& known) {
  const auto cols = scheme.columns_of(complement(known, scheme.num_messages()));
  return static_cast<int>(global.select_columns(cols).rank());
}

int demand_bits(const LinearScheme& scheme, const MessageSet& s) {
  int n = 0;
  for (MessageId m : s) n += scheme.msg_bits[static_cast<std::size_t>(m - 1)];
  return n;
}

void check_decoding_set(const IndexCodingInstance& inst, int user, const MessageSet& J, const MessageSet& K) {
  if (user < 0 || user >= inst.num_users()) throw InvalidDecodingSet("user index out of range");
  const auto& u = inst.users[static_cast<std::size_t>(user)];
  if (!std::includes(K.begin(), K.end(), J.begin(), J.end())) throw InvalidDecodingSet("J is not a subset of K");
  if (!intersects(J, u.demands)) throw InvalidDecodingSet("J contains no demanded message");
  if (!std::includes(K.begin(), K.end(), u.demands.begin(), u.demands.end()))
    throw InvalidDecodingSet("K does not contain every demanded message");
  for (MessageId m : K)
    if (m < 1 || m > inst.num_messages || u.knows.count(m)) throw InvalidDecodingSet("K overlaps side information");
}

}  // namespace

int conditional_entropy(const LinearScheme& scheme, const MessageSet& known) {
  return rank_outside(scheme.global_matrix(), scheme, known);
}

int kappa(const LinearScheme& scheme, const IndexCodingInstance& inst, int user, const MessageSet& J,
          const MessageSet& K) {
  check_decoding_set(inst, user, J, K);
  const Gf2Matrix global = scheme.global_matrix();
  const MessageSet ak = set_union(inst.users[static_cast<std::size_t>(user)].knows, K);
  return rank_outside(global, scheme, set_minus(ak, J)) - rank_outside(global, scheme, ak);
}

bool SchemeVerdict::mac_ok(int user) const {
  for (const auto& m : mac)
    if (m.user == user && !m.ok) return false;
  return true;
}

bool SchemeVerdict::pass() const {
  for (bool b : channel_ok)
    if (!b) return false;
  for (const auto& m : mac)
    if (!m.ok) return false;
  return true;
}

SchemeVerdict check_scheme(const IndexCodingInstance& inst, const LinearScheme& scheme, const DecodingChoice& choice) {
  validate_scheme(scheme, inst);
  if (!is_valid_choice(inst, choice)) throw InvalidDecodingSet("decoding choice is not valid for the instance");
  const Gf2Matrix global = scheme.global_matrix();
  SchemeVerdict v;
  v.rate_vector = scheme.msg_bits;
  for (int j = 0; j < inst.num_users(); ++j) {
    const auto& u = inst.users[static_cast<std::size_t>(j)];
    const int h = rank_outside(global, scheme, u.knows);
    v.channel_entropy.push_back(h);
    v.channel_ok.push_back(h <= scheme.channel_bits);

    const MessageSet& k = choice.sets[static_cast<std::size_t>(j)];
    const MessageSet ak = set_union(u.knows, k);
    const int h_all = rank_outside(global, scheme, ak);
    const std::vector<MessageId> kv(k.begin(), k.end());
    const std::size_t subsets = std::size_t{1} << kv.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      MessageSet J;
      for (std::size_t b = 0; b < kv.size(); ++b)
        if (mask >> b & 1u) J.insert(kv[b]);
      if (!intersects(J, u.demands)) continue;
      MacCheck m;
      m.user = j;
      m.kappa = rank_outside(global, scheme, set_minus(ak, J)) - h_all;
      m.demand_bits = demand_bits(scheme, J);
      m.ok = m.demand_bits <= m.kappa;
      m.subset = std::move(J);
      v.mac.push_back(std::move(m));
    }
  }
  MessageSet demanded;
  for (const auto& u : inst.users) demanded.insert(u.demands.begin(), u.demands.end());
  bool first = true;
  for (MessageId m : demanded) {
    const Rational r = scheme.channel_bits > 0 ? make_rational(scheme.msg_bits[static_cast<std::size_t>(m - 1)], scheme.channel_bits)
                                               : Rational(0);
    if (first || r < v.symmetric_rate) v.symmetric_rate = r;
    first = false;
  }
  v.symmetric_rate.canonicalize();
  return v;
}

bool DecodeReport::all_ok() const {
  return std::all_of(user_ok.begin(), user_ok.end(), [](bool b) { return b; });
}

namespace {

bool decodes_algebraic(const Gf2Matrix& global, const LinearScheme& scheme, const UserSpec& u) {
  const auto unknown = scheme.columns_of(complement(u.knows, scheme.num_messages()));
  const auto demanded = scheme.columns_of(u.demands);
  std::vector<std::size_t> demanded_pos;  // positions of demanded columns within `unknown`
  for (std::size_t c : demanded)
    demanded_pos.push_back(static_cast<std::size_t>(std::lower_bound(unknown.begin(), unknown.end(), c) - unknown.begin()));
  for (const auto& v : global.select_columns(unknown).nullspace())
    for (std::size_t p : demanded_pos)
      if (v.get(p)) return false;
  return true;
}

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Tries every assignment of the unknown bits (and of the side-information
// bits when the total is small) and checks that (X, side information)
// determines the demanded bits.
bool decodes_enumerate(const Gf2Matrix& global, const LinearScheme& scheme, const UserSpec& u, int limit) {
  const auto unknown = scheme.columns_of(complement(u.knows, scheme.num_messages()));
  const auto side = scheme.columns_of(u.knows);
  if (static_cast<int>(unknown.size()) > limit)
    throw EnumerationTooLarge("user has " + std::to_string(unknown.size()) + " unknown bits; limit is " + std::to_string(limit));
  const bool all_side = static_cast<int>(unknown.size() + side.size()) <= limit;
  const std::uint64_t side_values = all_side ? std::uint64_t{1} << side.size() : 1;

  const auto demanded = scheme.columns_of(u.demands);
  std::uint64_t demand_mask = 0;
  for (std::size_t c : demanded)
    demand_mask |= std::uint64_t{1} << (std::lower_bound(unknown.begin(), unknown.end(), c) - unknown.begin());

  const std::size_t rows = global.rows();
  // Row masks restricted to the unknown columns, and side-info columns.
  std::vector<std::uint64_t> unknown_rows(rows, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < unknown.size(); ++i)
      if (global.get(r, unknown[i])) unknown_rows[r] |= std::uint64_t{1} << i;
  const Gf2Matrix side_part = global.select_columns(side);

  const std::uint64_t unknown_values = std::uint64_t{1} << unknown.size();
  for (std::uint64_t s = 0; s < side_values; ++s) {
    BitVector side_bits(side.size());
    for (std::size_t i = 0; i < side.size() && i < 64; ++i)
      if (s >> i & 1u) side_bits.set(i);
    const BitVector offset = side_part.multiply(side_bits);
    std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, WordsHash> seen;
    for (std::uint64_t x = 0; x < unknown_values; ++x) {
      BitVector out = offset;
      for (std::size_t r = 0; r < rows; ++r)
        if (std::popcount(unknown_rows[r] & x) & 1) out.flip(r);
      auto [it, inserted] = seen.emplace(out.words(), x & demand_mask);
      if (!inserted && it->second != (x & demand_mask)) return false;
    }
  }
  return true;
}

}  // namespace

DecodeReport zero_error_decode_check(const IndexCodingInstance& inst, const LinearScheme& scheme, DecodeMode mode,
                                     int enumerate_limit_bits) {
  validate_scheme(scheme, inst);
  const Gf2Matrix global = scheme.global_matrix();
  DecodeReport report;
  for (const auto& u : inst.users) {
    report.user_ok.push_back(mode == DecodeMode::Algebraic ? decodes_algebraic(global, scheme, u)
                                                           : decodes_enumerate(global, scheme, u, std::min(enumerate_limit_bits, 62)));
  }
  return report;
}

LinearScheme builtin_scheme(const std::string& name) {
  if (name != "example2") throw UnknownName("unknown builtin scheme: " + name);
  LinearScheme s;
  s.msg_bits.assign(6, 1);
  s.channel_bits = 3;
  s.composites.push_back({{1, 3, 4}, Gf2Matrix::from_rows({"101100"})});
  s.composites.push_back({{2, 4, 5}, Gf2Matrix::from_rows({"010110"})});
  s.composites.push_back({{1, 2, 6}, Gf2Matrix::from_rows({"110001"})});
  return s;
}

namespace {

int parse_int(const std::string& tok, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(where + "expected integer, got '" + tok + "'");
}

}  // namespace

LinearScheme parse_scheme(std::istream& in) {
  LinearScheme s;
  bool have_bits = false;
  std::map<MessageSet, std::size_t> index;
  struct Pending {
    MessageSet support;
    std::vector<std::string> rows;
  };
  std::vector<Pending> pending;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "channel_bits" && tok.size() == 2) {
      s.channel_bits = parse_int(tok[1], where);
    } else if (tok[0] == "msg_bits") {
      s.msg_bits.clear();
      for (std::size_t i = 1; i < tok.size(); ++i) s.msg_bits.push_back(parse_int(tok[i], where));
      have_bits = true;
    } else if (tok[0] == "composite" && tok.size() >= 2) {
      MessageSet support;
      std::stringstream ss(tok[1]);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) support.insert(parse_int(item, where));
      auto [it, inserted] = index.emplace(support, pending.size());
      if (inserted) pending.push_back({support, {}});
      auto& rows = pending[it->second].rows;
      std::size_t k = 2;
      while (k < tok.size()) {
        if (tok[k] != "row") throw ParseError(where + "expected 'row'");
        std::string bits;
        for (++k; k < tok.size() && tok[k] != "row"; ++k) bits += tok[k];
        rows.push_back(bits);
      }
    } else {
      throw ParseError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (!have_bits) throw ParseError("missing 'msg_bits' directive");
  const std::size_t width = s.total_bits();
  for (auto& p : pending) {
    Gf2Matrix m(0, width);
    for (const auto& r : p.rows) {
      if (r.size() != width)
        throw ParseError("composite " + format_set(p.support) + ": row has " + std::to_string(r.size()) + " bits, expected " +
                         std::to_string(width));
      m.append_row(BitVector::from_string(r));
    }
    s.composites.push_back({p.support, std::move(m)});
  }
  validate_scheme(s);
  return s;
}

LinearScheme parse_scheme_string(const std::string& text) {
  std::istringstream in(text);
  return parse_scheme(in);
}

LinearScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scheme file: " + path);
  return parse_scheme(in);
}

std::string format_scheme(const LinearScheme& scheme) {
  std::ostringstream out;
  out << "channel_bits " << scheme.channel_bits << "\n";
  out << "msg_bits";
  for (int l : scheme.msg_bits) out << ' ' << l;
  out << "\n";
  for (const auto& c : scheme.composites) {
    if (c.map.rows() == 0) continue;
    out << "composite ";
    bool first = true;
    for (MessageId m : c.support) {
      out << (first ? "" : ",") << m;
      first = false;
    }
    for (std::size_t r = 0; r < c.map.rows(); ++r) out << " row " << c.map.row(r).to_string();
    out << "\n";
  }
  return out.str();
}

LinearScheme scheme_from_composite_bits(int num_messages, const std::map<MessageSet, int>& composite_bits,
                                        int channel_bits) {
  LinearScheme s;
  s.channel_bits = channel_bits;
  s.msg_bits.assign(static_cast<std::size_t>(num_messages), 0);
  for (const auto& [p, bits] : composite_bits) {
    if (bits < 0) throw InvalidScheme("negative composite size");
    for (MessageId m : p) {
      if (m < 1 || m > num_messages) throw InvalidScheme("composite support out of range");
      s.msg_bits[static_cast<std::size_t>(m - 1)] += bits;
    }
  }
  const std::size_t width = s.total_bits();
  std::vector<std::size_t> cursor(static_cast<std::size_t>(num_messages), 0);
  for (const auto& [p, bits] : composite_bits) {
    if (bits == 0) continue;
    Gf2Matrix m(static_cast<std::size_t>(bits), width);
    for (MessageId i : p) {
      const std::size_t base = s.offset(i) + cursor[static_cast<std::size_t>(i - 1)];
      for (int r = 0; r < bits; ++r) m.set(static_cast<std::size_t>(r), base + static_cast<std::size_t>(r));
      cursor[static_cast<std::size_t>(i - 1)] += static_cast<std::size_t>(bits);
    }
    s.composites.push_back({p, std::move(m)});
  }
  return s;
}

}  // namespace icl
