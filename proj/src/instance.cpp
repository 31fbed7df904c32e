#include "icl/instance.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace icl {

MessageSet IndexCodingInstance::all_messages() const {
  MessageSet all;
  for (int i = 1; i <= num_messages; ++i) all.insert(i);
  return all;
}

bool IndexCodingInstance::is_multiple_unicast() const {
  MessageSet seen;
  for (const auto& u : users) {
    if (u.demands.size() != 1) return false;
    if (!seen.insert(*u.demands.begin()).second) return false;
  }
  return true;
}

ValidationReport validate_instance(const IndexCodingInstance& inst) {
  ValidationReport report;
  auto add = [&](int user, std::string rule) { report.violations.push_back({user, std::move(rule)}); };

  if (inst.num_messages < 1) add(0, "no messages");
  if (inst.channel_bits < 1) add(0, "channel_bits must be a positive integer");
  if (inst.users.empty()) add(0, "no users");

  MessageSet mentioned;
  for (int j = 0; j < inst.num_users(); ++j) {
    const UserSpec& u = inst.users[static_cast<std::size_t>(j)];
    const int user = j + 1;
    if (u.demands.empty()) add(user, "empty demand set");
    bool out_of_range = false;
    for (const MessageSet* s : {&u.demands, &u.knows}) {
      for (MessageId m : *s) {
        if (m < 1 || m > inst.num_messages) out_of_range = true;
        mentioned.insert(m);
      }
    }
    if (out_of_range) add(user, "message id out of range");
    if (static_cast<int>(u.knows.size()) >= inst.num_messages && inst.num_messages > 0 && !out_of_range)
      add(user, "side information covers every message");
    std::vector<MessageId> overlap;
    std::set_intersection(u.demands.begin(), u.demands.end(), u.knows.begin(), u.knows.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) add(user, "demand/side-info overlap");
  }
  if (inst.num_messages >= 1 && static_cast<int>(mentioned.size()) != inst.num_messages)
    add(0, "some message appears in no user's demand or side-information set");
  return report;
}

bool SideInfoGraph::has_edge(MessageId from, MessageId to) const {
  auto it = out.find(from);
  return it != out.end() && it->second.count(to) > 0;
}

std::size_t SideInfoGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [v, targets] : out) n += targets.size();
  return n;
}

SideInfoGraph build_side_info_graph(const IndexCodingInstance& inst) {
  if (!inst.is_multiple_unicast())
    throw NotMultipleUnicast("instance is not multiple unicast: every user must demand exactly one distinct message");
  SideInfoGraph g;
  MessageSet demanded;
  for (const auto& u : inst.users) demanded.insert(*u.demands.begin());
  g.vertices.assign(demanded.begin(), demanded.end());
  for (const auto& u : inst.users) {
    MessageSet& targets = g.out[*u.demands.begin()];
    for (MessageId k : u.knows)
      if (demanded.count(k)) targets.insert(k);
  }
  return g;
}

IndexCodingInstance builtin_instance(const std::string& name, int channel_bits) {
  IndexCodingInstance inst;
  inst.channel_bits = channel_bits;
  if (name == "example1") {
    inst.num_messages = 6;
    inst.users = {
        {{1}, {3, 4}}, {{2}, {4, 5}}, {{3}, {5, 6}}, {{4}, {2, 3, 6}}, {{5}, {1, 4, 6}}, {{6}, {1, 2}},
    };
    return inst;
  }
  if (name == "xor2") {
    inst.num_messages = 2;
    inst.users = {{{1}, {2}}, {{2}, {1}}};
    return inst;
  }
  static const std::regex no_side_info(R"(no-side-info(?:\((\d+)\)|:(\d+)))");
  std::smatch m;
  if (std::regex_match(name, m, no_side_info)) {
    const int k = std::stoi(m[1].matched ? m[1].str() : m[2].str());
    if (k < 1) throw UnknownName("no-side-info needs K >= 1");
    inst.num_messages = k;
    for (int i = 1; i <= k; ++i) inst.users.push_back({{i}, {}});
    return inst;
  }
  throw UnknownName("unknown builtin instance: " + name);
}

namespace {

MessageId parse_id(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
}

}  // namespace

IndexCodingInstance parse_instance(std::istream& in) {
  IndexCodingInstance inst;
  inst.num_messages = -1;
  std::map<int, UserSpec> users;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "messages" && tok.size() == 2) {
      inst.num_messages = parse_id(tok[1], line_no);
    } else if (tok[0] == "channel_bits" && tok.size() == 2) {
      inst.channel_bits = parse_id(tok[1], line_no);
    } else if (tok[0] == "user") {
      if (tok.size() < 4 || tok[2] != "demands") throw ParseError(where + "expected 'user <j> demands <i...> knows <i...>'");
      const int j = parse_id(tok[1], line_no);
      if (j < 1 || users.count(j)) throw ParseError(where + "bad or duplicate user index");
      UserSpec u;
      std::size_t k = 3;
      for (; k < tok.size() && tok[k] != "knows"; ++k) u.demands.insert(parse_id(tok[k], line_no));
      if (k == tok.size()) throw ParseError(where + "missing 'knows'");
      for (++k; k < tok.size(); ++k) u.knows.insert(parse_id(tok[k], line_no));
      users[j] = std::move(u);
    } else {
      throw ParseError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (inst.num_messages < 0) throw ParseError("missing 'messages' directive");
  int expected = 1;
  for (auto& [j, u] : users) {
    if (j != expected++) throw ParseError("user indices must be 1..K' without gaps");
    inst.users.push_back(std::move(u));
  }
  return inst;
}

IndexCodingInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

IndexCodingInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  return parse_instance(in);
}

std::string format_instance(const IndexCodingInstance& inst) {
  std::ostringstream out;
  out << "messages " << inst.num_messages << "\n";
  out << "channel_bits " << inst.channel_bits << "\n";
  for (int j = 0; j < inst.num_users(); ++j) {
    const UserSpec& u = inst.users[static_cast<std::size_t>(j)];
    out << "user " << j + 1 << " demands";
    for (MessageId m : u.demands) out << ' ' << m;
    out << " knows";
    for (MessageId m : u.knows) out << ' ' << m;
    out << "\n";
  }
  return out.str();
}

std::string format_set(const MessageSet& s) {
  std::string out = "{";
  bool first = true;
  for (MessageId m : s) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

}  // namespace icl
