#pragma once

#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace icl {

// Message ids are 1-based, matching the instance file format.
using MessageId = int;
using MessageSet = std::set<MessageId>;

struct UserSpec {
  MessageSet demands;
  MessageSet knows;
};

struct IndexCodingInstance {
  int num_messages = 0;
  std::vector<UserSpec> users;
  int channel_bits = 1;

  int num_users() const { return static_cast<int>(users.size()); }
  // Every message 1..num_messages.
  MessageSet all_messages() const;
  bool is_multiple_unicast() const;
};

struct Violation {
  int user = 0;  // 1-based; 0 for instance-wide rules
  std::string rule;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_instance(const IndexCodingInstance& inst);

class NotMultipleUnicast : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Digraph over the demanded messages of a multiple-unicast instance:
// i -> j iff j is side information of the user demanding i.
struct SideInfoGraph {
  std::vector<MessageId> vertices;  // sorted
  std::map<MessageId, MessageSet> out;

  bool has_edge(MessageId from, MessageId to) const;
  std::size_t edge_count() const;
};

SideInfoGraph build_side_info_graph(const IndexCodingInstance& inst);

// "example1", "xor2", "no-side-info(K)" (also accepted: "no-side-info:K").
IndexCodingInstance builtin_instance(const std::string& name, int channel_bits = 1);

IndexCodingInstance parse_instance(std::istream& in);
IndexCodingInstance parse_instance_string(const std::string& text);
IndexCodingInstance load_instance(const std::string& path);
std::string format_instance(const IndexCodingInstance& inst);

std::string format_set(const MessageSet& s);  // "{1,3,4}"

}  // namespace icl
