#include <doctest.h>

#include <algorithm>

#include "icl/instance.hpp"

using namespace icl;

namespace {

bool has_rule(const ValidationReport& r, int user, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.user == user && v.rule == rule; });
}

}  // namespace

TEST_CASE("builtin instances") {
  const auto ex = builtin_instance("example1");
  CHECK(ex.num_messages == 6);
  CHECK(ex.num_users() == 6);
  CHECK(ex.users[0].demands == MessageSet{1});
  CHECK(ex.users[0].knows == MessageSet{3, 4});
  CHECK(ex.users[4].knows == MessageSet{1, 4, 6});
  CHECK(ex.users[3].knows == MessageSet{2, 3, 6});
  CHECK(ex.is_multiple_unicast());

  const auto x = builtin_instance("xor2");
  CHECK(x.num_messages == 2);
  CHECK(x.users[0].demands == MessageSet{1});
  CHECK(x.users[0].knows == MessageSet{2});

  const auto n = builtin_instance("no-side-info(3)");
  CHECK(n.num_users() == 3);
  for (const auto& u : n.users) CHECK(u.knows.empty());
  CHECK(builtin_instance("no-side-info:4").num_messages == 4);
  CHECK(builtin_instance("example1", 3).channel_bits == 3);

  CHECK_THROWS_AS(builtin_instance("example7"), UnknownName);
}

TEST_CASE("every builtin validates") {
  for (const char* name : {"example1", "xor2", "no-side-info(1)", "no-side-info(3)", "no-side-info(6)"})
    CHECK(validate_instance(builtin_instance(name)).ok());
}

TEST_CASE("validation reports each violated rule with its user") {
  IndexCodingInstance inst;
  inst.num_messages = 3;
  inst.users = {{{}, {1}}, {{2}, {2, 3}}, {{1, 4}, {}}, {{3}, {1, 2, 3}}};
  const auto r = validate_instance(inst);
  CHECK_FALSE(r.ok());
  CHECK(has_rule(r, 1, "empty demand set"));
  CHECK(has_rule(r, 2, "demand/side-info overlap"));
  CHECK(has_rule(r, 3, "message id out of range"));
  CHECK(has_rule(r, 4, "side information covers every message"));

  IndexCodingInstance unused;
  unused.num_messages = 3;
  unused.users = {{{1}, {2}}};
  CHECK(has_rule(validate_instance(unused), 0, "some message appears in no user's demand or side-information set"));
}

TEST_CASE("side-information graph") {
  const auto g = build_side_info_graph(builtin_instance("example1"));
  CHECK(g.vertices.size() == 6);
  CHECK(g.out.at(1) == MessageSet{3, 4});
  CHECK(g.out.at(4) == MessageSet{2, 3, 6});
  CHECK(g.has_edge(5, 1));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edge_count() == 14);

  const auto cycle = build_side_info_graph(builtin_instance("xor2"));
  CHECK(cycle.has_edge(1, 2));
  CHECK(cycle.has_edge(2, 1));
  CHECK(cycle.edge_count() == 2);

  CHECK(build_side_info_graph(builtin_instance("no-side-info(2)")).edge_count() == 0);

  // Building twice gives the same graph.
  const auto again = build_side_info_graph(builtin_instance("example1"));
  CHECK(again.out == g.out);
  CHECK(again.vertices == g.vertices);

  IndexCodingInstance multicast;
  multicast.num_messages = 2;
  multicast.users = {{{1, 2}, {}}};
  CHECK_THROWS_AS(build_side_info_graph(multicast), NotMultipleUnicast);
  IndexCodingInstance shared;
  shared.num_messages = 2;
  shared.users = {{{1}, {2}}, {{1}, {}}};
  CHECK_THROWS_AS(build_side_info_graph(shared), NotMultipleUnicast);
}

TEST_CASE("instance text format round-trips") {
  const std::string text =
      "# comment\n"
      "messages 3\n"
      "channel_bits 2\n"
      "user 1 demands 1 knows 2 3   # trailing comment\n"
      "user 2 demands 2 3 knows\n";
  const auto inst = parse_instance_string(text);
  CHECK(inst.num_messages == 3);
  CHECK(inst.channel_bits == 2);
  CHECK(inst.users[1].demands == MessageSet{2, 3});
  CHECK(inst.users[1].knows.empty());

  const auto back = parse_instance_string(format_instance(inst));
  CHECK(format_instance(back) == format_instance(inst));
  const auto ex = builtin_instance("example1");
  CHECK(format_instance(parse_instance_string(format_instance(ex))) == format_instance(ex));

  CHECK_THROWS_AS(parse_instance_string("user 1 demands 1 knows\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_string("messages 2\nuser 1 demands x knows\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_string("messages 2\nuser 2 demands 1 knows\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_string("messages 2\nusr 1\n"), ParseError);
  CHECK(format_set({1, 3, 4}) == "{1,3,4}");
  CHECK(format_set({}) == "{}");
}
