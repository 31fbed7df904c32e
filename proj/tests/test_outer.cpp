#include <doctest.h>

#include "icl/outer.hpp"
#include "random_scheme.hpp"

using namespace icl;

namespace {

// Reference: largest acyclic subset by trying every subset.
int brute_force_mais(const SideInfoGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    MessageSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.insert(g.vertices[static_cast<std::size_t>(i)]);
    if (static_cast<int>(s.size()) > best && induces_acyclic(g, s)) best = static_cast<int>(s.size());
  }
  return best;
}

}  // namespace

TEST_CASE("acyclicity detector") {
  const auto g = build_side_info_graph(builtin_instance("example1"));
  CHECK(induces_acyclic(g, {1, 2, 3}));
  CHECK(induces_acyclic(g, {}));
  CHECK_FALSE(induces_acyclic(g, {1, 4, 6}));  // 1->4->6->1
  const auto c = build_side_info_graph(builtin_instance("xor2"));
  CHECK_FALSE(induces_acyclic(c, {1, 2}));
  CHECK(induces_acyclic(c, {2}));
}

TEST_CASE("acyclic bound examples") {
  const auto ex = builtin_instance("example1");
  const auto r = mais(build_side_info_graph(ex));
  CHECK(r.mais_size == 3);
  CHECK(r.witness.size() == 3);
  CHECK(induces_acyclic(build_side_info_graph(ex), r.witness));
  CHECK(r.symmetric_upper == make_rational(1, 3));
  CHECK(acyclic_symmetric_bound(ex) == make_rational(1, 3));
  CHECK(acyclic_symmetric_bound(builtin_instance("example1", 3)) == 1);

  const auto x = mais(build_side_info_graph(builtin_instance("xor2")));
  CHECK(x.mais_size == 1);
  CHECK(x.symmetric_upper == 1);

  CHECK(mais(build_side_info_graph(builtin_instance("no-side-info(5)"))).mais_size == 5);
  CHECK(acyclic_symmetric_bound(builtin_instance("no-side-info(4)")) == make_rational(1, 4));

  IndexCodingInstance multicast;
  multicast.num_messages = 2;
  multicast.users = {{{1, 2}, {}}};
  CHECK_THROWS_AS(acyclic_symmetric_bound(multicast), NotMultipleUnicast);
  CHECK_THROWS_AS(mais(build_side_info_graph(builtin_instance("no-side-info(8)")), 1, 6), TooManyVertices);
}

TEST_CASE("branch and bound agrees with subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    const auto inst = random_unicast(seed, 3 + static_cast<int>(seed % 7));
    const auto g = build_side_info_graph(inst);
    const auto r = mais(g);
    CHECK(r.mais_size == brute_force_mais(g));
    CHECK(induces_acyclic(g, r.witness));
    CHECK(static_cast<int>(r.witness.size()) == r.mais_size);
  }
}
