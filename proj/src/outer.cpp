#include "icl/outer.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <map>

namespace icl {

bool induces_acyclic(const SideInfoGraph& graph, const MessageSet& vertices) {
  std::map<MessageId, int> indegree;
  for (MessageId v : vertices) indegree[v] = 0;
  for (MessageId v : vertices) {
    auto it = graph.out.find(v);
    if (it == graph.out.end()) continue;
    for (MessageId w : it->second)
      if (vertices.count(w)) ++indegree[w];
  }
  std::deque<MessageId> ready;
  for (const auto& [v, d] : indegree)
    if (d == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const MessageId v = ready.front();
    ready.pop_front();
    ++removed;
    auto it = graph.out.find(v);
    if (it == graph.out.end()) continue;
    for (MessageId w : it->second)
      if (vertices.count(w) && --indegree[w] == 0) ready.push_back(w);
  }
  return removed == vertices.size();
}

namespace {

using Mask = std::uint32_t;

struct Search {
  int n = 0;
  std::vector<Mask> succ;  // adjacency over vertex positions
  Mask best = 0;
  int best_size = -1;

  // True if adding v to the acyclic set `cur` closes a cycle, i.e. v reaches
  // itself through vertices of cur.
  bool closes_cycle(Mask cur, int v) const {
    const Mask allowed = cur | (Mask{1} << v);
    Mask seen = 0;
    Mask frontier = succ[static_cast<std::size_t>(v)] & allowed;
    while (frontier) {
      if (frontier & (Mask{1} << v)) return true;
      seen |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= succ[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & allowed & ~seen;
      if (next & (Mask{1} << v)) return true;
    }
    return false;
  }

  void run(int pos, Mask cur, int size) {
    if (size + (n - pos) <= best_size) return;
    if (pos == n) {
      best = cur;
      best_size = size;
      return;
    }
    // Supersets of a set holding a cycle are never explored.
    if (!closes_cycle(cur, pos)) run(pos + 1, cur | (Mask{1} << pos), size + 1);
    run(pos + 1, cur, size);
  }
};

}  // namespace

AcyclicBoundResult mais(const SideInfoGraph& graph, int channel_bits, int max_vertices) {
  const int n = static_cast<int>(graph.vertices.size());
  if (n > max_vertices || n > 31)
    throw TooManyVertices("MAIS search limited to " + std::to_string(max_vertices) + " vertices; graph has " + std::to_string(n));
  std::map<MessageId, int> pos;
  for (int i = 0; i < n; ++i) pos[graph.vertices[static_cast<std::size_t>(i)]] = i;
  Search s;
  s.n = n;
  s.succ.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [v, targets] : graph.out)
    for (MessageId w : targets)
      if (pos.count(v) && pos.count(w)) s.succ[static_cast<std::size_t>(pos[v])] |= Mask{1} << pos[w];
  s.run(0, 0, 0);

  AcyclicBoundResult res;
  res.mais_size = s.best_size;
  for (int i = 0; i < n; ++i)
    if (s.best >> i & 1u) res.witness.insert(graph.vertices[static_cast<std::size_t>(i)]);
  if (!induces_acyclic(graph, res.witness) || static_cast<int>(res.witness.size()) != res.mais_size)
    throw std::logic_error("MAIS witness failed independent acyclicity check");
  if (res.mais_size > 0) {
    res.symmetric_upper = Rational(channel_bits) / res.mais_size;
    res.symmetric_upper.canonicalize();
  }
  return res;
}

Rational acyclic_symmetric_bound(const IndexCodingInstance& inst, int max_vertices) {
  return mais(build_side_info_graph(inst), inst.channel_bits, max_vertices).symmetric_upper;
}

}  // namespace icl
