#pragma once

#include <stdexcept>
#include <vector>

#include "icl/instance.hpp"
#include "icl/rational.hpp"

namespace icl {

class TooManyVertices : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AcyclicBoundResult {
  int mais_size = 0;
  MessageSet witness;
  Rational symmetric_upper;  // c / mais_size, bits per channel use
};

// Kahn's algorithm on the subgraph induced by `vertices`.
bool induces_acyclic(const SideInfoGraph& graph, const MessageSet& vertices);

// Maximum acyclic induced subgraph by branch and bound over include/exclude
// decisions in ascending vertex order; the witness is the first maximum met
// in that order.
AcyclicBoundResult mais(const SideInfoGraph& graph, int channel_bits = 1, int max_vertices = 22);

Rational acyclic_symmetric_bound(const IndexCodingInstance& inst, int max_vertices = 22);

}  // namespace icl
