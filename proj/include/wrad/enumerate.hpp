#pragma once

#include <functional>

#include "wrad/canonical.hpp"
#include "wrad/smallgraph.hpp"

namespace wrad {

// Deterministic partition of the generation tree: nodes at a fixed small
// order get consecutive indices in traversal order and shard s of `count`
// descends only into nodes with index % count == s. The union over all
// shards is exactly the unsharded stream, with disjoint outputs.
struct ShardSpec {
    int index = 0;
    int count = 1;
};

// Isomorph-free exhaustive generation of all graphs on exactly n vertices
// (connected or not), one call per isomorphism class. Children are grown by
// vertex augmentation and accepted only when the added vertex lies in the
// orbit of the canonical last vertex, so no global seen-set is needed.
// The emitted graph carries the construction labeling; `canon` identifies
// its class. n <= 10.
void enumerate_graphs(int n, const ShardSpec& shard,
                      const std::function<void(const SmallGraph&, const CanonicalResult& canon)>& emit);

// Convenience: number of isomorphism classes passing `pred` (pred may be
// empty for all).
long long count_graph_classes(int n, const std::function<bool(const SmallGraph&)>& pred = nullptr);

}  // namespace wrad
