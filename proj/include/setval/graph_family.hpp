#ifndef SETVAL_GRAPH_FAMILY_HPP
#define SETVAL_GRAPH_FAMILY_HPP

#include <cstddef>
#include <vector>

#include "setval/graph.hpp"

namespace setval {

inline constexpr std::size_t kMaxFamilyOrder = 8;

// One representative per isomorphism class of graphs on exactly n vertices,
// in a fixed deterministic order. Built by vertex augmentation from order
// n-1 and deduplicated on a canonical adjacency code. Throws TooLarge for
// n > kMaxFamilyOrder.
std::vector<Graph> small_graphs(std::size_t n, bool connected_only = false);

}  // namespace setval

#endif  // SETVAL_GRAPH_FAMILY_HPP
