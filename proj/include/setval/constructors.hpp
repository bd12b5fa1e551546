#ifndef SETVAL_CONSTRUCTORS_HPP
#define SETVAL_CONSTRUCTORS_HPP

#include <cstddef>
#include <cstdint>
#include <variant>

#include "setval/graph.hpp"
#include "setval/valuation.hpp"

namespace setval {

// v_i ↦ {i+1} over the ground set {1..n}. Always a set-indexer; the induced
// signature is all-positive. Throws PreconditionViolated for n == 0.
SetValuation canonical_set_indexer(const Graph& g);

struct CompatibleLabeling {
  // A labeling inducing exactly the input signature, or a negative cycle.
  std::variant<SetValuation, Cycle> result;

  bool balanced() const noexcept { return std::holds_alternative<SetValuation>(result); }
  const SetValuation& valuation() const { return std::get<SetValuation>(result); }
  const Cycle& witness() const { return std::get<Cycle>(result); }
};

// Labels a balanced signed graph so that induce_signed_graph reproduces its
// signature. Over {1..n+1}: v_i in V1 gets {i+1}, v_i in V2 gets {i+1, n+1}.
// Unbalanced input yields the negative cycle found by is_balanced.
CompatibleLabeling balance_compatible_labeling(const SignedGraph& sg);

// n distinct subsets of {1..m}, uniform without replacement.
//
// Generator: std::mt19937_64 seeded with `seed`. Each draw consumes
// ceil(m/64) outputs; output k supplies elements 64k+1..64k+64 (bit i set
// means element 64k+i+1 is present), with bits above m masked off. A draw
// equal to an earlier label is rejected and redrawn. Vertices are labeled in
// order 0..n-1. Throws GroundSetTooSmall when 2^m < n.
SetValuation random_valuation(const Graph& g, std::size_t m, std::uint64_t seed);

// Erdős–Rényi G(n, p) from std::mt19937_64(seed): pairs (u, v), u < v, in
// lexicographic order, each kept when (draw >> 11) * 2^-53 < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Independent fair signs from std::mt19937_64(seed), one draw per edge in
// EdgeId order; the low bit set means negative.
SignedGraph random_signature(const Graph& g, std::uint64_t seed);

}  // namespace setval

#endif  // SETVAL_CONSTRUCTORS_HPP
