#ifndef SETVAL_ORACLE_HPP
#define SETVAL_ORACLE_HPP

// Brute-force ground truth for small instances. Everything in this header
// except verify_theorem_suite works from the raw edge list and shares no
// code with the analysis algorithms it is used to check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setval/graph.hpp"
#include "setval/valuation.hpp"

namespace setval {

inline constexpr std::size_t kMaxPartitionScanOrder = 20;
inline constexpr std::size_t kMaxBruteCycleOrder = 9;

// Scans every partition (V1, V2) for one with E⁻ equal to the cut. Throws TooLarge.
bool brute_balance(const SignedGraph& sg);

// Scans every split into two non-empty parts for one where positive edges
// stay inside and negative edges cross. Throws TooLarge.
bool brute_two_cluster(const SignedGraph& sg);

// Every simple cycle by trying each vertex subset in each cyclic order.
// Output is in canonical form (smallest vertex first, second < last) and
// sorted. Throws TooLarge.
std::vector<Cycle> brute_cycles(const Graph& g);

struct PathSignCheck {
  bool consistent = true;
  // Endpoints joined by one positive and one negative simple path.
  std::optional<std::pair<VertexId, VertexId>> disagreeing_pair;
};

// All simple paths of a graph, stored per endpoint pair as edge bitmasks so
// the path signs for any signature are a popcount away. Requires |E| <= 64
// and n <= 10 (TooLarge).
class SimplePathTable {
 public:
  explicit SimplePathTable(const Graph& g);

  // Signature given as the bitmask of negative EdgeIds.
  PathSignCheck check(std::uint64_t negative_mask) const;

  std::size_t path_count() const noexcept { return path_count_; }

 private:
  struct PairPaths {
    VertexId from;
    VertexId to;
    std::vector<std::uint64_t> edge_masks;
  };

  std::vector<PairPaths> pairs_;
  std::size_t path_count_ = 0;
};

std::uint64_t negative_mask(const SignedGraph& sg);

// Any two simple paths with the same endpoints have the same sign product.
PathSignCheck path_sign_consistency(const SignedGraph& sg);

// Number of injective maps from n vertices into the 2^m subsets of {1..m},
// saturating at UINT64_MAX.
std::uint64_t injective_labeling_count(std::size_t n, std::size_t m);

// Every injective labeling of n vertices by subsets of {1..m}, each exactly
// once, lexicographic in the subset bitmasks of vertices 0..n-1.
class ValuationEnumerator {
 public:
  // Throws GroundSetTooSmall when 2^m < n, BudgetExceeded when the number
  // of labelings is above `budget`.
  ValuationEnumerator(std::size_t n, std::size_t m, std::uint64_t budget);

  std::optional<SetValuation> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  bool advance();

  GroundSet ground_;
  std::size_t n_;
  std::uint64_t universe_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> used_;
  std::uint64_t total_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SetValuation> exhaustive_valuations(const Graph& g, std::size_t m, std::uint64_t budget);

struct FamilyDescriptor {
  std::size_t max_n = 4;
  std::size_t max_m = 3;
  // Cap on labelings per (graph, m) and on signatures per graph.
  std::uint64_t budget = 1'000'000;
  bool connected_only = false;
  std::size_t random_instances = 0;
  std::size_t random_max_n = 10;
  std::size_t random_max_m = 6;
  std::uint64_t seed = 1;
};

struct CheckTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> counterexamples;  // first few only

  void record(bool ok, const std::string& context);
};

struct SuiteReport {
  FamilyDescriptor family;
  std::uint64_t graphs = 0;
  std::uint64_t labeled_instances = 0;
  std::uint64_t signatures = 0;
  std::uint64_t random_instances = 0;
  std::vector<CheckTally> checks;

  bool passed() const noexcept;
};

// Runs every theorem check over the family:
//   sign-parity          edge sign positive ⟺ endpoint labels of equal parity
//   cycle-enumeration    enumerate_cycles agrees with brute_cycles
//   induced-balance      induced graphs balanced per is_balanced, brute_balance
//                        and every enumerated cycle; opposite-parity count per cycle even
//   two-cluster          parity criterion ⟺ is_two_clusterable ⟺ brute_two_cluster
//                        (connected instances), clusterable ⟹ balanced
//   harary-certificate   is_balanced agrees with brute_balance on every signature;
//                        bipartition cut equals E⁻, witness cycles are negative
//   compatible-labeling  balanced signatures are reproduced by their labeling
//   eulerian-sum         Eulerian instances: even total and even per-cycle sums
// Throws BudgetExceeded when the family does not fit the budget.
SuiteReport verify_theorem_suite(const FamilyDescriptor& family);

}  // namespace setval

#endif  // SETVAL_ORACLE_HPP
