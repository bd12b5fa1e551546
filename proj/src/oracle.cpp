#include "setval/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "setval/analysis.hpp"
#include "setval/constructors.hpp"
#include "setval/error.hpp"
#include "setval/graph_family.hpp"

namespace setval {

namespace {

void require_order(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " limited to " + std::to_string(limit) +
                                         " vertices, got " + std::to_string(g.vertex_count()));
  }
}

// Partition scan with vertex 0 pinned to V1; mask bit v-1 puts vertex v in V2.
template <typename Accept>
bool scan_partitions(const SignedGraph& sg, bool require_nonempty_v2, Accept accept) {
  const std::size_t n = sg.vertex_count();
  if (n == 0) return !require_nonempty_v2;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  const auto edges = sg.graph().edges();
  const auto signs = sg.signs();
  for (std::uint64_t mask = require_nonempty_v2 ? 1 : 0; mask < limit; ++mask) {
    auto side = [mask](VertexId v) { return v == 0 ? 0U : static_cast<unsigned>((mask >> (v - 1)) & 1U); };
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      ok = accept(side(edges[i].u) != side(edges[i].v), signs[i]);
    }
    if (ok) return true;
  }
  return false;
}

std::vector<std::vector<int>> edge_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    id[edges[i].u][edges[i].v] = static_cast<int>(i);
    id[edges[i].v][edges[i].u] = static_cast<int>(i);
  }
  return id;
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " E=[";
  for (const Edge& e : g.edges()) out << '(' << e.u << ',' << e.v << ')';
  out << ']';
  return out.str();
}

std::string describe(const Graph& g, const SetValuation& val) {
  std::ostringstream out;
  out << describe(g) << " m=" << val.ground().size() << " f=[";
  for (const SetLabel& label : val.labels()) {
    out << '{';
    const auto elems = label.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? "," : "") << elems[i];
    out << '}';
  }
  out << ']';
  return out.str();
}

std::string describe(const SignedGraph& sg) {
  std::string s = describe(sg.graph()) + " signs=";
  for (Sign sign : sg.signs()) s += to_char(sign);
  return s;
}

// Symmetric difference size straight from the element lists.
std::size_t naive_symmetric_difference_size(const SetLabel& a, const SetLabel& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  std::vector<Element> out;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return out.size();
}

bool cut_matches_negative_edges(const SignedGraph& sg, const Bipartition& part) {
  const std::size_t n = sg.vertex_count();
  if (part.v1.size() + part.v2.size() != n) return false;
  std::vector<int> side(n, -1);
  for (VertexId v : part.v1) side.at(v) = 0;
  for (VertexId v : part.v2) {
    if (side.at(v) != -1) return false;
    side[v] = 1;
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
  const auto edges = sg.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool crosses = side[edges[i].u] != side[edges[i].v];
    if (crosses != (sg.signs()[i] == Sign::negative)) return false;
  }
  return true;
}

struct Tallies {
  CheckTally sign_parity{"sign-parity", 0, 0, {}};
  CheckTally cycle_enumeration{"cycle-enumeration", 0, 0, {}};
  CheckTally induced_balance{"induced-balance", 0, 0, {}};
  CheckTally two_cluster{"two-cluster", 0, 0, {}};
  CheckTally harary{"harary-certificate", 0, 0, {}};
  CheckTally compatible{"compatible-labeling", 0, 0, {}};
  CheckTally eulerian{"eulerian-sum", 0, 0, {}};

  std::vector<CheckTally> collect() && {
    return {std::move(sign_parity), std::move(cycle_enumeration), std::move(induced_balance),
            std::move(two_cluster), std::move(harary), std::move(compatible), std::move(eulerian)};
  }
};

struct GraphFacts {
  std::vector<std::vector<EdgeId>> cycles;  // edge ids per simple cycle
  bool connected;
  bool eulerian;
};

GraphFacts facts_for(const Graph& g) {
  GraphFacts facts{{}, is_connected(g), is_eulerian(g)};
  for (const Cycle& c : enumerate_cycles(g)) facts.cycles.push_back(cycle_edges(g, c));
  return facts;
}

void check_labeled_instance(const Graph& g, const GraphFacts& facts, const SetValuation& val, Tallies& t) {
  const SignedGraph sg = induce_signed_graph(g, val);
  const std::string ctx = describe(g, val);

  bool parity_ok = true;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const SetLabel& a = val.label(g.edge(id).u);
    const SetLabel& b = val.label(g.edge(id).v);
    const bool positive = sg.sign(id) == Sign::positive;
    parity_ok = parity_ok && positive == same_parity(a, b) &&
                positive == (naive_symmetric_difference_size(a, b) % 2 == 0);
  }
  t.sign_parity.record(parity_ok, ctx);

  const bool fast = is_balanced(sg).balanced();
  bool cycles_ok = true;
  for (const auto& cyc : facts.cycles) {
    std::size_t negatives = 0;
    std::size_t opposite_parity = 0;
    for (EdgeId id : cyc) {
      if (sg.sign(id) == Sign::negative) ++negatives;
      if (!same_parity(val.label(g.edge(id).u), val.label(g.edge(id).v))) ++opposite_parity;
    }
    cycles_ok = cycles_ok && negatives % 2 == 0 && opposite_parity % 2 == 0;
  }
  const bool brute = brute_balance(sg);
  t.induced_balance.record(fast && brute && cycles_ok, ctx);

  if (facts.connected) {
    const bool by_parity = two_clusterable_by_parity(g, val);
    const bool by_structure = is_two_clusterable(sg).clusterable();
    const bool by_scan = brute_two_cluster(sg);
    const bool implies_balance = !by_structure || fast;
    t.two_cluster.record(by_parity == by_structure && by_structure == by_scan && implies_balance, ctx);
  }

  if (facts.eulerian) {
    const auto relaxed = eulerian_label_sum_parity(g, val, IndexerRequirement::relaxed);
    bool ok = relaxed.total_even() && relaxed.all_cycles_even();
    std::vector<int> cover(g.edge_count(), 0);
    for (const auto& c : relaxed.cycles) {
      for (EdgeId id : cycle_edges(g, c.cycle)) ++cover[id];
    }
    ok = ok && std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
    if (is_set_indexer(g, val)) {
      const auto strict = eulerian_label_sum_parity(g, val, IndexerRequirement::strict);
      ok = ok && strict.total_even() && strict.all_cycles_even() && strict.total == relaxed.total;
    }
    t.eulerian.record(ok, ctx);
  }
}

void check_signatures(const Graph& g, Tallies& t, std::uint64_t& signature_count) {
  const std::size_t edges = g.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
    std::vector<Sign> signs(edges);
    for (std::size_t i = 0; i < edges; ++i) signs[i] = ((mask >> i) & 1U) ? Sign::negative : Sign::positive;
    const SignedGraph sg(g, std::move(signs));
    const std::string ctx = describe(sg);
    ++signature_count;

    const BalanceResult balance = is_balanced(sg);
    const bool brute = brute_balance(sg);
    bool harary_ok = balance.balanced() == brute;
    if (balance.balanced()) {
      harary_ok = harary_ok && cut_matches_negative_edges(sg, balance.bipartition());
    } else {
      harary_ok = harary_ok && cycle_sign(sg, balance.negative_cycle()) == Sign::negative;
    }
    t.harary.record(harary_ok, ctx);

    const CompatibleLabeling labeling = balance_compatible_labeling(sg);
    bool compatible_ok = labeling.balanced() == brute;
    if (labeling.balanced()) {
      const SetValuation& val = labeling.valuation();
      compatible_ok = compatible_ok && val.is_injective() && induce_signed_graph(g, val) == sg;
    } else {
      compatible_ok = compatible_ok && cycle_sign(sg, labeling.witness()) == Sign::negative;
    }
    t.compatible.record(compatible_ok, ctx);
  }
}

}  // namespace

bool brute_balance(const SignedGraph& sg) {
  require_order(sg.graph(), kMaxPartitionScanOrder, "partition scan");
  return scan_partitions(sg, false, [](bool crosses, Sign s) { return crosses == (s == Sign::negative); });
}

bool brute_two_cluster(const SignedGraph& sg) {
  require_order(sg.graph(), kMaxPartitionScanOrder, "partition scan");
  return scan_partitions(sg, true, [](bool crosses, Sign s) { return crosses == (s == Sign::negative); });
}

std::vector<Cycle> brute_cycles(const Graph& g) {
  require_order(g, kMaxBruteCycleOrder, "brute cycle search");
  const std::size_t n = g.vertex_count();
  const auto id = edge_matrix(g);
  std::vector<Cycle> out;
  for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
    if (std::popcount(subset) < 3) continue;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if ((subset >> v) & 1U) members.push_back(v);
    }
    // members[0] is the smallest; permute the rest.
    std::vector<VertexId> rest(members.begin() + 1, members.end());
    do {
      if (rest.front() > rest.back()) continue;
      bool closed = id[members[0]][rest.front()] >= 0 && id[rest.back()][members[0]] >= 0;
      for (std::size_t i = 0; closed && i + 1 < rest.size(); ++i) closed = id[rest[i]][rest[i + 1]] >= 0;
      if (!closed) continue;
      Cycle c;
      c.vertices.push_back(members[0]);
      c.vertices.insert(c.vertices.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
  return out;
}

SimplePathTable::SimplePathTable(const Graph& g) {
  require_order(g, 10, "path table");
  if (g.edge_count() > 64) throw Error(ErrorCode::TooLarge, "path table needs at most 64 edges");
  const std::size_t n = g.vertex_count();
  const auto id = edge_matrix(g);
  std::vector<bool> on_path(n, false);

  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      PairPaths entry{s, t, {}};
      // Depth-first over simple paths from s; records each arrival at t.
      auto walk = [&](auto&& self, VertexId v, std::uint64_t mask) -> void {
        if (v == t) {
          entry.edge_masks.push_back(mask);
          return;
        }
        for (VertexId w = 0; w < n; ++w) {
          if (id[v][w] < 0 || on_path[w]) continue;
          on_path[w] = true;
          self(self, w, mask | (std::uint64_t{1} << id[v][w]));
          on_path[w] = false;
        }
      };
      on_path[s] = true;
      walk(walk, s, 0);
      on_path[s] = false;
      path_count_ += entry.edge_masks.size();
      pairs_.push_back(std::move(entry));
    }
  }
}

PathSignCheck SimplePathTable::check(std::uint64_t negative_mask) const {
  for (const PairPaths& p : pairs_) {
    if (p.edge_masks.empty()) continue;
    const int parity = std::popcount(p.edge_masks.front() & negative_mask) & 1;
    for (std::uint64_t mask : p.edge_masks) {
      if ((std::popcount(mask & negative_mask) & 1) != parity) {
        return PathSignCheck{false, std::make_pair(p.from, p.to)};
      }
    }
  }
  return PathSignCheck{};
}

std::uint64_t negative_mask(const SignedGraph& sg) {
  if (sg.edge_count() > 64) throw Error(ErrorCode::TooLarge, "negative mask needs at most 64 edges");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < sg.edge_count(); ++i) {
    if (sg.signs()[i] == Sign::negative) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

PathSignCheck path_sign_consistency(const SignedGraph& sg) {
  return SimplePathTable(sg.graph()).check(negative_mask(sg));
}

std::uint64_t injective_labeling_count(std::size_t n, std::size_t m) {
  if (m >= 64) return n == 0 ? 1 : UINT64_MAX;
  const std::uint64_t universe = std::uint64_t{1} << m;
  if (n > universe) return 0;
  std::uint64_t count = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint64_t factor = universe - k;
    if (count > UINT64_MAX / factor) return UINT64_MAX;
    count *= factor;
  }
  return count;
}

ValuationEnumerator::ValuationEnumerator(std::size_t n, std::size_t m, std::uint64_t budget)
    : ground_(m), n_(n), universe_(0), total_(injective_labeling_count(n, m)) {
  if (m < 64 && (std::uint64_t{1} << m) < n) {
    throw Error(ErrorCode::GroundSetTooSmall, "2^" + std::to_string(m) + " subsets cannot label " +
                                                  std::to_string(n) + " vertices injectively");
  }
  if (total_ > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(total_) + " labelings exceed budget " + std::to_string(budget));
  }
  universe_ = std::uint64_t{1} << m;
  used_.assign(universe_, false);
}

bool ValuationEnumerator::advance() {
  if (!started_) {
    started_ = true;
    for (std::uint64_t i = 0; i < n_; ++i) {
      masks_.push_back(i);
      used_[i] = true;
    }
    return true;
  }
  for (std::size_t pos = n_; pos-- > 0;) {
    used_[masks_[pos]] = false;
    std::uint64_t candidate = masks_[pos] + 1;
    while (candidate < universe_ && used_[candidate]) ++candidate;
    if (candidate == universe_) continue;
    masks_[pos] = candidate;
    used_[candidate] = true;
    std::uint64_t fill = 0;
    for (std::size_t j = pos + 1; j < n_; ++j) {
      while (used_[fill]) ++fill;
      masks_[j] = fill;
      used_[fill] = true;
    }
    return true;
  }
  return false;
}

std::optional<SetValuation> ValuationEnumerator::next() {
  if (done_ || !advance()) {
    done_ = true;
    return std::nullopt;
  }
  std::vector<SetLabel> labels;
  labels.reserve(n_);
  for (std::uint64_t mask : masks_) labels.push_back(SetLabel::from_mask(ground_, mask));
  return SetValuation(ground_, std::move(labels));
}

std::vector<SetValuation> exhaustive_valuations(const Graph& g, std::size_t m, std::uint64_t budget) {
  ValuationEnumerator it(g.vertex_count(), m, budget);
  std::vector<SetValuation> out;
  out.reserve(static_cast<std::size_t>(it.total()));
  while (auto val = it.next()) out.push_back(std::move(*val));
  return out;
}

void CheckTally::record(bool ok, const std::string& context) {
  ++checked;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < 10) counterexamples.push_back(context);
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

SuiteReport verify_theorem_suite(const FamilyDescriptor& family) {
  if (family.max_n > kMaxFamilyOrder) {
    throw Error(ErrorCode::BudgetExceeded, "exhaustive families stop at n = " + std::to_string(kMaxFamilyOrder));
  }
  const std::size_t max_edges = family.max_n * (family.max_n - (family.max_n > 0 ? 1 : 0)) / 2;
  if (max_edges >= 64 || (std::uint64_t{1} << max_edges) > family.budget) {
    throw Error(ErrorCode::BudgetExceeded, "2^" + std::to_string(max_edges) + " signatures exceed budget " +
                                               std::to_string(family.budget));
  }
  for (std::size_t n = 1; n <= family.max_n; ++n) {
    for (std::size_t m = 1; m <= family.max_m; ++m) {
      const std::uint64_t count = injective_labeling_count(n, m);
      if (count > family.budget) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(count) + " labelings of " + std::to_string(n) +
                                                   " vertices over m = " + std::to_string(m) +
                                                   " exceed budget " + std::to_string(family.budget));
      }
    }
  }
  if (family.random_instances > 0 &&
      (family.random_max_n == 0 || family.random_max_n > kMaxPartitionScanOrder || family.random_max_m == 0 ||
       family.random_max_m >= 64 || (std::uint64_t{1} << family.random_max_m) < family.random_max_n)) {
    throw Error(ErrorCode::BudgetExceeded, "random family parameters out of range");
  }

  SuiteReport report;
  report.family = family;
  Tallies t;

  for (std::size_t n = 1; n <= family.max_n; ++n) {
    for (const Graph& g : small_graphs(n, family.connected_only)) {
      ++report.graphs;
      const GraphFacts facts = facts_for(g);

      std::vector<Cycle> fast = enumerate_cycles(g);
      std::sort(fast.begin(), fast.end(), [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
      t.cycle_enumeration.record(fast == brute_cycles(g), describe(g));

      for (std::size_t m = 1; m <= family.max_m; ++m) {
        if ((std::uint64_t{1} << m) < n) continue;
        ValuationEnumerator it(n, m, family.budget);
        while (auto val = it.next()) {
          ++report.labeled_instances;
          check_labeled_instance(g, facts, *val, t);
        }
      }
      check_signatures(g, t, report.signatures);
    }
  }

  std::mt19937_64 rng(family.seed);
  for (std::size_t i = 0; i < family.random_instances; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % family.random_max_n);
    std::size_t min_m = 1;
    while ((std::uint64_t{1} << min_m) < n) ++min_m;
    const std::size_t m = min_m + static_cast<std::size_t>(rng() % (family.random_max_m - min_m + 1));
    const double p = 0.15 + 0.35 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    const Graph g = random_graph(n, p, rng());
    const SetValuation val = random_valuation(g, m, rng());
    ++report.random_instances;
    check_labeled_instance(g, facts_for(g), val, t);
  }

  report.checks = std::move(t).collect();
  return report;
}

}  // namespace setval
