#include "setval/graph_family.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "setval/error.hpp"

namespace setval {

namespace {

using Rows = std::array<std::uint16_t, kMaxFamilyOrder>;

// Bit k of a code is the k-th pair (i, j), i < j, in lexicographic order.
std::uint32_t encode(const Rows& rows, std::size_t n, const std::vector<std::size_t>& order) {
  std::uint32_t code = 0;
  std::uint32_t bit = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, bit <<= 1) {
      if ((rows[order[i]] >> order[j]) & 1U) code |= bit;
    }
  }
  return code;
}

Rows decode(std::uint32_t code, std::size_t n) {
  Rows rows{};
  std::uint32_t bit = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, bit <<= 1) {
      if (code & bit) {
        rows[i] |= static_cast<std::uint16_t>(1U << j);
        rows[j] |= static_cast<std::uint16_t>(1U << i);
      }
    }
  }
  return rows;
}

// Minimum code over vertex orders that list vertices by non-increasing
// degree. Isomorphic graphs admit the same set of such codes.
class Canonizer {
 public:
  Canonizer(const Rows& rows, std::size_t n) : rows_(rows), n_(n) {
    std::vector<std::size_t> vs(n);
    for (std::size_t v = 0; v < n; ++v) vs[v] = v;
    auto degree = [&](std::size_t v) { return __builtin_popcount(rows[v]); };
    std::stable_sort(vs.begin(), vs.end(), [&](auto a, auto b) { return degree(a) > degree(b); });
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && degree(vs[j]) == degree(vs[i])) ++j;
      classes_.emplace_back(vs.begin() + static_cast<std::ptrdiff_t>(i), vs.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }
  }

  std::uint32_t run() {
    order_.clear();
    best_ = UINT32_MAX;
    search(0);
    return best_;
  }

 private:
  void search(std::size_t c) {
    if (c == classes_.size()) {
      best_ = std::min(best_, encode(rows_, n_, order_));
      return;
    }
    auto& members = classes_[c];
    std::sort(members.begin(), members.end());
    do {
      const std::size_t mark = order_.size();
      order_.insert(order_.end(), members.begin(), members.end());
      search(c + 1);
      order_.resize(mark);
    } while (std::next_permutation(members.begin(), members.end()));
  }

  const Rows& rows_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> order_;
  std::uint32_t best_ = UINT32_MAX;
};

bool connected(const Rows& rows, std::size_t n) {
  if (n == 0) return true;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 32 ? UINT32_MAX : (1U << n) - 1);
}

Graph to_graph(const Rows& rows, std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if ((rows[i] >> j) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace

std::vector<Graph> small_graphs(std::size_t n, bool connected_only) {
  if (n > kMaxFamilyOrder) {
    throw Error(ErrorCode::TooLarge, "graph families limited to " + std::to_string(kMaxFamilyOrder) + " vertices");
  }
  if (n == 0) return connected_only ? std::vector<Graph>{} : std::vector<Graph>{Graph()};

  std::set<std::uint32_t> level{0};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      const Rows base = decode(code, order - 1);
      for (std::uint32_t attach = 0; attach < (1U << (order - 1)); ++attach) {
        Rows rows = base;
        rows[order - 1] = static_cast<std::uint16_t>(attach);
        for (std::size_t v = 0; v + 1 < order; ++v) {
          if ((attach >> v) & 1U) rows[v] |= static_cast<std::uint16_t>(1U << (order - 1));
        }
        next.insert(Canonizer(rows, order).run());
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  for (std::uint32_t code : level) {
    const Rows rows = decode(code, n);
    if (!connected_only || connected(rows, n)) out.push_back(to_graph(rows, n));
  }
  return out;
}

}  // namespace setval
