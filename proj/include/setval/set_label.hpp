#ifndef SETVAL_SET_LABEL_HPP
#define SETVAL_SET_LABEL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "setval/graph.hpp"

namespace setval {

using Element = std::uint32_t;

// The universe {1, ..., m}, m >= 1.
class GroundSet {
 public:
  // Throws PreconditionViolated for m == 0.
  explicit GroundSet(std::size_t m);

  std::size_t size() const noexcept { return m_; }
  bool contains(Element e) const noexcept { return e >= 1 && e <= m_; }

  bool operator==(const GroundSet&) const = default;

 private:
  std::size_t m_;
};

// A subset of {1, ..., m}, stored as a bit vector (bit e-1 for element e).
// Labels over different ground sets never compare equal and cannot be
// combined.
class SetLabel {
 public:
  explicit SetLabel(const GroundSet& ground);

  // Throws ElementOutOfRange for elements outside [1, m]. Repeats collapse.
  static SetLabel from_elements(const GroundSet& ground, std::span<const Element> elements);
  static SetLabel from_elements(const GroundSet& ground, std::initializer_list<Element> elements);
  // Bit i of `mask` selects element i+1. Requires m <= 64; higher bits must be clear.
  static SetLabel from_mask(const GroundSet& ground, std::uint64_t mask);

  std::size_t ground_size() const noexcept { return m_; }
  std::size_t cardinality() const noexcept;
  bool is_odd() const noexcept { return cardinality() % 2 == 1; }
  bool empty() const noexcept;
  bool contains(Element e) const noexcept;

  // Sorted ascending.
  std::vector<Element> elements() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const SetLabel&) const = default;
  std::strong_ordering operator<=>(const SetLabel& other) const;

  friend SetLabel symmetric_difference(const SetLabel& a, const SetLabel& b);

 private:
  void set(Element e) noexcept;

  std::size_t m_;
  std::vector<std::uint64_t> words_;
};

struct SetLabelHash {
  std::size_t operator()(const SetLabel& s) const noexcept;
};

// (a - b) ∪ (b - a). Throws GroundSetMismatch.
SetLabel symmetric_difference(const SetLabel& a, const SetLabel& b);

// |A ⊕ B| ≡ |A| + |B| (mod 2), so this needs only the two cardinalities.
bool same_parity(const SetLabel& a, const SetLabel& b) noexcept;

// (-1)^{|a ⊕ b|}. Positive for a == b, which injective labelings never hit
// on an edge. Throws GroundSetMismatch.
Sign induced_sign(const SetLabel& a, const SetLabel& b);

}  // namespace setval

#endif  // SETVAL_SET_LABEL_HPP
