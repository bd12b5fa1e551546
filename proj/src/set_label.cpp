#include "setval/set_label.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "setval/error.hpp"

namespace setval {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t m) { return (m + kWordBits - 1) / kWordBits; }

void require_same_ground(const SetLabel& a, const SetLabel& b) {
  if (a.ground_size() != b.ground_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "labels over ground sets of size " +
                                                  std::to_string(a.ground_size()) + " and " +
                                                  std::to_string(b.ground_size()));
  }
}

}  // namespace

GroundSet::GroundSet(std::size_t m) : m_(m) {
  if (m == 0) throw Error(ErrorCode::PreconditionViolated, "ground set must be non-empty");
}

SetLabel::SetLabel(const GroundSet& ground) : m_(ground.size()), words_(word_count(ground.size()), 0) {}

SetLabel SetLabel::from_elements(const GroundSet& ground, std::span<const Element> elements) {
  SetLabel out(ground);
  for (Element e : elements) {
    if (!ground.contains(e)) {
      throw Error(ErrorCode::ElementOutOfRange,
                  "element " + std::to_string(e) + " not in {1.." + std::to_string(ground.size()) + "}");
    }
    out.set(e);
  }
  return out;
}

SetLabel SetLabel::from_elements(const GroundSet& ground, std::initializer_list<Element> elements) {
  return from_elements(ground, std::span<const Element>(elements.begin(), elements.size()));
}

SetLabel SetLabel::from_mask(const GroundSet& ground, std::uint64_t mask) {
  const std::size_t m = ground.size();
  if (m > kWordBits) {
    throw Error(ErrorCode::PreconditionViolated, "mask construction needs m <= 64");
  }
  if (m < kWordBits && (mask >> m) != 0) {
    throw Error(ErrorCode::ElementOutOfRange, "mask has bits above m = " + std::to_string(m));
  }
  SetLabel out(ground);
  out.words_[0] = mask;
  return out;
}

void SetLabel::set(Element e) noexcept {
  const std::size_t bit = e - 1;
  words_[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

std::size_t SetLabel::cardinality() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool SetLabel::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool SetLabel::contains(Element e) const noexcept {
  if (e == 0 || e > m_) return false;
  const std::size_t bit = e - 1;
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

std::vector<Element> SetLabel::elements() const {
  std::vector<Element> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int low = std::countr_zero(bits);
      out.push_back(static_cast<Element>(w * kWordBits + static_cast<std::size_t>(low) + 1));
      bits &= bits - 1;
    }
  }
  return out;
}

std::strong_ordering SetLabel::operator<=>(const SetLabel& other) const {
  if (auto c = m_ <=> other.m_; c != 0) return c;
  return elements() <=> other.elements();
}

std::size_t SetLabelHash::operator()(const SetLabel& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.ground_size());
  for (std::uint64_t w : s.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SetLabel symmetric_difference(const SetLabel& a, const SetLabel& b) {
  require_same_ground(a, b);
  SetLabel out(a);
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] ^= b.words_[i];
  return out;
}

bool same_parity(const SetLabel& a, const SetLabel& b) noexcept {
  return a.cardinality() % 2 == b.cardinality() % 2;
}

Sign induced_sign(const SetLabel& a, const SetLabel& b) {
  return symmetric_difference(a, b).cardinality() % 2 == 0 ? Sign::positive : Sign::negative;
}

}  // namespace setval
