#include "dskit/face.hpp"

#include <algorithm>
#include <bit>

#include "dskit/error.hpp"

namespace dskit {

namespace {

constexpr std::size_t kWordBits = 64;

}  // namespace

Face Face::from_indices(std::span<const std::size_t> indices) {
  Face f;
  for (std::size_t i : indices) {
    if (i < kWordBits) {
      f.low_ |= std::uint64_t{1} << i;
    } else {
      std::size_t w = i / kWordBits - 1;
      if (f.high_.size() <= w) f.high_.resize(w + 1, 0);
      f.high_[w] |= std::uint64_t{1} << (i % kWordBits);
    }
  }
  return f;
}

Face Face::from_indices(std::initializer_list<std::size_t> indices) {
  return from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::size_t Face::size() const {
  std::size_t n = static_cast<std::size_t>(std::popcount(low_));
  for (auto w : high_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Face::contains(std::size_t index) const {
  if (index < kWordBits) return (low_ >> index) & 1U;
  std::size_t w = index / kWordBits - 1;
  return w < high_.size() && ((high_[w] >> (index % kWordBits)) & 1U);
}

bool Face::is_subset_of(const Face& other) const {
  if ((low_ & ~other.low_) != 0) return false;
  if (high_.size() > other.high_.size()) return false;
  for (std::size_t w = 0; w < high_.size(); ++w) {
    if ((high_[w] & ~other.high_[w]) != 0) return false;
  }
  return true;
}

bool Face::intersects(const Face& other) const {
  if ((low_ & other.low_) != 0) return true;
  const std::size_t n = std::min(high_.size(), other.high_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((high_[w] & other.high_[w]) != 0) return true;
  }
  return false;
}

Face Face::with(std::size_t index) const {
  Face f = *this;
  if (index < kWordBits) {
    f.low_ |= std::uint64_t{1} << index;
  } else {
    std::size_t w = index / kWordBits - 1;
    if (f.high_.size() <= w) f.high_.resize(w + 1, 0);
    f.high_[w] |= std::uint64_t{1} << (index % kWordBits);
  }
  return f;
}

Face Face::without(std::size_t index) const {
  Face f = *this;
  if (index < kWordBits) {
    f.low_ &= ~(std::uint64_t{1} << index);
  } else {
    std::size_t w = index / kWordBits - 1;
    if (w < f.high_.size()) f.high_[w] &= ~(std::uint64_t{1} << (index % kWordBits));
    f.trim();
  }
  return f;
}

Face Face::united(const Face& other) const {
  Face f = *this;
  f.low_ |= other.low_;
  if (f.high_.size() < other.high_.size()) f.high_.resize(other.high_.size(), 0);
  for (std::size_t w = 0; w < other.high_.size(); ++w) f.high_[w] |= other.high_[w];
  return f;
}

Face Face::minus(const Face& other) const {
  Face f = *this;
  f.low_ &= ~other.low_;
  const std::size_t n = std::min(f.high_.size(), other.high_.size());
  for (std::size_t w = 0; w < n; ++w) f.high_[w] &= ~other.high_[w];
  f.trim();
  return f;
}

std::vector<std::size_t> Face::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t bits = low_; bits != 0; bits &= bits - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
  }
  for (std::size_t w = 0; w < high_.size(); ++w) {
    for (std::uint64_t bits = high_[w]; bits != 0; bits &= bits - 1) {
      out.push_back((w + 1) * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

void Face::for_each_subset(const std::function<void(const Face&)>& visit) const {
  const auto idx = indices();
  if (idx.size() >= 63) throw ResourceLimitError("face too large to enumerate its subsets");
  const std::uint64_t count = std::uint64_t{1} << idx.size();
  std::vector<std::size_t> chosen;
  chosen.reserve(idx.size());
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    chosen.clear();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if ((mask >> j) & 1U) chosen.push_back(idx[j]);
    }
    visit(from_indices(chosen));
  }
}

std::size_t Face::hash() const {
  std::uint64_t h = low_ * 0x9E3779B97F4A7C15ULL;
  for (auto w : high_) h = (h ^ (w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2))) * 0xBF58476D1CE4E5B9ULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

bool lex_less(const Face& a, const Face& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

void Face::trim() {
  while (!high_.empty() && high_.back() == 0) high_.pop_back();
}

}  // namespace dskit
