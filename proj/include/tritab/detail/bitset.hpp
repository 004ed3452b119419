#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tritab::detail {

// Fixed-size bit set used for residue membership; cheaper to merge across
// threads than std::set and keeps memory at M/8 bytes.
class Bitset {
 public:
  explicit Bitset(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void merge(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  std::vector<std::uint64_t> sorted_members() const {
    std::vector<std::uint64_t> out;
    out.reserve(count());
    for (std::uint64_t i = 0; i < size_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  std::uint64_t size() const { return size_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace tritab::detail
