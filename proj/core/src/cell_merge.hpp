#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lqspec::detail {

// Open-addressing map from a 64-bit cell key to a dense slot number.
// Slots are handed out in first-insertion order, so results depend only on
// the order of the inserted keys, not on hashing details.
class CellIndex {
 public:
  explicit CellIndex(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.assign(cap, 0);
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }

  // Slot of `key`, inserting it as slot size() if new.
  std::uint32_t find_or_insert(std::uint64_t key, bool& inserted) {
    std::size_t h = mix(key) & mask_;
    while (slots_[h] != kEmpty) {
      if (keys_[h] == key) {
        inserted = false;
        return slots_[h];
      }
      h = (h + 1) & mask_;
    }
    keys_[h] = key;
    slots_[h] = static_cast<std::uint32_t>(size_);
    inserted = true;
    return static_cast<std::uint32_t>(size_++);
  }

  std::size_t size() const { return size_; }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

inline std::uint64_t cell_key(std::int64_t ix, std::int64_t iy) {
  return (static_cast<std::uint64_t>(ix) << 32) ^ static_cast<std::uint64_t>(iy & 0xffffffff);
}

}  // namespace lqspec::detail
