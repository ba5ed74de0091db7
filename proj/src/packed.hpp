#pragma once

// Mixed-radix packing of group elements into dense indices. The last
// coordinate varies fastest.

#include <cstdint>
#include <span>
#include <vector>

namespace davenport::detail {

class PackedGroup {
 public:
  explicit PackedGroup(std::vector<std::int64_t> orders);

  std::int64_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::int64_t>& orders() const { return orders_; }

  std::int64_t pack(std::span<const std::int64_t> residues) const;
  std::vector<std::int64_t> unpack(std::int64_t index) const;

  // Permutation x -> x + t of [0, size).
  std::vector<std::uint32_t> translation(std::int64_t t) const;
  std::int64_t neg(std::int64_t x) const;

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_ = 1;
};

}  // namespace davenport::detail
