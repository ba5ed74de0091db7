#include "packed.hpp"

#include "davenport/arith.hpp"

namespace davenport::detail {

PackedGroup::PackedGroup(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)), strides_(orders_.size()) {
  for (std::size_t i = orders_.size(); i-- > 0;) {
    strides_[i] = size_;
    size_ = checked_mul(size_, orders_[i]);
  }
}

std::int64_t PackedGroup::pack(std::span<const std::int64_t> residues) const {
  std::int64_t x = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    x += mod(residues[i], orders_[i]) * strides_[i];
  return x;
}

std::vector<std::int64_t> PackedGroup::unpack(std::int64_t index) const {
  std::vector<std::int64_t> r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    r[i] = (index / strides_[i]) % orders_[i];
  return r;
}

std::vector<std::uint32_t> PackedGroup::translation(std::int64_t t) const {
  const auto td = unpack(t);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(size_));
  // Odometer over x keeps the digits of x + t in step with x.
  std::vector<std::int64_t> digit(orders_.size(), 0);
  std::int64_t y = t;
  for (std::int64_t x = 0; x < size_; ++x) {
    out[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(y);
    for (std::size_t i = orders_.size(); i-- > 0;) {
      const std::int64_t before = (digit[i] + td[i]) % orders_[i];
      digit[i] = (digit[i] + 1) % orders_[i];
      const std::int64_t after = (digit[i] + td[i]) % orders_[i];
      y += (after - before) * strides_[i];
      if (digit[i] != 0) break;
    }
  }
  return out;
}

std::int64_t PackedGroup::neg(std::int64_t x) const {
  auto d = unpack(x);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = mod(-d[i], orders_[i]);
  return pack(d);
}

}  // namespace davenport::detail
