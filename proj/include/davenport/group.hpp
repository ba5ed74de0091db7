#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace davenport {

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// C_{n_1} + ... + C_{n_r} with the order list kept as given. The canonical
// invariant-factor form d_1 | ... | d_s is derived on construction.
class GroupSpec {
 public:
  // Throws EmptyGroup / BadOrder.
  explicit GroupSpec(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  const std::vector<std::int64_t>& invariants() const { return invariants_; }

  std::size_t rank() const { return orders_.size(); }
  std::size_t canonical_rank() const { return invariants_.size(); }
  std::int64_t exponent() const { return invariants_.back(); }

  // Throws Overflow if |G| does not fit in 63 bits.
  std::int64_t order() const;
  double log_order() const;

  bool is_p_group() const;
  bool contains(const GroupElement& a) const;

  GroupElement zero() const;
  GroupElement basis(std::size_t i) const;

  // Maps coordinates with respect to the canonical invariant factors to the
  // given coordinates. `c[j]` is read modulo invariants()[j].
  GroupElement from_canonical(std::span<const std::int64_t> c) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.orders_ == b.orders_;
  }

 private:
  struct Slot {
    std::size_t factor;     // index into orders_
    std::size_t invariant;  // index into invariants_
    std::int64_t cofactor;  // n_factor / p^a
  };

  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> invariants_;
  std::vector<Slot> slots_;
};

GroupSpec make_group(std::vector<std::int64_t> orders);

// 1 + sum (d_i - 1) over the canonical invariants.
std::int64_t d_star(const GroupSpec& g);

struct GSequence {
  GroupSpec group;
  std::vector<GroupElement> terms;

  std::size_t size() const { return terms.size(); }
};

GroupElement elem_add(const GroupSpec& g, const GroupElement& a,
                      const GroupElement& b);
GroupElement elem_neg(const GroupSpec& g, const GroupElement& a);
GroupElement elem_scale(const GroupSpec& g, const GroupElement& a,
                        std::int64_t k);
GroupElement seq_sum(const GSequence& s);

// Comma-separated integer lists, e.g. "2,2,2,2,6". Throws ParseError.
GroupSpec parse_group_literal(std::string_view text);
GroupElement parse_element_literal(const GroupSpec& g, std::string_view text);
std::string format_group(const GroupSpec& g);
std::string format_element(const GroupElement& a);

}  // namespace davenport
