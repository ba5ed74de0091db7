#include "davenport/group.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "davenport/arith.hpp"
#include "davenport/error.hpp"

namespace davenport {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGroup: return "EmptyGroup";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PGroup: return "PGroup";
    case ErrorKind::PrimePower: return "PrimePower";
    case ErrorKind::NoAdmissibleEll: return "NoAdmissibleEll";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

GroupSpec::GroupSpec(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error(ErrorKind::EmptyGroup, "empty order list");
  for (auto n : orders_)
    if (n < 2)
      throw Error(ErrorKind::BadOrder,
                  "cyclic order " + std::to_string(n) + " is below 2");

  // For each prime collect (exponent, factor) and sort descending; the k-th
  // largest power joins the k-th invariant counted from the top.
  std::map<std::int64_t, std::vector<std::pair<int, std::size_t>>> parts;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    for (auto [p, e] : factorize(orders_[i])) parts[p].emplace_back(e, i);

  std::size_t s = 1;
  for (auto& [p, v] : parts) {
    std::stable_sort(v.begin(), v.end(),
                     [](auto& a, auto& b) { return a.first > b.first; });
    s = std::max(s, v.size());
  }
  std::vector<std::int64_t> from_top(s, 1);
  std::vector<Slot> slots;
  for (auto& [p, v] : parts) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      auto [e, i] = v[k];
      const std::int64_t pe = checked_pow(p, e);
      from_top[k] = checked_mul(from_top[k], pe);
      slots.push_back({i, k, orders_[i] / pe});
    }
  }
  invariants_.assign(from_top.rbegin(), from_top.rend());
  for (auto& slot : slots) slot.invariant = s - 1 - slot.invariant;
  slots_ = std::move(slots);
}

std::int64_t GroupSpec::order() const {
  std::int64_t r = 1;
  for (auto n : orders_) r = checked_mul(r, n);
  return r;
}

double GroupSpec::log_order() const {
  double r = 0;
  for (auto n : orders_) r += std::log(static_cast<double>(n));
  return r;
}

bool GroupSpec::is_p_group() const { return is_prime_power(exponent()); }

bool GroupSpec::contains(const GroupElement& a) const {
  if (a.residues.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (a.residues[i] < 0 || a.residues[i] >= orders_[i]) return false;
  return true;
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<std::int64_t>(orders_.size(), 0)};
}

GroupElement GroupSpec::basis(std::size_t i) const {
  auto e = zero();
  e.residues.at(i) = 1;
  return e;
}

GroupElement GroupSpec::from_canonical(std::span<const std::int64_t> c) const {
  if (c.size() != invariants_.size())
    throw Error(ErrorKind::RankMismatch, "canonical coordinate count mismatch");
  auto out = zero();
  for (const auto& slot : slots_) {
    const std::int64_t n = orders_[slot.factor];
    const std::int64_t cj = mod(c[slot.invariant], invariants_[slot.invariant]);
    // cj * cofactor can be reduced before multiplying: only cj mod p^a matters.
    const std::int64_t pe = n / slot.cofactor;
    out.residues[slot.factor] =
        mod(out.residues[slot.factor] + (cj % pe) * slot.cofactor, n);
  }
  return out;
}

GroupSpec make_group(std::vector<std::int64_t> orders) {
  return GroupSpec(std::move(orders));
}

std::int64_t d_star(const GroupSpec& g) {
  std::int64_t r = 1;
  for (auto d : g.invariants()) r = checked_add(r, d - 1);
  return r;
}

namespace {

void check_rank(const GroupSpec& g, const GroupElement& a) {
  if (a.residues.size() != g.rank())
    throw Error(ErrorKind::RankMismatch,
                "element has " + std::to_string(a.residues.size()) +
                    " residues, group rank is " + std::to_string(g.rank()));
}

std::vector<std::int64_t> parse_list(std::string_view text,
                                     std::string_view what) {
  std::vector<std::int64_t> out;
  auto fail = [&] {
    throw Error(ErrorKind::ParseError,
                "malformed " + std::string(what) + " literal '" +
                    std::string(text) + "'");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - pos);
    // Canonical decimal numerals only, so that formatting round-trips.
    if (tok.empty() || (tok.size() > 1 && tok[0] == '0')) fail();
    for (char ch : tok)
      if (ch < '0' || ch > '9') fail();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail();
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

GroupElement elem_add(const GroupSpec& g, const GroupElement& a,
                      const GroupElement& b) {
  check_rank(g, a);
  check_rank(g, b);
  GroupElement r = a;
  for (std::size_t i = 0; i < g.rank(); ++i)
    r.residues[i] = mod(a.residues[i] + b.residues[i], g.orders()[i]);
  return r;
}

GroupElement elem_neg(const GroupSpec& g, const GroupElement& a) {
  check_rank(g, a);
  GroupElement r = a;
  for (std::size_t i = 0; i < g.rank(); ++i)
    r.residues[i] = mod(-a.residues[i], g.orders()[i]);
  return r;
}

GroupElement elem_scale(const GroupSpec& g, const GroupElement& a,
                        std::int64_t k) {
  check_rank(g, a);
  GroupElement r = a;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t n = g.orders()[i];
    r.residues[i] = static_cast<std::int64_t>(
        (static_cast<__int128>(mod(a.residues[i], n)) * mod(k, n)) % n);
  }
  return r;
}

GroupElement seq_sum(const GSequence& s) {
  auto acc = s.group.zero();
  for (const auto& t : s.terms) acc = elem_add(s.group, acc, t);
  return acc;
}

GroupSpec parse_group_literal(std::string_view text) {
  auto orders = parse_list(text, "group");
  for (auto n : orders)
    if (n < 2)
      throw Error(ErrorKind::ParseError,
                  "group literal '" + std::string(text) +
                      "' has an order below 2");
  return GroupSpec(std::move(orders));
}

GroupElement parse_element_literal(const GroupSpec& g, std::string_view text) {
  GroupElement a{parse_list(text, "element")};
  if (!g.contains(a))
    throw Error(ErrorKind::ParseError,
                "element '" + std::string(text) + "' is not a reduced element of " +
                    format_group(g));
  return a;
}

std::string format_group(const GroupSpec& g) {
  return format_element(GroupElement{g.orders()});
}

std::string format_element(const GroupElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.residues[i]);
  }
  return out;
}

}  // namespace davenport
