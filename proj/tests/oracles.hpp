#pragma once

// Independent brute-force references used to check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "davenport/group.hpp"

namespace oracle {

using davenport::GroupElement;
using davenport::GroupSpec;
using davenport::GSequence;

// Lengths of zero-sum subsequences by enumerating all 2^|S| subsets.
inline std::set<std::int64_t> spectrum_by_subsets(const GSequence& s) {
  const auto& orders = s.group.orders();
  const std::size_t len = s.terms.size();
  std::set<std::int64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<std::int64_t> acc(orders.size(), 0);
    for (std::size_t i = 0; i < len; ++i)
      if (mask >> i & 1)
        for (std::size_t c = 0; c < orders.size(); ++c)
          acc[c] = (acc[c] + s.terms[i].residues[c]) % orders[c];
    if (std::all_of(acc.begin(), acc.end(), [](auto v) { return v == 0; }))
      out.insert(std::popcount(mask));
  }
  return out;
}

inline std::vector<GroupElement> all_elements(const std::vector<std::int64_t>& orders) {
  std::vector<GroupElement> out{GroupElement{std::vector<std::int64_t>(orders.size(), 0)}};
  for (std::size_t c = 0; c < orders.size(); ++c) {
    std::vector<GroupElement> next;
    for (const auto& e : out)
      for (std::int64_t v = 0; v < orders[c]; ++v) {
        auto f = e;
        f.residues[c] = v;
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

inline std::int64_t element_order(const std::vector<std::int64_t>& orders,
                                  const GroupElement& e) {
  std::int64_t l = 1;
  for (std::size_t c = 0; c < orders.size(); ++c)
    l = std::lcm(l, orders[c] / std::gcd(orders[c], e.residues[c]));
  return l;
}

// Multiset of element orders: a complete isomorphism invariant for finite
// abelian groups.
inline std::map<std::int64_t, std::int64_t> order_profile(
    const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& e : all_elements(orders)) ++out[element_order(orders, e)];
  return out;
}

// M(l+1) = M(l) x A  u  {0}^l x M(1), built literally as a set.
inline std::set<std::vector<std::int64_t>> recursive_M(int ell, std::int64_t p,
                                                      std::int64_t q) {
  std::vector<std::int64_t> m1 = p == 2 ? std::vector<std::int64_t>{q}
                                        : std::vector<std::int64_t>{q, (p - 1) * q};
  std::set<std::vector<std::int64_t>> cur;
  for (auto v : m1) cur.insert({v});
  for (int l = 1; l < ell; ++l) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& col : cur)
      for (std::int64_t a = 0; a < p; ++a) {
        auto c = col;
        c.push_back(a * q);
        next.insert(c);
      }
    for (auto v : m1) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(l), 0);
      c.push_back(v);
      next.insert(c);
    }
    cur = std::move(next);
  }
  return cur;
}

inline GSequence random_sequence(std::mt19937& rng, const GroupSpec& g, std::size_t len) {
  GSequence s{g, {}};
  for (std::size_t i = 0; i < len; ++i) {
    GroupElement e{std::vector<std::int64_t>(g.rank())};
    for (std::size_t c = 0; c < g.rank(); ++c)
      e.residues[c] = std::uniform_int_distribution<std::int64_t>(0, g.orders()[c] - 1)(rng);
    s.terms.push_back(e);
  }
  return s;
}

// All invariant-factor chains d_1 | ... | d_s with product n.
inline void chains(std::int64_t n, std::int64_t last, std::vector<std::int64_t>& cur,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  for (std::int64_t d = 2; d <= n; ++d)
    if (n % d == 0 && (last == 0 || last % d == 0)) {
      cur.push_back(d);
      chains(n / d, d, cur, out);
      cur.pop_back();
    }
}

// Every abelian group of order <= max_order, as canonical invariant lists.
inline std::vector<std::vector<std::int64_t>> groups_up_to(std::int64_t max_order) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t n = 2; n <= max_order; ++n) {
    std::vector<std::int64_t> cur;
    chains(n, 0, cur, out);
  }
  return out;
}

}  // namespace oracle

namespace oracle {

// Longest zero-sum-free sequence by plain DFS over nondecreasing element
// indices, tracking the set of nonempty subsequence sums.
inline std::int64_t davenport_by_dfs(const std::vector<std::int64_t>& orders) {
  const auto elems = all_elements(orders);
  const auto add = [&](const GroupElement& a, const GroupElement& b) {
    GroupElement c = a;
    for (std::size_t i = 0; i < orders.size(); ++i) c.residues[i] = (a.residues[i] + b.residues[i]) % orders[i];
    return c;
  };
  const auto neg = [&](const GroupElement& a) {
    GroupElement c = a;
    for (std::size_t i = 0; i < orders.size(); ++i) c.residues[i] = (orders[i] - a.residues[i]) % orders[i];
    return c;
  };
  std::int64_t best = 0;
  auto dfs = [&](auto&& self, std::size_t from, const std::set<GroupElement>& sums, std::int64_t len) -> void {
    best = std::max(best, len);
    for (std::size_t i = std::max<std::size_t>(from, 1); i < elems.size(); ++i) {
      const auto& g = elems[i];
      if (sums.contains(neg(g))) continue;
      auto next = sums;
      next.insert(g);
      for (const auto& x : sums) next.insert(add(x, g));
      self(self, i, next, len + 1);
    }
  };
  dfs(dfs, 1, {}, 0);
  return best + 1;
}

// Smallest length L such that every sequence of length L has zero-sum
// subsequences of two different lengths, by enumerating multisets.
inline std::int64_t disc_by_enumeration(const GroupSpec& g, std::int64_t max_len) {
  const auto elems = all_elements(g.orders());
  std::int64_t best = 0;
  std::vector<GroupElement> terms;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (spectrum_by_subsets(GSequence{g, terms}).size() > 1) return;
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(terms.size()));
    if (static_cast<std::int64_t>(terms.size()) == max_len) return;
    for (std::size_t i = from; i < elems.size(); ++i) {
      terms.push_back(elems[i]);
      self(self, i);
      terms.pop_back();
    }
  };
  dfs(dfs, 0);
  return best + 1;
}

}  // namespace oracle
