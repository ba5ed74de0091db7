#include "davenport/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "davenport/arith.hpp"
#include "davenport/constructions.hpp"
#include "davenport/error.hpp"

namespace davenport {

namespace {

// Integer conversion of real bounds: slack against misrounding analytic
// expressions that are integral in exact arithmetic.
constexpr double kSlack = 1e-9;

GroupSpec lzfs_group(std::int64_t n, std::int64_t k, std::int64_t r) {
  std::vector<std::int64_t> orders(static_cast<std::size_t>(r), n);
  orders.push_back(checked_mul(k, n));
  return GroupSpec(std::move(orders));
}

std::int64_t lzfs_d_star(std::int64_t n, std::int64_t k, std::int64_t r) {
  return checked_add(checked_mul(r, n - 1), checked_mul(k, n));
}

std::string lzfs_command(std::int64_t n, std::int64_t k, std::int64_t r,
                         const BoundParams& b) {
  return "construct --mode lzfs --n " + std::to_string(n) + " --k " + std::to_string(k) +
         " --r " + std::to_string(r) + " --p " + std::to_string(b.p) + " --k1 " +
         std::to_string(b.k1) + " --t " + std::to_string(b.t) + " --ell " +
         std::to_string(b.ell);
}

// Invariants of the form n,...,n,kn with k >= 2.
struct Shape {
  std::int64_t n, k, r;
};

std::optional<Shape> lzfs_shape(const std::vector<std::int64_t>& inv) {
  if (inv.size() < 2) return std::nullopt;
  const std::int64_t n = inv.front();
  for (std::size_t i = 0; i + 1 < inv.size(); ++i)
    if (inv[i] != n) return std::nullopt;
  if (inv.back() == n) return std::nullopt;
  return Shape{n, inv.back() / n, static_cast<std::int64_t>(inv.size() - 1)};
}

}  // namespace

std::string to_string(Formula f) {
  switch (f) {
    case Formula::DStar: return "DSTAR";
    case Formula::Lzfs: return "LZFS";
    case Formula::Zhihe: return "ZHIHE";
    case Formula::Est: return "EST";
    case Formula::Gene: return "GENE";
    case Formula::Exact: return "EXACT";
  }
  return "?";
}

std::string format_params(const BoundReport& r) {
  std::string out;
  if (r.params) {
    const auto& b = *r.params;
    out = "p=" + std::to_string(b.p) + " k1=" + std::to_string(b.k1) +
          " m=" + std::to_string(b.m) + " t=" + std::to_string(b.t);
    if (b.ell > 0) out += " ell=" + std::to_string(b.ell);
  }
  if (!r.note.empty()) out += (out.empty() ? "" : " ") + r.note;
  return out.empty() ? "-" : out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> admissible_pk1(std::int64_t n,
                                                                 std::int64_t k) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto p : prime_divisors(n))
    for (auto k1 : divisors(k))
      if (k1 >= 2 && std::gcd(p, k1) == 1) out.emplace_back(p, k1);
  return out;
}

BoundReport bound_lzfs(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (n < 2 || k < 2 || r < 0)
    throw Error(ErrorKind::BadParams, "bound_lzfs needs n, k >= 2 and r >= 0");
  const std::int64_t ds = lzfs_d_star(n, k, r);
  BoundReport rep{lzfs_group(n, k, r), ds, ds, 0, Formula::DStar, {}, {}, {}};

  for (auto [p, k1] : admissible_pk1(n, k)) {
    const std::int64_t m = k * n / k1;
    for (std::int64_t t = 1; t <= k1 - 1; ++t) {
      for (int ell = 1;; ++ell) {
        std::int64_t th;
        try {
          th = theta(ell, p);
        } catch (const Error&) {
          break;
        }
        if (th < 1) continue;
        if (static_cast<__int128>(t) * th > r) break;
        const std::int64_t value = ds + t * (p - 1) * ell - t * m;
        if (value > rep.lower_bound) {
          rep.lower_bound = value;
          rep.formula = Formula::Lzfs;
          rep.params = BoundParams{p, k1, m, t, ell};
        }
      }
    }
  }
  rep.delta = rep.lower_bound - ds;
  if (rep.params) rep.certificate_ref = lzfs_command(n, k, r, *rep.params);
  return rep;
}

EstBound bound_est(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t) {
  if (n < 2 || k < 2 || r < 1 || t < 1)
    throw Error(ErrorKind::PreconditionFailed, "bound_est needs n, k >= 2 and r, t >= 1");
  const std::int64_t ds = lzfs_d_star(n, k, r);
  std::optional<EstBound> best;
  for (auto [p, k1] : admissible_pk1(n, k)) {
    if (t > k1 - 1) continue;
    const std::int64_t m = k * n / k1;
    const double lp = std::log(static_cast<double>(p));
    const double tt = static_cast<double>(t), pp = static_cast<double>(p - 1);
    const double value = static_cast<double>(ds) + tt * pp / lp * std::log(static_cast<double>(r)) -
                         tt * pp * (std::log(tt) / lp + 1) - tt * static_cast<double>(m);
    if (!best || value > best->value)
      best = EstBound{value, 0, ds, BoundParams{p, k1, m, t, 0}};
  }
  if (!best)
    throw Error(ErrorKind::PreconditionFailed,
                "no admissible (p, k1) with t <= k1 - 1 (p-group or t too large)");
  best->integer_bound = static_cast<std::int64_t>(std::floor(best->value + kSlack)) + 1;
  return *best;
}

double gene_excess(double log_ratio, std::int64_t m) {
  const double md = static_cast<double>(m);
  return std::log2(log_ratio) - 2 * std::log2(std::log(md / 2)) - md +
         std::log2(std::log(2.0)) + 1;
}

BoundReport bound_gene(const GroupSpec& g) {
  if (g.is_p_group())
    throw Error(ErrorKind::PGroup, format_group(g) + " is a p-group");
  const std::int64_t m = g.exponent();
  double log_ratio = 0;  // ln(m^r / |G|), summed to avoid overflow
  for (auto d : g.invariants())
    log_ratio += std::log(static_cast<double>(m) / static_cast<double>(d));

  const std::int64_t ds = d_star(g);
  BoundReport rep{g, ds, ds, 0, Formula::Gene, {}, {}, {}};
  if (log_ratio > 0) {
    const double x = gene_excess(log_ratio, m);
    if (x > 0) rep.delta = static_cast<std::int64_t>(std::ceil(x - kSlack));
    rep.delta = std::max<std::int64_t>(rep.delta, 0);
  }
  rep.lower_bound = ds + rep.delta;
  return rep;
}

double log_epsilon_for(std::int64_t N, std::int64_t m) {
  if (N < 1) throw Error(ErrorKind::BadParams, "N must be at least 1");
  if (m < 2) throw Error(ErrorKind::BadParams, "m must be at least 2");
  if (is_prime_power(m))
    throw Error(ErrorKind::PrimePower, std::to_string(m) + " is a prime power");
  const double md = static_cast<double>(m);
  const double c = 2 * std::log2(std::log(md / 2)) + md - std::log2(std::log(2.0)) - 1;
  return -std::exp((static_cast<double>(N) + c) * std::log(2.0));
}

double epsilon_for(std::int64_t N, std::int64_t m) {
  return std::exp(log_epsilon_for(N, m));
}

std::int64_t bound_disc(std::int64_t n, std::int64_t r, std::int64_t p) {
  if (!is_prime(p) || n < 2 || n % p != 0)
    throw Error(ErrorKind::BadParams, "p must be a prime dividing n");
  for (int ell = 1;; ++ell) {
    const std::int64_t th = theta(ell, p);
    if (th > r) break;
    if (th >= 1 && r < theta(ell + 1, p))
      return checked_add(checked_mul(n - 1, r), (p - 1) * ell + 1);
  }
  throw Error(ErrorKind::NoAdmissibleEll,
              "no ell with theta(ell) <= r < theta(ell+1) and theta(ell) >= 1");
}

std::int64_t bound_zhihe(const GroupSpec& g,
                         const std::vector<std::vector<std::size_t>>& blocks,
                         const std::vector<std::int64_t>& deltas) {
  const std::size_t s = g.canonical_rank();
  auto bad = [](const std::string& why) { throw Error(ErrorKind::BadPartition, why); };
  if (blocks.size() != deltas.size()) bad("one delta per block is required");
  std::set<std::size_t> used;
  for (const auto& block : blocks) {
    if (block.empty()) bad("empty block");
    if (block.size() >= s) bad("blocks must be proper subsets");
    for (auto i : block) {
      if (i >= s) bad("factor index " + std::to_string(i) + " out of range");
      if (!used.insert(i).second) bad("blocks overlap at index " + std::to_string(i));
    }
  }
  std::int64_t out = d_star(g);
  for (auto d : deltas) out = checked_add(out, d);
  return out;
}

std::vector<BoundReport> evaluate_bounds(const GroupSpec& g, const BoundOptions& options) {
  const std::int64_t ds = d_star(g);
  const auto& inv = g.invariants();
  std::vector<BoundReport> rows;
  rows.push_back(BoundReport{g, ds, ds, 0, Formula::DStar, {}, {}, {}});

  if (auto shape = lzfs_shape(inv)) {
    auto lz = bound_lzfs(shape->n, shape->k, shape->r);
    if (lz.formula == Formula::Lzfs) {
      lz.group = g;
      rows.push_back(std::move(lz));
    }
    std::int64_t max_k1 = 0;
    for (auto [p, k1] : admissible_pk1(shape->n, shape->k)) max_k1 = std::max(max_k1, k1);
    std::optional<EstBound> est;
    for (std::int64_t t = 1; t < max_k1; ++t) {
      auto e = bound_est(shape->n, shape->k, shape->r, t);
      if (!est || e.integer_bound > est->integer_bound) est = e;
    }
    if (est)
      rows.push_back(BoundReport{g, ds, est->integer_bound, est->integer_bound - ds,
                                 Formula::Est, est->params, {}, {}});
  }

  // Proper sub-blocks C_n^c + C_v of the invariants; the other factors add 0.
  std::map<std::int64_t, std::size_t> counts;
  for (auto d : inv) ++counts[d];
  for (auto [n, c] : counts) {
    for (auto [v, cv] : counts) {
      if (v <= n || c + 1 == inv.size()) continue;
      const auto lz = bound_lzfs(n, v / n, static_cast<std::int64_t>(c));
      if (lz.delta <= 0) continue;
      std::vector<std::size_t> block;
      for (std::size_t i = 0; i < inv.size(); ++i)
        if (inv[i] == n) block.push_back(i);
      block.push_back(static_cast<std::size_t>(std::find(inv.begin(), inv.end(), v) - inv.begin()));
      const std::int64_t lb = bound_zhihe(g, {block}, {lz.delta});
      rows.push_back(BoundReport{g, ds, lb, lb - ds, Formula::Zhihe, lz.params,
                                 lz.certificate_ref,
                                 "block " + std::to_string(n) + "^" + std::to_string(c) +
                                     "+" + std::to_string(v)});
    }
  }

  if (!g.is_p_group()) rows.push_back(bound_gene(g));

  if (options.run_exact) {
    try {
      auto ex = davenport_exact(g, options.limits);
      rows.push_back(BoundReport{g, ds, ex.value, ex.value - ds, Formula::Exact, {}, {},
                                 "nodes=" + std::to_string(ex.nodes_explored)});
    } catch (const BudgetExceeded&) {
      // Exact search is optional; formula rows stand on their own.
    }
  }
  return rows;
}

std::size_t best_row(const std::vector<BoundReport>& rows) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].lower_bound > rows[best].lower_bound) best = i;
  return best;
}

BoundReport best_bound(const GroupSpec& g, const BoundOptions& options) {
  auto rows = evaluate_bounds(g, options);
  return rows[best_row(rows)];
}

}  // namespace davenport
