#include "davenport/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "davenport/arith.hpp"
#include "davenport/error.hpp"

namespace davenport {

namespace {

using Column = std::vector<std::int64_t>;

constexpr std::size_t kMaxColumns = 50'000'000;

void require_prime(std::int64_t p) {
  if (!is_prime(p))
    throw Error(ErrorKind::BadParams, "p = " + std::to_string(p) + " is not prime");
}

std::vector<std::int64_t> m1_values(std::int64_t p, std::int64_t q) {
  if (p == 2) return {q};
  return {q, (p - 1) * q};
}

Column unit(int ell, int i, std::int64_t v) {
  Column c(static_cast<std::size_t>(ell), 0);
  c[static_cast<std::size_t>(i)] = v;
  return c;
}

// Multiset difference: removes one occurrence per element of `b`.
void remove_all(std::vector<Column>& a, const std::vector<Column>& b) {
  for (const auto& c : b) {
    auto it = std::find(a.begin(), a.end(), c);
    if (it != a.end()) a.erase(it);
  }
}

void add_all(std::vector<Column>& a, const std::vector<Column>& b) {
  a.insert(a.end(), b.begin(), b.end());
}

// Value that every column-sum identity of M(ell) must produce. Equals
// omega(ell; n, p) wherever omega is defined, and n / 2 for p = 2, ell = 1.
std::int64_t column_sum_target(int ell, std::int64_t p, std::int64_t q) {
  if (p == 2) return checked_mul(checked_pow(2, ell - 1), q);
  return checked_mul(checked_pow(p, ell), q);
}

}  // namespace

std::int64_t theta(int ell, std::int64_t p) {
  if (ell < 1) throw Error(ErrorKind::BadParams, "ell must be at least 1");
  require_prime(p);
  const std::int64_t pl = checked_pow(p, ell);
  if (p == 2) return pl - 1 - ell;
  return checked_mul(2, (pl - 1) / (p - 1)) - ell;
}

std::int64_t omega(int ell, std::int64_t n, std::int64_t p) {
  if (ell < 1) throw Error(ErrorKind::BadParams, "ell must be at least 1");
  require_prime(p);
  if (p == 2) {
    if (ell < 2) throw Error(ErrorKind::BadParams, "omega needs ell >= 2 when p = 2");
    return checked_mul(checked_pow(2, ell - 2), n);
  }
  return checked_mul(checked_pow(p, ell - 1), n);
}

MTable build_M(int ell, std::int64_t p, std::int64_t q) {
  if (ell < 1) throw Error(ErrorKind::BadParams, "ell must be at least 1");
  require_prime(p);
  if (q < 1) throw Error(ErrorKind::BadParams, "q must be at least 1");
  const auto m1 = m1_values(p, q);
  const std::int64_t total = checked_add(theta(ell, p), ell);
  if (static_cast<std::uint64_t>(total) > kMaxColumns)
    throw Error(ErrorKind::Overflow, "M table has too many columns");

  MTable table{ell, p, q, checked_mul(p, q), TableKind::M, {}};
  table.columns.reserve(static_cast<std::size_t>(total));
  // Union over t of {0}^t x M(1) x A^(ell-t-1), A = {0, q, ..., (p-1)q}.
  for (int t = 0; t < ell; ++t) {
    const int free = ell - t - 1;
    const std::int64_t combos = checked_pow(p, free);
    for (auto head : m1)
      for (std::int64_t code = 0; code < combos; ++code) {
        Column c(static_cast<std::size_t>(ell), 0);
        c[static_cast<std::size_t>(t)] = head;
        std::int64_t rest = code;
        for (int i = ell - 1; i > t; --i) {
          c[static_cast<std::size_t>(i)] = (rest % p) * q;
          rest /= p;
        }
        table.columns.push_back(std::move(c));
      }
  }
  std::sort(table.columns.begin(), table.columns.end());
  return table;
}

bool check_prop_M(int ell, std::int64_t p, std::int64_t q, std::int64_t n,
                  std::uint64_t max_work) {
  if (n != p * q) throw Error(ErrorKind::BadParams, "n must equal p*q");
  const MTable m = build_M(ell, p, q);
  const std::int64_t combos = checked_pow(p, ell);
  const auto work = static_cast<unsigned __int128>(combos) * m.cols() *
                    static_cast<std::uint64_t>(ell);
  if (work > max_work)
    throw BudgetExceeded("check_prop_M: " + std::to_string(combos) +
                         " coefficient vectors exceed the work limit");

  if (static_cast<std::int64_t>(m.cols()) != theta(ell, p) + ell) return false;
  const std::int64_t target = column_sum_target(ell, p, q);

  // Coefficient vectors over [0, p-1]^ell; zero entries drop the row, so
  // this ranges over every index subset with coefficients in [1, p-1].
  std::vector<std::int64_t> v(static_cast<std::size_t>(ell), 0);
  for (std::int64_t code = 1; code < combos; ++code) {
    std::int64_t rest = code;
    for (int i = 0; i < ell; ++i) {
      v[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    std::int64_t plus = 0, minus = 0;
    for (const auto& col : m.columns) {
      std::int64_t s = 0;
      for (int i = 0; i < ell; ++i)
        s += v[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
      plus += mod(s, n);
      minus += mod(-s, n);
    }
    if (plus != target || minus != plus) return false;
  }
  return true;
}

MTable build_W(int ell, std::int64_t p, std::int64_t q) {
  require_prime(p);
  if (p == 2 && ell < 2)
    throw Error(ErrorKind::BadParams, "W(ell) needs ell >= 2 when p = 2");
  MTable w = build_M(ell, p, q);
  w.kind = TableKind::W;
  auto& cols = w.columns;

  if (p == 2 && ell == 2) {
    cols = {Column{1, 1}};
  } else if (p > 2) {
    std::vector<Column> e, f;
    for (int i = 0; i < ell; ++i) {
      e.push_back(unit(ell, i, q));
      e.push_back(unit(ell, i, (p - 1) * q));
      f.push_back(unit(ell, i, 1));
    }
    remove_all(cols, e);
    add_all(cols, f);
  } else {
    std::vector<Column> e, f, h;
    for (int i = 0; i < ell; ++i) e.push_back(unit(ell, i, q));
    for (int i = 0; i + 1 < ell; ++i) {
      Column qq(static_cast<std::size_t>(ell), 0), oq(static_cast<std::size_t>(ell), 0);
      qq[static_cast<std::size_t>(i)] = q;
      qq[static_cast<std::size_t>(i + 1)] = q;
      oq[static_cast<std::size_t>(i)] = 1;
      oq[static_cast<std::size_t>(i + 1)] = q;
      f.push_back(std::move(qq));
      h.push_back(std::move(oq));
    }
    Column first_last = unit(ell, 0, q), first_one = unit(ell, 0, q);
    first_last.back() = q;
    first_one.back() = 1;
    remove_all(cols, e);
    remove_all(cols, f);
    add_all(cols, h);
    remove_all(cols, {first_last});
    add_all(cols, {first_one});
  }
  std::sort(cols.begin(), cols.end());
  if (static_cast<std::int64_t>(cols.size()) != theta(ell, p))
    throw Error(ErrorKind::Internal, "W table has " + std::to_string(cols.size()) +
                                         " columns, expected theta = " +
                                         std::to_string(theta(ell, p)));
  return w;
}

void validate(const ConstructionParams& c) {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::BadParams, why); };
  if (c.n < 2) bad("n must be at least 2");
  if (!is_prime(c.p)) bad("p = " + std::to_string(c.p) + " is not prime");
  if (c.n % c.p != 0) bad("p must divide n");
  if (c.ell < 1) bad("ell must be at least 1");
  if (c.p == 2 && c.ell < 2) bad("ell >= 2 is required when p = 2");
  const std::int64_t th = theta(c.ell, c.p);
  if (th < 1) bad("theta(ell; p) must be at least 1");
  if (c.r < th)
    bad("r = " + std::to_string(c.r) + " is below theta(ell; p) = " + std::to_string(th));
}

NondispersiveSequence build_nondispersive(const ConstructionParams& params) {
  validate(params);
  const auto& [n, p, ell, r] = params;
  const MTable w = build_W(ell, p, params.q());
  GroupSpec g(std::vector<std::int64_t>(static_cast<std::size_t>(r), n));

  GSequence s{g, {}};
  for (std::int64_t j = 0; j < r; ++j)
    for (std::int64_t c = 0; c + 1 < n; ++c) s.terms.push_back(g.basis(static_cast<std::size_t>(j)));
  for (int b = 0; b < ell; ++b) {
    auto x = g.zero();
    for (std::size_t j = 0; j < w.cols(); ++j) x.residues[j] = w.at(static_cast<std::size_t>(b), j);
    for (std::int64_t c = 0; c + 1 < p; ++c) s.terms.push_back(x);
  }
  return {std::move(s), omega(ell, n, p)};
}

std::int64_t choose_u(std::int64_t x, std::int64_t m) {
  if (m < 2 || x < 1) throw Error(ErrorKind::BadParams, "choose_u needs m >= 2, x >= 1");
  const std::int64_t g = std::gcd(x, m);
  for (std::int64_t u = 1; u < m; ++u)
    if (mod(static_cast<std::int64_t>(static_cast<__int128>(x) * u % m), m) == g % m)
      return u;
  throw Error(ErrorKind::Internal, "no multiplier found");
}

LiftResult lift_zero_sum_free(const LiftSpec& spec, SpectrumLimits limits) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::PreconditionFailed, why);
  };
  if (spec.m < 2) fail("m must be at least 2");
  if (spec.components.empty()) fail("at least one component is required");
  if (!spec.multipliers.empty() && spec.multipliers.size() != spec.components.size())
    fail("one multiplier per component is required");

  std::vector<std::int64_t> multipliers;
  bool verified = true;
  std::int64_t y = 0;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& comp = spec.components[i];
    const std::int64_t x = comp.unique_length;
    if (x < 1) fail("component unique length must be positive");
    const std::int64_t u = spec.multipliers.empty() ? choose_u(x, spec.m) : spec.multipliers[i];
    if (u < 1 || u >= spec.m) fail("multiplier outside [1, m-1]");
    if (static_cast<std::int64_t>(static_cast<__int128>(x) * u % spec.m) != std::gcd(x, spec.m) % spec.m)
      fail("multiplier u does not satisfy x*u = gcd(x, m) mod m");
    multipliers.push_back(u);
    y += std::gcd(x, spec.m);

    try {
      const auto sp = length_spectrum(comp.sequence, limits);
      if (sp.lengths != std::set<std::int64_t>{x})
        fail("component " + std::to_string(i + 1) + " has spectrum " +
             format_spectrum(sp) + ", not {" + std::to_string(x) + "}");
    } catch (const BudgetExceeded&) {
      verified = false;
    }
    const auto& o = comp.sequence.group.orders();
    orders.insert(orders.end(), o.begin(), o.end());
  }
  if (y >= spec.m)
    fail("y = sum gcd(x_i, m) = " + std::to_string(y) + " is not below m = " +
         std::to_string(spec.m));

  orders.push_back(spec.m);
  GroupSpec g(orders);
  GSequence s{g, {}};
  std::size_t offset = 0;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto& comp = spec.components[i];
    for (const auto& term : comp.sequence.terms) {
      auto e = g.zero();
      std::copy(term.residues.begin(), term.residues.end(), e.residues.begin() + static_cast<std::ptrdiff_t>(offset));
      e.residues.back() = multipliers[i];
      s.terms.push_back(std::move(e));
    }
    offset += comp.sequence.group.rank();
  }
  for (std::int64_t i = 0; i < spec.m - y - 1; ++i) s.terms.push_back(g.basis(g.rank() - 1));
  return LiftResult{std::move(s), y, std::move(multipliers), verified};
}

Certificate build_lzfs_certificate(const LzfsParams& a, SpectrumLimits limits) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::PreconditionFailed, why);
  };
  if (a.n < 2) fail("n >= 2");
  if (a.k < 2) fail("k >= 2");
  if (!is_prime(a.p)) fail("p must be prime");
  if (a.n % a.p != 0) fail("p must divide n");
  if (a.k1 < 2) fail("k1 >= 2");
  if (a.k % a.k1 != 0) fail("k1 must divide k");
  if (std::gcd(a.p, a.k1) != 1) fail("gcd(p, k1) = 1");
  if (a.t < 1 || a.t > a.k1 - 1) fail("t in [1, k1 - 1]");
  if (a.ell < 1) fail("ell >= 1");
  const std::int64_t th = theta(a.ell, a.p);
  if (th < 1) fail("theta(ell; p) >= 1");
  if (a.r < checked_mul(a.t, th))
    fail("r >= t * theta(ell; p) = " + std::to_string(a.t * th));

  const std::int64_t kn = checked_mul(a.k, a.n);
  LiftSpec spec;
  spec.m = kn;
  for (std::int64_t j = 0; j < a.t; ++j) {
    const std::int64_t rank = j + 1 < a.t ? th : a.r - (a.t - 1) * th;
    auto nd = build_nondispersive({a.n, a.p, a.ell, rank});
    spec.components.push_back({std::move(nd.sequence), nd.unique_length});
  }
  auto lifted = lift_zero_sum_free(spec, limits);

  Certificate cert{lifted.sequence.group, ClaimKind::ZeroSumFree, 0, "", std::move(lifted.sequence.terms)};
  cert.provenance = "lzfs n=" + std::to_string(a.n) + " k=" + std::to_string(a.k) +
                    " r=" + std::to_string(a.r) + " p=" + std::to_string(a.p) +
                    " k1=" + std::to_string(a.k1) + " t=" + std::to_string(a.t) +
                    " ell=" + std::to_string(a.ell);
  return cert;
}

}  // namespace davenport
