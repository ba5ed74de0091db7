// Exhaustive searches for D(G) and disc(G).
//
// Both searches enumerate multisets in nondecreasing packed-index order over
// the canonical invariant-factor group. Automorphisms of G prune the first
// levels: a new element must be the least point of its orbit under the
// pointwise stabilizer of the distinct elements chosen so far.

#include <bit>
#include <map>
#include <memory>
#include <numeric>

#include "davenport/arith.hpp"
#include "davenport/error.hpp"
#include "davenport/zero_sum.hpp"
#include "packed.hpp"
#include "perm_group.hpp"

namespace davenport {
namespace {

using detail::PackedGroup;
using detail::Perm;

std::vector<Perm> automorphism_generators(const PackedGroup& pg) {
  const auto& d = pg.orders();
  const std::size_t s = d.size();
  const auto n = static_cast<std::size_t>(pg.size());
  std::vector<Perm> gens;
  auto make = [&](auto&& f) {
    Perm p(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto c = pg.unpack(static_cast<std::int64_t>(x));
      f(c);
      p[x] = static_cast<std::uint16_t>(pg.pack(c));
    }
    if (!detail::is_identity(p)) gens.push_back(std::move(p));
  };
  for (std::size_t i = 0; i < s; ++i)
    for (std::int64_t u = 2; u < d[i]; ++u)
      if (std::gcd(u, d[i]) == 1) make([&](auto& c) { c[i] *= u; });
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      if (i < j && d[i] == d[j]) make([&](auto& c) { std::swap(c[i], c[j]); });
      // x_j += c0 * x_i is well defined exactly when d_j | c0 * d_i.
      const std::int64_t c0 = d[j] / std::gcd(d[i], d[j]);
      if (c0 < d[j]) make([&](auto& c) { c[j] += c0 * c[i]; });
    }
  return gens;
}

// Lazily built tree of pointwise stabilizers, keyed by the distinct prefix
// elements. A null child means the stabilizer is trivial.
struct SymNode {
  std::vector<Perm> gens;
  std::vector<std::uint16_t> orbit_min;
  std::map<std::int64_t, std::unique_ptr<SymNode>> children;
  std::map<std::int64_t, bool> built;

  SymNode(std::size_t degree, std::vector<Perm> g)
      : gens(std::move(g)), orbit_min(detail::orbit_minima(degree, gens)) {}

  SymNode* child(std::size_t degree, std::int64_t point) {
    if (!built[point]) {
      built[point] = true;
      auto stab = detail::point_stabilizer(degree, gens, static_cast<int>(point));
      if (!stab.empty())
        children[point] = std::make_unique<SymNode>(degree, std::move(stab));
    }
    auto it = children.find(point);
    return it == children.end() ? nullptr : it->second.get();
  }
};

std::unique_ptr<SymNode> symmetry_root(const PackedGroup& pg) {
  auto gens = automorphism_generators(pg);
  if (gens.empty()) return nullptr;
  return std::make_unique<SymNode>(static_cast<std::size_t>(pg.size()),
                                   std::move(gens));
}

struct NodeBudgetHit {};

// Subset-sum sets over G stored word-wise. When the largest invariant fits a
// machine word each coset of the last cyclic factor gets its own word, so a
// translation is a word permutation plus a rotation inside each word.
// Otherwise sets are plain dense bitmaps translated bit by bit.
class SumSetOps {
 public:
  explicit SumSetOps(const PackedGroup& pg) : n_(pg.size()) {
    const std::int64_t last = pg.orders().back();
    cosets_ = n_ / last;
    coset_mode_ = last <= 64 && cosets_ <= 64;
    if (coset_mode_) {
      width_ = last;
      words_ = static_cast<std::size_t>(cosets_);
      mask_ = width_ == 64 ? ~0ULL : (1ULL << width_) - 1;
      std::vector<std::int64_t> quotient(pg.orders().begin(),
                                         pg.orders().end() - 1);
      if (quotient.empty()) quotient.push_back(1);
      const PackedGroup qg(quotient);
      coset_add_.resize(static_cast<std::size_t>(cosets_ * cosets_));
      for (std::int64_t c = 0; c < cosets_; ++c) {
        const auto tr = qg.translation(c);
        for (std::int64_t b = 0; b < cosets_; ++b)
          coset_add_[static_cast<std::size_t>(c * cosets_ + b)] =
              static_cast<std::uint16_t>(tr[static_cast<std::size_t>(b)]);
      }
    } else {
      words_ = static_cast<std::size_t>((n_ + 63) / 64);
      translate_.resize(static_cast<std::size_t>(n_ * n_));
      for (std::int64_t g = 0; g < n_; ++g) {
        const auto tr = pg.translation(g);
        for (std::int64_t x = 0; x < n_; ++x)
          translate_[static_cast<std::size_t>(g * n_ + x)] =
              static_cast<std::uint16_t>(tr[static_cast<std::size_t>(x)]);
      }
    }
    key_words_ = static_cast<std::size_t>((n_ + 63) / 64);
  }

  std::size_t words() const { return words_; }
  std::size_t key_words() const { return key_words_; }

  bool test(const std::uint64_t* s, std::int64_t x) const {
    auto [w, b] = locate(x);
    return s[w] >> b & 1;
  }

  // t = s + {g} + (s + g)
  void extend(const std::uint64_t* s, std::int64_t g, std::uint64_t* t) const {
    std::copy(s, s + words_, t);
    if (coset_mode_) {
      const std::int64_t cg = g / width_, a = g % width_;
      const std::uint16_t* row = &coset_add_[static_cast<std::size_t>(cg * cosets_)];
      for (std::size_t c = 0; c < words_; ++c) {
        const std::uint64_t w = s[c];
        if (!w) continue;
        const std::uint64_t r =
            a == 0 ? w : ((w << a) | (w >> (width_ - a))) & mask_;
        t[row[c]] |= r;
      }
    } else {
      const std::uint16_t* tr = &translate_[static_cast<std::size_t>(g * n_)];
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = s[w];
        while (bits) {
          const auto x = static_cast<std::size_t>(std::countr_zero(bits)) + 64 * w;
          bits &= bits - 1;
          t[tr[x] / 64] |= 1ULL << (tr[x] % 64);
        }
      }
    }
    auto [w, b] = locate(g);
    t[w] |= 1ULL << b;
  }

  int count(const std::uint64_t* s) const {
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(s[w]);
    return c;
  }

  // Dense packed-index bitmap, the layout-independent memo key.
  void key(const std::uint64_t* s, std::uint64_t* out) const {
    if (!coset_mode_) {
      std::copy(s, s + words_, out);
      return;
    }
    std::fill(out, out + key_words_, 0);
    for (std::size_t c = 0; c < words_; ++c) {
      if (!s[c]) continue;
      const auto off = static_cast<std::size_t>(c * width_);
      out[off / 64] |= s[c] << (off % 64);
      if (off % 64 && off % 64 + width_ > 64)
        out[off / 64 + 1] |= s[c] >> (64 - off % 64);
    }
  }

 private:
  std::pair<std::size_t, int> locate(std::int64_t x) const {
    if (coset_mode_)
      return {static_cast<std::size_t>(x / width_), static_cast<int>(x % width_)};
    return {static_cast<std::size_t>(x / 64), static_cast<int>(x % 64)};
  }

  std::int64_t n_;
  std::int64_t cosets_ = 1;
  std::int64_t width_ = 64;
  bool coset_mode_ = false;
  std::uint64_t mask_ = ~0ULL;
  std::size_t words_ = 0, key_words_ = 0;
  std::vector<std::uint16_t> coset_add_;
  std::vector<std::uint16_t> translate_;
};

// Lossy transposition table keyed by the sum set. An entry (cur, bound)
// says no extension by elements >= cur is longer than bound, so it also
// answers lookups with any larger cur. Losing entries only costs time.
class BoundCache {
 public:
  BoundCache(std::size_t key_words, std::size_t entries)
      : kw_(key_words), cap_(std::bit_floor(std::max<std::size_t>(entries, kWays))) {
    keys_.assign(cap_ * kw_, 0);
    meta_.assign(cap_, 0);
  }

  static std::uint64_t hash(const std::uint64_t* key, std::size_t kw) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < kw; ++i) {
      h ^= key[i];
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return h;
  }

  bool refutes(const std::uint64_t* key, std::uint32_t cur, int need,
               std::uint64_t h) const {
    const std::size_t first = bucket(h);
    for (std::size_t s = first; s < first + kWays; ++s) {
      const std::uint32_t m = meta_[s];
      if (m && cur_of(m) <= cur && bound_of(m) < need && same_key(s, key))
        return true;
    }
    return false;
  }

  void store(const std::uint64_t* key, std::uint32_t cur, int bound,
             std::uint64_t h) {
    const std::size_t first = bucket(h);
    std::size_t victim = first + (h >> 48) % kWays;
    for (std::size_t s = first; s < first + kWays; ++s) {
      const std::uint32_t m = meta_[s];
      if (m == 0) {
        victim = s;
        continue;
      }
      if (!same_key(s, key)) continue;
      if (cur_of(m) <= cur && bound_of(m) <= bound) return;  // already implied
      if (cur_of(m) >= cur && bound_of(m) >= bound) {       // superseded
        victim = s;
        break;
      }
    }
    std::copy(key, key + kw_, &keys_[victim * kw_]);
    meta_[victim] = ((cur + 1) << 16) | static_cast<std::uint32_t>(bound);
  }

 private:
  static constexpr std::size_t kWays = 4;

  static std::uint32_t cur_of(std::uint32_t m) { return (m >> 16) - 1; }
  static int bound_of(std::uint32_t m) { return static_cast<int>(m & 0xffff); }
  std::size_t bucket(std::uint64_t h) const { return h & (cap_ - kWays); }
  bool same_key(std::size_t slot, const std::uint64_t* key) const {
    return std::equal(key, key + kw_, &keys_[slot * kw_]);
  }

  std::size_t kw_, cap_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> meta_;
};

class ZeroSumFreeSearch {
 public:
  ZeroSumFreeSearch(const PackedGroup& pg, const SearchLimits& limits)
      : pg_(pg),
        n_(pg.size()),
        ops_(pg),
        cache_(ops_.key_words(), limits.memo_entries),
        max_nodes_(limits.max_nodes),
        root_(symmetry_root(pg)) {
    neg_.resize(static_cast<std::size_t>(n_));
    for (std::int64_t x = 0; x < n_; ++x)
      neg_[static_cast<std::size_t>(x)] = pg.neg(x);
    // -g, -2g, ... up to but excluding 0.
    neg_multiples_.resize(static_cast<std::size_t>(n_));
    for (std::int64_t x = 1; x < n_; ++x) {
      const auto base = pg.unpack(x);
      auto c = base;
      for (std::int64_t y = pg.neg(x); y != 0;) {
        neg_multiples_[static_cast<std::size_t>(x)].push_back(static_cast<std::uint16_t>(y));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += base[i];
        y = pg.neg(pg.pack(c));
      }
    }
    stack_.assign(static_cast<std::size_t>(n_ + 1) * ops_.words(), 0);
    key_.resize(ops_.key_words());
  }

  // True if some zero-sum-free sequence of length `need` exists; the
  // sequence is left in path().
  bool find(int need) {
    path_.clear();
    std::fill(stack_.begin(), stack_.begin() + static_cast<std::ptrdiff_t>(ops_.words()), 0);
    return explore(0, 1, need, root_.get());
  }

  const std::vector<std::int64_t>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool explore(std::size_t depth, std::int64_t cur, int need, SymNode* sym) {
    if (need <= 0) return true;
    const std::uint64_t* s = &stack_[depth * ops_.words()];
    const int size = ops_.count(s);
    if (n_ - 1 - size < need) return false;

    std::uint64_t h = 0;
    if (!sym) {
      ops_.key(s, key_.data());
      h = BoundCache::hash(key_.data(), key_.size());
      if (cache_.refutes(key_.data(), static_cast<std::uint32_t>(cur), need, h)) return false;
    }
    if (++nodes_ > max_nodes_) throw NodeBudgetHit{};

    // Each later element g >= cur can occur at most j times, where -(j+1)g
    // is the first negative multiple already in the sum set.
    int caps = 0;
    for (std::int64_t g = cur; g < n_ && caps < need; ++g) {
      for (auto y : neg_multiples_[static_cast<std::size_t>(g)]) {
        if (ops_.test(s, y)) break;
        ++caps;
      }
    }
    if (caps < need) {
      if (!sym) cache_.store(key_.data(), static_cast<std::uint32_t>(cur), caps, h);
      return false;
    }

    std::uint64_t* t = &stack_[(depth + 1) * ops_.words()];
    const std::int64_t last = path_.empty() ? -1 : path_.back();
    for (std::int64_t g = cur; g < n_; ++g) {
      if (ops_.test(s, neg_[static_cast<std::size_t>(g)])) continue;
      if (sym && sym->orbit_min[static_cast<std::size_t>(g)] != g) continue;
      ops_.extend(s, g, t);
      if (n_ - 1 - ops_.count(t) < need - 1) continue;
      SymNode* next = nullptr;
      if (sym) next = g == last ? sym : sym->child(static_cast<std::size_t>(n_), g);
      path_.push_back(g);
      if (explore(depth + 1, g, need - 1, next)) return true;
      path_.pop_back();
    }
    if (!sym) {
      // key_ may have been overwritten by descendants.
      ops_.key(s, key_.data());
      cache_.store(key_.data(), static_cast<std::uint32_t>(cur), need - 1, h);
    }
    return false;
  }

  const PackedGroup& pg_;
  std::int64_t n_;
  SumSetOps ops_;
  BoundCache cache_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::unique_ptr<SymNode> root_;
  std::vector<std::int64_t> neg_;
  std::vector<std::vector<std::uint16_t>> neg_multiples_;
  std::vector<std::uint64_t> stack_;
  std::vector<std::uint64_t> key_;
  std::vector<std::int64_t> path_;
};

PackedGroup canonical_packing(const GroupSpec& g, const SearchLimits& limits,
                              const char* what) {
  std::int64_t n = 0;
  try {
    n = g.order();
  } catch (const Error&) {
    n = -1;
  }
  if (n < 0 || n > limits.max_group_order || n > 65535)
    throw BudgetExceeded(std::string(what) + ": group order exceeds the search limit",
                         d_star(g), GSequence{g, {}});
  return PackedGroup(g.invariants());
}

GSequence to_given(const GroupSpec& g, const PackedGroup& pg,
                   const std::vector<std::int64_t>& path) {
  GSequence s{g, {}};
  for (auto x : path) s.terms.push_back(g.from_canonical(pg.unpack(x)));
  return s;
}

// Canonical basis f_j repeated d_j - 1 times: zero-sum free of length D* - 1.
std::vector<std::int64_t> standard_witness(const PackedGroup& pg) {
  std::vector<std::int64_t> path;
  const auto& d = pg.orders();
  for (std::size_t j = 0; j < d.size(); ++j) {
    std::vector<std::int64_t> c(d.size(), 0);
    c[j] = 1;
    const auto x = pg.pack(c);
    for (std::int64_t i = 0; i + 1 < d[j]; ++i) path.push_back(x);
  }
  std::sort(path.begin(), path.end());
  return path;
}

}  // namespace

ExactResult davenport_exact(const GroupSpec& g, const SearchLimits& limits) {
  const PackedGroup pg = canonical_packing(g, limits, "davenport_exact");
  auto best_path = standard_witness(pg);
  GSequence best = to_given(g, pg, best_path);
  for (const auto& seed : limits.seeds) {
    if (!(seed.group == g))
      throw Error(ErrorKind::PreconditionFailed, "seed sequence is over a different group");
    if (!is_zero_sum_free(seed))
      throw Error(ErrorKind::PreconditionFailed, "seed sequence is not zero-sum free");
    if (seed.size() > best.size()) best = seed;
  }

  ZeroSumFreeSearch search(pg, limits);
  int length = static_cast<int>(best.size());
  try {
    while (search.find(length + 1)) {
      ++length;
      best = to_given(g, pg, search.path());
    }
  } catch (const NodeBudgetHit&) {
    throw BudgetExceeded("davenport_exact: node budget of " +
                             std::to_string(limits.max_nodes) + " exhausted",
                         length + 1, best);
  }
  return ExactResult{length + 1, best, search.nodes()};
}

namespace {

// Depth-first search for long sequences whose zero-sum spectrum has at most
// one length. The state is a table over G of achievable subsequence lengths.
class SpectrumSearch {
 public:
  SpectrumSearch(const PackedGroup& pg, std::uint64_t max_nodes)
      : n_(pg.size()), max_nodes_(max_nodes), root_(symmetry_root(pg)) {
    translate_.reserve(static_cast<std::size_t>(n_));
    for (std::int64_t x = 0; x < n_; ++x) translate_.push_back(pg.translation(x));
  }

  void run() {
    std::vector<Row> table(static_cast<std::size_t>(n_), 0);
    table[0] = 1;
    explore(table, 0, root_.get());
  }

  const std::vector<std::int64_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  using Row = unsigned __int128;
  static constexpr std::size_t kMaxLength = 127;

  void explore(const std::vector<Row>& table, std::int64_t cur, SymNode* sym) {
    if (++nodes_ > max_nodes_) throw NodeBudgetHit{};
    if (path_.size() > best_.size()) best_ = path_;
    if (path_.size() == kMaxLength)
      throw BudgetExceeded("disc_exact: sequence length exceeds the length table");
    std::vector<Row> next(table.size());
    const std::int64_t last = path_.empty() ? -1 : path_.back();
    for (std::int64_t g = cur; g < n_; ++g) {
      if (sym && sym->orbit_min[static_cast<std::size_t>(g)] != g) continue;
      const auto& tr = translate_[static_cast<std::size_t>(g)];
      next = table;
      for (std::size_t x = 0; x < table.size(); ++x) next[tr[x]] |= table[x] << 1;
      const Row zero_lengths = next[0] >> 1;
      if (zero_lengths & (zero_lengths - 1)) continue;  // two distinct lengths
      SymNode* child = nullptr;
      if (sym) child = g == last ? sym : sym->child(static_cast<std::size_t>(n_), g);
      path_.push_back(g);
      explore(next, g, child);
      path_.pop_back();
    }
  }

  std::int64_t n_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::unique_ptr<SymNode> root_;
  std::vector<std::vector<std::uint32_t>> translate_;
  std::vector<std::int64_t> path_, best_;
};

}  // namespace

ExactResult disc_exact(const GroupSpec& g, const SearchLimits& limits) {
  const PackedGroup pg = canonical_packing(g, limits, "disc_exact");
  SpectrumSearch search(pg, limits.max_nodes);
  try {
    search.run();
  } catch (const NodeBudgetHit&) {
    throw BudgetExceeded("disc_exact: node budget of " +
                             std::to_string(limits.max_nodes) + " exhausted",
                         static_cast<std::int64_t>(search.best().size()) + 1,
                         to_given(g, pg, search.best()));
  }
  const auto& best = search.best();
  return ExactResult{static_cast<std::int64_t>(best.size()) + 1,
                     to_given(g, pg, best), search.nodes()};
}

}  // namespace davenport
