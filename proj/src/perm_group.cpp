#include "perm_group.hpp"

#include <numeric>

namespace davenport::detail {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[a[x]] = static_cast<std::uint16_t>(x);
  return r;
}

bool is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != x) return false;
  return true;
}

namespace {

int first_moved(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] != x) return static_cast<int>(x);
  return -1;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree,
                                 const std::vector<Perm>& gens,
                                 const std::vector<int>& prefix)
    : degree_(degree), base_(prefix) {
  std::vector<Perm> nontrivial;
  for (const auto& g : gens)
    if (!is_identity(g)) nontrivial.push_back(g);
  for (const auto& g : nontrivial) {
    bool moves_base = false;
    for (int b : base_) moves_base = moves_base || g[b] != b;
    if (!moves_base) base_.push_back(first_moved(g));
  }

  const std::size_t k = base_.size();
  strong_.assign(k, {});
  transversal_.assign(k, {});
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& g : nontrivial) {
      bool fixes = true;
      for (std::size_t t = 0; t < i && fixes; ++t) fixes = g[base_[t]] == base_[t];
      if (fixes) strong_[i].push_back(g);
    }
  for (std::size_t i = 0; i < k; ++i) build_orbit(i);

  // Schreier-Sims: every Schreier generator at level i must sift through
  // levels i+1...; a non-trivial residue extends the strong generating set.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
  while (i >= 0) {
    const auto lvl = static_cast<std::size_t>(i);
    bool complete = true;
    for (std::size_t b = 0; b < degree_ && complete; ++b) {
      if (!transversal_[lvl][b]) continue;
      for (std::size_t si = 0; si < strong_[lvl].size() && complete; ++si) {
        const Perm s = strong_[lvl][si];
        const Perm h = compose(compose(*transversal_[lvl][b], s),
                               inverse(*transversal_[lvl][s[b]]));
        auto [y, j] = sift(h, lvl + 1);
        if (is_identity(y)) continue;
        if (j == base_.size()) {
          base_.push_back(first_moved(y));
          strong_.emplace_back();
          transversal_.emplace_back();
        }
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          strong_[l].push_back(y);
          build_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        complete = false;
      }
    }
    if (complete) --i;
  }
}

void StabilizerChain::build_orbit(std::size_t level) {
  auto& u = transversal_[level];
  u.assign(degree_, std::nullopt);
  Perm id(degree_);
  std::iota(id.begin(), id.end(), 0);
  u[base_[level]] = id;
  std::vector<int> queue{base_[level]};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int b = queue[h];
    for (const auto& s : strong_[level]) {
      const int c = s[b];
      if (!u[c]) {
        u[c] = compose(*u[b], s);
        queue.push_back(c);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::sift(Perm h,
                                                   std::size_t from) const {
  for (std::size_t t = from; t < base_.size(); ++t) {
    const int b = h[base_[t]];
    if (!transversal_[t][b]) return {h, t};
    h = compose(h, inverse(*transversal_[t][b]));
  }
  return {h, base_.size()};
}

const std::vector<Perm>& StabilizerChain::generators(std::size_t level) const {
  static const std::vector<Perm> none;
  return level < strong_.size() ? strong_[level] : none;
}

double StabilizerChain::order() const {
  double o = 1;
  for (const auto& u : transversal_) {
    std::size_t c = 0;
    for (const auto& x : u) c += x.has_value();
    o *= static_cast<double>(c);
  }
  return o;
}

std::vector<Perm> point_stabilizer(std::size_t degree,
                                   const std::vector<Perm>& gens, int point) {
  if (gens.empty()) return {};
  StabilizerChain chain(degree, gens, {point});
  return chain.generators(1);
}

std::vector<std::uint16_t> orbit_minima(std::size_t degree,
                                        const std::vector<Perm>& gens) {
  std::vector<std::uint16_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint16_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::size_t x = 0; x < degree; ++x) {
      const auto a = find(static_cast<std::uint16_t>(x)), b = find(g[x]);
      if (a < b) parent[b] = a;
      else if (b < a) parent[a] = b;
    }
  std::vector<std::uint16_t> out(degree);
  for (std::size_t x = 0; x < degree; ++x) out[x] = find(static_cast<std::uint16_t>(x));
  return out;
}

}  // namespace davenport::detail
