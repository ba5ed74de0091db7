#pragma once

// Permutation groups on [0, degree) via a deterministic Schreier-Sims
// construction of a base and strong generating set.

#include <cstdint>
#include <optional>
#include <vector>

namespace davenport::detail {

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& a, const Perm& b);  // x -> b[a[x]]
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);

class StabilizerChain {
 public:
  // Builds a BSGS for <gens> whose base starts with `prefix`.
  StabilizerChain(std::size_t degree, const std::vector<Perm>& gens,
                  const std::vector<int>& prefix);

  // Strong generators of the stabilizer of base[0..level).
  const std::vector<Perm>& generators(std::size_t level) const;
  std::size_t levels() const { return base_.size(); }
  double order() const;

 private:
  void build_orbit(std::size_t level);
  std::pair<Perm, std::size_t> sift(Perm h, std::size_t from) const;

  std::size_t degree_;
  std::vector<int> base_;
  std::vector<std::vector<Perm>> strong_;
  std::vector<std::vector<std::optional<Perm>>> transversal_;
};

// Generators of the stabilizer of `point` in <gens>.
std::vector<Perm> point_stabilizer(std::size_t degree,
                                   const std::vector<Perm>& gens, int point);

// orbit_min[x] = least point in the orbit of x under <gens>.
std::vector<std::uint16_t> orbit_minima(std::size_t degree,
                                        const std::vector<Perm>& gens);

}  // namespace davenport::detail
