#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "davenport/group.hpp"
#include "davenport/zero_sum.hpp"

namespace davenport {

enum class Formula { DStar, Lzfs, Zhihe, Est, Gene, Exact };

std::string to_string(Formula f);

struct BoundParams {
  std::int64_t p = 0, k1 = 0, m = 0, t = 0;
  int ell = 0;
};

struct BoundReport {
  GroupSpec group;
  std::int64_t d_star = 0;
  std::int64_t lower_bound = 0;
  std::int64_t delta = 0;
  Formula formula = Formula::DStar;
  std::optional<BoundParams> params;
  // CLI invocation that reproduces the witness, when one exists.
  std::optional<std::string> certificate_ref;
  std::string note;
};

std::string format_params(const BoundReport& r);

// Pairs (p prime dividing n, k1 >= 2 dividing k) with gcd(p, k1) = 1.
std::vector<std::pair<std::int64_t, std::int64_t>> admissible_pk1(std::int64_t n,
                                                                 std::int64_t k);

// Best lower bound for C_n^r + C_{kn} from the block-lifting construction.
BoundReport bound_lzfs(std::int64_t n, std::int64_t k, std::int64_t r);

struct EstBound {
  double value = 0;            // the strict lower bound D(G) > value
  std::int64_t integer_bound = 0;
  std::int64_t d_star = 0;
  BoundParams params;
};

// Logarithmic relaxation of bound_lzfs for a fixed t, maximized over (p, k1).
EstBound bound_est(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t t);

// The expression inside max{., 0} of the exponent-rank bound, given
// log_ratio = ln(m^r / |G|).
double gene_excess(double log_ratio, std::int64_t m);
BoundReport bound_gene(const GroupSpec& g);

// Threshold below which |G| / m^r forces delta > N in bound_gene.
double log_epsilon_for(std::int64_t N, std::int64_t m);
double epsilon_for(std::int64_t N, std::int64_t m);

std::int64_t bound_disc(std::int64_t n, std::int64_t r, std::int64_t p);

// D*(g) plus certified deltas of disjoint proper blocks of canonical
// invariant indices (0-based).
std::int64_t bound_zhihe(const GroupSpec& g,
                         const std::vector<std::vector<std::size_t>>& blocks,
                         const std::vector<std::int64_t>& deltas);

struct BoundOptions {
  bool run_exact = false;
  SearchLimits limits;
};

// Every applicable formula, DSTAR first.
std::vector<BoundReport> evaluate_bounds(const GroupSpec& g,
                                         const BoundOptions& options = {});
// Index of the best row: the largest bound; ties go to DSTAR when the best
// equals D*, otherwise to the earliest row.
std::size_t best_row(const std::vector<BoundReport>& rows);
BoundReport best_bound(const GroupSpec& g, const BoundOptions& options = {});

}  // namespace davenport
