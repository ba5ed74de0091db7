#pragma once

#include <cstdint>
#include <vector>

#include "davenport/certificate.hpp"
#include "davenport/group.hpp"
#include "davenport/zero_sum.hpp"

namespace davenport {

std::int64_t theta(int ell, std::int64_t p);
std::int64_t omega(int ell, std::int64_t n, std::int64_t p);

enum class TableKind { M, W };

// An ell-row table whose columns are ell-tuples over Z_n, n = p*q. Columns are
// kept in lexicographic order.
struct MTable {
  int ell = 0;
  std::int64_t p = 0, q = 0, n = 0;
  TableKind kind = TableKind::M;
  std::vector<std::vector<std::int64_t>> columns;

  std::size_t rows() const { return static_cast<std::size_t>(ell); }
  std::size_t cols() const { return columns.size(); }
  std::int64_t at(std::size_t row, std::size_t col) const { return columns[col][row]; }
};

MTable build_M(int ell, std::int64_t p, std::int64_t q);

// Exhaustive check of the column-sum identities of M(ell): for every index
// subset and coefficient vector, the sum of least residues of the combined
// columns equals the unique length, and is invariant under negation.
bool check_prop_M(int ell, std::int64_t p, std::int64_t q, std::int64_t n,
                  std::uint64_t max_work = 200'000'000);

MTable build_W(int ell, std::int64_t p, std::int64_t q);

struct ConstructionParams {
  std::int64_t n = 0;
  std::int64_t p = 0;
  int ell = 0;
  std::int64_t r = 0;

  std::int64_t q() const { return n / p; }
};

// Throws BadParams naming the violated condition.
void validate(const ConstructionParams& params);

struct NondispersiveSequence {
  GSequence sequence;  // over C_n^r
  std::int64_t unique_length = 0;
};

NondispersiveSequence build_nondispersive(const ConstructionParams& params);

std::int64_t choose_u(std::int64_t x, std::int64_t m);

struct LiftComponent {
  GSequence sequence;
  std::int64_t unique_length = 0;
};

struct LiftSpec {
  std::vector<LiftComponent> components;
  std::int64_t m = 0;
  // Optional; chosen by choose_u when empty.
  std::vector<std::int64_t> multipliers;
};

struct LiftResult {
  GSequence sequence;  // over G_1 + ... + G_t + C_m
  std::int64_t y = 0;
  std::vector<std::int64_t> multipliers;
  // False when some component was too large for the spectrum oracle and its
  // unique length was taken on trust.
  bool components_verified = true;
};

LiftResult lift_zero_sum_free(const LiftSpec& spec, SpectrumLimits limits = {});

struct LzfsParams {
  std::int64_t n = 0, k = 0, r = 0, p = 0, k1 = 0, t = 0;
  int ell = 0;
};

// Zero-sum-free certificate over C_n^r + C_{kn}; throws PreconditionFailed.
Certificate build_lzfs_certificate(const LzfsParams& params,
                                   SpectrumLimits limits = {});

}  // namespace davenport
