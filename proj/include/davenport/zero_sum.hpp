#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "davenport/group.hpp"

namespace davenport {

// Lengths of the nonempty zero-sum subsequences of a fixed sequence.
struct LengthSpectrum {
  std::set<std::int64_t> lengths;

  bool empty() const { return lengths.empty(); }
  friend bool operator==(const LengthSpectrum&, const LengthSpectrum&) = default;
};

std::string format_spectrum(const LengthSpectrum& s);

struct SpectrumLimits {
  std::uint64_t max_cells = 100'000'000;  // |G| * (|S| + 1)
};

LengthSpectrum length_spectrum(const GSequence& s, SpectrumLimits limits = {});
bool is_zero_sum_free(const GSequence& s, SpectrumLimits limits = {});
// The unique zero-sum length when the spectrum is a singleton.
std::optional<std::int64_t> is_non_dispersive(const GSequence& s,
                                              SpectrumLimits limits = {});

struct SearchLimits {
  std::uint64_t max_nodes = 2'000'000'000;
  std::int64_t max_group_order = 512;
  std::size_t memo_entries = std::size_t{1} << 22;
  // Verified zero-sum-free sequences used to seed the lower bound.
  std::vector<GSequence> seeds;
};

struct ExactResult {
  std::int64_t value = 0;
  GSequence witness;
  std::uint64_t nodes_explored = 0;
};

ExactResult davenport_exact(const GroupSpec& g, const SearchLimits& limits = {});
ExactResult disc_exact(const GroupSpec& g, const SearchLimits& limits = {});

}  // namespace davenport
