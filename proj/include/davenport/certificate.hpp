#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "davenport/group.hpp"
#include "davenport/zero_sum.hpp"

namespace davenport {

enum class ClaimKind { ZeroSumFree, NonDispersive };

struct Certificate {
  GroupSpec group;
  ClaimKind claim = ClaimKind::ZeroSumFree;
  std::int64_t unique_length = 0;  // non-dispersive claims only
  std::string provenance = "manual";
  std::vector<GroupElement> terms;

  GSequence sequence() const { return GSequence{group, terms}; }
};

std::string serialize(const Certificate& cert);
// Strict parser for the line format; throws Error{ParseError}.
Certificate parse_certificate(std::string_view text);

struct VerifyReport {
  bool pass = false;
  LengthSpectrum spectrum;
  std::string detail;
};

VerifyReport verify_certificate(const Certificate& cert,
                                SpectrumLimits limits = {});

}  // namespace davenport
