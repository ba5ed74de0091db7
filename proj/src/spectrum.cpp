#include <map>

#include "davenport/error.hpp"
#include "davenport/zero_sum.hpp"
#include "packed.hpp"

namespace davenport {

std::string format_spectrum(const LengthSpectrum& s) {
  std::string out = "{";
  bool first = true;
  for (auto len : s.lengths) {
    if (!first) out += ',';
    out += std::to_string(len);
    first = false;
  }
  return out + "}";
}

LengthSpectrum length_spectrum(const GSequence& s, SpectrumLimits limits) {
  for (const auto& t : s.terms)
    if (!s.group.contains(t))
      throw Error(ErrorKind::RankMismatch,
                  "term " + format_element(t) + " is not an element of " +
                      format_group(s.group));

  const std::uint64_t len = s.size();
  std::int64_t n = 0;
  try {
    n = s.group.order();
  } catch (const Error&) {
    throw BudgetExceeded("group too large for the spectrum table");
  }
  const auto cells = static_cast<unsigned __int128>(n) * (len + 1);
  if (cells > limits.max_cells)
    throw BudgetExceeded("spectrum table of " + std::to_string(n) + " x " +
                         std::to_string(len + 1) + " cells exceeds the limit");

  const detail::PackedGroup pg(s.group.orders());
  const std::size_t words = (len + 1 + 63) / 64;
  const std::size_t nn = static_cast<std::size_t>(n);

  // table[x * words + w]: bit l set iff some subsequence of length l sums to x.
  std::vector<std::uint64_t> table(nn * words, 0), next;
  table[0] = 1;
  std::map<std::int64_t, std::vector<std::uint32_t>> shifts;
  for (const auto& term : s.terms) {
    const std::int64_t t = pg.pack(term.residues);
    auto it = shifts.find(t);
    if (it == shifts.end()) it = shifts.emplace(t, pg.translation(t)).first;
    const auto& perm = it->second;
    next = table;
    for (std::size_t x = 0; x < nn; ++x) {
      const std::uint64_t* src = &table[x * words];
      std::uint64_t* dst = &next[perm[x] * words];
      std::uint64_t carry = 0;
      for (std::size_t w = 0; w < words; ++w) {
        dst[w] |= (src[w] << 1) | carry;
        carry = src[w] >> 63;
      }
    }
    table.swap(next);
  }

  LengthSpectrum out;
  for (std::size_t l = 1; l <= len; ++l)
    if (table[l / 64] >> (l % 64) & 1) out.lengths.insert(static_cast<std::int64_t>(l));
  return out;
}

bool is_zero_sum_free(const GSequence& s, SpectrumLimits limits) {
  return length_spectrum(s, limits).empty();
}

std::optional<std::int64_t> is_non_dispersive(const GSequence& s,
                                              SpectrumLimits limits) {
  auto sp = length_spectrum(s, limits);
  if (sp.lengths.size() != 1) return std::nullopt;
  return *sp.lengths.begin();
}

}  // namespace davenport
