#include <doctest.h>

#include <random>

#include "davenport/certificate.hpp"
#include "davenport/error.hpp"
#include "davenport/zero_sum.hpp"
#include "oracles.hpp"

using namespace davenport;

namespace {

GSequence seq(const GroupSpec& g, std::vector<std::vector<std::int64_t>> terms) {
  GSequence s{g, {}};
  for (auto& t : terms) s.terms.push_back(GroupElement{std::move(t)});
  return s;
}

std::set<std::int64_t> lengths(const GSequence& s) { return length_spectrum(s).lengths; }

}  // namespace

TEST_CASE("length spectrum examples") {
  const auto c3 = make_group({3});
  CHECK(lengths(seq(c3, {{1}, {1}, {1}, {1}})) == std::set<std::int64_t>{3});
  CHECK(lengths(seq(c3, {})).empty());
  const auto c2 = make_group({2});
  CHECK(lengths(seq(c2, {{1}, {1}, {0}})) == std::set<std::int64_t>{1, 2, 3});
  CHECK(lengths(seq(c2, {{1}, {1}, {1}, {1}})) == std::set<std::int64_t>{2, 4});
  CHECK_FALSE(is_non_dispersive(seq(c2, {{1}, {1}, {1}, {1}})).has_value());
}

TEST_CASE("non-dispersive sequence over C2^4") {
  const auto g = make_group({2, 2, 2, 2});
  const auto s = seq(g, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                         {1, 1, 0, 1}, {1, 1, 1, 0}, {1, 0, 1, 1}});
  CHECK(is_non_dispersive(s) == std::optional<std::int64_t>{4});
  CHECK(lengths(s) == oracle::spectrum_by_subsets(s));
}

TEST_CASE("generator to the n-1 is zero-sum free") {
  for (std::int64_t n = 2; n <= 20; ++n) {
    const auto g = make_group({n});
    GSequence s{g, std::vector<GroupElement>(static_cast<std::size_t>(n - 1), GroupElement{{1}})};
    CHECK(is_zero_sum_free(s));
    s.terms.push_back(GroupElement{{1}});
    CHECK(lengths(s) == std::set<std::int64_t>{n});
  }
}

TEST_CASE("spectrum agrees with subset enumeration on random inputs") {
  std::mt19937 rng(2024);
  const auto groups = oracle::groups_up_to(36);
  for (int iter = 0; iter < 300; ++iter) {
    const auto& inv = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    const auto g = make_group(inv);
    const auto len = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    const auto s = oracle::random_sequence(rng, g, len);
    CHECK(lengths(s) == oracle::spectrum_by_subsets(s));
  }
}

TEST_CASE("appending a term never shrinks the spectrum") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = make_group({2, 6});
    auto s = oracle::random_sequence(rng, g, std::uniform_int_distribution<std::size_t>(0, 10)(rng));
    const auto before = lengths(s);
    s.terms.push_back(oracle::random_sequence(rng, g, 1).terms[0]);
    const auto after = lengths(s);
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST_CASE("spectrum rejects foreign terms and oversized work") {
  const auto g = make_group({2, 2});
  CHECK_THROWS_AS(length_spectrum(seq(g, {{1}})), Error);
  const auto big = make_group({1000});
  GSequence s{big, std::vector<GroupElement>(50, GroupElement{{1}})};
  CHECK_THROWS_AS(length_spectrum(s, SpectrumLimits{1000}), BudgetExceeded);
}

TEST_CASE("davenport_exact examples") {
  CHECK(davenport_exact(make_group({2, 2, 2})).value == 4);
  CHECK(davenport_exact(make_group({6})).value == 6);
  CHECK(davenport_exact(make_group({3, 3})).value == 5);
  CHECK(davenport_exact(make_group({2, 2, 2, 2, 6})).value == 11);
}

TEST_CASE("davenport_exact matches plain DFS on small groups") {
  for (const auto& inv : oracle::groups_up_to(16)) {
    const auto g = make_group(inv);
    const auto r = davenport_exact(g);
    CHECK_MESSAGE(r.value == oracle::davenport_by_dfs(inv), format_group(g));
    CHECK(static_cast<std::int64_t>(r.witness.size()) == r.value - 1);
    CHECK(is_zero_sum_free(r.witness));
    CHECK(r.witness.group == g);
  }
}

TEST_CASE("davenport_exact witness is expressed in the given orders") {
  const auto g = make_group({6, 4});
  const auto r = davenport_exact(g);
  CHECK(r.value == 13);
  CHECK(r.witness.group.orders() == g.orders());
  CHECK(is_zero_sum_free(r.witness));
}

TEST_CASE("davenport_exact equals D* on rank-two and p-groups") {
  for (auto inv : {std::vector<std::int64_t>{4, 4}, {2, 8}, {3, 9}, {5, 5}, {2, 2, 4}, {3, 3, 3}, {2, 10}})
    CHECK(davenport_exact(make_group(inv)).value == d_star(make_group(inv)));
}

TEST_CASE("davenport_exact budgets") {
  SearchLimits tight;
  tight.max_nodes = 10;
  try {
    davenport_exact(make_group({2, 2, 2, 2, 6}), tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.lower_bound().has_value());
    CHECK(*e.lower_bound() >= 10);
  }
  SearchLimits small_order;
  small_order.max_group_order = 10;
  CHECK_THROWS_AS(davenport_exact(make_group({12}), small_order), BudgetExceeded);
}

TEST_CASE("seeds must be zero-sum free over the same group") {
  const auto g = make_group({2, 6});
  SearchLimits limits;
  limits.seeds.push_back(seq(g, {{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(davenport_exact(g, limits), Error);
  limits.seeds = {seq(make_group({12}), {{1}})};
  CHECK_THROWS_AS(davenport_exact(g, limits), Error);
  limits.seeds = {seq(g, {{1, 0}, {0, 1}, {0, 1}})};
  CHECK(davenport_exact(g, limits).value == 7);
}

TEST_CASE("disc_exact examples") {
  CHECK(disc_exact(make_group({2})).value == 4);
  CHECK(disc_exact(make_group({3})).value == 6);
  // Brute force gives 5 for the Klein four-group.
  CHECK(disc_exact(make_group({2, 2})).value == 5);
}

TEST_CASE("disc_exact matches multiset enumeration") {
  for (auto inv : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 2, 2}}) {
    const auto g = make_group(inv);
    const auto r = disc_exact(g);
    CHECK_MESSAGE(r.value == oracle::disc_by_enumeration(g, r.value), format_group(g));
    CHECK(oracle::spectrum_by_subsets(r.witness).size() <= 1);
  }
}

TEST_CASE("disc is at least D, and witnesses verify as certificates") {
  for (auto inv : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {3, 3}}) {
    const auto g = make_group(inv);
    const auto d = davenport_exact(g);
    const auto c = disc_exact(g);
    CHECK(c.value >= d.value);
    CHECK(d.value >= d_star(g));
    Certificate cert{g, ClaimKind::ZeroSumFree, 0, "manual", d.witness.terms};
    CHECK(verify_certificate(cert).pass);
  }
}
