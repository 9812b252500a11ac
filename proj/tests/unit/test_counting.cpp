#include <doctest.h>

#include "gmpd/counting.hpp"
#include "gmpd/error.hpp"
#include "gmpd/verify.hpp"
#include "unit/oracles.hpp"

using namespace gmpd;
using enum LocalClass;

namespace {

// Quasi-local elements of the product, counted by filtering the recursive
// enumeration: at most one coordinate strictly below its top.
std::size_t brute_quasi_local(const DomainModel &m) {
  std::size_t count = 0;
  for (const auto &v : oracle::product_elements(m)) {
    std::size_t below = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] + 1 < chain_length(m[i])) ++below;
    if (below <= 1) ++count;
  }
  return count;
}

} // namespace

TEST_CASE("quasi_local_count") {
  CHECK(quasi_local_count(DomainModel{K1, K2, K3, K4}) == 7);
  CHECK(quasi_local_count(DomainModel{K4}) == 2);
  // Filtered 3x2 product.
  CHECK(brute_quasi_local(DomainModel{K1, K4}) == 4);
  CHECK(quasi_local_count(DomainModel{K1, K4}) == 4);
  CHECK(quasi_local_count(DomainModel{}) == 1);
}

TEST_CASE("total_count") {
  CHECK(total_count(DomainModel{K3, K4, K4}) == 12);
  CHECK(total_count(DomainModel{K4, K4, K4}) == 8);
  CHECK(total_count(DomainModel{}) == 1);
}

TEST_CASE("total_count is exact far beyond 64 bits") {
  const DomainModel big(std::vector<LocalClass>(100, K3));
  Count expected = 1;
  for (int i = 0; i < 100; ++i) expected *= 3;
  CHECK(total_count(big) == expected);
  CHECK(total_count(big).str() ==
        "515377520732011331036461129765621272702107522001");
}

TEST_CASE("counts agree with brute-force enumeration for small models") {
  for (const DomainModel &m : canonical_models_up_to(5)) {
    CAPTURE(to_string(m));
    CHECK(quasi_local_count(m) == brute_quasi_local(m));
    CHECK(quasi_local_count_from_localizations(m) == quasi_local_count(m));
    CHECK(total_count(m) == oracle::product_elements(m).size());
  }
}

TEST_CASE("characterize") {
  SUBCASE("noetherian") {
    const auto ch = characterize(DomainModel{K1, K4, K4});
    CHECK(ch.noetherian);
    CHECK(ch.count_noetherian_formula == 5);
    CHECK(quasi_local_count(DomainModel{K1, K4, K4}) == 5);
    CHECK_FALSE(ch.prufer);
    CHECK_FALSE(ch.dedekind);
  }
  SUBCASE("dedekind") {
    const auto ch = characterize(DomainModel{K4, K4});
    CHECK(ch.dedekind);
    CHECK(ch.count_dedekind_formula == 3);
  }
  SUBCASE("prufer") {
    const auto ch = characterize(DomainModel{K2, K3});
    CHECK(ch.prufer);
    CHECK(ch.count_prufer_formula == 4);
    CHECK(quasi_local_count(DomainModel{K2, K3}) == 4);
    CHECK_FALSE(ch.noetherian);
  }
}

TEST_CASE("characterize cross-check raises on disagreement") {
  CHECK_NOTHROW(detail::require_agreement(DomainModel{K4}, "dedekind", true, true));
  CHECK_THROWS_AS(detail::require_agreement(DomainModel{K4}, "dedekind", true, false),
                  internal_error);
}

TEST_CASE("mpd_counts") {
  SUBCASE("non-DVR local with three overrings") {
    const auto c = mpd_counts(DomainModel{K1, K4, K4});
    CHECK(c.total == 12);
    CHECK(c.quasi_local == 5);
  }
  SUBCASE("Dedekind") {
    const auto c = mpd_counts(DomainModel{K4, K4});
    CHECK(c.total == 4);
    CHECK(c.quasi_local == 3);
  }
  SUBCASE("value group R local has only two overrings") {
    const auto c = mpd_counts(DomainModel{K2, K4});
    CHECK(c.total == 4);
    CHECK(c.quasi_local == 3);
  }
  SUBCASE("two non-DVR locals") {
    CHECK_THROWS_AS(mpd_counts(DomainModel{K1, K3}), precondition_error);
  }
}

TEST_CASE("count_report") {
  const auto r = count_report(DomainModel{K1, K3, K4});
  CHECK(r.total_overrings == 18);
  CHECK(r.quasi_local_overrings == 6);
  CHECK(r.max_count == 3);
  CHECK(r.counts == ClassCounts{1, 0, 1, 1});
  CHECK(r.quasi_local_overrings <= r.total_overrings);
}
