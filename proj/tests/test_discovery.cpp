#include <string>

#include "doctest.h"
#include "wwords/discovery.hpp"
#include "wwords/enumerate.hpp"
#include "wwords/errors.hpp"
#include "wwords/presets.hpp"

using namespace wwords;

TEST_CASE("named products are recognized") {
  for (auto const& np : product_list()) {
    CAPTURE(np.name);
    auto f = product_expand(np.spec, 24);
    auto p = recognize_periodic_product(f, 24);
    REQUIRE(p);
    CHECK(product_expand(p->spec, 24) == f);
  }
  auto odd = recognize_periodic_product(
      product_expand(named_product("distinct-odd"), 24), 24);
  CHECK(odd->spec.to_string() == "(-q;q^2)_inf");
  CHECK(odd->period == 2);
  auto schur = recognize_periodic_product(
      product_expand(named_product("schur-mod3"), 24), 24);
  CHECK(schur->spec.to_string() == "(-a*q;q^3)_inf (-b*q^2;q^3)_inf");
  CHECK(schur->factors_per_period == 2);
}

TEST_CASE("recognition edge cases") {
  auto one = recognize_periodic_product(Series::one(12), 12);
  REQUIRE(one);
  CHECK(one->spec.factors.empty());
  Series two(6);
  two.add_term(0, {}, 2);
  CHECK_FALSE(recognize_periodic_product(two, 6));
  // 1 + q + q^5 has no short period
  Series irregular = Series::one(12);
  irregular.add_term(1, {}, 1);
  irregular.add_term(5, {}, 1);
  auto p = recognize_periodic_product(irregular, 12);
  if (p) {
    CHECK(product_expand(p->spec, 12) == irregular);
  }
}

TEST_CASE("schur relation c = ab") {
  auto found = search_relations(build_preset("schur-dilated-mod3"), {"a", "b"},
                                18, 2);
  REQUIRE(!found.empty());
  std::size_t product_like = 0;
  for (auto const& c : found) {
    product_like += c.product_like ? 1 : 0;
  }
  CHECK(product_like == 1);
  auto const& best = found.front();
  CHECK(best.product_like);
  CHECK(best.substitution.images.at(variable("c")).monomial
        == Monomial{{"a", 1}, {"b", 1}});
  REQUIRE(best.product);
  CHECK(best.product->spec.to_string() == "(-a*q;q^3)_inf (-b*q^2;q^3)_inf");
  auto j = candidate_to_json(best);
  CHECK(j["substitution"]["c"] == "a*b");
  CHECK(j["product_like"] == true);
}

TEST_CASE("no free colours") {
  auto found = search_relations(build_preset("distinct-mod4"), {"a", "b"}, 16, 2);
  REQUIRE(found.size() == 1);
  CHECK(found[0].product_like);
  CHECK(found[0].substitution.images.empty());
}

TEST_CASE("search limits") {
  CHECK_THROWS_AS(
      search_relations(build_preset("siladic-mod8"), {"a", "b"}, 16, 3),
      search_space_too_large);
  CHECK_THROWS_AS(
      search_relations(build_preset("schur-dilated-mod3"), {"z"}, 12, 2),
      invalid_argument);
}
