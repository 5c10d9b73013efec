#include <set>
#include <string>

#include "doctest.h"
#include "wwords/equations.hpp"
#include "wwords/errors.hpp"
#include "wwords/presets.hpp"

using namespace wwords;

TEST_CASE("registry contents") {
  std::multiset<std::string> kinds;
  for (auto const& e : builtin_equations()) {
    auto dash = e.name.find('-', e.name.find('-') + 1);
    kinds.insert(e.name.substr(0, dash));
  }
  CHECK(kinds.count("schur-rec") == 3);
  CHECK(kinds.count("schur-init") == 2);
  CHECK(kinds.count("schur-functional") == 1);
  CHECK(kinds.count("siladic-rec") == 1);
  CHECK(kinds.count("siladic-proof") == 4);
  CHECK(kinds.count("primc-eg") == 1);
  CHECK(kinds.count("primc-qdiff") == 1);
  CHECK(builtin_equations().size() == 13);

  auto const& qdiff = builtin_equation("primc-qdiff");
  CHECK(qdiff.k_min == 3);
  CHECK(qdiff.k_max == 15);
  CHECK_THROWS_AS(builtin_equation("nope"), unknown_name);
}

TEST_CASE("every builtin equation holds") {
  for (auto const& e : builtin_equations()) {
    CAPTURE(e.name);
    auto res = check_equation(e, 24);
    CHECK(res.holds);
    CHECK_FALSE(res.mismatch);
  }
}

TEST_CASE("the q-difference equation is singular at k = 2") {
  auto const& qdiff = builtin_equation("primc-qdiff");
  CHECK_THROWS_AS(check_equation(qdiff, 20, 2, 4), singular_coefficient);
}

TEST_CASE("a wrong relation is caught") {
  auto e = builtin_equation("schur-rec-a");
  // G[k_a] = G[k_ab] + a q^{k+1} G[(k-1)_a] is false
  auto& term = e.relations.at(0).rhs.at(1);
  term.coeff.num.at(0).at(0).q.beta += 1;
  auto res = check_equation(e, 20);
  CHECK_FALSE(res.holds);
  REQUIRE(res.failing_k);
  REQUIRE(res.mismatch);
}

TEST_CASE("relations evaluated against another system") {
  // The Schur recurrences are specific to the order ab < a < b; on the
  // Siladic weighted system the first one fails.
  auto res = check_equation(builtin_equation("schur-rec-a"),
                            build_preset("siladic-weighted"), 12);
  CHECK_FALSE(res.holds);
}

TEST_CASE("coefficient expansion") {
  Coefficient c;
  c.num = {{QTerm{1, {}, {0, 0}}, QTerm{1, Monomial{{"a", 1}}, {1, 0}}}};
  c.den = {QBinomial{{}, {1, 0}}};
  // (1 + a q^2) / (1 - q^2) at k = 2
  auto f = c.expand(2, 6, std::nullopt);
  CHECK(f[0] == Polynomial(1));
  CHECK(f[2] == Polynomial(1) + Polynomial(Monomial{{"a", 1}}));
  CHECK(f[4] == Polynomial(1) + Polynomial(Monomial{{"a", 1}}));
  CHECK(f[1].is_zero());
  CHECK_THROWS_AS((void)c.expand(0, 6, std::nullopt), singular_coefficient);
}
