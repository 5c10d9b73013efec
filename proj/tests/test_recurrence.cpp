#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wwords/enumerate.hpp"
#include "wwords/presets.hpp"
#include "wwords/recurrence.hpp"

using namespace wwords;

TEST_CASE("both recurrence directions agree with enumeration") {
  struct Row {
    char const* name;
    std::size_t qmax;
    degree_cap  degmax;
  };
  std::vector<Row> const rows{
      {"schur-weighted", 18, {}},         {"schur-dilated-mod3", 18, {}},
      {"siladic-weighted", 18, {}},       {"siladic-weighted-no1b", 18, {}},
      {"siladic-dilated", 18, {}},        {"siladic-mod8", 18, {}},
      {"schur-companion", 18, {}},        {"schur-companion-text", 18, {}},
      {"primc-weighted", 12, {}},         {"primc-dilated", 18, {}},
      {"andrews-overpartitions:1", 8, 5}, {"andrews-overpartitions:2", 6, 5},
      {"primary-overpartitions:2", 8, 5}, {"distinct-odd", 18, {}},
      {"distinct-mod3", 18, {}},          {"distinct-mod4", 18, {}}};
  for (auto const& row : rows) {
    CAPTURE(row.name);
    auto sys = build_preset(row.name);
    auto ref = enumerate_series(sys, row.qmax, row.degmax);
    CHECK(dp_series(sys, row.qmax, row.degmax,
                    {dp_direction::largest, std::nullopt})
          == ref);
    CHECK(dp_series(sys, row.qmax, row.degmax,
                    {dp_direction::smallest, std::nullopt})
          == ref);
  }
}

TEST_CASE("G and E by largest part") {
  auto sys = build_preset("schur-weighted");
  RecurrenceState st(sys, 14);
  auto            text = oracle::schur_weighted_text();
  auto const      a    = sys.colour_index("a");
  auto const      b    = sys.colour_index("b");
  auto const      ab   = sys.colour_index("ab");
  // The oracle colours are ab, a, b in order with the same sizes.
  std::map<std::size_t, int> colour_of{{ab, 0}, {a, 1}, {b, 2}};
  for (std::size_t c : {a, b, ab}) {
    for (std::int64_t k = 0; k <= 5; ++k) {
      CAPTURE(sys.colours[c].label);
      CAPTURE(k);
      oracle::Rules capped = text;
      std::erase_if(capped.parts, [&](oracle::Part const& p) {
        return p.size > k || (p.size == k && p.colour > colour_of[c]);
      });
      CHECK(oracle::from_series(st.G(c, k))
            == oracle::count_sequences(capped, 14));
    }
  }
  CHECK(st.G(a, -1).is_zero());
  CHECK(st.E(ab, 1).is_zero());
  CHECK(st.G(b, 14) == st.total());
  CHECK(st.E(a, 3) == st.G(a, 3) - st.G(ab, 3));
}

TEST_CASE("dilated series from the undilated rules") {
  auto weighted = build_preset("siladic-weighted");
  auto spec     = dilation_from_shifts(weighted, 4, {{"a", -3}, {"b", -1}});
  auto image    = statistic_substitution(spec, weighted);
  auto direct   = dp_series(weighted, 40, std::nullopt,
                            {dp_direction::automatic, image});
  CHECK(direct == enumerate_series(build_preset("siladic-dilated"), 40));
}

TEST_CASE("substituting the weighted series gives the companion") {
  auto weighted = build_preset("siladic-weighted");
  auto spec     = dilation_from_shifts(weighted, 3, {{"a", -2}, {"b", -1}});
  auto s        = statistic_substitution(spec, weighted);
  // A companion partition of n <= 24 has at most four parts of weight
  // degree <= 2, so degree 10 is enough; 3*15 - 2*10 >= 24.
  auto f = enumerate_series(weighted, 15, 10);
  CHECK(substitute(f, s, 24)
        == enumerate_series(build_preset("schur-companion"), 24, 10));
}
