#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wwords/enumerate.hpp"
#include "wwords/errors.hpp"
#include "wwords/presets.hpp"
#include "wwords/systems.hpp"

using namespace wwords;

namespace {

  std::vector<std::string> labels(ColouredSystem const& sys) {
    std::vector<std::string> out;
    for (auto const& c : sys.colours) {
      out.push_back(c.label);
    }
    return out;
  }

  // Gap between two colours read off parts far from the small-part
  // exceptions; `upper_size` picks the row class where it matters.
  std::int64_t gap(ColouredSystem const& sys,
                   std::string const&    upper,
                   std::int64_t          upper_size,
                   std::string const&    lower) {
    auto lc = sys.colour_index(lower);
    for (std::int64_t s = 1; s < 20; ++s) {
      auto lp = ColouredPart{s, lc, false};
      if (sys.is_valid(lp)) {
        return sys.min_gap(sys.part(upper, upper_size), lp);
      }
    }
    throw std::logic_error("no part of colour " + lower);
  }

}  // namespace

TEST_CASE("preset shapes") {
  auto primc = build_preset("primc-weighted");
  CHECK(labels(primc) == std::vector<std::string>{"a", "b", "c", "d"});
  for (auto const& c : primc.colours) {
    CHECK(c.domain.smallest() == 1);
  }
  CHECK(gap(primc, "a", 5, "a") == 2);
  CHECK(gap(primc, "a", 5, "b") == 1);
  CHECK(gap(primc, "a", 5, "c") == 2);
  CHECK(gap(primc, "a", 5, "d") == 2);

  auto siladic = build_preset("siladic-weighted");
  CHECK(labels(siladic)
        == std::vector<std::string>{"a", "b", "ab", "a2", "b2"});
  auto a2 = siladic.colour_index("a2");
  CHECK_FALSE(siladic.is_valid({1, a2, false}));
  CHECK_FALSE(siladic.is_valid({4, a2, false}));
  CHECK(siladic.is_valid({3, a2, false}));
  CHECK_FALSE(siladic.is_valid({2, siladic.colour_index("b2"), false}));
  CHECK_FALSE(siladic.is_valid({1, siladic.colour_index("ab"), false}));
  CHECK(siladic.is_valid({1, siladic.colour_index("b"), false}));

  auto andrews = build_preset("andrews-overpartitions:2");
  CHECK(labels(andrews) == std::vector<std::string>{"u1", "u2", "u1u2"});
  CHECK(andrews.min_size == 0);
  CHECK(andrews.has_overlines());
  CHECK(andrews.is_valid(andrews.part("u1u2", 0, true)));
}

TEST_CASE("min_gap examples") {
  auto primc = build_preset("primc-weighted");
  CHECK(primc.min_gap(primc.part("c", 4), primc.part("d", 2)) == 2);

  auto siladic = build_preset("siladic-weighted");
  CHECK(siladic.min_gap(siladic.part("a2", 3), siladic.part("a", 1)) == 3);

  auto andrews = build_preset("andrews-overpartitions:2");
  CHECK(andrews.min_gap(andrews.part("u1", 3), andrews.part("u2", 1)) == 1);
  CHECK(andrews.min_gap(andrews.part("u2", 3), andrews.part("u1", 1)) == 0);
  CHECK(andrews.min_gap(andrews.part("u2", 3), andrews.part("u1", 1, true))
        == 1);
  CHECK(andrews.min_gap(andrews.part("u1", 3), andrews.part("u1u2", 1)) == 1);
}

TEST_CASE("siladic matrix rows by parity") {
  auto sys = build_preset("siladic-weighted");
  // a_odd row 2 2 1 2 2, a_even row 2 2 2 3 3
  std::vector<std::string> cols{"a", "b", "ab", "a2", "b2"};
  std::vector<std::int64_t> odd, even;
  for (auto const& c : cols) {
    odd.push_back(gap(sys, "a", 5, c));
    even.push_back(gap(sys, "a", 6, c));
  }
  CHECK(odd == std::vector<std::int64_t>{2, 2, 1, 2, 2});
  CHECK(even == std::vector<std::int64_t>{2, 2, 2, 3, 3});
  std::vector<std::int64_t> a2row, b2row;
  for (auto const& c : cols) {
    a2row.push_back(gap(sys, "a2", 5, c));
    b2row.push_back(gap(sys, "b2", 5, c));
  }
  CHECK(a2row == std::vector<std::int64_t>{3, 3, 3, 4, 4});
  CHECK(b2row == std::vector<std::int64_t>{2, 3, 2, 2, 4});
}

TEST_CASE("andrews_colour_data") {
  auto c5 = andrews_colour_data(3, 5);
  CHECK(c5.weight == Monomial{{"u1", 1}, {"u3", 1}});
  CHECK(c5.w == 2);
  CHECK(c5.v == 1);
  CHECK(c5.z == 3);
  auto c1 = andrews_colour_data(3, 1);
  CHECK(c1.weight == Monomial{{"u1", 1}});
  CHECK(c1.w == 1);
  CHECK(c1.v == 1);
  CHECK(c1.z == 1);
  CHECK(andrews_colour_data(3, 7).w == 3);
  CHECK(andrews_label(3, 6) == "u2u3");
  CHECK_THROWS_AS(andrews_colour_data(3, 8), invalid_argument);
  CHECK_THROWS_AS(andrews_colour_data(3, 0), invalid_argument);
}

TEST_CASE("part_rank") {
  auto siladic = build_preset("siladic-weighted");
  CHECK(part_rank(siladic, siladic.part("a2", 3)) == 6);
  CHECK(part_rank(siladic, siladic.part("a", 2)) == 5);
  CHECK(part_rank(siladic, siladic.part("b", 2)) == 7);

  auto schur = build_preset("schur-weighted");
  CHECK(schur.rank_at(schur.colour_index("ab"), 1) == 0);
  CHECK(part_rank(schur, schur.part("a", 1)) == 1);
  CHECK(part_rank(schur, schur.part("b", 1)) == 2);
  CHECK_THROWS_AS(part_rank(schur, schur.part("ab", 1)), invalid_argument);

  auto primc = build_preset("primc-weighted");
  for (std::int64_t k = 1; k <= 6; ++k) {
    CHECK(part_rank(primc, primc.part("d", k)) == 4 * (k - 1) + 3);
  }
}

TEST_CASE("siladic dilated sizes follow the natural order") {
  auto sys   = build_preset("siladic-dilated");
  auto parts = sys.parts_up_to(12);
  std::vector<std::int64_t> sizes;
  for (auto const& p : parts) {
    sizes.push_back(p.size);
  }
  // 0_ab and 2_b2 are not parts
  CHECK(sizes == std::vector<std::int64_t>{1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(sys.describe(parts[0]) == "1_a");
  CHECK(sys.describe(parts[4]) == "6_a2");
}

TEST_CASE("dilate_system") {
  auto primc = build_preset("primc-weighted");
  auto d2    = dilate_system(
      primc, DilationSpec{2, {{"a", -1}, {"b", 0}, {"c", 0}, {"d", 1}}});
  std::int64_t const B2[4][4]
      = {{4, 1, 3, 2}, {3, 0, 2, 1}, {1, 2, 0, 3}, {2, 3, 1, 4}};
  std::vector<std::string> const names{"a", "b", "c", "d"};
  auto const                     parts = d2.parts_up_to(12);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      CAPTURE(names[x]);
      CAPTURE(names[y]);
      auto ux = std::find_if(parts.rbegin(), parts.rend(),
                             [&](auto const& p) { return p.colour == x; });
      auto ly = std::find_if(parts.begin(), parts.end(),
                             [&](auto const& p) { return p.colour == y; });
      CHECK(d2.min_gap(*ux, *ly) == B2[x][y]);
    }
  }
  CHECK(format_gap_matrix(d2)
        == "   a b c d\na: 4 1 3 2\nb: 3 0 2 1\nc: 1 2 0 3\nd: 2 3 1 4\n");
  CHECK(enumerate_series(d2, 20)
        == enumerate_series(build_preset("primc-dilated"), 20));

  auto schur = build_preset("schur-weighted");
  auto ds    = dilate_system(
      schur, dilation_from_shifts(schur, 3, {{"a", -2}, {"b", -1}}));
  CHECK(ds.colours[schur.colour_index("ab")].size_of(1) == 0);
  CHECK(ds.colours[schur.colour_index("a")].size_of(1) == 1);
  CHECK(ds.colours[schur.colour_index("b")].size_of(1) == 2);
  // With c = ab the dilated system is Schur's: gaps of 3, 6 between
  // multiples of 3.
  auto abc = oracle::count_sequences(oracle::schur_text(), 30);
  oracle::Table merged;
  for (auto const& [key, c] : abc) {
    auto m = key.second;
    if (m.contains("c")) {
      m["a"] += m["c"];
      m["b"] += m["c"];
      m.erase("c");
    }
    oracle::add(merged, key.first, m, c);
  }
  CHECK(oracle::from_series(enumerate_series(ds, 30)) == merged);

  CHECK(enumerate_series(dilate_system(schur, DilationSpec{}), 15)
        == enumerate_series(schur, 15));
  CHECK(DilationSpec{}.is_identity());
  CHECK_THROWS_AS(dilate_system(schur, DilationSpec{3, {{"a", -4}}}),
                  invalid_dilation);
}

TEST_CASE("statistic_substitution") {
  auto siladic = build_preset("siladic-weighted");
  auto s = statistic_substitution(
      dilation_from_shifts(siladic, 4, {{"a", -3}, {"b", -1}}), siladic);
  CHECK(s.qpower == 4);
  CHECK(s.images.at(variable("a")).qshift == -3);
  CHECK(s.images.at(variable("b")).qshift == -1);

  auto primc = build_preset("primc-weighted");
  auto p = statistic_substitution(
      dilation_from_shifts(primc, 2, {{"a", -1}, {"d", 1}}), primc);
  CHECK(p.qpower == 2);
  CHECK(p.images.at(variable("a")).qshift == -1);
  CHECK(p.images.at(variable("d")).qshift == 1);
  CHECK((!p.images.contains(variable("c"))
         || p.images.at(variable("c")).qshift == 0));

  CHECK(statistic_substitution(DilationSpec{}, siladic).is_identity());
}

TEST_CASE("validation rejects inconsistent systems") {
  auto sys = build_preset("schur-weighted");
  auto& m  = std::get<GapMatrix>(sys.gap);
  // a part 1_b after 1_a would climb the order
  m.entries[sys.colour_index("a")][0][sys.colour_index("b")] = 0;
  CHECK_THROWS_AS(sys.validate(), rank_inconsistency);

  auto clash = build_preset("schur-weighted");
  clash.rank_offset[1] = clash.rank_offset[0];
  CHECK_THROWS_AS(clash.validate(), rank_inconsistency);

  auto shape = build_preset("primc-weighted");
  std::get<GapMatrix>(shape.gap).entries.pop_back();
  CHECK_THROWS_AS(shape.validate(), invalid_argument);

  CHECK_THROWS_AS(build_preset("no-such-system"), unknown_name);
  CHECK_THROWS_AS(build_preset("andrews-overpartitions"), invalid_argument);
}
