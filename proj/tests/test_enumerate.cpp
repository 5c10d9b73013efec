#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wwords/enumerate.hpp"
#include "wwords/errors.hpp"
#include "wwords/presets.hpp"

using namespace wwords;

namespace {

  std::vector<std::string> formatted(ColouredSystem const&            sys,
                                     std::vector<PartitionSeq> const& list) {
    std::vector<std::string> out;
    for (auto const& seq : list) {
      out.push_back(format_partition(sys, seq));
    }
    return out;
  }

}  // namespace

TEST_CASE("siladic-dilated pair validity") {
  auto sys = build_preset("siladic-dilated");
  auto at  = [&](std::int64_t size) { return sys.parts_of_size(size).at(0); };
  CHECK(is_valid_partition(sys, {at(9), at(4)}));
  auto bad = is_valid_partition(sys, {at(8), at(3)});
  CHECK_FALSE(bad);
  CHECK(bad.position == 0u);
  CHECK(is_valid_partition(sys, {}));
  CHECK(sys.parts_of_size(2).empty());
}

TEST_CASE("invalid parts and orders are reported") {
  auto sys = build_preset("schur-weighted");
  auto res = is_valid_partition(sys, {sys.part("ab", 1)});
  CHECK_FALSE(res);
  CHECK(res.position == 0u);
  auto rev = is_valid_partition(sys, {sys.part("a", 1), sys.part("b", 3)});
  CHECK_FALSE(rev);
}

TEST_CASE("schur-dilated-mod3 first terms") {
  auto f = enumerate_series(build_preset("schur-dilated-mod3"), 5);
  CHECK(f[0] == Polynomial(1));
  CHECK(f[1] == Polynomial(Monomial{{"a", 1}}));
  CHECK(f[2] == Polynomial(Monomial{{"b", 1}}));
  CHECK(f[3] == Polynomial(Monomial{{"c", 1}}));
  CHECK(f[4] == Polynomial(Monomial{{"a", 1}}));
  CHECK(f[5] == Polynomial(Monomial{{"a", 2}}) + Polynomial(Monomial{{"b", 1}}));
}

TEST_CASE("schur-weighted q^2 coefficient") {
  auto f = enumerate_series(build_preset("schur-weighted"), 4);
  CHECK(f[2]
        == Polynomial(Monomial{{"a", 1}}) + Polynomial(Monomial{{"b", 1}})
               + Polynomial(Monomial{{"a", 1}, {"b", 1}}));
}

TEST_CASE("constant term is one") {
  for (auto name : {"schur-weighted", "siladic-dilated", "primc-weighted",
                    "distinct-odd"}) {
    CAPTURE(name);
    CHECK(enumerate_series(build_preset(name), 3)[0] == Polynomial(1));
  }
  auto andrews = enumerate_series(build_preset("andrews-overpartitions:1"), 0, 2);
  // empty, 0, overlined 0, 0+0
  CHECK(andrews[0]
        == Polynomial(1) + Polynomial(Monomial{{"u1", 1}, {"t", 1}})
               + Polynomial(Monomial{{"u1", 1}}));
}

TEST_CASE("list_partitions") {
  auto primc = build_preset("primc-weighted");
  CHECK(formatted(primc, list_partitions(primc, 1))
        == std::vector<std::string>{"1_a", "1_b", "1_c", "1_d"});
  bool has_bb = false;
  for (auto const& s : formatted(primc, list_partitions(primc, 2))) {
    has_bb |= s == "1_b + 1_b";
  }
  CHECK(has_bb);

  auto odd = build_preset("distinct-odd");
  auto l9  = list_partitions(odd, 9);
  REQUIRE(l9.size() == 2);
  auto sizes = [](PartitionSeq const& seq) {
    std::vector<std::int64_t> out;
    for (auto const& p : seq) {
      out.push_back(p.size);
    }
    return out;
  };
  CHECK(sizes(l9[0]) == std::vector<std::int64_t>{5, 3, 1});
  CHECK(sizes(l9[1]) == std::vector<std::int64_t>{9});
}

TEST_CASE("listing agrees with the series") {
  auto sys = build_preset("siladic-weighted");
  auto f   = enumerate_series(sys, 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    Polynomial sum;
    for (auto const& seq : list_partitions(sys, n)) {
      CHECK(is_valid_partition(sys, seq));
      sum += Polynomial(partition_weight(sys, seq));
    }
    CHECK(sum == f[n]);
  }
}

TEST_CASE("node limit") {
  CHECK_THROWS_AS(enumerate_series(build_preset("primc-weighted"), 30,
                                   std::nullopt, 1000),
                  safety_bound_exceeded);
}

TEST_CASE("schur dilated against the stated rule") {
  auto lib = oracle::from_series(
      enumerate_series(build_preset("schur-dilated-mod3"), 30));
  CHECK(lib == oracle::count_sequences(oracle::schur_text(), 30));
}

TEST_CASE("schur weighted against the stated rule") {
  auto lib
      = oracle::from_series(enumerate_series(build_preset("schur-weighted"), 25));
  CHECK(lib == oracle::count_sequences(oracle::schur_weighted_text(), 25));
}

TEST_CASE("siladic dilated against the stated rule") {
  auto lib = oracle::from_series(
      enumerate_series(build_preset("siladic-dilated"), 40));
  CHECK(lib == oracle::count_sequences(oracle::siladic_text(), 40));
}

TEST_CASE("schur companion against the stated rule") {
  auto text = oracle::count_sequences(oracle::schur_companion_text(), 40);
  CHECK(oracle::from_series(enumerate_series(build_preset("schur-companion"), 40))
        == text);
  CHECK(oracle::from_series(
            enumerate_series(build_preset("schur-companion-text"), 40))
        == text);
}

TEST_CASE("primc against matrix B and B2") {
  CHECK(oracle::from_series(enumerate_series(build_preset("primc-weighted"), 14))
        == oracle::count_sequences(oracle::primc_text(), 14));
  CHECK(oracle::from_series(enumerate_series(build_preset("primc-dilated"), 30))
        == oracle::count_sequences(oracle::primc_dilated_text(), 30));
}

TEST_CASE("andrews overpartitions against the stated rule") {
  for (int r = 1; r <= 2; ++r) {
    CAPTURE(r);
    auto lib = oracle::from_series(enumerate_series(
        build_preset("andrews-overpartitions", static_cast<unsigned>(r)), 10, 6));
    CHECK(lib
          == oracle::count_sequences(oracle::andrews_text(r, 10), 10, 6));
  }
}

TEST_CASE("primary overpartitions by multiplicities") {
  for (int r = 1; r <= 3; ++r) {
    CAPTURE(r);
    auto lib = oracle::from_series(enumerate_series(
        build_preset("primary-overpartitions", static_cast<unsigned>(r)), 10, 6));
    CHECK(lib == oracle::primary_overpartitions(r, 10, 6));
  }
}

TEST_CASE("distinct odd parts") {
  auto lib = oracle::counts(
      oracle::from_series(enumerate_series(build_preset("distinct-odd"), 40)),
      40);
  CHECK(lib == oracle::distinct_odd_counts(40));
  CHECK(oracle::distinct_odd_counts(60)
        == oracle::distinct_odd_counts_by_subsets(60));
}
