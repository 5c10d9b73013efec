#include "wwords/presets.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "wwords/errors.hpp"

namespace wwords {

  namespace {
    using gap_rows = std::vector<std::vector<std::int64_t>>;

    ColourDef colour(std::string label, Monomial weight) {
      ColourDef c;
      c.label  = std::move(label);
      c.weight = std::move(weight);
      return c;
    }

    // A colour living on the residue class `offset` mod `scale`, starting
    // at base index min_index.
    ColourDef residue_colour(std::string  label,
                             Monomial     weight,
                             std::int64_t scale,
                             std::int64_t offset,
                             std::int64_t min_index) {
      auto c             = colour(std::move(label), std::move(weight));
      c.scale            = scale;
      c.offset           = offset;
      c.domain.min_index = min_index;
      return c;
    }

    GapMatrix single_row(gap_rows const& rows) {
      GapMatrix m;
      m.period = 1;
      for (auto const& row : rows) {
        m.entries.push_back({row});
      }
      return m;
    }

    ColouredSystem finish(ColouredSystem sys) {
      sys.validate();
      return sys;
    }

    ColouredSystem schur_weighted() {
      ColouredSystem sys;
      sys.name = "schur-weighted";
      sys.colours
          = {colour("ab", {{"a", 1}, {"b", 1}}), colour("a", {{"a", 1}}),
             colour("b", {{"b", 1}})};
      sys.colours[0].domain.forbidden = {1};
      sys.rank_mult                   = 3;
      sys.rank_offset                 = {-3, -2, -1};
      sys.gap = single_row({{2, 2, 2}, {1, 1, 2}, {1, 1, 1}});
      return finish(sys);
    }

    ColouredSystem schur_dilated_mod3() {
      ColouredSystem sys;
      sys.name    = "schur-dilated-mod3";
      sys.colours = {residue_colour("a", {{"a", 1}}, 3, 1, 0),
                     residue_colour("b", {{"b", 1}}, 3, 2, 0),
                     residue_colour("c", {{"c", 1}}, 3, 0, 1)};
      sys.rank_mult   = 3;
      sys.rank_offset = {1, 2, 0};
      // Differences at least 3, and at least 6 between multiples of 3.
      std::int64_t const res[] = {1, 2, 0};
      gap_rows           rows(3, std::vector<std::int64_t>(3));
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          std::int64_t d = 3;
          while ((d - (res[x] - res[y])) % 3 != 0) {
            ++d;
          }
          rows[x][y] = (x == 2 && y == 2) ? 6 : d;
        }
      }
      sys.gap = single_row(rows);
      return finish(sys);
    }

    ColouredSystem siladic_weighted(bool forbid_1b) {
      ColouredSystem sys;
      sys.name    = forbid_1b ? "siladic-weighted-no1b" : "siladic-weighted";
      sys.colours = {colour("a", {{"a", 1}}),
                     colour("b", {{"b", 1}}),
                     colour("ab", {{"a", 1}, {"b", 1}}),
                     colour("a2", {{"a", 2}}),
                     colour("b2", {{"b", 2}})};
      for (auto c : {3, 4}) {
        sys.colours[c].domain.modulus  = 2;
        sys.colours[c].domain.residues = {1};
      }
      sys.colours[2].domain.forbidden = {1};
      sys.colours[3].domain.forbidden = {1};
      sys.colours[4].domain.forbidden = {1};
      if (forbid_1b) {
        sys.colours[1].domain.forbidden = {1};
      }
      sys.rank_mult   = 4;
      sys.rank_offset = {-3, -1, -4, -6, -2};
      GapMatrix m;
      m.period = 2;
      // entries[colour][k mod 2]
      m.entries = {
          {{2, 2, 2, 3, 3}, {2, 2, 1, 2, 2}},  // a
          {{1, 2, 1, 1, 3}, {1, 2, 1, 2, 2}},  // b
          {{2, 2, 2, 3, 3}, {2, 3, 2, 2, 3}},  // ab
          {{3, 3, 3, 4, 4}, {3, 3, 3, 4, 4}},  // a2
          {{2, 3, 2, 2, 4}, {2, 3, 2, 2, 4}},  // b2
      };
      sys.gap = m;
      // The weighted order must start 1_ab < 1_a < 1_b2 < 1_b < 2_ab < 2_a <
      // 3_a2 < 2_b < 3_ab < 3_a < 3_b2 < 3_b.
      std::pair<std::size_t, std::int64_t> const segment[]
          = {{2, 1}, {0, 1}, {4, 1}, {1, 1}, {2, 2}, {0, 2},
             {3, 3}, {1, 2}, {2, 3}, {0, 3}, {4, 3}, {1, 3}};
      for (std::size_t i = 1; i < std::size(segment); ++i) {
        auto [c0, k0] = segment[i - 1];
        auto [c1, k1] = segment[i];
        if (*sys.rank_at(c0, k0) >= *sys.rank_at(c1, k1)) {
          throw rank_inconsistency("siladic order segment out of order");
        }
      }
      sys.conventions["small parts"]
          = forbid_1b ? "1_ab, 1_b, 1_a2, 1_b2 excluded"
                      : "1_ab, 1_a2, 1_b2 excluded";
      return finish(sys);
    }

    ColouredSystem siladic_mod8() {
      ColouredSystem sys;
      sys.name = "siladic-mod8";
      for (std::int64_t r = 0; r < 8; ++r) {
        std::string v = r == 1 ? "a" : r == 3 ? "b" : "x" + std::to_string(r);
        sys.colours.push_back(
            residue_colour("r" + std::to_string(r), Monomial::of(v), 8, r,
                           r == 0 ? 1 : 0));
        sys.rank_offset.push_back(r);
      }
      sys.colours[2].domain.forbidden = {0};
      sys.rank_mult                   = 8;
      auto allowed = [](std::int64_t d, std::int64_t upper) {
        switch (d) {
          case 5:
            return upper == 1 || upper == 4;
          case 6:
            return upper % 2 == 1;
          case 7:
            return upper != 2 && upper != 5;
          case 8:
            return upper != 2 && upper != 6;
          default:
            return d >= 9;
        }
      };
      gap_rows rows(8, std::vector<std::int64_t>(8));
      for (std::int64_t x = 0; x < 8; ++x) {
        for (std::int64_t y = 0; y < 8; ++y) {
          std::int64_t d = 5;
          while (((d - (x - y)) % 8 + 8) % 8 != 0 || !allowed(d, x)) {
            ++d;
          }
          rows[x][y] = d;
        }
      }
      sys.gap = single_row(rows);
      return finish(sys);
    }

    ColouredSystem schur_companion() {
      auto base = siladic_weighted(false);
      auto sys  = dilate_system(
          base, dilation_from_shifts(base, 3, {{"a", -2}, {"b", -1}}));
      sys.name = "schur-companion";
      return sys;
    }

    ColouredSystem schur_companion_text() {
      ColouredSystem sys;
      sys.name = "schur-companion-text";
      Monomial const ab{{"a", 1}, {"b", 1}};
      Monomial const a{{"a", 1}}, b{{"b", 1}};
      Monomial const by_class[] = {ab, a, b, ab, a, b};
      for (std::int64_t r = 0; r < 6; ++r) {
        sys.colours.push_back(residue_colour(
            "o" + std::to_string(r), by_class[r], 6, r, r == 0 ? 1 : 0));
        sys.rank_offset.push_back(2 * r);
      }
      sys.colours.push_back(residue_colour("p1", b.pow(2), 6, 1, 1));
      sys.rank_offset.push_back(3);
      sys.colours.push_back(residue_colour("p5", a.pow(2), 6, 5, 0));
      sys.rank_offset.push_back(11);
      sys.rank_mult                  = 12;
      std::int64_t const residue[]   = {0, 1, 2, 3, 4, 5, 1, 5};
      auto               lower_bound = [&](std::size_t x) -> std::int64_t {
        if (x >= 6) {
          return 6;
        }
        return (residue[x] == 0 || residue[x] == 4) ? 5 : 4;
      };
      gap_rows rows(8, std::vector<std::int64_t>(8));
      for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
          auto d = lower_bound(x) + (y >= 6 ? 1 : 0);
          while (((d - (residue[x] - residue[y])) % 6 + 6) % 6 != 0) {
            ++d;
          }
          rows[x][y] = d;
        }
      }
      sys.gap = single_row(rows);
      return finish(sys);
    }

    ColouredSystem primc_weighted() {
      ColouredSystem sys;
      sys.name    = "primc-weighted";
      sys.colours = {colour("a", {{"a", 1}}), colour("b", {{"b", 1}}),
                     colour("c", {{"c", 1}}), colour("d", {{"d", 1}})};
      sys.colours[1].erased = true;
      sys.rank_mult         = 4;
      sys.rank_offset       = {-4, -3, -2, -1};
      sys.gap               = single_row(
          {{2, 1, 2, 2}, {1, 0, 1, 1}, {0, 1, 0, 2}, {0, 1, 0, 2}});
      sys.conventions["b"] = "set to 1";
      return finish(sys);
    }

    ColouredSystem primc_dilated() {
      auto base = primc_weighted();
      auto sys  = dilate_system(
          base, dilation_from_shifts(base, 2, {{"a", -1}, {"d", 1}}));
      sys.name = "primc-dilated";
      return sys;
    }

    ColouredSystem andrews_overpartitions(unsigned r) {
      ColouredSystem sys;
      sys.name     = "andrews-overpartitions:" + std::to_string(r);
      sys.min_size = 0;
      auto n       = (std::uint64_t(1) << r) - 1;
      for (std::uint64_t i = 1; i <= n; ++i) {
        auto c = colour(andrews_label(r, i), andrews_colour_data(r, i).weight);
        c.domain.min_index = 0;
        c.overline_allowed = true;
        sys.colours.push_back(c);
        sys.rank_offset.push_back(static_cast<std::int64_t>(i) - 1);
      }
      sys.rank_mult       = static_cast<std::int64_t>(n);
      sys.gap             = AndrewsGap{r};
      sys.overline_marker = variable("t");
      sys.conventions["size 0"] = "admitted, plain and overlined";
      sys.validate(r >= 3 ? 12 : 20);
      return sys;
    }

    ColouredSystem primary_overpartitions(unsigned r) {
      ColouredSystem sys;
      sys.name     = "primary-overpartitions:" + std::to_string(r);
      sys.min_size = 0;
      for (unsigned i = 1; i <= r; ++i) {
        auto c = colour("u" + std::to_string(i),
                        Monomial::of("u" + std::to_string(i)));
        c.domain.min_index = 0;
        c.overline_allowed = true;
        sys.colours.push_back(c);
        sys.rank_offset.push_back(i - 1);
      }
      sys.rank_mult       = r;
      sys.gap             = OverpartitionGap{};
      sys.overline_marker = variable("t");
      sys.conventions["size 0"] = "admitted, plain and overlined";
      sys.validate(20);
      return sys;
    }

    // Distinct parts from the given residue classes, one colour per class.
    ColouredSystem distinct_classes(
        std::string                                             name,
        std::int64_t                                            modulus,
        std::vector<std::pair<std::int64_t, Monomial>> const& classes) {
      ColouredSystem sys;
      sys.name = std::move(name);
      for (auto const& [r, w] : classes) {
        sys.colours.push_back(residue_colour(
            w.is_one() ? "p" + std::to_string(r) : w.to_string(), w, modulus,
            r, 0));
        sys.rank_offset.push_back(r);
      }
      sys.rank_mult = modulus;
      gap_rows rows(classes.size(), std::vector<std::int64_t>(classes.size()));
      for (std::size_t x = 0; x < classes.size(); ++x) {
        for (std::size_t y = 0; y < classes.size(); ++y) {
          auto d = classes[x].first - classes[y].first;
          rows[x][y] = d > 0 ? d : d + modulus;
        }
      }
      sys.gap = single_row(rows);
      return finish(sys);
    }

    unsigned require_r(std::string_view name, std::optional<unsigned> r) {
      if (!r) {
        throw invalid_argument("preset " + std::string(name)
                               + " needs a parameter r (name:r)");
      }
      if (*r == 0 || *r > 8) {
        throw invalid_argument("preset " + std::string(name)
                               + ": r must be in 1..8");
      }
      return *r;
    }

    using builder = std::function<ColouredSystem(std::optional<unsigned>)>;

    std::map<std::string, builder, std::less<>> const& builders() {
      static std::map<std::string, builder, std::less<>> const table = {
          {"schur-weighted", [](auto) { return schur_weighted(); }},
          {"schur-dilated-mod3", [](auto) { return schur_dilated_mod3(); }},
          {"siladic-weighted", [](auto) { return siladic_weighted(false); }},
          {"siladic-weighted-no1b",
           [](auto) { return siladic_weighted(true); }},
          {"siladic-dilated",
           [](auto) {
             auto base = siladic_weighted(false);
             auto sys  = dilate_system(
                 base, dilation_from_shifts(base, 4, {{"a", -3}, {"b", -1}}));
             sys.name = "siladic-dilated";
             return sys;
           }},
          {"siladic-mod8", [](auto) { return siladic_mod8(); }},
          {"schur-companion", [](auto) { return schur_companion(); }},
          {"schur-companion-text",
           [](auto) { return schur_companion_text(); }},
          {"primc-weighted", [](auto) { return primc_weighted(); }},
          {"primc-dilated", [](auto) { return primc_dilated(); }},
          {"andrews-overpartitions",
           [](auto r) {
             return andrews_overpartitions(
                 require_r("andrews-overpartitions", r));
           }},
          {"primary-overpartitions",
           [](auto r) {
             return primary_overpartitions(
                 require_r("primary-overpartitions", r));
           }},
          {"distinct-odd",
           [](auto) {
             return distinct_classes("distinct-odd", 2, {{1, Monomial()}});
           }},
          {"distinct-mod3",
           [](auto) {
             return distinct_classes("distinct-mod3", 3,
                                     {{1, Monomial::of("a")},
                                      {2, Monomial::of("b")}});
           }},
          {"distinct-mod4",
           [](auto) {
             return distinct_classes("distinct-mod4", 4,
                                     {{1, Monomial::of("a")},
                                      {3, Monomial::of("b")}});
           }},
      };
      return table;
    }
  }  // namespace

  std::vector<PresetInfo> const& preset_list() {
    static std::vector<PresetInfo> const list = {
        {"schur-weighted", "colours ab < a < b, no part 1_ab", false},
        {"schur-dilated-mod3",
         "parts 1, 2, 0 mod 3 coloured a, b, c; gaps >= 3, >= 6 between "
         "multiples of 3",
         false},
        {"siladic-weighted",
         "colours a, b, ab, a2, b2 with the period-2 matrix; no 1_ab, 1_a2, "
         "1_b2",
         false},
        {"siladic-weighted-no1b", "siladic-weighted without 1_b either", false},
        {"siladic-dilated", "siladic-weighted under q->q^4, a->aq^-3, b->bq^-1",
         false},
        {"siladic-mod8",
         "one colour per class mod 8 (a for 1, b for 3), Siladic difference "
         "conditions",
         false},
        {"schur-companion",
         "siladic-weighted under q->q^3, a->aq^-2, b->bq^-1", false},
        {"schur-companion-text",
         "ordinary and primed parts mod 6 with the companion gap rule", false},
        {"primc-weighted", "colours a < b < c < d with matrix B, b = 1",
         false},
        {"primc-dilated", "primc-weighted under q->q^2, a->aq^-1, d->dq",
         false},
        {"andrews-overpartitions",
         "overpartitions in 2^r-1 colours with the Andrews difference "
         "conditions",
         true},
        {"primary-overpartitions", "overpartitions in r colours", true},
        {"distinct-odd", "distinct odd parts", false},
        {"distinct-mod3", "distinct parts 1 (a) and 2 (b) mod 3", false},
        {"distinct-mod4", "distinct parts 1 (a) and 3 (b) mod 4", false},
    };
    return list;
  }

  ColouredSystem build_preset(std::string_view        name,
                              std::optional<unsigned> r) {
    auto colon = name.find(':');
    if (colon != std::string_view::npos) {
      auto     digits = name.substr(colon + 1);
      unsigned value  = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw invalid_argument("bad preset parameter in \"" + std::string(name)
                               + "\"");
      }
      if (r && *r != value) {
        throw invalid_argument("conflicting values of r for preset "
                               + std::string(name));
      }
      r    = value;
      name = name.substr(0, colon);
    }
    auto const& table = builders();
    auto        it    = table.find(name);
    if (it == table.end()) {
      std::string known;
      for (auto const& p : preset_list()) {
        known += (known.empty() ? "" : ", ") + p.name;
      }
      throw unknown_name("unknown preset \"" + std::string(name)
                         + "\"; known presets: " + known);
    }
    auto info = std::find_if(preset_list().begin(),
                             preset_list().end(),
                             [&](auto const& p) { return p.name == name; });
    if (r && !info->takes_r) {
      throw invalid_argument("preset " + std::string(name)
                             + " takes no parameter");
    }
    return it->second(r);
  }

  std::vector<NamedProduct> const& product_list() {
    static std::vector<NamedProduct> const list = [] {
      Monomial const a = Monomial::of("a"), b = Monomial::of("b"),
                     c = Monomial::of("c"), d = Monomial::of("d"), one;
      auto two         = [](ProductFactor x, ProductFactor y) {
        return ProductSpec{{x, y}};
      };
      std::vector<NamedProduct> v;
      v.push_back({"distinct-ab", "(-aq;q)(-bq;q)",
                   two(pochhammer(-1, a, 1, 1), pochhammer(-1, b, 1, 1))});
      v.push_back({"schur-mod3", "(-aq;q^3)(-bq^2;q^3)",
                   two(pochhammer(-1, a, 1, 3), pochhammer(-1, b, 2, 3))});
      v.push_back({"siladic-mod4", "(-aq;q^4)(-bq^3;q^4)",
                   two(pochhammer(-1, a, 1, 4), pochhammer(-1, b, 3, 4))});
      v.push_back({"distinct-odd", "(-q;q^2)",
                   ProductSpec{{pochhammer(-1, one, 1, 2)}}});
      v.push_back({"primc", "(-aq;q^2)(-dq;q^2)/((q;q)(cq;q^2))",
                   ProductSpec{{pochhammer(-1, a, 1, 2),
                                pochhammer(-1, d, 1, 2),
                                pochhammer(1, one, 1, 1, -1),
                                pochhammer(1, c, 1, 2, -1)}}});
      v.push_back({"primc-dilated",
                   "(-aq;q^4)(-dq^3;q^4)/((q^2;q^2)(cq^2;q^4))",
                   ProductSpec{{pochhammer(-1, a, 1, 4),
                                pochhammer(-1, d, 3, 4),
                                pochhammer(1, one, 2, 2, -1),
                                pochhammer(1, c, 2, 4, -1)}}});
      v.push_back({"partitions", "1/(q;q)",
                   ProductSpec{{pochhammer(1, one, 1, 1, -1)}}});
      return v;
    }();
    return list;
  }

  ProductSpec const& named_product(std::string_view name) {
    for (auto const& p : product_list()) {
      if (p.name == name) {
        return p.spec;
      }
    }
    throw unknown_name("unknown product \"" + std::string(name) + "\"");
  }

}  // namespace wwords
