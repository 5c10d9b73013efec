#include "wwords/verify.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <random>
#include <sstream>

#include "wwords/errors.hpp"
#include "wwords/presets.hpp"
#include "wwords/recurrence.hpp"

namespace wwords {

  std::string engine_name(engine e) {
    switch (e) {
      case engine::enumeration:
        return "enum";
      case engine::recurrence:
        return "recurrence";
      case engine::product:
        return "product";
      case engine::dilation:
        return "dilation";
    }
    return "?";
  }

  engine parse_engine(std::string_view name) {
    for (auto e : {engine::enumeration, engine::recurrence, engine::product,
                   engine::dilation}) {
      if (name == engine_name(e)) {
        return e;
      }
    }
    throw invalid_argument("unknown engine \"" + std::string(name)
                           + "\" (expected enum, recurrence, product or "
                             "dilation)");
  }

  std::vector<engine> parse_engines(std::string_view list) {
    std::vector<engine> out;
    while (!list.empty()) {
      auto comma = list.find(',');
      auto item  = list.substr(0, comma);
      if (!item.empty()) {
        auto e = parse_engine(item);
        if (std::find(out.begin(), out.end(), e) == out.end()) {
          out.push_back(e);
        }
      }
      if (comma == std::string_view::npos) {
        break;
      }
      list.remove_prefix(comma + 1);
    }
    return out;
  }

  std::vector<engine> IdentityCase::applicable_engines() const {
    std::vector<engine> out = {engine::enumeration, engine::recurrence};
    if (product) {
      out.push_back(engine::product);
    }
    if (dilation) {
      out.push_back(engine::dilation);
    }
    return out;
  }

  namespace {
    SubstitutionMap to_one(std::vector<std::string> const& vars) {
      SubstitutionMap s;
      for (auto const& v : vars) {
        s.images[variable(v)] = VarImage{Monomial(), 0};
      }
      return s;
    }

    DilationLink link(std::string_view                           weighted,
                      std::int64_t                               modulus,
                      std::map<std::string, std::int64_t> const& shifts) {
      auto sys  = build_preset(weighted);
      auto spec = dilation_from_shifts(sys, modulus, shifts);
      return {std::move(sys), std::move(spec)};
    }

    std::int64_t count_sizes(PartitionSeq const&                     seq,
                             std::function<bool(std::int64_t)> const& pred) {
      return std::count_if(seq.begin(), seq.end(),
                           [&](auto const& p) { return pred(p.size); });
    }

    Monomial ab_power(std::int64_t u, std::int64_t v) {
      Monomial m;
      if (u > 0) {
        m *= Monomial::of("a", static_cast<Monomial::exponent_type>(u));
      }
      if (v > 0) {
        m *= Monomial::of("b", static_cast<Monomial::exponent_type>(v));
      }
      return m;
    }

    // The classical Siladic conditions on plain integer parts.
    std::optional<std::string> siladic_conditions(ColouredSystem const&,
                                                  PartitionSeq const& seq) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        auto s = seq[i].size;
        if (s <= 0 || s == 2) {
          return "part " + std::to_string(s) + " is not allowed";
        }
        if (i + 1 == seq.size()) {
          break;
        }
        auto d = s - seq[i + 1].size;
        auto r = s % 8;
        bool ok = true;
        switch (d) {
          case 5:
            ok = r == 1 || r == 4;
            break;
          case 6:
            ok = r % 2 == 1;
            break;
          case 7:
            ok = r != 2 && r != 5;
            break;
          case 8:
            ok = r != 2 && r != 6;
            break;
          default:
            ok = d >= 9;
        }
        if (!ok) {
          return "parts " + std::to_string(s) + " and "
                 + std::to_string(seq[i + 1].size)
                 + " break the difference conditions";
        }
      }
      return std::nullopt;
    }

    Monomial siladic_statistic(ColouredSystem const&, PartitionSeq const& seq) {
      auto u = count_sizes(seq, [](auto s) { return s % 4 == 0 || s % 4 == 1; })
               + 2 * count_sizes(seq, [](auto s) { return s % 8 == 6; });
      auto v = count_sizes(seq, [](auto s) { return s % 4 == 0 || s % 4 == 3; })
               + 2 * count_sizes(seq, [](auto s) { return s % 8 == 2; });
      return ab_power(u, v);
    }

    // Primed parts of the companion are the colours a2 and b2.
    bool primed(ColouredSystem const& sys, ColouredPart const& p) {
      auto const& label = sys.colours[p.colour].label;
      return label == "a2" || label == "b2";
    }

    Monomial companion_statistic(ColouredSystem const& sys,
                                 PartitionSeq const&   seq) {
      std::int64_t u = 0, v = 0;
      for (auto const& p : seq) {
        auto s = p.size;
        if (primed(sys, p)) {
          u += s % 6 == 5 ? 2 : 0;
          v += s % 6 == 1 ? 2 : 0;
        } else {
          u += (s % 3 == 0 || s % 3 == 1) ? 1 : 0;
          v += (s % 3 == 0 || s % 3 == 2) ? 1 : 0;
        }
      }
      return ab_power(u, v);
    }

    std::optional<std::string> companion_conditions(ColouredSystem const& sys,
                                                    PartitionSeq const& seq) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        auto s     = seq[i].size;
        bool prime = primed(sys, seq[i]);
        if (s <= 0) {
          return "non-positive part";
        }
        if (prime && s % 6 != 1 && s % 6 != 5) {
          return "primed part " + std::to_string(s) + " is not +-1 mod 6";
        }
        if (prime && s == 1) {
          return "1' is a part";
        }
        if (i + 1 == seq.size()) {
          break;
        }
        std::int64_t need = 4;
        if (s % 6 == 0 || s % 6 == 4) {
          need = 5;
        } else if (prime) {
          need = 6;
        }
        need += primed(sys, seq[i + 1]) ? 1 : 0;
        if (s - seq[i + 1].size < need) {
          return "parts " + std::to_string(s) + " and "
                 + std::to_string(seq[i + 1].size) + " differ by less than "
                 + std::to_string(need);
        }
      }
      return std::nullopt;
    }

    IdentityCase theorem_8(unsigned r) {
      IdentityCase c;
      c.name = "theorem-8-r" + std::to_string(r);
      c.description
          = "Andrews-type overpartitions in 2^r-1 colours against "
            "overpartitions in r colours, graded by colours and overlines";
      c.systems    = {build_preset("andrews-overpartitions", r)};
      c.other_side = build_preset("primary-overpartitions", r);
      c.qmax       = r >= 3 ? 10 : 12;
      c.degmax     = r >= 3 ? 6 : 8;
      return c;
    }

    std::vector<IdentityCase> build_cases() {
      std::vector<IdentityCase> cases;
      {
        IdentityCase c;
        c.name        = "theorem-1";
        c.description = "Siladic: dilated difference conditions at a = b = 1 "
                        "against distinct odd parts";
        c.systems     = {build_preset("siladic-dilated")};
        c.other_side  = build_preset("distinct-odd");
        c.product     = named_product("distinct-odd");
        c.dilation    = link("siladic-weighted", 4, {{"a", -3}, {"b", -1}});
        c.specialize  = to_one({"a", "b"});
        c.qmax        = 60;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "theorem-2";
        c.description = "weighted Schur: colours ab < a < b against "
                        "(-aq;q)_inf (-bq;q)_inf";
        c.systems     = {build_preset("schur-weighted")};
        c.product     = named_product("distinct-ab");
        c.qmax        = 30;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "schur";
        c.description = "Schur mod 3 with c = ab against "
                        "(-aq;q^3)_inf (-bq^2;q^3)_inf";
        c.systems     = {build_preset("schur-dilated-mod3")};
        c.product     = named_product("schur-mod3");
        c.dilation    = link("schur-weighted", 3, {{"a", -2}, {"b", -1}});
        SubstitutionMap s;
        s.images[variable("c")] = VarImage{Monomial{{"a", 1}, {"b", 1}}, 0};
        c.specialize            = s;
        c.qmax                  = 30;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "theorem-3";
        c.description = "weighted Siladic against (-aq;q)_inf (-bq;q)_inf; "
                        "resolves which small parts are excluded";
        c.systems     = {build_preset("siladic-weighted"),
                         build_preset("siladic-weighted-no1b")};
        c.product     = named_product("distinct-ab");
        c.qmax        = 30;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "theorem-4";
        c.description = "Siladic refined by parts mod 4 and 8 against "
                        "(-aq;q^4)_inf (-bq^3;q^4)_inf";
        c.systems     = {build_preset("siladic-dilated")};
        c.product     = named_product("siladic-mod4");
        c.dilation    = link("siladic-weighted", 4, {{"a", -3}, {"b", -1}});
        c.statistic   = StatisticCheck{siladic_statistic, siladic_conditions};
        c.qmax        = 60;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "theorem-5";
        c.description = "Schur companion: weighted Siladic under q -> q^3, "
                        "a -> aq^-2, b -> bq^-1";
        c.systems     = {build_preset("schur-companion")};
        c.other_side  = build_preset("schur-companion-text");
        c.product     = named_product("schur-mod3");
        c.dilation    = link("siladic-weighted", 3, {{"a", -2}, {"b", -1}});
        c.statistic = StatisticCheck{companion_statistic, companion_conditions};
        c.qmax      = 60;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "theorem-6";
        c.description = "Primc's matrix B with b = 1 against "
                        "(-aq;q^2)(-dq;q^2)/((q;q)(cq;q^2))";
        c.systems     = {build_preset("primc-weighted")};
        c.product     = named_product("primc");
        c.qmax        = 25;
        c.degmax      = 25;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "theorem-7";
        c.description = "Primc dilated by q -> q^2, a -> aq^-1, d -> dq";
        c.systems     = {build_preset("primc-dilated")};
        c.product     = named_product("primc-dilated");
        c.dilation    = link("primc-weighted", 2, {{"a", -1}, {"d", 1}});
        c.qmax        = 50;
        cases.push_back(std::move(c));
      }
      {
        IdentityCase c;
        c.name        = "primc-conjecture";
        c.description = "Primc dilated at a = c = d = 1 against 1/(q;q)_inf";
        c.systems     = {build_preset("primc-dilated")};
        c.product     = named_product("partitions");
        c.dilation    = link("primc-weighted", 2, {{"a", -1}, {"d", 1}});
        c.specialize  = to_one({"a", "c", "d"});
        c.qmax        = 40;
        cases.push_back(std::move(c));
      }
      for (unsigned r = 1; r <= 3; ++r) {
        cases.push_back(theorem_8(r));
      }
      return cases;
    }
  }  // namespace

  std::vector<IdentityCase> const& identity_cases() {
    static std::vector<IdentityCase> const cases = build_cases();
    return cases;
  }

  IdentityCase identity_case(std::string_view name) {
    for (auto const& c : identity_cases()) {
      if (c.name == name) {
        return c;
      }
    }
    std::string_view const prefix = "theorem-8:";
    if (name.starts_with(prefix)) {
      auto     digits = name.substr(prefix.size());
      unsigned r      = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), r);
      if (ec == std::errc() && ptr == digits.data() + digits.size() && r >= 1
          && r <= 8) {
        return theorem_8(r);
      }
    }
    std::string known;
    for (auto const& c : identity_cases()) {
      known += (known.empty() ? "" : ", ") + c.name;
    }
    throw unknown_name("unknown identity \"" + std::string(name)
                       + "\" (known: " + known + ", theorem-8:r)");
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using source_list = std::vector<std::pair<std::string, Series>>;

    source_list compute_sources(IdentityCase const&        c,
                                ColouredSystem const&      sys,
                                std::size_t                qmax,
                                degree_cap                 degmax,
                                std::vector<engine> const& engines) {
      source_list out;
      auto        finish = [&](Series f) {
        return c.specialize ? substitute(f, *c.specialize, qmax) : f;
      };
      std::vector<ColouredSystem const*> sides = {&sys};
      if (c.other_side) {
        sides.push_back(&*c.other_side);
      }
      for (auto e : engines) {
        switch (e) {
          case engine::enumeration:
            for (auto const* s : sides) {
              out.emplace_back("enum[" + s->name + "]",
                               finish(enumerate_series(*s, qmax, degmax)));
            }
            break;
          case engine::recurrence:
            for (auto const* s : sides) {
              out.emplace_back("recurrence[" + s->name + "]",
                               finish(dp_series(*s, qmax, degmax)));
            }
            break;
          case engine::product:
            out.emplace_back("product",
                             finish(product_expand(*c.product, qmax, degmax)));
            break;
          case engine::dilation: {
            DpOptions opts;
            opts.image = statistic_substitution(c.dilation->spec,
                                                c.dilation->weighted);
            out.emplace_back(
                "dilation[" + c.dilation->weighted.name + "]",
                finish(dp_series(c.dilation->weighted, qmax, degmax, opts)));
            break;
          }
        }
      }
      return out;
    }

    std::optional<ReportMismatch> compare(source_list const& sources) {
      for (std::size_t i = 1; i < sources.size(); ++i) {
        if (auto m = first_difference(sources[0].second, sources[i].second)) {
          return ReportMismatch{*m, sources[0].first, sources[i].first};
        }
      }
      return std::nullopt;
    }

    std::string describe(ReportMismatch const& m) {
      return "differs at q^" + std::to_string(m.mismatch.n) + " "
             + m.mismatch.monomial.to_string() + ": "
             + m.mismatch.lhs.str() + " vs " + m.mismatch.rhs.str();
    }
  }  // namespace

  Report verify_identity(IdentityCase const&        c,
                         std::size_t                qmax,
                         degree_cap                 degmax,
                         std::vector<engine> const& requested,
                         VerifyOptions const&       opts) {
    auto start      = std::chrono::steady_clock::now();
    auto applicable = c.applicable_engines();
    auto engines    = requested.empty() ? applicable : requested;
    for (auto e : engines) {
      if (std::find(applicable.begin(), applicable.end(), e)
          == applicable.end()) {
        std::string names;
        for (auto a : applicable) {
          names += (names.empty() ? "" : ", ") + engine_name(a);
        }
        throw engine_inapplicable("engine " + engine_name(e)
                                  + " does not apply to " + c.name
                                  + " (applicable: " + names + ")");
      }
    }
    if (c.systems.empty()) {
      throw invalid_argument("identity " + c.name + " has no system");
    }

    Report report;
    report.identity = c.name;
    report.qmax     = qmax;
    report.degmax   = degmax;
    for (auto e : engines) {
      report.engines.push_back(engine_name(e));
    }

    std::vector<source_list>                   runs;
    std::vector<std::optional<ReportMismatch>> outcomes;
    for (auto const& sys : c.systems) {
      runs.push_back(compute_sources(c, sys, qmax, degmax, engines));
      if (runs.back().size() < 2) {
        throw invalid_argument("identity " + c.name + " needs at least two "
                               "sides to compare; add engines");
      }
      outcomes.push_back(compare(runs.back()));
    }

    std::size_t const passing
        = std::count_if(outcomes.begin(), outcomes.end(),
                        [](auto const& m) { return !m.has_value(); });
    std::size_t resolved = 0;
    if (c.systems.size() == 1) {
      report.equal          = passing == 1;
      report.first_mismatch = outcomes[0];
    } else {
      for (std::size_t i = 0; i < c.systems.size(); ++i) {
        report.conventions[c.systems[i].name]
            = outcomes[i] ? describe(*outcomes[i]) : "equal";
      }
      report.equal = passing == 1;
      if (passing == 0) {
        report.first_mismatch = outcomes[0];
      } else if (passing > 1) {
        // Several conventions fit: report how the first two differ.
        std::size_t i = 0;
        while (outcomes[i]) {
          ++i;
        }
        std::size_t j = i + 1;
        while (outcomes[j]) {
          ++j;
        }
        auto m = first_difference(runs[i][0].second, runs[j][0].second);
        if (m) {
          report.first_mismatch
              = ReportMismatch{*m, runs[i][0].first, runs[j][0].first};
        }
      } else {
        while (outcomes[resolved]) {
          ++resolved;
        }
        report.conventions["resolved"] = c.systems[resolved].name;
      }
    }
    for (auto const& [k, v] : c.systems[resolved].conventions) {
      report.conventions[k] = v;
    }
    if (c.other_side) {
      for (auto const& [k, v] : c.other_side->conventions) {
        report.conventions.try_emplace(k, v);
      }
    }

    if (c.statistic) {
      auto failure = run_statistic_check(c.systems[resolved], *c.statistic,
                                         degmax, opts.seed);
      if (failure) {
        report.conventions["statistic"] = *failure;
        if (report.equal) {
          report.equal = false;
          report.first_mismatch
              = ReportMismatch{{0, Monomial(), 0, 1}, "statistic", "weights"};
        }
      } else {
        report.conventions["statistic"]
            = std::to_string(c.statistic->samples)
              + " sampled partitions agree with the colour weights";
      }
    }

    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return report;
  }

  Report verify_identity(IdentityCase const& c, VerifyOptions const& opts) {
    return verify_identity(c, c.qmax, c.degmax, {}, opts);
  }

  std::optional<std::string> run_statistic_check(ColouredSystem const& sys,
                                                 StatisticCheck const& check,
                                                 degree_cap            degmax,
                                                 std::uint64_t         seed) {
    std::mt19937_64                                   rng(seed);
    std::uniform_int_distribution<std::size_t>        size_dist(1, check.max_size);
    std::map<std::size_t, std::vector<PartitionSeq>> cache;
    std::size_t                                       drawn = 0;
    for (std::size_t attempts = 0; drawn < check.samples; ++attempts) {
      if (attempts > 100 * check.samples + 1000) {
        throw invalid_argument("system " + sys.name
                               + " has too few partitions to sample");
      }
      auto n  = size_dist(rng);
      auto it = cache.find(n);
      if (it == cache.end()) {
        it = cache.emplace(n, list_partitions(sys, n, degmax)).first;
      }
      if (it->second.empty()) {
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0,
                                                      it->second.size() - 1);
      auto const& seq = it->second[pick(rng)];
      ++drawn;
      auto stated = check.statistic(sys, seq);
      auto weight = partition_weight(sys, seq);
      if (stated != weight) {
        return "partition " + format_partition(sys, seq) + ": statistic "
               + stated.to_string() + ", weight " + weight.to_string();
      }
      if (check.extra) {
        if (auto why = check.extra(sys, seq)) {
          return "partition " + format_partition(sys, seq) + ": " + *why;
        }
      }
    }
    return std::nullopt;
  }

  json report_to_json(Report const& r) {
    json j;
    j["identity"] = r.identity;
    j["qmax"]     = r.qmax;
    j["degmax"]   = r.degmax ? json(*r.degmax) : json();
    j["engines"]  = r.engines;
    j["equal"]    = r.equal;
    if (r.first_mismatch) {
      auto const& m       = *r.first_mismatch;
      j["first_mismatch"] = {{"n", m.mismatch.n},
                             {"monomial", monomial_to_json(m.mismatch.monomial)},
                             {"lhs", m.mismatch.lhs.str()},
                             {"rhs", m.mismatch.rhs.str()},
                             {"sources", {m.lhs_source, m.rhs_source}}};
    } else {
      j["first_mismatch"] = nullptr;
    }
    j["conventions"] = r.conventions;
    j["ms"]          = r.ms;
    return j;
  }

  std::string report_to_text(Report const& r) {
    std::ostringstream os;
    os << "identity: " << r.identity << '\n';
    os << "order: q^" << r.qmax << ", degree "
       << (r.degmax ? std::to_string(*r.degmax) : "uncapped") << '\n';
    os << "engines:";
    for (auto const& e : r.engines) {
      os << ' ' << e;
    }
    os << '\n';
    os << "result: " << (r.equal ? "equal" : "NOT equal") << '\n';
    if (r.first_mismatch) {
      auto const& m = *r.first_mismatch;
      os << "first mismatch: q^" << m.mismatch.n << " "
         << m.mismatch.monomial.to_string() << ": " << m.mismatch.lhs.str()
         << " (" << m.lhs_source << ") vs " << m.mismatch.rhs.str() << " ("
         << m.rhs_source << ")\n";
    }
    for (auto const& [k, v] : r.conventions) {
      os << k << ": " << v << '\n';
    }
    os << "time: " << r.ms << " ms\n";
    return os.str();
  }

}  // namespace wwords
