#include "wwords/io.hpp"

#include <fstream>
#include <sstream>

#include "wwords/errors.hpp"

namespace wwords {

  namespace {
    [[noreturn]] void bad(std::string const& what) {
      throw invalid_argument("malformed JSON: " + what);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing \"") + key + "\"");
      }
      return j.at(key);
    }

    template <typename T>
    T get_or(json const& j, char const* key, T fallback) {
      if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) {
        return fallback;
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const&) {
        bad(std::string("bad value for \"") + key + "\"");
      }
    }

    integer integer_from_json(json const& j) {
      if (j.is_number_integer()) {
        return integer(j.get<std::int64_t>());
      }
      if (j.is_string()) {
        try {
          return integer(j.get<std::string>());
        } catch (std::exception const&) {
        }
      }
      bad("expected an integer");
    }

    json affine_to_json(Affine const& a) {
      return json::array({a.alpha, a.beta});
    }

    Affine affine_from_json(json const& j) {
      if (j.is_number_integer()) {
        return {0, j.get<std::int64_t>()};
      }
      if (!j.is_array() || j.size() != 2) {
        bad("affine expressions are [alpha, beta]");
      }
      return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Monomials, products, substitutions
  ////////////////////////////////////////////////////////////////////////

  json monomial_to_json(Monomial const& m) {
    std::vector<std::pair<std::string, std::uint32_t>> entries;
    for (auto const& [v, e] : m) {
      entries.emplace_back(variable_name(v), e);
    }
    std::sort(entries.begin(), entries.end());
    json j = json::object();
    for (auto const& [name, e] : entries) {
      j[name] = e;
    }
    return j;
  }

  Monomial monomial_from_json(json const& j) {
    if (j.is_null()) {
      return {};
    }
    if (!j.is_object()) {
      bad("monomials are objects {\"var\": exponent}");
    }
    std::vector<Monomial::entry_type> entries;
    for (auto const& [name, e] : j.items()) {
      if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
        bad("exponent of " + name + " must be a non-negative integer");
      }
      entries.emplace_back(variable(name), e.get<std::uint32_t>());
    }
    return Monomial::from_entries(std::move(entries));
  }

  json product_to_json(ProductSpec const& p) {
    json arr = json::array();
    for (auto const& f : p.factors) {
      json j;
      j["coeff"] = {{"sign", f.sign}, {"vars", monomial_to_json(f.coeff)}};
      j["start"] = f.start;
      j["mod"]   = f.mod;
      j["power"] = f.power;
      if (f.count) {
        j["count"] = *f.count;
      }
      arr.push_back(j);
    }
    return arr;
  }

  ProductSpec product_from_json(json const& j) {
    json const& arr = j.is_object() ? field(j, "factors") : j;
    if (!arr.is_array()) {
      bad("a product is an array of factors");
    }
    ProductSpec p;
    for (auto const& f : arr) {
      ProductFactor x;
      auto const&   c = field(f, "coeff");
      x.sign          = get_or<std::int64_t>(c, "sign", 1);
      x.coeff         = monomial_from_json(c.contains("vars") ? c.at("vars")
                                                              : json());
      x.start         = get_or<std::size_t>(f, "start", 1);
      x.mod           = get_or<std::size_t>(f, "mod", 1);
      x.power         = get_or<std::int64_t>(f, "power", 1);
      if (f.contains("count") && !f.at("count").is_null()) {
        x.count = f.at("count").get<std::size_t>();
      }
      p.factors.push_back(std::move(x));
    }
    return p;
  }

  json substitution_to_json(SubstitutionMap const& s) {
    json images = json::object();
    std::vector<var_type> vars;
    for (auto const& [v, img] : s.images) {
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end(), variable_name_less);
    for (auto v : vars) {
      auto const& img = s.images.at(v);
      images[variable_name(v)]
          = {{"vars", monomial_to_json(img.monomial)}, {"q", img.qshift}};
    }
    return {{"qpower", s.qpower}, {"images", images}};
  }

  SubstitutionMap substitution_from_json(json const& j) {
    SubstitutionMap s;
    s.qpower = get_or<std::uint32_t>(j, "qpower", 1);
    if (j.contains("images")) {
      for (auto const& [name, img] : j.at("images").items()) {
        s.images[variable(name)] = VarImage{
            monomial_from_json(img.contains("vars") ? img.at("vars") : json()),
            get_or<std::int64_t>(img, "q", 0)};
      }
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Systems
  ////////////////////////////////////////////////////////////////////////

  json system_to_json(ColouredSystem const& sys) {
    json j;
    j["name"]    = sys.name;
    json colours = json::array();
    json forbidden = json::array();
    for (auto const& c : sys.colours) {
      json d = {{"min_index", c.domain.min_index},
                {"modulus", c.domain.modulus},
                {"residues", c.domain.residues}};
      colours.push_back({{"label", c.label},
                         {"weight", monomial_to_json(c.weight)},
                         {"scale", c.scale},
                         {"offset", c.offset},
                         {"domain", d},
                         {"overline", c.overline_allowed},
                         {"erased", c.erased}});
      for (auto k : c.domain.forbidden) {
        forbidden.push_back({{"colour", c.label}, {"size", c.size_of(k)}});
      }
    }
    j["colours"] = colours;
    json offsets = json::object();
    for (std::size_t c = 0; c < sys.colours.size(); ++c) {
      offsets[sys.colours[c].label] = sys.rank_offset[c];
    }
    j["order"] = {{"multiplier", sys.rank_mult}, {"offsets", offsets}};
    std::visit(
        [&](auto const& rule) {
          using T = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<T, GapMatrix>) {
            json entries = json::object();
            for (std::size_t c = 0; c < sys.colours.size(); ++c) {
              entries[sys.colours[c].label] = rule.entries[c];
            }
            j["gap"] = {{"matrix", {{"period", rule.period},
                                    {"entries", entries}}}};
          } else if constexpr (std::is_same_v<T, AndrewsGap>) {
            j["gap"] = {{"andrews", rule.r}};
          } else {
            j["gap"] = {{"overpartition", true}};
          }
        },
        sys.gap);
    j["min_size"]  = sys.min_size;
    j["forbidden"] = forbidden;
    j["overline_marker"]
        = sys.overline_marker ? json(variable_name(*sys.overline_marker))
                              : json();
    if (!sys.conventions.empty()) {
      j["conventions"] = sys.conventions;
    }
    return j;
  }

  ColouredSystem system_from_json(json const& j) {
    ColouredSystem sys;
    sys.name     = get_or<std::string>(j, "name", "custom");
    sys.min_size = get_or<std::int64_t>(j, "min_size", 1);
    auto const& colours = field(j, "colours");
    if (!colours.is_array() || colours.empty()) {
      bad("\"colours\" must be a non-empty array");
    }
    for (auto const& c : colours) {
      ColourDef def;
      def.label  = field(c, "label").get<std::string>();
      def.weight = c.contains("weight") ? monomial_from_json(c.at("weight"))
                                        : Monomial::of(def.label);
      def.scale  = get_or<std::int64_t>(c, "scale", 1);
      def.offset = get_or<std::int64_t>(c, "offset", 0);
      if (c.contains("domain")) {
        auto const& d            = c.at("domain");
        def.domain.min_index     = get_or<std::int64_t>(d, "min_index", 1);
        def.domain.modulus       = get_or<std::uint32_t>(d, "modulus", 1);
        def.domain.residues      = get_or<std::vector<std::uint32_t>>(
            d, "residues", {0});
        def.domain.forbidden     = get_or<std::vector<std::int64_t>>(
            d, "forbidden", {});
      } else {
        def.domain.min_index = sys.min_size;
      }
      def.overline_allowed = get_or<bool>(c, "overline", false);
      def.erased           = get_or<bool>(c, "erased", false);
      sys.colours.push_back(std::move(def));
    }
    auto const n = static_cast<std::int64_t>(sys.colours.size());
    if (j.contains("order")) {
      auto const& o = j.at("order");
      sys.rank_mult = get_or<std::int64_t>(o, "multiplier", n);
      auto offsets  = field(o, "offsets");
      for (auto const& c : sys.colours) {
        if (!offsets.contains(c.label)) {
          bad("no rank offset for colour " + c.label);
        }
        sys.rank_offset.push_back(offsets.at(c.label).get<std::int64_t>());
      }
    } else {
      sys.rank_mult = n;
      for (std::int64_t c = 0; c < n; ++c) {
        sys.rank_offset.push_back(c - n);
      }
    }
    auto const& gap = field(j, "gap");
    if (gap.contains("matrix")) {
      auto const& m = gap.at("matrix");
      GapMatrix   g;
      g.period      = get_or<std::uint32_t>(m, "period", 1);
      auto entries  = field(m, "entries");
      for (auto const& c : sys.colours) {
        if (!entries.contains(c.label)) {
          bad("no gap matrix row for colour " + c.label);
        }
        auto rows = entries.at(c.label);
        // A single row may be given without the row-class nesting.
        if (!rows.empty() && rows[0].is_number()) {
          rows = json::array({rows});
        }
        g.entries.push_back(
            rows.get<std::vector<std::vector<std::int64_t>>>());
      }
      sys.gap = std::move(g);
    } else if (gap.contains("andrews")) {
      sys.gap = AndrewsGap{gap.at("andrews").get<unsigned>()};
    } else if (gap.contains("overpartition")) {
      sys.gap = OverpartitionGap{};
    } else {
      bad("gap must be \"matrix\", \"andrews\" or \"overpartition\"");
    }
    if (j.contains("forbidden")) {
      for (auto const& f : j.at("forbidden")) {
        auto  c = sys.colour_index(field(f, "colour").get<std::string>());
        auto  k = sys.colours[c].index_of(field(f, "size").get<std::int64_t>());
        if (!k) {
          bad("forbidden part is not on its colour's lattice");
        }
        auto& fb = sys.colours[c].domain.forbidden;
        if (std::find(fb.begin(), fb.end(), *k) == fb.end()) {
          fb.push_back(*k);
        }
      }
    }
    if (j.contains("overline_marker") && !j.at("overline_marker").is_null()) {
      sys.overline_marker
          = variable(j.at("overline_marker").get<std::string>());
    }
    if (j.contains("conventions")) {
      sys.conventions
          = j.at("conventions").get<std::map<std::string, std::string>>();
    }
    sys.validate();
    return sys;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    json coefficient_to_json(Coefficient const& c) {
      json num = json::array();
      for (auto const& sum : c.num) {
        json terms = json::array();
        for (auto const& t : sum) {
          terms.push_back({{"c", t.c.str()},
                           {"vars", monomial_to_json(t.m)},
                           {"q", affine_to_json(t.q)}});
        }
        num.push_back(terms);
      }
      json den = json::array();
      for (auto const& d : c.den) {
        den.push_back(
            {{"vars", monomial_to_json(d.m)}, {"q", affine_to_json(d.q)}});
      }
      return {{"num", num}, {"den", den}};
    }

    Coefficient coefficient_from_json(json const& j) {
      Coefficient c;
      if (j.contains("num")) {
        for (auto const& sum : j.at("num")) {
          std::vector<QTerm> terms;
          for (auto const& t : sum) {
            terms.push_back(
                {t.contains("c") ? integer_from_json(t.at("c")) : integer(1),
                 monomial_from_json(t.contains("vars") ? t.at("vars") : json()),
                 t.contains("q") ? affine_from_json(t.at("q")) : Affine{}});
          }
          c.num.push_back(std::move(terms));
        }
      }
      if (j.contains("den")) {
        for (auto const& d : j.at("den")) {
          c.den.push_back(
              {monomial_from_json(d.contains("vars") ? d.at("vars") : json()),
               affine_from_json(field(d, "q"))});
        }
      }
      return c;
    }

    json term_to_json(EquationTerm const& t) {
      json j;
      j["coeff"] = coefficient_to_json(t.coeff);
      if (t.ref) {
        json r = {{"fn", t.ref->fn == series_fn::G ? "G" : "E"},
                  {"colour", t.ref->colour},
                  {"index", affine_to_json(t.ref->index)}};
        if (t.ref->overlined) {
          r["overlined"] = true;
        }
        if (t.ref->subst) {
          r["subst"] = substitution_to_json(*t.ref->subst);
        }
        j["ref"] = r;
      }
      return j;
    }

    EquationTerm term_from_json(json const& j) {
      EquationTerm t;
      if (j.contains("coeff")) {
        t.coeff = coefficient_from_json(j.at("coeff"));
      }
      if (j.contains("ref") && !j.at("ref").is_null()) {
        auto const& r  = j.at("ref");
        auto        fn = get_or<std::string>(r, "fn", "G");
        if (fn != "G" && fn != "E") {
          bad("\"fn\" must be G or E");
        }
        SeriesRef ref;
        ref.fn        = fn == "G" ? series_fn::G : series_fn::E;
        ref.colour    = field(r, "colour").get<std::string>();
        ref.index     = affine_from_json(field(r, "index"));
        ref.overlined = get_or<bool>(r, "overlined", false);
        if (r.contains("subst") && !r.at("subst").is_null()) {
          ref.subst = substitution_from_json(r.at("subst"));
        }
        t.ref = std::move(ref);
      }
      return t;
    }
  }  // namespace

  json equation_to_json(EquationSpec const& e) {
    json relations = json::array();
    for (auto const& r : e.relations) {
      json lhs = json::array(), rhs = json::array();
      for (auto const& t : r.lhs) {
        lhs.push_back(term_to_json(t));
      }
      for (auto const& t : r.rhs) {
        rhs.push_back(term_to_json(t));
      }
      relations.push_back({{"lhs", lhs}, {"rhs", rhs}});
    }
    return {{"name", e.name},
            {"description", e.description},
            {"system", e.system},
            {"k", {e.k_min, e.k_max}},
            {"relations", relations}};
  }

  EquationSpec equation_from_json(json const& j) {
    EquationSpec e;
    e.name        = get_or<std::string>(j, "name", "custom");
    e.description = get_or<std::string>(j, "description", "");
    e.system      = field(j, "system").get<std::string>();
    auto const& k = field(j, "k");
    if (!k.is_array() || k.size() != 2) {
      bad("\"k\" is [k_min, k_max]");
    }
    e.k_min = k[0].get<std::int64_t>();
    e.k_max = k[1].get<std::int64_t>();
    for (auto const& r : field(j, "relations")) {
      Relation rel;
      for (auto const& t : field(r, "lhs")) {
        rel.lhs.push_back(term_from_json(t));
      }
      for (auto const& t : field(r, "rhs")) {
        rel.rhs.push_back(term_from_json(t));
      }
      e.relations.push_back(std::move(rel));
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Series
  ////////////////////////////////////////////////////////////////////////

  json coefficient_table(Series const& f, std::size_t upto) {
    upto = std::min(upto, f.qmax());
    json rows = json::array();
    for (std::size_t n = 0; n <= upto; ++n) {
      json terms = json::array();
      for (auto const& [m, c] : f[n].display_terms()) {
        terms.push_back({{"monomial", monomial_to_json(m)}, {"coeff", c.str()}});
      }
      rows.push_back({{"n", n}, {"terms", terms}});
    }
    return {{"qmax", upto},
            {"degmax", f.degmax() ? json(*f.degmax()) : json()},
            {"coefficients", rows}};
  }

  json series_to_json(Series const& f) {
    return coefficient_table(f, f.qmax());
  }

  Series series_from_json(json const& j) {
    auto       qmax   = field(j, "qmax").get<std::size_t>();
    degree_cap degmax = std::nullopt;
    if (j.contains("degmax") && !j.at("degmax").is_null()) {
      degmax = j.at("degmax").get<std::uint32_t>();
    }
    Series f(qmax, degmax);
    for (auto const& row : field(j, "coefficients")) {
      auto n = field(row, "n").get<std::size_t>();
      for (auto const& t : field(row, "terms")) {
        f.add_term(n, monomial_from_json(field(t, "monomial")),
                   integer_from_json(field(t, "coeff")));
      }
    }
    return f;
  }

  std::string coefficient_table_text(Series const& f, std::size_t upto) {
    upto = std::min(upto, f.qmax());
    std::ostringstream os;
    for (std::size_t n = 0; n <= upto; ++n) {
      os << n << ": " << f[n].to_string() << '\n';
    }
    return os.str();
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw invalid_argument("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw invalid_argument(path + ": " + e.what());
    }
  }

}  // namespace wwords
