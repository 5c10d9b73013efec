#include "wwords/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "wwords/discovery.hpp"
#include "wwords/enumerate.hpp"
#include "wwords/equations.hpp"
#include "wwords/errors.hpp"
#include "wwords/io.hpp"
#include "wwords/presets.hpp"
#include "wwords/recurrence.hpp"
#include "wwords/verify.hpp"

namespace wwords {

  namespace {
    bool is_file(std::string const& arg) {
      std::error_code ec;
      return std::filesystem::is_regular_file(arg, ec);
    }

    ColouredSystem load_system(std::string const& arg) {
      if (is_file(arg)) {
        return system_from_json(read_json_file(arg));
      }
      return build_preset(arg);
    }

    ProductSpec load_product(std::string const& arg) {
      if (is_file(arg)) {
        return product_from_json(read_json_file(arg));
      }
      return named_product(arg);
    }

    EquationSpec load_equation(std::string const& arg) {
      if (is_file(arg)) {
        return equation_from_json(read_json_file(arg));
      }
      return builtin_equation(arg);
    }

    std::vector<std::string> split_list(std::string const& s) {
      std::vector<std::string> out;
      std::stringstream        in(s);
      std::string              item;
      while (std::getline(in, item, ',')) {
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }

    json mismatch_json(Mismatch const& m) {
      return {{"n", m.n},
              {"monomial", monomial_to_json(m.monomial)},
              {"lhs", m.lhs.str()},
              {"rhs", m.rhs.str()}};
    }

    std::string mismatch_text(Mismatch const& m) {
      return "q^" + std::to_string(m.n) + " " + m.monomial.to_string() + ": "
             + m.lhs.str() + " vs " + m.rhs.str();
    }

    struct Settings {
      std::string   format = "text";
      std::uint64_t seed   = 1;
      bool          no_timing = false;

      bool json() const {
        return format == "json";
      }
    };

    // Output of one subcommand: a JSON document and its text rendering.
    struct Result {
      json        doc;
      std::string text;
      int         code = exit_equal;
    };

    Result list_presets() {
      Result r;
      json   systems = json::array(), identities = json::array(),
           products = json::array(), equations = json::array();
      std::ostringstream os;
      os << "systems:\n";
      for (auto const& p : preset_list()) {
        systems.push_back({{"name", p.name},
                           {"description", p.description},
                           {"parametric", p.takes_r}});
        os << "  " << p.name << (p.takes_r ? ":r" : "") << "  "
           << p.description << '\n';
      }
      os << "identities:\n";
      for (auto const& c : identity_cases()) {
        std::vector<std::string> engines;
        for (auto e : c.applicable_engines()) {
          engines.push_back(engine_name(e));
        }
        identities.push_back(
            {{"name", c.name},
             {"description", c.description},
             {"qmax", c.qmax},
             {"degmax", c.degmax ? json(*c.degmax) : json()},
             {"engines", engines}});
        os << "  " << c.name << "  " << c.description << '\n';
      }
      os << "products:\n";
      for (auto const& p : product_list()) {
        products.push_back({{"name", p.name},
                            {"description", p.description},
                            {"product", p.spec.to_string()}});
        os << "  " << p.name << "  " << p.spec.to_string() << '\n';
      }
      os << "equations:\n";
      for (auto const& e : builtin_equations()) {
        equations.push_back({{"name", e.name},
                             {"description", e.description},
                             {"system", e.system},
                             {"k", {e.k_min, e.k_max}}});
        os << "  " << e.name << "  " << e.description << '\n';
      }
      r.doc  = {{"systems", systems},
                {"identities", identities},
                {"products", products},
                {"equations", equations}};
      r.text = os.str();
      return r;
    }

    struct VerifyArgs {
      std::string                identity;
      std::optional<std::size_t> qmax;
      std::optional<unsigned>    degmax;
      std::string                engines;
      std::string                system;
    };

    Result verify(VerifyArgs const& a, Settings const& s) {
      auto c = identity_case(a.identity);
      if (!a.system.empty()) {
        c.systems = {load_system(a.system)};
      }
      auto const qmax   = a.qmax.value_or(c.qmax);
      auto const degmax = a.degmax ? degree_cap(*a.degmax) : c.degmax;
      auto       report = verify_identity(c, qmax, degmax,
                                          parse_engines(a.engines),
                                          VerifyOptions{s.seed});
      if (s.no_timing) {
        report.ms = 0;
      }
      return {report_to_json(report), report_to_text(report),
              report.equal ? exit_equal : exit_mismatch};
    }

    Result expand(std::string const&             product,
                  std::size_t                    qmax,
                  std::optional<unsigned> const& degmax) {
      auto spec = load_product(product);
      auto f    = product_expand(spec, qmax,
                              degmax ? degree_cap(*degmax) : std::nullopt);
      Result r;
      r.doc            = coefficient_table(f, qmax);
      r.doc["product"] = spec.to_string();
      r.text = spec.to_string() + "\n" + coefficient_table_text(f, qmax);
      return r;
    }

    struct EnumerateArgs {
      std::string                system;
      std::size_t                qmax = 10;
      std::optional<unsigned>    degmax;
      std::optional<std::size_t> list;
      std::string                engine = "enum";
    };

    Result enumerate(EnumerateArgs const& a) {
      auto       sys    = load_system(a.system);
      degree_cap degmax = a.degmax ? degree_cap(*a.degmax) : std::nullopt;
      Result     r;
      if (a.list) {
        auto       parts = list_partitions(sys, *a.list, degmax);
        json       items = json::array();
        std::ostringstream os;
        for (auto const& p : parts) {
          auto line = format_partition(sys, p);
          items.push_back({{"parts", line},
                           {"weight", monomial_to_json(partition_weight(sys, p))}});
          os << line << "  [" << partition_weight(sys, p).to_string() << "]\n";
        }
        r.doc  = {{"system", sys.name},
                  {"n", *a.list},
                  {"count", parts.size()},
                  {"partitions", items}};
        r.text = os.str() + std::to_string(parts.size()) + " partitions of "
                 + std::to_string(*a.list) + "\n";
        return r;
      }
      Series f = a.engine == "recurrence" ? dp_series(sys, a.qmax, degmax)
                 : a.engine == "enum"
                     ? enumerate_series(sys, a.qmax, degmax)
                     : throw invalid_argument("unknown engine " + a.engine
                                              + " (expected enum or "
                                                "recurrence)");
      r.doc           = coefficient_table(f, a.qmax);
      r.doc["system"] = sys.name;
      r.text          = coefficient_table_text(f, a.qmax);
      return r;
    }

    struct DilateArgs {
      std::string  system;
      std::int64_t modulus = 1;
      std::string  offsets;
      bool         by_colour = false;
    };

    Result dilate(DilateArgs const& a) {
      auto sys = load_system(a.system);
      json o;
      try {
        o = json::parse(a.offsets.empty() ? "{}" : a.offsets);
      } catch (json::exception const& e) {
        throw invalid_argument(std::string("--offsets is not JSON: ")
                               + e.what());
      }
      if (!o.is_object()) {
        throw invalid_argument("--offsets must be a JSON object");
      }
      std::map<std::string, std::int64_t> shifts;
      for (auto const& [k, v] : o.items()) {
        if (!v.is_number_integer()) {
          throw invalid_argument("offset of " + k + " must be an integer");
        }
        shifts[k] = v.get<std::int64_t>();
      }
      DilationSpec d;
      if (a.by_colour) {
        d.modulus = a.modulus;
        for (auto const& [k, v] : shifts) {
          static_cast<void>(sys.colour_index(k));
          d.offsets[k] = v;
        }
      } else {
        for (auto const& [k, v] : shifts) {
          bool known = std::any_of(
              sys.colours.begin(), sys.colours.end(), [&](auto const& c) {
                return c.weight.exponent(variable(k)) > 0;
              });
          if (!known) {
            throw invalid_argument("variable " + k
                                   + " does not occur in any colour weight");
          }
        }
        d = dilation_from_shifts(sys, a.modulus, shifts);
      }
      auto        out = dilate_system(sys, d);
      std::string text;
      for (auto const& c : out.colours) {
        auto k0 = c.domain.smallest();
        text += c.label + ": " + std::to_string(c.scale) + "k"
                + (c.offset == 0  ? std::string()
                   : c.offset < 0 ? " - " + std::to_string(-c.offset)
                                  : " + " + std::to_string(c.offset))
                + (k0 ? ", smallest part " + std::to_string(c.size_of(*k0))
                      : std::string())
                + "\n";
      }
      Result r;
      r.doc  = system_to_json(out);
      r.text = "system " + out.name + "\n" + text + format_gap_matrix(out);
      return r;
    }

    struct CheckArgs {
      std::string                 equation;
      std::size_t                 qmax = 40;
      std::optional<std::int64_t> kmin;
      std::optional<std::int64_t> kmax;
      std::string                 system;
    };

    Result check_eq(CheckArgs const& a) {
      std::vector<EquationSpec> specs;
      if (a.equation == "all") {
        specs = builtin_equations();
      } else {
        specs = {load_equation(a.equation)};
      }
      Result             r;
      json               results = json::array();
      std::ostringstream os;
      bool               all    = true;
      for (auto const& spec : specs) {
        auto sys   = load_system(a.system.empty() ? spec.system : a.system);
        auto check = check_equation(spec, sys, a.qmax, a.kmin, a.kmax);
        all        = all && check.holds;
        json j     = {{"equation", spec.name},
                      {"system", sys.name},
                      {"k", {check.k_min, check.k_max}},
                      {"qmax", check.qmax},
                      {"holds", check.holds}};
        os << spec.name << " (k = " << check.k_min << ".." << check.k_max
           << ", q^" << check.qmax << "): "
           << (check.holds ? "holds" : "FAILS");
        if (!check.holds) {
          j["failing_k"]        = *check.failing_k;
          j["failing_relation"] = check.failing_relation;
          j["mismatch"] = check.mismatch ? mismatch_json(*check.mismatch)
                                         : json();
          os << " at k = " << *check.failing_k << ", relation "
             << check.failing_relation + 1;
          if (check.mismatch) {
            os << ", " << mismatch_text(*check.mismatch);
          }
        }
        os << '\n';
        results.push_back(j);
      }
      r.doc  = specs.size() == 1 ? results[0]
                                 : json{{"holds", all}, {"equations", results}};
      r.text = os.str();
      r.code = all ? exit_equal : exit_mismatch;
      return r;
    }

    struct DiscoverArgs {
      std::string system;
      std::string primaries;
      unsigned    max_exponent = 2;
      std::size_t qmax         = 18;
      std::size_t show         = 10;
    };

    Result discover(DiscoverArgs const& a) {
      auto sys        = load_system(a.system);
      auto candidates = search_relations(sys, split_list(a.primaries), a.qmax,
                                         a.max_exponent);
      std::size_t        product_like = 0;
      json               items        = json::array();
      std::ostringstream os;
      for (auto const& c : candidates) {
        product_like += c.product_like ? 1 : 0;
      }
      os << candidates.size() << " candidates with bounded Euler factors, "
         << product_like << " product-like\n";
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto const& c = candidates[i];
        if (i < a.show) {
          items.push_back(candidate_to_json(c));
          os << (c.product_like ? "* " : "  ")
             << c.substitution.to_string();
          if (c.product) {
            os << "  ->  " << c.product->spec.to_string() << "  (period "
               << c.product->period << ")";
          }
          os << '\n';
        }
      }
      Result r;
      r.doc  = {{"system", sys.name},
                {"primaries", split_list(a.primaries)},
                {"qmax", a.qmax},
                {"max_exponent", a.max_exponent},
                {"count", candidates.size()},
                {"product_like", product_like},
                {"candidates", items}};
      r.text = os.str();
      return r;
    }

    Result euler_factor(std::string const& series_file,
                        std::string const& product,
                        std::size_t        qmax) {
      Series f(0);
      if (!series_file.empty()) {
        f = series_from_json(read_json_file(series_file));
      } else if (!product.empty()) {
        f = product_expand(load_product(product), qmax);
      } else {
        throw invalid_argument("euler-factor needs --series or --product");
      }
      auto               table = euler_factorize(f);
      json               rows  = json::array();
      std::ostringstream os;
      for (auto const& t : table) {
        rows.push_back({{"n", t.n},
                        {"monomial", monomial_to_json(t.monomial)},
                        {"exponent", t.exponent}});
        os << "(1 - " << (t.monomial.is_one() ? "" : t.monomial.to_string() + "*")
           << "q^" << t.n << ")^" << -t.exponent << '\n';
      }
      auto   periodic = recognize_periodic_product(f, f.qmax());
      Result r;
      r.doc = {{"qmax", f.qmax()},
               {"factors", rows},
               {"periodic", periodic ? periodic_product_to_json(*periodic)
                                     : json()}};
      os << "periodic: "
         << (periodic ? periodic->spec.to_string() + " (period "
                            + std::to_string(periodic->period) + ")"
                      : std::string("none"))
         << '\n';
      r.text = os.str();
      return r;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Weighted words: partition identities by coloured "
                 "difference conditions"};
    app.name("wwords");
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", s.seed, "Seed for sampled statistic checks");
    app.add_flag("--no-timing", s.no_timing, "Report 0 ms durations");

    auto* list = app.add_subcommand("list-presets",
                                    "List systems, identities, products "
                                    "and equations");

    VerifyArgs va;
    auto*      ver = app.add_subcommand("verify", "Verify an identity");
    ver->add_option("identity", va.identity, "Identity name")->required();
    ver->add_option("--qmax", va.qmax, "Truncation order");
    ver->add_option("--degmax", va.degmax, "Colour degree cap");
    ver->add_option("--engines", va.engines,
                    "Comma separated: enum,recurrence,product,dilation");
    ver->add_option("--system", va.system,
                    "System JSON replacing the counted side");

    std::string             product;
    std::size_t             expand_qmax = 20;
    std::optional<unsigned> expand_degmax;
    auto* exp = app.add_subcommand("expand", "Expand an infinite product");
    exp->add_option("--product", product, "Product name or JSON file")
        ->required();
    exp->add_option("--qmax", expand_qmax, "Truncation order");
    exp->add_option("--degmax", expand_degmax, "Colour degree cap");

    EnumerateArgs ea;
    auto*         en = app.add_subcommand(
        "enumerate", "Generating function or partition list of a system");
    en->add_option("system", ea.system, "Preset name or system JSON file")
        ->required();
    en->add_option("--qmax", ea.qmax, "Truncation order");
    en->add_option("--degmax", ea.degmax, "Colour degree cap");
    en->add_option("--list", ea.list, "List the partitions of n");
    en->add_option("--engine", ea.engine, "enum or recurrence")
        ->check(CLI::IsMember({"enum", "recurrence"}));

    DilateArgs da;
    auto*      dil = app.add_subcommand("dilate", "Dilate a system");
    dil->add_option("system", da.system, "Preset name or system JSON file")
        ->required();
    dil->add_option("--modulus", da.modulus, "q -> q^m")->required();
    dil->add_option("--offsets", da.offsets,
                    "JSON object of variable shifts v -> v q^s");
    dil->add_flag("--by-colour", da.by_colour,
                  "Read --offsets as colour offsets k -> mk + o");

    CheckArgs ca;
    auto*     chk = app.add_subcommand(
        "check-eq", "Check a recurrence or functional equation");
    chk->add_option("equation", ca.equation,
                    "Builtin name, JSON file, or all")
        ->required();
    chk->add_option("--qmax", ca.qmax, "Truncation order");
    chk->add_option("--kmin", ca.kmin, "Smallest k");
    chk->add_option("--kmax", ca.kmax, "Largest k");
    chk->add_option("--system", ca.system, "Override the equation's system");

    DiscoverArgs di;
    auto*        dis = app.add_subcommand(
        "discover", "Search colour specializations giving periodic products");
    dis->add_option("system", di.system, "Preset name or system JSON file")
        ->required();
    dis->add_option("--primaries", di.primaries, "Comma separated variables")
        ->required();
    dis->add_option("--max-exponent", di.max_exponent,
                    "Largest exponent in a specialization");
    dis->add_option("--qmax", di.qmax, "Truncation order");
    dis->add_option("--show", di.show, "Candidates to print");

    std::string series_file, ef_product;
    std::size_t ef_qmax = 20;
    auto*       ef      = app.add_subcommand("euler-factor",
                                  "Euler factorization of a series");
    ef->add_option("--series", series_file, "Series JSON file");
    ef->add_option("--product", ef_product, "Product name or JSON file");
    ef->add_option("--qmax", ef_qmax, "Truncation order with --product");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_equal;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_equal;
    } catch (CLI::ParseError const& e) {
      err << "wwords: " << e.what() << "\n\n" << app.help();
      return exit_error;
    }

    try {
      Result r;
      if (list->parsed()) {
        r = list_presets();
      } else if (ver->parsed()) {
        r = verify(va, s);
      } else if (exp->parsed()) {
        r = expand(product, expand_qmax, expand_degmax);
      } else if (en->parsed()) {
        r = enumerate(ea);
      } else if (dil->parsed()) {
        r = dilate(da);
      } else if (chk->parsed()) {
        r = check_eq(ca);
      } else if (dis->parsed()) {
        r = discover(di);
      } else {
        r = euler_factor(series_file, ef_product, ef_qmax);
      }
      if (s.json()) {
        out << r.doc.dump(2) << '\n';
      } else {
        out << r.text;
      }
      return r.code;
    } catch (error const& e) {
      err << "wwords: " << e.what() << '\n';
      if (dynamic_cast<unknown_name const*>(&e) != nullptr) {
        err << '\n' << app.help();
      }
      if (s.json()) {
        out << json{{"error", e.what()}}.dump(2) << '\n';
      }
      return exit_error;
    }
  }

  int run_cli(int argc, char const* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
  }

}  // namespace wwords
