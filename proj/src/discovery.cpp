#include "wwords/discovery.hpp"

#include <algorithm>
#include <map>

#include "wwords/enumerate.hpp"
#include "wwords/errors.hpp"

namespace wwords {

  namespace {
    std::uint64_t const search_cap = 1'000'000;

    // One factor of the merged table. An entry with 2n > qmax cannot be told
    // apart from its signed twin, so it matches either form.
    struct Entry {
      Monomial     monomial;
      std::int64_t sign  = 1;
      std::int64_t power = 0;
      bool         loose = false;
    };

    using table_type = std::vector<std::vector<Entry>>;  // indexed by n

    table_type merged_table(std::vector<EulerFactor> const& factors,
                            std::size_t                     qmax) {
      std::vector<std::map<Monomial, std::int64_t>> raw(qmax + 1);
      for (auto const& f : factors) {
        if (f.n <= qmax && f.exponent != 0) {
          raw[f.n][f.monomial] += f.exponent;
        }
      }
      table_type out(qmax + 1);
      for (std::size_t n = 1; n <= qmax; ++n) {
        std::vector<std::pair<Monomial, std::int64_t>> row(raw[n].begin(),
                                                           raw[n].end());
        std::sort(row.begin(), row.end(), [](auto const& x, auto const& y) {
          return display_less(x.first, y.first);
        });
        for (auto const& [m, e] : row) {
          if (e == 0) {
            continue;
          }
          if (2 * n > qmax) {
            out[n].push_back({m, 1, e, true});
            continue;
          }
          auto twin = raw[2 * n].find(m.pow(2));
          if (twin != raw[2 * n].end() && twin->second == -e) {
            twin->second = 0;
            out[n].push_back({m, -1, -e, false});
          } else {
            out[n].push_back({m, 1, e, false});
          }
        }
      }
      return out;
    }

    bool same_entry(Entry const& x, Entry const& y) {
      if (x.monomial != y.monomial) {
        return false;
      }
      auto fits = [](Entry const& loose, Entry const& fixed) {
        return (fixed.sign == 1 && fixed.power == loose.power)
               || (fixed.sign == -1 && fixed.power == -loose.power);
      };
      if (x.loose && y.loose) {
        return x.power == y.power;
      }
      if (x.loose) {
        return fits(x, y);
      }
      if (y.loose) {
        return fits(y, x);
      }
      return x.sign == y.sign && x.power == y.power;
    }

    bool same_row(std::vector<Entry> const& x, std::vector<Entry> const& y) {
      return x.size() == y.size()
             && std::equal(x.begin(), x.end(), y.begin(), same_entry);
    }

    std::optional<PeriodicProduct> find_period(table_type const& t,
                                               std::size_t       qmax) {
      for (std::size_t m = 1; m <= std::max<std::size_t>(1, qmax / 3); ++m) {
        for (std::size_t n0 = 1; n0 <= m + 1; ++n0) {
          bool ok = true;
          for (std::size_t n = n0; n + m <= qmax && ok; ++n) {
            ok = same_row(t[n], t[n + m]);
          }
          if (!ok) {
            continue;
          }
          PeriodicProduct p;
          p.period  = m;
          p.initial = n0 - 1;
          for (std::size_t n = 1; n < n0 && n <= qmax; ++n) {
            for (auto const& e : t[n]) {
              p.spec.factors.push_back(
                  ProductFactor{e.sign, e.monomial, n, m, e.power, 1});
            }
          }
          for (std::size_t n = n0; n < n0 + m && n <= qmax; ++n) {
            for (auto const& e : t[n]) {
              p.spec.factors.push_back(ProductFactor{e.sign, e.monomial, n, m,
                                                     e.power, std::nullopt});
              ++p.factors_per_period;
            }
          }
          return p;
        }
      }
      return std::nullopt;
    }

    std::optional<PeriodicProduct>
    pattern_of(std::vector<EulerFactor> const& factors,
               Series const&                   f,
               std::size_t                     qmax) {
      auto p = find_period(merged_table(factors, qmax), qmax);
      if (!p) {
        return std::nullopt;
      }
      if (product_expand(p->spec, qmax, f.degmax()) != f) {
        return std::nullopt;
      }
      return p;
    }
  }  // namespace

  std::optional<PeriodicProduct> recognize_periodic_product(Series const& f,
                                                            std::size_t qmax) {
    if (!f[0].is_one()) {
      return std::nullopt;
    }
    qmax   = std::min(qmax, f.qmax());
    auto g = f.truncated(qmax, f.degmax());
    return pattern_of(euler_factorize(g), g, qmax);
  }

  std::vector<RelationCandidate>
  search_relations(ColouredSystem const&           sys,
                   std::vector<std::string> const& primaries,
                   std::size_t                     qmax,
                   unsigned                        max_exponent) {
    std::vector<var_type> prim;
    for (auto const& p : primaries) {
      prim.push_back(variable(p));
    }
    auto                  outputs = sys.output_variables();
    for (std::size_t i = 0; i < prim.size(); ++i) {
      if (std::find(outputs.begin(), outputs.end(), prim[i]) == outputs.end()) {
        throw invalid_argument(primaries[i] + " is not a colour variable of "
                               + sys.name);
      }
    }
    std::vector<var_type> free;
    for (auto v : outputs) {
      if (std::find(prim.begin(), prim.end(), v) == prim.end()) {
        free.push_back(v);
      }
    }
    std::vector<Monomial> choices;
    {
      std::vector<unsigned> e(prim.size(), 0);
      while (true) {
        std::vector<Monomial::entry_type> entries;
        for (std::size_t i = 0; i < prim.size(); ++i) {
          entries.emplace_back(prim[i], e[i]);
        }
        choices.push_back(Monomial::from_entries(std::move(entries)));
        std::size_t i = prim.size();
        while (i > 0 && e[i - 1] == max_exponent) {
          e[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++e[i - 1];
      }
    }
    long double space = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
      space *= choices.size();
    }
    if (space > search_cap) {
      throw search_space_too_large(
          std::to_string(free.size()) + " free colours with "
          + std::to_string(choices.size())
          + " images each exceed 10^6 candidates; lower the maximum exponent "
            "or name more primary variables");
    }

    auto f = enumerate_series(sys, qmax);
    // Decide free variables in order of their first appearance, so that the
    // series below the next variable's first term is already fixed.
    std::map<var_type, std::size_t> first;
    for (auto v : free) {
      first[v] = qmax + 1;
    }
    for (std::size_t n = 0; n <= qmax; ++n) {
      for (auto const& [m, c] : f[n]) {
        for (auto const& [v, e] : m) {
          auto it = first.find(v);
          if (it != first.end() && it->second > n) {
            it->second = n;
          }
        }
      }
    }
    std::stable_sort(free.begin(), free.end(), [&](var_type x, var_type y) {
      return first[x] < first[y];
    });

    auto const                     bound = 2 * max_exponent;
    std::vector<RelationCandidate> out;
    SubstitutionMap                s;

    auto leaf = [&]() {
      RelationCandidate c;
      c.substitution = s;
      auto g         = substitute(f, s, qmax);
      auto factors   = euler_factorize_bounded(g.truncated(qmax, bound + 1),
                                               bound);
      if (!factors) {
        return;
      }
      c.product      = pattern_of(*factors, g, qmax);
      c.product_like = c.product.has_value();
      out.push_back(std::move(c));
    };

    auto descend = [&](auto&& self, std::size_t j) -> void {
      if (j == free.size()) {
        leaf();
        return;
      }
      std::size_t window
          = j + 1 < free.size() ? std::min(qmax, first[free[j + 1]] - 1) : qmax;
      for (auto const& image : choices) {
        s.images[free[j]] = VarImage{image, 0};
        if (j + 1 < free.size()) {
          auto g = substitute(f.truncated(window), s, window);
          if (!euler_factorize_bounded(g.truncated(window, bound + 1),
                                       bound)) {
            continue;
          }
        }
        self(self, j + 1);
      }
      s.images.erase(free[j]);
    };
    descend(descend, 0);

    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      if (x.product_like != y.product_like) {
        return x.product_like;
      }
      if (x.product_like) {
        return x.product->factors_per_period < y.product->factors_per_period;
      }
      return false;
    });
    return out;
  }

  json periodic_product_to_json(PeriodicProduct const& p) {
    return {{"period", p.period},
            {"initial", p.initial},
            {"factors_per_period", p.factors_per_period},
            {"product", p.spec.to_string()},
            {"factors", product_to_json(p.spec)}};
  }

  json candidate_to_json(RelationCandidate const& c) {
    json images = json::object();
    std::vector<var_type> vars;
    for (auto const& [v, img] : c.substitution.images) {
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end(), variable_name_less);
    for (auto v : vars) {
      images[variable_name(v)]
          = c.substitution.images.at(v).monomial.to_string();
    }
    return {{"substitution", images},
            {"product_like", c.product_like},
            {"product", c.product ? periodic_product_to_json(*c.product)
                                  : json()}};
  }

}  // namespace wwords
