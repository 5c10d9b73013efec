#include "wwords/equations.hpp"

#include <algorithm>

#include "wwords/errors.hpp"
#include "wwords/presets.hpp"

namespace wwords {

  namespace {
    std::string affine_string(Affine const& a, char var = 'k') {
      std::string s;
      if (a.alpha != 0) {
        if (a.alpha == -1) {
          s = "-";
        } else if (a.alpha != 1) {
          s = std::to_string(a.alpha);
        }
        s += var;
        if (a.beta > 0) {
          s += "+" + std::to_string(a.beta);
        } else if (a.beta < 0) {
          s += std::to_string(a.beta);
        }
        return s;
      }
      return std::to_string(a.beta);
    }

    std::string qpower_string(Affine const& a) {
      if (a.alpha == 0 && a.beta == 0) {
        return "";
      }
      if (a.alpha == 0 && a.beta == 1) {
        return "q";
      }
      auto e = affine_string(a);
      return a.alpha == 0 || (a.alpha == 1 && a.beta == 0) ? "q^" + e
                                                           : "q^(" + e + ")";
    }

    std::string qterm_string(Monomial const& m, Affine const& q) {
      auto        qs = qpower_string(q);
      std::string ms = m.is_one() ? "" : m.to_string();
      if (ms.empty()) {
        return qs.empty() ? "1" : qs;
      }
      return qs.empty() ? ms : ms + "*" + qs;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Coefficient
  ////////////////////////////////////////////////////////////////////////

  Series Coefficient::expand(std::int64_t k,
                             std::size_t  qmax,
                             degree_cap   degmax) const {
    Series result = Series::one(qmax, degmax);
    for (auto const& sum : num) {
      Series s(qmax, degmax);
      for (auto const& t : sum) {
        auto e = t.q.at(k);
        if (e < 0) {
          throw invalid_argument("coefficient " + to_string()
                                 + " has a negative power of q at k="
                                 + std::to_string(k));
        }
        if (static_cast<std::size_t>(e) <= qmax) {
          s.add_term(static_cast<std::size_t>(e), t.m, t.c);
        }
      }
      result = result * s;
    }
    for (auto const& d : den) {
      auto e = d.q.at(k);
      if (e < 0 || (e == 0 && d.m.is_one())) {
        throw singular_coefficient(
            "denominator (1 - " + qterm_string(d.m, d.q) + ") of "
            + to_string() + " has no unit constant term at k="
            + std::to_string(k) + "; restrict the range of k");
      }
      result.multiply_binomial(d.m, 1, static_cast<std::size_t>(e), -1);
    }
    return result;
  }

  std::string Coefficient::to_string() const {
    std::string s;
    for (auto const& sum : num) {
      std::string inner;
      for (auto const& t : sum) {
        auto body = qterm_string(t.m, t.q);
        auto c    = t.c;
        if (inner.empty()) {
          if (c < 0) {
            inner = "-";
            c     = -c;
          }
        } else {
          inner += c < 0 ? " - " : " + ";
          c = abs(c);
        }
        inner += c == 1 ? body
                        : c.str() + (body == "1" ? "" : "*" + body);
      }
      if (inner.empty()) {
        inner = "0";
      }
      if (!s.empty()) {
        s += "*";
      }
      s += (sum.size() > 1 && (num.size() > 1 || !den.empty()))
               ? "(" + inner + ")"
               : inner;
    }
    if (s.empty()) {
      s = "1";
    }
    for (auto const& d : den) {
      s += "/(1 - " + qterm_string(d.m, d.q) + ")";
    }
    return s;
  }

  std::string SeriesRef::to_string() const {
    std::string s = fn == series_fn::G ? "G" : "E";
    auto i = affine_string(index);
    if (index.alpha != 0 && (index.beta != 0 || index.alpha != 1)) {
      i = "(" + i + ")";
    }
    s += "[" + std::string(overlined ? "bar" : "") + i + "_" + colour + "]";
    if (subst && !subst->is_identity()) {
      s += "{" + subst->to_string() + "}";
    }
    return s;
  }

  std::string Relation::to_string() const {
    auto side = [](std::vector<EquationTerm> const& terms) {
      if (terms.empty()) {
        return std::string("0");
      }
      std::string s;
      for (auto const& t : terms) {
        auto c = t.coeff.to_string();
        bool negative = c == "-1";
        if (!s.empty()) {
          s += negative ? " - " : " + ";
        } else if (negative) {
          s += "-";
        }
        if (!t.ref) {
          s += negative ? "1" : c;
          continue;
        }
        if (c != "1" && !negative) {
          bool sum = t.coeff.num.size() == 1 && t.coeff.num[0].size() > 1
                     && t.coeff.den.empty();
          s += (sum ? "(" + c + ")" : c) + " * ";
        }
        s += t.ref->to_string();
      }
      return s;
    };
    return side(lhs) + " = " + side(rhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Checking
  ////////////////////////////////////////////////////////////////////////

  std::pair<Series, Series> evaluate_relation(Relation const&        r,
                                              RecurrenceState const& state,
                                              std::int64_t           k) {
    auto const qmax   = state.qmax();
    auto const degmax = state.degmax();
    auto       side   = [&](std::vector<EquationTerm> const& terms) {
      Series total(qmax, degmax);
      for (auto const& t : terms) {
        Series value = Series::one(qmax, degmax);
        if (t.ref) {
          auto const& ref = *t.ref;
          auto        c   = state.system().colour_index(ref.colour);
          auto        i   = ref.index.at(k);
          value           = ref.fn == series_fn::G
                                ? state.G(c, i)
                                : state.E(c, i, ref.overlined);
          if (ref.subst) {
            value = substitute(value, *ref.subst, qmax);
          }
        }
        if (t.coeff.num.empty() && t.coeff.den.empty()) {
          total += value;
        } else {
          total += t.coeff.expand(k, qmax, degmax) * value;
        }
      }
      return total;
    };
    return {side(r.lhs), side(r.rhs)};
  }

  EquationCheck check_equation(EquationSpec const&         spec,
                               ColouredSystem const&       sys,
                               std::size_t                 qmax,
                               std::optional<std::int64_t> k_min,
                               std::optional<std::int64_t> k_max,
                               degree_cap                  degmax) {
    EquationCheck result;
    result.k_min = k_min.value_or(spec.k_min);
    result.k_max = k_max.value_or(spec.k_max);
    result.qmax  = qmax;
    if (result.k_min > result.k_max) {
      throw invalid_argument("empty range of k for " + spec.name);
    }
    RecurrenceState state(sys, qmax, degmax);
    for (auto k = result.k_min; k <= result.k_max; ++k) {
      for (std::size_t r = 0; r < spec.relations.size(); ++r) {
        auto [lhs, rhs] = evaluate_relation(spec.relations[r], state, k);
        if (auto diff = first_difference(lhs, rhs)) {
          result.holds            = false;
          result.failing_k        = k;
          result.failing_relation = r;
          result.mismatch         = diff;
          return result;
        }
      }
    }
    return result;
  }

  EquationCheck check_equation(EquationSpec const&         spec,
                               std::size_t                 qmax,
                               std::optional<std::int64_t> k_min,
                               std::optional<std::int64_t> k_max) {
    return check_equation(spec, build_preset(spec.system), qmax, k_min, k_max);
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Coefficient one() {
      return {};
    }

    Coefficient mono(Monomial m, Affine q, integer c = 1) {
      return {{{QTerm{std::move(c), std::move(m), q}}}, {}};
    }

    EquationTerm ref(series_fn                      fn,
                     std::string                    colour,
                     Affine                         index,
                     Coefficient                    c     = one(),
                     std::optional<SubstitutionMap> subst = std::nullopt) {
      return {std::move(c),
              SeriesRef{fn, std::move(colour), index, false, std::move(subst)}};
    }

    EquationTerm G(std::string                    colour,
                   Affine                         index,
                   Coefficient                    c     = one(),
                   std::optional<SubstitutionMap> subst = std::nullopt) {
      return ref(series_fn::G, std::move(colour), index, std::move(c),
                 std::move(subst));
    }

    EquationTerm E(std::string colour, Affine index, Coefficient c = one()) {
      return ref(series_fn::E, std::move(colour), index, std::move(c));
    }

    SubstitutionMap images(std::vector<std::tuple<char const*, Monomial,
                                                  std::int64_t>> const& list) {
      SubstitutionMap s;
      for (auto const& [v, m, shift] : list) {
        s.images[variable(v)] = VarImage{m, shift};
      }
      return s;
    }

    std::vector<EquationSpec> make_registry() {
      Monomial const a  = Monomial::of("a");
      Monomial const b  = Monomial::of("b");
      Monomial const c  = Monomial::of("c");
      Monomial const d  = Monomial::of("d");
      Monomial const ab = a * b;
      Monomial const ad = a * d;
      Monomial const unit;
      Affine const   k{1, 0};

      std::vector<EquationSpec> v;

      v.push_back({"schur-rec-a",
                   "G[k_a] = G[k_ab] + a q^k G[(k-1)_a]",
                   "schur-weighted",
                   1,
                   15,
                   {{{G("a", k)}, {G("ab", k), G("a", {1, -1}, mono(a, k))}}}});
      v.push_back({"schur-rec-b",
                   "G[k_b] = G[k_a] + b q^k G[(k-1)_b]",
                   "schur-weighted",
                   1,
                   15,
                   {{{G("b", k)}, {G("a", k), G("b", {1, -1}, mono(b, k))}}}});
      v.push_back(
          {"schur-rec-ab",
           "G[k_ab] = G[(k-1)_b] + ab q^k G[(k-2)_b]",
           "schur-weighted",
           1,
           15,
           {{{G("ab", k)}, {G("b", {1, -1}), G("b", {1, -2}, mono(ab, k))}}}});
      {
        EquationSpec init{"schur-init-zero", "G[0_x] = 1 for every colour x",
                          "schur-weighted", 0, 0, {}};
        EquationSpec neg{"schur-init-minus-one",
                         "G[-1_x] = 0 for every colour x",
                         "schur-weighted",
                         0,
                         0,
                         {}};
        for (auto x : {"a", "b", "ab"}) {
          init.relations.push_back({{G(x, {0, 0})}, {{one(), std::nullopt}}});
          neg.relations.push_back({{G(x, {0, -1})}, {}});
        }
        v.push_back(init);
        v.push_back(neg);
      }
      v.push_back(
          {"schur-functional",
           "G[(k+2)_ab](q;a,b) = (1+aq)(1+bq) G[k_b](q;aq,bq)",
           "schur-weighted",
           0,
           12,
           {{{G("ab", {1, 2})},
             {G("b",
                k,
                Coefficient{{{QTerm{1, unit, {}}, QTerm{1, a, {0, 1}}},
                             {QTerm{1, unit, {}}, QTerm{1, b, {0, 1}}}},
                            {}},
                images({{"a", a, 1}, {"b", b, 1}}))}}}});

      v.push_back({"siladic-rec-ab-odd",
                   "G[(2k+1)_ab] = G[2k_b] + ab q^(2k+1) G[(2k-1)_a]",
                   "siladic-weighted",
                   1,
                   12,
                   {{{G("ab", {2, 1})},
                     {G("b", {2, 0}), G("a", {2, -1}, mono(ab, {2, 1}))}}}});
      auto swap = images({{"a", b, 0}, {"b", a, 1}});
      auto one_plus_aq
          = Coefficient{{{QTerm{1, unit, {}}, QTerm{1, a, {0, 1}}}}, {}};
      struct proof_eq {
        char const* name;
        char const* lhs;
        Affine      lhs_index;
        char const* rhs;
        Affine      rhs_index;
      };
      proof_eq const proofs[] = {
          {"siladic-proof-1", "ab", {2, 1}, "a", {2, 0}},
          {"siladic-proof-2", "b2", {2, 1}, "b", {2, 0}},
          {"siladic-proof-3", "ab", {2, 2}, "a", {2, 1}},
          {"siladic-proof-4", "a2", {2, 1}, "b", {2, -1}},
      };
      for (auto const& p : proofs) {
        v.push_back({p.name,
                     "G[(" + affine_string(p.lhs_index) + ")_" + p.lhs
                         + "](q;a,b) = (1+aq) G[("
                         + affine_string(p.rhs_index) + ")_" + p.rhs
                         + "](q;b,aq)",
                     "siladic-weighted",
                     1,
                     12,
                     {{{G(p.lhs, p.lhs_index)},
                       {G(p.rhs, p.rhs_index, one_plus_aq, swap)}}}});
      }

      v.push_back(
          {"primc-eg-relation",
           "G[k_a] - G[(k-1)_d] = E[k_a] = a q^k (E[(k-1)_b] + G[(k-2)_d])",
           "primc-weighted",
           2,
           15,
           {{{G("a", k), G("d", {1, -1}, mono(unit, {}, -1))}, {E("a", k)}},
            {{E("a", k)},
             {E("b", {1, -1}, mono(a, k)), G("d", {1, -2}, mono(a, k))}}}});
      v.push_back(
          {"primc-qdiff",
           "(1-cq^k) G[k_d] = (1-cq^2k)/(1-q^k) G[(k-1)_d] + "
           "(aq^k+dq^k+adq^2k)/(1-q^(k-1)) G[(k-2)_d] + "
           "adq^(2k-1)/(1-q^(k-2)) G[(k-3)_d]",
           "primc-weighted",
           3,
           15,
           {{{G("d",
                k,
                Coefficient{{{QTerm{1, unit, {}}, QTerm{-1, c, k}}}, {}})},
             {G("d",
                {1, -1},
                Coefficient{{{QTerm{1, unit, {}}, QTerm{-1, c, {2, 0}}}},
                            {QBinomial{unit, k}}}),
              G("d",
                {1, -2},
                Coefficient{
                    {{QTerm{1, a, k}, QTerm{1, d, k}, QTerm{1, ad, {2, 0}}}},
                    {QBinomial{unit, {1, -1}}}}),
              G("d",
                {1, -3},
                Coefficient{{{QTerm{1, ad, {2, -1}}}},
                            {QBinomial{unit, {1, -2}}}})}}}});
      return v;
    }
  }  // namespace

  std::vector<EquationSpec> const& builtin_equations() {
    static std::vector<EquationSpec> const registry = make_registry();
    return registry;
  }

  EquationSpec const& builtin_equation(std::string_view name) {
    for (auto const& e : builtin_equations()) {
      if (e.name == name) {
        return e;
      }
    }
    throw unknown_name("unknown equation \"" + std::string(name) + "\"");
  }

}  // namespace wwords
