#ifndef WWORDS_EQUATIONS_HPP_
#define WWORDS_EQUATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wwords/recurrence.hpp"
#include "wwords/series.hpp"

namespace wwords {

  // alpha*k + beta
  struct Affine {
    std::int64_t alpha = 0;
    std::int64_t beta  = 0;

    [[nodiscard]] std::int64_t at(std::int64_t k) const noexcept {
      return alpha * k + beta;
    }
    friend bool operator==(Affine const&, Affine const&) = default;
  };

  // c * m * q^{q(k)}
  struct QTerm {
    integer  c = 1;
    Monomial m;
    Affine   q;

    friend bool operator==(QTerm const&, QTerm const&) = default;
  };

  // (1 - m * q^{q(k)})
  struct QBinomial {
    Monomial m;
    Affine   q;

    friend bool operator==(QBinomial const&, QBinomial const&) = default;
  };

  // Product of the numerator sums over the product of the denominator
  // binomials; the empty coefficient is 1.
  struct Coefficient {
    std::vector<std::vector<QTerm>> num;
    std::vector<QBinomial>          den;

    // Expansion at k. Throws singular_coefficient when a denominator has no
    // constant term 1 at this k.
    [[nodiscard]] Series expand(std::int64_t k,
                                std::size_t  qmax,
                                degree_cap   degmax) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Coefficient const&, Coefficient const&) = default;
  };

  enum class series_fn { G, E };

  struct SeriesRef {
    series_fn                      fn = series_fn::G;
    std::string                    colour;
    Affine                         index;
    bool                           overlined = false;
    std::optional<SubstitutionMap> subst;

    [[nodiscard]] std::string to_string() const;
  };

  // coefficient * ref, or the bare coefficient when ref is empty.
  struct EquationTerm {
    Coefficient              coeff;
    std::optional<SeriesRef> ref;
  };

  struct Relation {
    std::vector<EquationTerm> lhs;
    std::vector<EquationTerm> rhs;

    [[nodiscard]] std::string to_string() const;
  };

  struct EquationSpec {
    std::string           name;
    std::string           description;
    std::string           system;  // preset name
    std::int64_t          k_min = 0;
    std::int64_t          k_max = 0;
    std::vector<Relation> relations;
  };

  struct EquationCheck {
    bool                        holds = true;
    std::int64_t                k_min = 0;
    std::int64_t                k_max = 0;
    std::size_t                 qmax  = 0;
    std::optional<std::int64_t> failing_k;
    std::size_t                 failing_relation = 0;
    std::optional<Mismatch>     mismatch;
  };

  // Both sides of relation r at k as truncated series.
  std::pair<Series, Series> evaluate_relation(Relation const&        r,
                                              RecurrenceState const& state,
                                              std::int64_t           k);

  // Checks every relation for k in [k_min, k_max] (the spec's range unless
  // overridden) against the recurrence tables of sys.
  EquationCheck check_equation(EquationSpec const&         spec,
                               ColouredSystem const&       sys,
                               std::size_t                 qmax,
                               std::optional<std::int64_t> k_min = std::nullopt,
                               std::optional<std::int64_t> k_max = std::nullopt,
                               degree_cap degmax = std::nullopt);
  // As above with the spec's own preset.
  EquationCheck check_equation(EquationSpec const&         spec,
                               std::size_t                 qmax,
                               std::optional<std::int64_t> k_min = std::nullopt,
                               std::optional<std::int64_t> k_max = std::nullopt);

  std::vector<EquationSpec> const& builtin_equations();
  // Throws unknown_name.
  EquationSpec const& builtin_equation(std::string_view name);

}  // namespace wwords

#endif  // WWORDS_EQUATIONS_HPP_
