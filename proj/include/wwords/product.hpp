#ifndef WWORDS_PRODUCT_HPP_
#define WWORDS_PRODUCT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wwords/series.hpp"

namespace wwords {

  // prod_{j >= 0} (1 - sign*coeff*q^{start + j*mod})^{-power}, limited to
  // `count` terms when count is set.
  struct ProductFactor {
    std::int64_t               sign  = 1;
    Monomial                   coeff;
    std::size_t                start = 1;
    std::size_t                mod   = 1;
    std::int64_t               power = 1;
    std::optional<std::size_t> count;

    friend bool operator==(ProductFactor const&, ProductFactor const&)
        = default;
  };

  struct ProductSpec {
    std::vector<ProductFactor> factors;

    // Same factors with every power negated; expands to the inverse series.
    [[nodiscard]] ProductSpec inverse() const;
    // q-Pochhammer notation, e.g. "(-a*q;q)_inf (-b*q;q)_inf".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(ProductSpec const&, ProductSpec const&) = default;
  };

  // Shorthand for (sign*c*q^start; q^mod)_inf raised to `exponent`, i.e. the
  // factor with power = -exponent. (-aq;q)_inf is pochhammer(-1, a, 1, 1).
  ProductFactor pochhammer(std::int64_t    sign,
                           Monomial const& c,
                           std::size_t     start,
                           std::size_t     mod,
                           std::int64_t    exponent = 1);

  Series product_expand(ProductSpec const& p,
                        std::size_t        qmax,
                        degree_cap         degmax = std::nullopt);

  // One factor (1 - sign*monomial*q^n)^{-exponent} of an Euler factorization.
  struct EulerFactor {
    std::int64_t sign = 1;
    Monomial     monomial;
    std::size_t  n = 0;
    std::int64_t exponent = 0;

    friend bool operator==(EulerFactor const&, EulerFactor const&) = default;
  };

  // Writes f as prod (1 - c*q^n)^{-e} to f.qmax, peeling the lowest
  // (q-exponent, display-order monomial) term each step. Every returned
  // factor has sign +1. Throws invalid_product unless the constant term is 1.
  std::vector<EulerFactor> euler_factorize(Series const& f);

  // As euler_factorize, but gives up (returns nullopt) as soon as a factor
  // monomial of degree above max_degree is needed.
  std::optional<std::vector<EulerFactor>>
  euler_factorize_bounded(Series const& f, Monomial::exponent_type max_degree);

  // Product spec with one single-term factor per Euler factor.
  ProductSpec to_product_spec(std::vector<EulerFactor> const& table);

}  // namespace wwords

#endif  // WWORDS_PRODUCT_HPP_
