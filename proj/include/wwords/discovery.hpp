#ifndef WWORDS_DISCOVERY_HPP_
#define WWORDS_DISCOVERY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wwords/io.hpp"
#include "wwords/product.hpp"
#include "wwords/series.hpp"
#include "wwords/systems.hpp"

namespace wwords {

  // A series written as an initial run of single factors followed by
  // factors repeating with period `period`.
  struct PeriodicProduct {
    std::size_t period  = 1;
    std::size_t initial = 0;  // length of the non-periodic segment
    ProductSpec spec;
    // Number of factors in one period (the initial segment not counted).
    std::size_t factors_per_period = 0;
  };

  // Euler factorization with (1 - m q^n)^{-e} (1 - m^2 q^{2n})^{e} merged
  // into (1 + m q^n)^e, searched for a period m <= qmax/3 after an initial
  // segment of at most m exponents. The returned spec always re-expands to
  // f up to qmax.
  std::optional<PeriodicProduct> recognize_periodic_product(Series const& f,
                                                            std::size_t qmax);

  struct RelationCandidate {
    SubstitutionMap                substitution;
    bool                           product_like = false;
    std::optional<PeriodicProduct> product;
  };

  // Specializes every colour variable other than the primaries to monomials
  // in the primaries with exponents <= max_exponent and keeps the
  // specializations whose Euler factors all have degree <= 2*max_exponent.
  // Returns them product-like first, then by fewer factors per period, ties
  // in search order. Throws search_space_too_large above 10^6 candidates.
  std::vector<RelationCandidate>
  search_relations(ColouredSystem const&           sys,
                   std::vector<std::string> const& primaries,
                   std::size_t                     qmax,
                   unsigned                        max_exponent);

  json periodic_product_to_json(PeriodicProduct const& p);
  json candidate_to_json(RelationCandidate const& c);

}  // namespace wwords

#endif  // WWORDS_DISCOVERY_HPP_
