#ifndef WWORDS_TESTS_PROPERTIES_HPP_
#define WWORDS_TESTS_PROPERTIES_HPP_

// Randomized algebraic properties; each check returns the number of failing
// instances out of `count`.

#include <array>
#include <cstdint>
#include <random>

#include "wwords/product.hpp"
#include "wwords/series.hpp"

namespace props {

  using namespace wwords;

  // Random series over a, b, c with small coefficients, constant term 1
  // when `unit` is set.
  inline Series random_series(std::mt19937_64& rng,
                              std::size_t      qmax,
                              degree_cap       degmax,
                              bool             unit) {
    std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2), keep(0, 2);
    Series f(qmax, degmax);
    if (unit) {
      f.add_term(0, {}, 1);
    }
    for (std::size_t n = unit ? 1 : 0; n <= qmax; ++n) {
      for (int t = 0; t < 3; ++t) {
        if (keep(rng) == 0) {
          continue;
        }
        Monomial m{{"a", static_cast<Monomial::exponent_type>(exp(rng))},
                   {"b", static_cast<Monomial::exponent_type>(exp(rng))},
                   {"c", static_cast<Monomial::exponent_type>(exp(rng))}};
        f.add_term(n, m, coeff(rng));
      }
    }
    return f;
  }

  inline ProductSpec random_product(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nf(1, 3), sign(0, 1), start(1, 4),
        mod(1, 4), power(-2, 2), var(0, 2);
    static std::array<char const*, 3> const names{"a", "b", "c"};
    ProductSpec p;
    for (int i = nf(rng); i > 0; --i) {
      ProductFactor f;
      f.sign  = sign(rng) ? 1 : -1;
      f.coeff = Monomial::of(names[var(rng)]);
      f.start = start(rng);
      f.mod   = mod(rng);
      f.power = power(rng);
      if (f.power == 0) {
        f.power = 1;
      }
      p.factors.push_back(f);
    }
    return p;
  }

  // s(f + g) = s(f) + s(g) and s(f g) = s(f) s(g) for random maps
  // q -> q^m, a -> ac q^i, b -> b^2 q^j.
  inline int substitution_homomorphism(std::uint64_t seed, int count) {
    std::mt19937_64                    rng(seed);
    std::uniform_int_distribution<int> shift(-1, 2), qp(1, 3);
    int                                failures = 0;
    for (int i = 0; i < count; ++i) {
      std::size_t const qmax = 8;
      degree_cap const  cap  = 6;
      SubstitutionMap   s;
      s.qpower = static_cast<std::uint32_t>(qp(rng));
      s.images[variable("a")] = {Monomial{{"a", 1}, {"c", 1}}, shift(rng)};
      s.images[variable("b")] = {Monomial{{"b", 2}}, shift(rng)};
      // Keep terms whose image exponent is at least their own; this is
      // additive, so it survives products, and every term beyond qmax stays
      // beyond it. Images never lower the degree, so the cap is respected
      // too.
      auto defined = [&](Series const& x) {
        Series out(qmax, cap);
        for (std::size_t n = 0; n <= qmax; ++n) {
          for (auto const& [m, c] : x[n]) {
            auto const e = static_cast<std::int64_t>(n);
            if (s.apply(m, e).second >= e) {
              out.add_term(n, m, c);
            }
          }
        }
        return out;
      };
      auto f   = defined(random_series(rng, qmax, cap, false));
      auto g   = defined(random_series(rng, qmax, cap, false));
      auto sub = [&](Series const& x) {
        return substitute_trusted(x, s, qmax);
      };
      if (!(sub(f + g) == sub(f) + sub(g)) || !(sub(f * g) == sub(f) * sub(g))) {
        ++failures;
      }
    }
    return failures;
  }

  inline int product_inverse(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    int             failures = 0;
    for (int i = 0; i < count; ++i) {
      auto p = random_product(rng);
      if (!(product_expand(p, 15, 5) * product_expand(p.inverse(), 15, 5))
               .is_one()) {
        ++failures;
      }
    }
    return failures;
  }

  inline int euler_round_trip(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    int             failures = 0;
    for (int i = 0; i < count; ++i) {
      auto f = random_series(rng, 10, 4, true);
      if (!(product_expand(to_product_spec(euler_factorize(f)), 10, 4) == f)) {
        ++failures;
      }
    }
    return failures;
  }

}  // namespace props

#endif  // WWORDS_TESTS_PROPERTIES_HPP_
