#include "wwords/product.hpp"

#include <sstream>

#include "wwords/errors.hpp"

namespace wwords {

  ProductSpec ProductSpec::inverse() const {
    ProductSpec out = *this;
    for (auto& f : out.factors) {
      f.power = -f.power;
    }
    return out;
  }

  std::string ProductSpec::to_string() const {
    if (factors.empty()) {
      return "1";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& f : factors) {
      if (!first) {
        os << " ";
      }
      first = false;
      // (1 - c q^s)^{-power} over the progression is (c q^s; q^mod)^{-power}
      auto qpow = [](std::size_t e) {
        return e == 1 ? std::string("q") : "q^" + std::to_string(e);
      };
      std::string base = f.start == 0 ? "" : qpow(f.start);
      if (!f.coeff.is_one()) {
        base = f.coeff.to_string() + (base.empty() ? "" : "*" + base);
      }
      os << "(" << (f.sign < 0 ? "-" : "") << (base.empty() ? "1" : base)
         << ";" << qpow(f.mod) << ")_";
      if (f.count) {
        os << *f.count;
      } else {
        os << "inf";
      }
      if (f.power != -1) {
        os << "^" << -f.power;
      }
    }
    return os.str();
  }

  ProductFactor pochhammer(std::int64_t    sign,
                           Monomial const& c,
                           std::size_t     start,
                           std::size_t     mod,
                           std::int64_t    exponent) {
    return ProductFactor{sign, c, start, mod, -exponent, std::nullopt};
  }

  Series product_expand(ProductSpec const& p,
                        std::size_t        qmax,
                        degree_cap         degmax) {
    for (auto const& f : p.factors) {
      if (f.mod == 0) {
        throw invalid_product("product factor modulus must be >= 1");
      }
      if (f.sign != 1 && f.sign != -1) {
        throw invalid_product("product factor sign must be +1 or -1");
      }
      if (f.start == 0 && f.coeff.degree() == 0) {
        throw invalid_product("factor (1 - c) with colour-free c has a "
                              "non-unit constant term");
      }
    }
    Series out = Series::one(qmax, degmax);
    for (auto const& f : p.factors) {
      std::size_t terms = 0;
      for (std::size_t e = f.start; e <= qmax; e += f.mod, ++terms) {
        if (f.count && terms >= *f.count) {
          break;
        }
        out.multiply_binomial(f.coeff, f.sign, e, integer(-f.power));
      }
    }
    return out;
  }

  namespace {
    std::optional<std::vector<EulerFactor>>
    factorize(Series const& f, std::optional<Monomial::exponent_type> bound) {
      if (!f[0].is_one()) {
        throw invalid_product("Euler factorization needs constant term 1, got "
                              + f[0].to_string());
      }
      std::vector<EulerFactor> table;
      Series                   work = f;
      for (std::size_t n = 1; n <= work.qmax(); ++n) {
        while (!work[n].is_zero()) {
          auto terms         = work[n].display_terms();
          auto const& [m, c] = terms.front();
          if (bound && m.degree() > *bound) {
            return std::nullopt;
          }
          if (c > INT64_MAX || c < INT64_MIN) {
            throw invalid_product("Euler exponent out of range at q^"
                                  + std::to_string(n));
          }
          auto e = static_cast<std::int64_t>(c);
          table.push_back(EulerFactor{1, m, n, e});
          // multiply by (1 - m q^n)^e to cancel the term
          work.multiply_binomial(m, 1, n, integer(e));
        }
      }
      return table;
    }
  }  // namespace

  std::vector<EulerFactor> euler_factorize(Series const& f) {
    return *factorize(f, std::nullopt);
  }

  std::optional<std::vector<EulerFactor>>
  euler_factorize_bounded(Series const& f, Monomial::exponent_type max_degree) {
    return factorize(f, max_degree);
  }

  ProductSpec to_product_spec(std::vector<EulerFactor> const& table) {
    ProductSpec out;
    for (auto const& t : table) {
      out.factors.push_back(
          ProductFactor{t.sign, t.monomial, t.n, 1, t.exponent, 1});
    }
    return out;
  }

}  // namespace wwords
