#ifndef WWORDS_SERIES_HPP_
#define WWORDS_SERIES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wwords/polynomial.hpp"

namespace wwords {

  using degree_cap = std::optional<Monomial::exponent_type>;

  // Formal power series in q truncated at q^qmax, with polynomial
  // coefficients in the colour variables, optionally truncated at total colour
  // degree degmax.
  class Series {
   public:
    explicit Series(std::size_t qmax, degree_cap degmax = std::nullopt);

    static Series one(std::size_t qmax, degree_cap degmax = std::nullopt);
    // c * m * q^n (zero when n > qmax or deg m > degmax).
    static Series term(std::size_t     qmax,
                       degree_cap      degmax,
                       std::size_t     n,
                       Monomial const& m,
                       integer const&  c = 1);

    [[nodiscard]] std::size_t qmax() const noexcept {
      return _coeffs.size() - 1;
    }
    [[nodiscard]] degree_cap degmax() const noexcept {
      return _degmax;
    }
    [[nodiscard]] Polynomial const& operator[](std::size_t n) const {
      return _coeffs.at(n);
    }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    // Number of stored (q-exponent, monomial) terms.
    [[nodiscard]] std::size_t term_count() const noexcept;

    // Adds c * m * q^n, respecting both truncations.
    void add_term(std::size_t n, Monomial const& m, integer const& c);
    void add_coefficient(std::size_t n, Polynomial const& p);

    Series& operator+=(Series const& other);
    Series& operator-=(Series const& other);
    Series  operator-() const;
    friend Series operator+(Series x, Series const& y) {
      x += y;
      return x;
    }
    friend Series operator-(Series x, Series const& y) {
      x -= y;
      return x;
    }
    friend Series operator*(Series const& x, Series const& y);
    friend bool   operator==(Series const& x, Series const& y) {
      return x._coeffs == y._coeffs;
    }

    // c * m * q^shift * (*this)
    [[nodiscard]] Series shifted(std::size_t     shift,
                                 Monomial const& m = {},
                                 integer const&  c = 1) const;
    // this += c * m * q^shift * other
    void add_shifted(Series const&   other,
                     std::size_t     shift,
                     Monomial const& m = {},
                     integer const&  c = 1);
    [[nodiscard]] Series truncated(std::size_t qmax,
                                   degree_cap  degmax = std::nullopt) const;

    // Multiplies in place by (1 - m q^e)^power for any integer power, using
    // the generalized binomial expansion. e = 0 needs deg m >= 1 and a degree
    // cap when power < 0.
    void multiply_binomial(Monomial const& m,
                           std::int64_t    sign,
                           std::size_t     e,
                           integer const&  power);

    [[nodiscard]] std::string to_string() const;

   private:
    std::vector<Polynomial> _coeffs;
    degree_cap              _degmax;

    void check_compatible(Series const& other) const;
  };

  enum class combine_kind { add, mul };

  // Sum or truncated product; the result degree cap is the smaller of the two.
  Series series_combine(Series const& f, Series const& g, combine_kind kind);

  // Degree cap of a combination: min of the caps, absent when both absent.
  degree_cap min_cap(degree_cap x, degree_cap y);

  struct Mismatch {
    std::size_t n;
    Monomial    monomial;
    integer     lhs;
    integer     rhs;
  };

  // First differing coefficient in (q-exponent, display monomial) order,
  // comparing up to the smaller qmax.
  std::optional<Mismatch> first_difference(Series const& f, Series const& g);

  // Image of a variable under a substitution: v -> monomial * q^qshift.
  struct VarImage {
    Monomial     monomial;
    std::int64_t qshift = 0;
  };

  // q -> q^qpower together with per-variable images; unmapped variables are
  // left unchanged.
  struct SubstitutionMap {
    std::uint32_t                qpower = 1;
    std::map<var_type, VarImage> images;

    [[nodiscard]] bool is_identity() const;
    // Image of m * q^n; the exponent may be negative.
    [[nodiscard]] std::pair<Monomial, std::int64_t>
    apply(Monomial const& m, std::int64_t n) const;
    [[nodiscard]] std::string to_string() const;
  };

  // Applies s to every retained term and keeps exponents <= new_qmax. Checks
  // that f is determined to high enough order:
  // qpower * f.qmax - (largest negative shift) * degmax >= new_qmax, which
  // needs a degree cap whenever negative shifts occur. Throws invalid_dilation
  // on a negative output exponent.
  Series substitute(Series const&          f,
                    SubstitutionMap const& s,
                    std::size_t            new_qmax);

  // As substitute() but the caller guarantees that terms of f beyond f.qmax
  // map above new_qmax (for example from a system's minimal dilated part
  // sizes).
  Series substitute_trusted(Series const&          f,
                            SubstitutionMap const& s,
                            std::size_t            new_qmax);

}  // namespace wwords

#endif  // WWORDS_SERIES_HPP_
