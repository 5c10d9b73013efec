#ifndef WWORDS_POLYNOMIAL_HPP_
#define WWORDS_POLYNOMIAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wwords/monomial.hpp"

namespace wwords {

  // Sparse polynomial with arbitrary-precision integer coefficients. Terms are
  // kept sorted in canonical monomial order with no zero coefficients.
  class Polynomial {
   public:
    using term_type = std::pair<Monomial, integer>;

    Polynomial() = default;
    Polynomial(integer c);  // NOLINT(runtime/explicit)
    Polynomial(int c) : Polynomial(integer(c)) {}  // NOLINT
    explicit Polynomial(Monomial m, integer c = 1);

    static Polynomial from_terms(std::vector<term_type> terms);

    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }
    auto begin() const noexcept {
      return _terms.begin();
    }
    auto end() const noexcept {
      return _terms.end();
    }

    [[nodiscard]] integer coefficient(Monomial const& m) const;
    [[nodiscard]] Monomial::exponent_type max_degree() const noexcept;
    [[nodiscard]] bool all_nonnegative() const noexcept;

    Polynomial& operator+=(Polynomial const& other);
    Polynomial& operator-=(Polynomial const& other);
    Polynomial  operator-() const;

    friend Polynomial operator+(Polynomial x, Polynomial const& y) {
      x += y;
      return x;
    }
    friend Polynomial operator-(Polynomial x, Polynomial const& y) {
      x -= y;
      return x;
    }
    friend Polynomial operator*(Polynomial const& x, Polynomial const& y) {
      return multiply(x, y, std::nullopt);
    }
    friend bool operator==(Polynomial const&, Polynomial const&) = default;

    // Product with every term of total degree above degmax dropped.
    static Polynomial multiply(Polynomial const&                      x,
                               Polynomial const&                      y,
                               std::optional<Monomial::exponent_type> degmax);

    // c * m * (*this), truncated at degmax.
    [[nodiscard]] Polynomial
    scaled(Monomial const&                        m,
           integer const&                         c,
           std::optional<Monomial::exponent_type> degmax = std::nullopt) const;
    // this += c * m * other, truncated at degmax.
    void add_scaled(Polynomial const&                      other,
                    Monomial const&                        m,
                    integer const&                         c,
                    std::optional<Monomial::exponent_type> degmax);
    [[nodiscard]] Polynomial
    truncated(Monomial::exponent_type degmax) const;

    // Terms in display order (graded lexicographic by variable name).
    [[nodiscard]] std::vector<term_type> display_terms() const;
    [[nodiscard]] std::string            to_string() const;

   private:
    std::vector<term_type> _terms;
  };

}  // namespace wwords

#endif  // WWORDS_POLYNOMIAL_HPP_
