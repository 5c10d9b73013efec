#ifndef WWORDS_MONOMIAL_HPP_
#define WWORDS_MONOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace wwords {

  using integer = boost::multiprecision::cpp_int;

  // Interned variable identifiers. Ids are assigned on first use and never
  // change; display order is by name.
  using var_type = std::uint16_t;

  var_type           variable(std::string_view name);
  std::string const& variable_name(var_type v);
  bool               variable_name_less(var_type x, var_type y);

  class Monomial {
   public:
    using exponent_type = std::uint32_t;
    using entry_type    = std::pair<var_type, exponent_type>;

    Monomial() = default;
    Monomial(std::initializer_list<std::pair<std::string_view, exponent_type>>
                 exps);

    static Monomial of(std::string_view name, exponent_type e = 1);
    static Monomial of(var_type v, exponent_type e = 1);
    // Canonicalizes: merges repeated variables and drops zero exponents.
    static Monomial from_entries(std::vector<entry_type> entries);

    [[nodiscard]] exponent_type exponent(var_type v) const noexcept;
    [[nodiscard]] exponent_type degree() const noexcept {
      return _degree;
    }
    [[nodiscard]] bool is_one() const noexcept {
      return _entries.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _entries.size();
    }

    auto begin() const noexcept {
      return _entries.begin();
    }
    auto end() const noexcept {
      return _entries.end();
    }

    Monomial&                     operator*=(Monomial const& other);
    friend Monomial               operator*(Monomial x, Monomial const& y) {
      x *= y;
      return x;
    }
    [[nodiscard]] Monomial pow(exponent_type e) const;
    // Drops the listed variables (sets them to 1).
    [[nodiscard]] Monomial without(std::vector<var_type> const& vars) const;
    [[nodiscard]] bool     divides(Monomial const& other) const noexcept;

    // "1", "a", "a^2*b"; variables in name order.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const noexcept;

    friend bool operator==(Monomial const& x, Monomial const& y) noexcept {
      return x._entries == y._entries;
    }
    // Canonical storage order: graded, then by (id, exponent) entries. Stable
    // for the lifetime of the process but unrelated to names.
    friend std::strong_ordering operator<=>(Monomial const& x,
                                            Monomial const& y) noexcept;

   private:
    boost::container::small_vector<entry_type, 4> _entries;  // sorted by id
    exponent_type                                 _degree = 0;
  };

  // Graded lexicographic order over variable names: lower degree first, then
  // the monomial with the larger exponent on the earliest variable. Gives
  // 1 < a < b < a^2 < a*b < b^2.
  bool display_less(Monomial const& x, Monomial const& y);

  struct MonomialHash {
    std::size_t operator()(Monomial const& m) const noexcept {
      return m.hash();
    }
  };

}  // namespace wwords

#endif  // WWORDS_MONOMIAL_HPP_
