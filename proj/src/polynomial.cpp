#include "wwords/polynomial.hpp"

#include <algorithm>

namespace wwords {

  Polynomial::Polynomial(integer c) {
    if (c != 0) {
      _terms.emplace_back(Monomial(), std::move(c));
    }
  }

  Polynomial::Polynomial(Monomial m, integer c) {
    if (c != 0) {
      _terms.emplace_back(std::move(m), std::move(c));
    }
  }

  Polynomial Polynomial::from_terms(std::vector<term_type> terms) {
    std::sort(terms.begin(), terms.end(), [](auto const& x, auto const& y) {
      return x.first < y.first;
    });
    Polynomial p;
    for (auto& t : terms) {
      if (!p._terms.empty() && p._terms.back().first == t.first) {
        p._terms.back().second += t.second;
      } else {
        if (!p._terms.empty() && p._terms.back().second == 0) {
          p._terms.pop_back();
        }
        p._terms.push_back(std::move(t));
      }
    }
    if (!p._terms.empty() && p._terms.back().second == 0) {
      p._terms.pop_back();
    }
    return p;
  }

  bool Polynomial::is_one() const noexcept {
    return _terms.size() == 1 && _terms[0].first.is_one()
           && _terms[0].second == 1;
  }

  integer Polynomial::coefficient(Monomial const& m) const {
    auto it = std::lower_bound(
        _terms.begin(), _terms.end(), m, [](auto const& t, Monomial const& k) {
          return t.first < k;
        });
    if (it != _terms.end() && it->first == m) {
      return it->second;
    }
    return 0;
  }

  Monomial::exponent_type Polynomial::max_degree() const noexcept {
    // canonical order is graded, so the last term has the largest degree
    return _terms.empty() ? 0 : _terms.back().first.degree();
  }

  bool Polynomial::all_nonnegative() const noexcept {
    return std::all_of(_terms.begin(), _terms.end(), [](auto const& t) {
      return t.second > 0;
    });
  }

  namespace {
    template <typename Combine>
    std::vector<Polynomial::term_type>
    merge_terms(std::vector<Polynomial::term_type> const& x,
                std::vector<Polynomial::term_type> const& y,
                Combine&&                                 combine) {
      std::vector<Polynomial::term_type> out;
      out.reserve(x.size() + y.size());
      auto i = x.begin();
      auto j = y.begin();
      while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
          out.emplace_back(j->first, combine(integer(0), j->second));
          ++j;
        } else {
          integer c = combine(i->second, j->second);
          if (c != 0) {
            out.emplace_back(i->first, std::move(c));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }
  }  // namespace

  Polynomial& Polynomial::operator+=(Polynomial const& other) {
    if (other._terms.empty()) {
      return *this;
    }
    if (_terms.empty()) {
      _terms = other._terms;
      return *this;
    }
    _terms = merge_terms(
        _terms, other._terms, [](integer const& a, integer const& b) {
          return integer(a + b);
        });
    return *this;
  }

  Polynomial& Polynomial::operator-=(Polynomial const& other) {
    if (other._terms.empty()) {
      return *this;
    }
    _terms = merge_terms(
        _terms, other._terms, [](integer const& a, integer const& b) {
          return integer(a - b);
        });
    return *this;
  }

  Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p._terms) {
      t.second = -t.second;
    }
    return p;
  }

  Polynomial
  Polynomial::multiply(Polynomial const&                      x,
                       Polynomial const&                      y,
                       std::optional<Monomial::exponent_type> degmax) {
    if (x.is_zero() || y.is_zero()) {
      return {};
    }
    if (y.size() == 1) {
      return x.scaled(y._terms[0].first, y._terms[0].second, degmax);
    }
    if (x.size() == 1) {
      return y.scaled(x._terms[0].first, x._terms[0].second, degmax);
    }
    std::vector<term_type> terms;
    terms.reserve(x.size() * y.size());
    for (auto const& [mx, cx] : x._terms) {
      for (auto const& [my, cy] : y._terms) {
        if (degmax && mx.degree() + my.degree() > *degmax) {
          // y is graded ascending
          break;
        }
        terms.emplace_back(mx * my, cx * cy);
      }
    }
    return from_terms(std::move(terms));
  }

  Polynomial
  Polynomial::scaled(Monomial const&                        m,
                     integer const&                         c,
                     std::optional<Monomial::exponent_type> degmax) const {
    Polynomial p;
    if (c == 0) {
      return p;
    }
    p._terms.reserve(_terms.size());
    for (auto const& [mx, cx] : _terms) {
      if (degmax && mx.degree() + m.degree() > *degmax) {
        break;
      }
      p._terms.emplace_back(mx * m, cx * c);
    }
    // multiplying by a monomial preserves the degree grading but may reorder
    // equal-degree terms
    std::sort(p._terms.begin(), p._terms.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    return p;
  }

  void Polynomial::add_scaled(Polynomial const&                      other,
                              Monomial const&                        m,
                              integer const&                         c,
                              std::optional<Monomial::exponent_type> degmax) {
    if (m.is_one() && c == 1) {
      if (degmax && other.max_degree() > *degmax) {
        *this += other.truncated(*degmax);
      } else {
        *this += other;
      }
      return;
    }
    *this += other.scaled(m, c, degmax);
  }

  Polynomial Polynomial::truncated(Monomial::exponent_type degmax) const {
    Polynomial p;
    for (auto const& t : _terms) {
      if (t.first.degree() > degmax) {
        break;
      }
      p._terms.push_back(t);
    }
    return p;
  }

  std::vector<Polynomial::term_type> Polynomial::display_terms() const {
    std::vector<term_type> out(_terms.begin(), _terms.end());
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return display_less(x.first, y.first);
    });
    return out;
  }

  std::string Polynomial::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [m, c] : display_terms()) {
      integer mag = c < 0 ? integer(-c) : c;
      if (out.empty()) {
        if (c < 0) {
          out += "-";
        }
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (m.is_one()) {
        out += mag.str();
      } else if (mag == 1) {
        out += m.to_string();
      } else {
        out += mag.str() + "*" + m.to_string();
      }
    }
    return out;
  }

}  // namespace wwords
