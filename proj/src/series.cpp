#include "wwords/series.hpp"

#include <algorithm>
#include <sstream>

#include "wwords/errors.hpp"

namespace wwords {

  Series::Series(std::size_t qmax, degree_cap degmax)
      : _coeffs(qmax + 1), _degmax(degmax) {}

  Series Series::one(std::size_t qmax, degree_cap degmax) {
    Series s(qmax, degmax);
    s._coeffs[0] = Polynomial(1);
    return s;
  }

  Series Series::term(std::size_t     qmax,
                      degree_cap      degmax,
                      std::size_t     n,
                      Monomial const& m,
                      integer const&  c) {
    Series s(qmax, degmax);
    s.add_term(n, m, c);
    return s;
  }

  bool Series::is_zero() const noexcept {
    return std::all_of(_coeffs.begin(), _coeffs.end(), [](auto const& p) {
      return p.is_zero();
    });
  }

  bool Series::is_one() const noexcept {
    if (!_coeffs[0].is_one()) {
      return false;
    }
    return std::all_of(_coeffs.begin() + 1, _coeffs.end(), [](auto const& p) {
      return p.is_zero();
    });
  }

  std::size_t Series::term_count() const noexcept {
    std::size_t total = 0;
    for (auto const& p : _coeffs) {
      total += p.size();
    }
    return total;
  }

  void Series::add_term(std::size_t n, Monomial const& m, integer const& c) {
    if (n > qmax() || (_degmax && m.degree() > *_degmax) || c == 0) {
      return;
    }
    _coeffs[n] += Polynomial(m, c);
  }

  void Series::add_coefficient(std::size_t n, Polynomial const& p) {
    if (n > qmax()) {
      return;
    }
    if (_degmax && p.max_degree() > *_degmax) {
      _coeffs[n] += p.truncated(*_degmax);
    } else {
      _coeffs[n] += p;
    }
  }

  void Series::check_compatible(Series const& other) const {
    if (qmax() != other.qmax()) {
      throw incompatible_truncation(
          "series truncated at different orders (q^" + std::to_string(qmax())
          + " and q^" + std::to_string(other.qmax()) + ")");
    }
  }

  Series& Series::operator+=(Series const& other) {
    check_compatible(other);
    _degmax = min_cap(_degmax, other._degmax);
    for (std::size_t n = 0; n < _coeffs.size(); ++n) {
      add_coefficient(n, other._coeffs[n]);
    }
    if (_degmax) {
      for (auto& p : _coeffs) {
        if (p.max_degree() > *_degmax) {
          p = p.truncated(*_degmax);
        }
      }
    }
    return *this;
  }

  Series& Series::operator-=(Series const& other) {
    *this += -other;
    return *this;
  }

  Series Series::operator-() const {
    Series s = *this;
    for (auto& p : s._coeffs) {
      p = -p;
    }
    return s;
  }

  Series operator*(Series const& x, Series const& y) {
    x.check_compatible(y);
    Series out(x.qmax(), min_cap(x._degmax, y._degmax));
    for (std::size_t i = 0; i <= x.qmax(); ++i) {
      if (x._coeffs[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; i + j <= x.qmax(); ++j) {
        if (y._coeffs[j].is_zero()) {
          continue;
        }
        out._coeffs[i + j]
            += Polynomial::multiply(x._coeffs[i], y._coeffs[j], out._degmax);
      }
    }
    return out;
  }

  Series Series::shifted(std::size_t     shift,
                         Monomial const& m,
                         integer const&  c) const {
    Series out(qmax(), _degmax);
    out.add_shifted(*this, shift, m, c);
    return out;
  }

  void Series::add_shifted(Series const&   other,
                           std::size_t     shift,
                           Monomial const& m,
                           integer const&  c) {
    check_compatible(other);
    _degmax = min_cap(_degmax, other._degmax);
    for (std::size_t n = 0; n + shift <= qmax(); ++n) {
      if (!other._coeffs[n].is_zero()) {
        _coeffs[n + shift].add_scaled(other._coeffs[n], m, c, _degmax);
      }
    }
  }

  Series Series::truncated(std::size_t qmax, degree_cap degmax) const {
    degmax = min_cap(degmax, _degmax);
    Series out(qmax, degmax);
    for (std::size_t n = 0; n <= std::min(qmax, this->qmax()); ++n) {
      out.add_coefficient(n, _coeffs[n]);
    }
    return out;
  }

  void Series::multiply_binomial(Monomial const& m,
                                 std::int64_t    sign,
                                 std::size_t     e,
                                 integer const&  power) {
    if (power == 0) {
      return;
    }
    if (e == 0 && m.is_one()) {
      throw invalid_product("factor (1 - c) with colour-free c has a "
                            "non-unit constant term");
    }
    if (e == 0 && power < 0 && !_degmax) {
      throw invalid_product("factor 1/(1 - c) with q-exponent 0 needs a "
                            "degree cap");
    }
    // (1 - sign*m*q^e)^power = sum_j C(power, j) (-sign)^j m^j q^{e j}
    struct Step {
      std::size_t shift;
      Monomial    mono;
      integer     coeff;
    };
    std::vector<Step> steps;
    integer           binom = 1;
    Monomial          mj;
    for (std::size_t j = 1;; ++j) {
      binom = binom * (power - static_cast<long>(j) + 1) / static_cast<long>(j);
      if (binom == 0) {
        break;
      }
      mj *= m;
      std::size_t shift = e * j;
      if (shift > qmax() || (_degmax && mj.degree() > *_degmax)) {
        break;
      }
      // (-sign)^j
      integer c = (sign > 0 && j % 2 == 1) ? integer(-binom) : binom;
      steps.push_back({shift, mj, c});
    }
    if (steps.empty()) {
      return;
    }
    Series out = *this;
    for (auto const& step : steps) {
      out.add_shifted(*this, step.shift, step.mono, step.coeff);
    }
    *this = std::move(out);
  }

  std::string Series::to_string() const {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t n = 0; n <= qmax(); ++n) {
      if (_coeffs[n].is_zero()) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      first = false;
      os << "(" << _coeffs[n].to_string() << ")";
      if (n > 0) {
        os << "*q^" << n;
      }
    }
    if (first) {
      os << "0";
    }
    os << " + O(q^" << qmax() + 1 << ")";
    return os.str();
  }

  degree_cap min_cap(degree_cap x, degree_cap y) {
    if (!x) {
      return y;
    }
    if (!y) {
      return x;
    }
    return std::min(*x, *y);
  }

  Series series_combine(Series const& f, Series const& g, combine_kind kind) {
    return kind == combine_kind::add ? f + g : f * g;
  }

  std::optional<Mismatch> first_difference(Series const& f, Series const& g) {
    std::size_t upto = std::min(f.qmax(), g.qmax());
    for (std::size_t n = 0; n <= upto; ++n) {
      if (f[n] == g[n]) {
        continue;
      }
      auto diff = (f[n] - g[n]).display_terms();
      auto m    = diff.front().first;
      return Mismatch{n, m, f[n].coefficient(m), g[n].coefficient(m)};
    }
    return std::nullopt;
  }

  bool SubstitutionMap::is_identity() const {
    if (qpower != 1) {
      return false;
    }
    return std::all_of(images.begin(), images.end(), [](auto const& kv) {
      return kv.second.qshift == 0
             && kv.second.monomial == Monomial::of(kv.first);
    });
  }

  std::pair<Monomial, std::int64_t>
  SubstitutionMap::apply(Monomial const& m, std::int64_t n) const {
    std::vector<Monomial::entry_type> kept;
    Monomial                          image;
    std::int64_t                      exponent = n * qpower;
    for (auto const& [v, e] : m) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept.emplace_back(v, e);
      } else {
        image *= it->second.monomial.pow(e);
        exponent += it->second.qshift * static_cast<std::int64_t>(e);
      }
    }
    image *= Monomial::from_entries(std::move(kept));
    return {image, exponent};
  }

  std::string SubstitutionMap::to_string() const {
    std::vector<std::string> parts;
    if (qpower != 1) {
      parts.push_back("q -> q^" + std::to_string(qpower));
    }
    std::vector<var_type> vars;
    for (auto const& [v, img] : images) {
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end(), variable_name_less);
    for (auto v : vars) {
      auto const& img = images.at(v);
      std::string rhs = img.monomial.is_one() ? "" : img.monomial.to_string();
      if (img.qshift != 0) {
        std::string qs = img.qshift == 1 ? "q"
                                         : "q^" + std::to_string(img.qshift);
        rhs += rhs.empty() ? qs : "*" + qs;
      }
      parts.push_back(variable_name(v) + " -> " + (rhs.empty() ? "1" : rhs));
    }
    if (parts.empty()) {
      return "identity";
    }
    std::string out;
    for (auto const& p : parts) {
      out += (out.empty() ? "" : ", ") + p;
    }
    return out;
  }

  namespace {
    Series apply_substitution(Series const&          f,
                              SubstitutionMap const& s,
                              std::size_t            new_qmax) {
      if (s.qpower == 0) {
        throw invalid_argument("substitution must map q to a positive power");
      }
      degree_cap cap = f.degmax();
      if (cap) {
        for (auto const& [v, img] : s.images) {
          if (img.monomial.degree() == 0) {
            throw invalid_argument(
                "cannot specialize " + variable_name(v)
                + " to a constant on a degree-truncated series");
          }
        }
      }
      Series out(new_qmax, cap);
      for (std::size_t n = 0; n <= f.qmax(); ++n) {
        for (auto const& [m, c] : f[n]) {
          auto [image, exponent]
              = s.apply(m, static_cast<std::int64_t>(n));
          if (exponent < 0) {
            throw invalid_dilation("term " + m.to_string() + "*q^"
                                   + std::to_string(n) + " maps to q^"
                                   + std::to_string(exponent));
          }
          out.add_term(static_cast<std::size_t>(exponent), image, c);
        }
      }
      return out;
    }
  }  // namespace

  Series substitute(Series const&          f,
                    SubstitutionMap const& s,
                    std::size_t            new_qmax) {
    std::int64_t max_negative = 0;
    for (auto const& [v, img] : s.images) {
      max_negative = std::max(max_negative, -img.qshift);
    }
    if (max_negative > 0 && !f.degmax()) {
      throw invalid_argument("substitution with negative q-shifts needs a "
                             "degree-capped series");
    }
    std::int64_t determined
        = static_cast<std::int64_t>(s.qpower)
              * static_cast<std::int64_t>(f.qmax())
          - max_negative * static_cast<std::int64_t>(f.degmax().value_or(0));
    if (determined < static_cast<std::int64_t>(new_qmax)) {
      throw incompatible_truncation(
          "series known to q^" + std::to_string(f.qmax())
          + " does not determine the substituted series to q^"
          + std::to_string(new_qmax));
    }
    return apply_substitution(f, s, new_qmax);
  }

  Series substitute_trusted(Series const&          f,
                            SubstitutionMap const& s,
                            std::size_t            new_qmax) {
    return apply_substitution(f, s, new_qmax);
  }

}  // namespace wwords
