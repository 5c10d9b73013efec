#include "wwords/monomial.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "wwords/errors.hpp"

namespace wwords {

  namespace {
    struct Registry {
      std::shared_mutex                            mtx;
      std::deque<std::string>                      names;
      std::unordered_map<std::string, var_type>    ids;
    };

    Registry& registry() {
      static Registry r;
      return r;
    }
  }  // namespace

  var_type variable(std::string_view name) {
    if (name.empty()) {
      throw invalid_argument("variable names must be non-empty");
    }
    auto& r = registry();
    {
      std::shared_lock lock(r.mtx);
      auto             it = r.ids.find(std::string(name));
      if (it != r.ids.end()) {
        return it->second;
      }
    }
    std::unique_lock lock(r.mtx);
    auto             it = r.ids.find(std::string(name));
    if (it != r.ids.end()) {
      return it->second;
    }
    if (r.names.size() >= 0xFFFF) {
      throw invalid_argument("too many variables");
    }
    auto id = static_cast<var_type>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(std::string(name), id);
    return id;
  }

  std::string const& variable_name(var_type v) {
    auto&            r = registry();
    std::shared_lock lock(r.mtx);
    if (v >= r.names.size()) {
      throw invalid_argument("unknown variable id " + std::to_string(v));
    }
    return r.names[v];
  }

  bool variable_name_less(var_type x, var_type y) {
    return variable_name(x) < variable_name(y);
  }

  Monomial::Monomial(
      std::initializer_list<std::pair<std::string_view, exponent_type>> exps) {
    std::vector<entry_type> entries;
    for (auto const& [name, e] : exps) {
      entries.emplace_back(variable(name), e);
    }
    *this = from_entries(std::move(entries));
  }

  Monomial Monomial::of(std::string_view name, exponent_type e) {
    return of(variable(name), e);
  }

  Monomial Monomial::of(var_type v, exponent_type e) {
    Monomial m;
    if (e != 0) {
      m._entries.emplace_back(v, e);
      m._degree = e;
    }
    return m;
  }

  Monomial Monomial::from_entries(std::vector<entry_type> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (auto const& [v, e] : entries) {
      if (e == 0) {
        continue;
      }
      if (!m._entries.empty() && m._entries.back().first == v) {
        m._entries.back().second += e;
      } else {
        m._entries.emplace_back(v, e);
      }
      m._degree += e;
    }
    return m;
  }

  Monomial::exponent_type Monomial::exponent(var_type v) const noexcept {
    for (auto const& [w, e] : _entries) {
      if (w == v) {
        return e;
      }
    }
    return 0;
  }

  Monomial& Monomial::operator*=(Monomial const& other) {
    if (other._entries.empty()) {
      return *this;
    }
    if (_entries.empty()) {
      *this = other;
      return *this;
    }
    decltype(_entries) merged;
    auto               i = _entries.begin();
    auto               j = other._entries.begin();
    while (i != _entries.end() || j != other._entries.end()) {
      if (j == other._entries.end()
          || (i != _entries.end() && i->first < j->first)) {
        merged.push_back(*i++);
      } else if (i == _entries.end() || j->first < i->first) {
        merged.push_back(*j++);
      } else {
        merged.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    _entries = std::move(merged);
    _degree += other._degree;
    return *this;
  }

  Monomial Monomial::pow(exponent_type e) const {
    Monomial m;
    if (e == 0) {
      return m;
    }
    m._entries = _entries;
    for (auto& entry : m._entries) {
      entry.second *= e;
    }
    m._degree = _degree * e;
    return m;
  }

  Monomial Monomial::without(std::vector<var_type> const& vars) const {
    Monomial m;
    for (auto const& entry : _entries) {
      if (std::find(vars.begin(), vars.end(), entry.first) == vars.end()) {
        m._entries.push_back(entry);
        m._degree += entry.second;
      }
    }
    return m;
  }

  bool Monomial::divides(Monomial const& other) const noexcept {
    for (auto const& [v, e] : _entries) {
      if (other.exponent(v) < e) {
        return false;
      }
    }
    return true;
  }

  std::string Monomial::to_string() const {
    if (_entries.empty()) {
      return "1";
    }
    std::vector<entry_type> sorted(_entries.begin(), _entries.end());
    std::sort(sorted.begin(), sorted.end(), [](auto const& x, auto const& y) {
      return variable_name_less(x.first, y.first);
    });
    std::string out;
    for (auto const& [v, e] : sorted) {
      if (!out.empty()) {
        out += '*';
      }
      out += variable_name(v);
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
    }
    return out;
  }

  std::size_t Monomial::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto const& [v, e] : _entries) {
      h ^= (static_cast<std::size_t>(v) << 32 | e) + 0x9e3779b97f4a7c15ULL
           + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::strong_ordering operator<=>(Monomial const& x,
                                   Monomial const& y) noexcept {
    if (auto c = x._degree <=> y._degree; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(x._entries.begin(),
                                                  x._entries.end(),
                                                  y._entries.begin(),
                                                  y._entries.end());
  }

  bool display_less(Monomial const& x, Monomial const& y) {
    if (x.degree() != y.degree()) {
      return x.degree() < y.degree();
    }
    std::vector<var_type> vars;
    for (auto const& [v, e] : x) {
      vars.push_back(v);
    }
    for (auto const& [v, e] : y) {
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end(), variable_name_less);
    for (auto v : vars) {
      auto ex = x.exponent(v);
      auto ey = y.exponent(v);
      if (ex != ey) {
        return ex > ey;
      }
    }
    return false;
  }

}  // namespace wwords
