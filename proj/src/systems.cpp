#include "wwords/systems.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "wwords/errors.hpp"

namespace wwords {

  namespace {
    std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
      auto r = a % m;
      return r < 0 ? r + m : r;
    }

    std::int64_t floor_div(std::int64_t a, std::int64_t m) {
      return (a - floor_mod(a, m)) / m;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // IndexDomain / ColourDef
  ////////////////////////////////////////////////////////////////////////

  bool IndexDomain::contains(std::int64_t k) const {
    if (k < min_index) {
      return false;
    }
    auto r = static_cast<std::uint32_t>(floor_mod(k, modulus));
    if (std::find(residues.begin(), residues.end(), r) == residues.end()) {
      return false;
    }
    return std::find(forbidden.begin(), forbidden.end(), k) == forbidden.end();
  }

  std::optional<std::int64_t> IndexDomain::smallest() const {
    auto limit = min_index
                 + static_cast<std::int64_t>(modulus)
                       * static_cast<std::int64_t>(forbidden.size() + 2);
    for (auto k = min_index; k <= limit; ++k) {
      if (contains(k)) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::optional<std::int64_t>
  ColourDef::index_of(std::int64_t size) const noexcept {
    auto d = size - offset;
    if (floor_mod(d, scale) != 0) {
      return std::nullopt;
    }
    return d / scale;
  }

  ////////////////////////////////////////////////////////////////////////
  // Andrews colours
  ////////////////////////////////////////////////////////////////////////

  AndrewsColour andrews_colour_data(unsigned r, std::uint64_t i) {
    if (r == 0 || r > 16) {
      throw invalid_argument("number of primary colours must be in 1..16");
    }
    if (i == 0 || i >= (std::uint64_t(1) << r)) {
      throw invalid_argument("colour index " + std::to_string(i)
                             + " out of range 1.."
                             + std::to_string((std::uint64_t(1) << r) - 1));
    }
    AndrewsColour result;
    std::vector<Monomial::entry_type> entries;
    for (unsigned k = 1; k <= r; ++k) {
      if (i & (std::uint64_t(1) << (k - 1))) {
        entries.emplace_back(variable("u" + std::to_string(k)), 1);
        if (result.v == 0) {
          result.v = k;
        }
        result.z = k;
        ++result.w;
      }
    }
    result.weight = Monomial::from_entries(std::move(entries));
    return result;
  }

  std::string andrews_label(unsigned r, std::uint64_t i) {
    andrews_colour_data(r, i);
    std::string label;
    for (unsigned k = 1; k <= r; ++k) {
      if (i & (std::uint64_t(1) << (k - 1))) {
        label += "u" + std::to_string(k);
      }
    }
    return label;
  }

  ////////////////////////////////////////////////////////////////////////
  // ColouredSystem
  ////////////////////////////////////////////////////////////////////////

  std::size_t ColouredSystem::colour_index(std::string_view label) const {
    for (std::size_t c = 0; c < colours.size(); ++c) {
      if (colours[c].label == label) {
        return c;
      }
    }
    throw unknown_name("system " + name + " has no colour \""
                       + std::string(label) + "\"");
  }

  ColouredPart ColouredSystem::part(std::string_view label,
                                    std::int64_t     size,
                                    bool             overlined) const {
    return ColouredPart{size, colour_index(label), overlined};
  }

  std::optional<std::int64_t>
  ColouredSystem::index_of(ColouredPart const& p) const {
    if (p.colour >= colours.size()) {
      return std::nullopt;
    }
    return colours[p.colour].index_of(p.size);
  }

  bool ColouredSystem::is_valid(ColouredPart const& p) const {
    if (p.colour >= colours.size() || p.size < min_size) {
      return false;
    }
    auto const& c = colours[p.colour];
    if (p.overlined && !c.overline_allowed) {
      return false;
    }
    auto k = c.index_of(p.size);
    return k && c.domain.contains(*k);
  }

  std::vector<ColouredPart>
  ColouredSystem::parts_of_size(std::int64_t size) const {
    std::vector<ColouredPart> result;
    for (std::size_t c = 0; c < colours.size(); ++c) {
      ColouredPart p{size, c, false};
      if (is_valid(p)) {
        result.push_back(p);
      }
    }
    return result;
  }

  std::uint32_t ColouredSystem::row_period() const noexcept {
    if (auto const* m = std::get_if<GapMatrix>(&gap)) {
      return m->period;
    }
    return 1;
  }

  std::int64_t ColouredSystem::gap_for(std::size_t  upper_colour,
                                       std::int64_t upper_index,
                                       std::size_t  lower_colour,
                                       bool         lower_overlined) const {
    return std::visit(
        [&](auto const& rule) -> std::int64_t {
          using T = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<T, GapMatrix>) {
            auto row = floor_mod(upper_index, rule.period);
            return rule.entries[upper_colour][row][lower_colour];
          } else if constexpr (std::is_same_v<T, AndrewsGap>) {
            auto ui = andrews_colour_data(rule.r, upper_colour + 1);
            auto lj = andrews_colour_data(rule.r, lower_colour + 1);
            return static_cast<std::int64_t>(lj.w) + (lower_overlined ? 1 : 0)
                   - 1 + (ui.z < lj.v ? 1 : 0);
          } else {
            return (lower_colour > upper_colour ? 1 : 0)
                   + (lower_colour == upper_colour && lower_overlined ? 1 : 0);
          }
        },
        gap);
  }

  std::int64_t ColouredSystem::min_gap(ColouredPart const& upper,
                                       ColouredPart const& lower) const {
    auto k = index_of(upper);
    if (!k) {
      throw invalid_argument(describe(upper) + " is not a part of " + name);
    }
    return gap_for(upper.colour, *k, lower.colour, lower.overlined);
  }

  std::optional<std::int64_t>
  ColouredSystem::rank_at(std::size_t colour, std::int64_t size) const {
    if (colour >= colours.size()) {
      return std::nullopt;
    }
    auto k = colours[colour].index_of(size);
    if (!k) {
      return std::nullopt;
    }
    return rank_mult * *k + rank_offset[colour];
  }

  std::int64_t ColouredSystem::rank(ColouredPart const& p) const {
    auto r = rank_at(p.colour, p.size);
    if (!r) {
      throw invalid_argument(describe(p) + " is not a part of " + name);
    }
    return *r;
  }

  bool ColouredSystem::key_less(ColouredPart const& x,
                                ColouredPart const& y) const {
    auto rx = rank(x), ry = rank(y);
    if (rx != ry) {
      return rx < ry;
    }
    return !x.overlined && y.overlined;
  }

  Monomial ColouredSystem::weight(ColouredPart const& p) const {
    auto const& c = colours.at(p.colour);
    Monomial    m = c.erased ? Monomial() : c.weight;
    if (overline_marker && !p.overlined) {
      m *= Monomial::of(*overline_marker);
    }
    return m;
  }

  std::vector<var_type> ColouredSystem::output_variables() const {
    std::set<var_type> vars;
    for (auto const& c : colours) {
      if (!c.erased) {
        for (auto const& [v, e] : c.weight) {
          vars.insert(v);
        }
      }
    }
    if (overline_marker) {
      vars.insert(*overline_marker);
    }
    std::vector<var_type> result(vars.begin(), vars.end());
    std::sort(result.begin(), result.end(), variable_name_less);
    return result;
  }

  bool ColouredSystem::has_overlines() const noexcept {
    return std::any_of(colours.begin(), colours.end(), [](auto const& c) {
      return c.overline_allowed;
    });
  }

  std::vector<ColouredPart>
  ColouredSystem::parts_up_to(std::int64_t max_size) const {
    std::vector<ColouredPart> parts;
    for (std::size_t c = 0; c < colours.size(); ++c) {
      auto const& col = colours[c];
      auto        k   = std::max(col.domain.min_index,
                        col.index_of(min_size).value_or(floor_div(
                            min_size - col.offset + col.scale - 1, col.scale)));
      for (; col.size_of(k) <= max_size; ++k) {
        if (!col.domain.contains(k) || col.size_of(k) < min_size) {
          continue;
        }
        parts.push_back({col.size_of(k), c, false});
        if (col.overline_allowed) {
          parts.push_back({col.size_of(k), c, true});
        }
      }
    }
    std::sort(parts.begin(), parts.end(), [this](auto const& x, auto const& y) {
      return key_less(x, y);
    });
    return parts;
  }

  std::string ColouredSystem::describe(ColouredPart const& p) const {
    std::string s = p.overlined ? "bar" : "";
    s += std::to_string(p.size) + "_";
    s += p.colour < colours.size() ? colours[p.colour].label : "?";
    return s;
  }

  void ColouredSystem::validate(std::int64_t check_size) const {
    if (colours.empty()) {
      throw invalid_argument("system " + name + " has no colours");
    }
    if (rank_offset.size() != colours.size()) {
      throw invalid_argument("system " + name
                             + ": one rank offset per colour expected");
    }
    if (rank_mult <= 0) {
      throw invalid_argument("system " + name
                             + ": rank multiplier must be positive");
    }
    if (min_size != 0 && min_size != 1) {
      throw invalid_argument("system " + name + ": min_size must be 0 or 1");
    }
    std::set<std::string> labels;
    for (auto const& c : colours) {
      if (!labels.insert(c.label).second) {
        throw invalid_argument("system " + name + ": duplicate colour "
                               + c.label);
      }
      if (c.scale <= 0 || c.domain.modulus == 0 || c.domain.residues.empty()) {
        throw invalid_argument("system " + name + ": colour " + c.label
                               + " has an empty or malformed domain");
      }
    }
    std::visit(
        [&](auto const& rule) {
          using T = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<T, GapMatrix>) {
            if (rule.period == 0 || rule.entries.size() != colours.size()) {
              throw invalid_argument("system " + name
                                     + ": gap matrix has wrong shape");
            }
            for (auto const& rows : rule.entries) {
              if (rows.size() != rule.period) {
                throw invalid_argument("system " + name
                                       + ": gap matrix has wrong shape");
              }
              for (auto const& row : rows) {
                if (row.size() != colours.size()) {
                  throw invalid_argument("system " + name
                                         + ": gap matrix has wrong shape");
                }
                if (std::any_of(row.begin(), row.end(), [](auto d) {
                      return d < 0;
                    })) {
                  throw invalid_argument("system " + name
                                         + ": negative gap matrix entry");
                }
              }
            }
            if (has_overlines()) {
              throw invalid_argument(
                  "system " + name
                  + ": overlined parts need a formula gap rule");
            }
          } else if constexpr (std::is_same_v<T, AndrewsGap>) {
            if (rule.r == 0 || rule.r > 16
                || colours.size() != (std::size_t(1) << rule.r) - 1) {
              throw invalid_argument("system " + name
                                     + ": Andrews rule needs 2^r-1 colours");
            }
          }
        },
        gap);

    for (auto const& c : colours) {
      auto k = c.domain.smallest();
      if (k && c.size_of(*k) < min_size) {
        throw invalid_argument("system " + name + ": colour " + c.label
                               + " has parts below the minimum size");
      }
    }

    auto parts = parts_up_to(check_size);
    for (auto const& p : parts) {
      if (p.size == 0 && weight(p).is_one()) {
        throw invalid_argument("system " + name + ": part " + describe(p)
                               + " of size 0 has trivial weight");
      }
    }
    std::map<std::int64_t, ColouredPart> by_rank;
    for (auto const& p : parts) {
      if (p.overlined) {
        continue;
      }
      auto [it, fresh] = by_rank.emplace(rank(p), p);
      if (!fresh) {
        throw rank_inconsistency("system " + name + ": parts " + describe(p)
                                 + " and " + describe(it->second)
                                 + " share a rank");
      }
    }
    for (auto const& x : parts) {
      for (auto const& y : parts) {
        if (x.size - y.size < min_gap(x, y)) {
          continue;
        }
        if (key_less(x, y) || (!key_less(y, x) && !(x == y))) {
          throw rank_inconsistency("system " + name + ": " + describe(y)
                                   + " may follow " + describe(x)
                                   + " but is not below it in the order");
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Dilation
  ////////////////////////////////////////////////////////////////////////

  std::int64_t part_rank(ColouredSystem const& sys, ColouredPart const& p) {
    if (!sys.is_valid(p)) {
      throw invalid_argument(sys.describe(p) + " is not a valid part of "
                             + sys.name);
    }
    return sys.rank(p);
  }

  bool DilationSpec::is_identity() const {
    return modulus == 1
           && std::all_of(offsets.begin(), offsets.end(), [](auto const& kv) {
                return kv.second == 0;
              });
  }

  DilationSpec dilation_from_shifts(
      ColouredSystem const&                      sys,
      std::int64_t                               modulus,
      std::map<std::string, std::int64_t> const& variable_shifts) {
    DilationSpec d;
    d.modulus = modulus;
    for (auto const& [name, shift] : variable_shifts) {
      variable(name);
    }
    for (auto const& c : sys.colours) {
      std::int64_t o = 0;
      for (auto const& [v, e] : c.weight) {
        auto it = variable_shifts.find(variable_name(v));
        if (it != variable_shifts.end()) {
          o += static_cast<std::int64_t>(e) * it->second;
        }
      }
      d.offsets[c.label] = o;
    }
    return d;
  }

  ColouredSystem dilate_system(ColouredSystem const& sys,
                               DilationSpec const&   d) {
    if (d.modulus <= 0) {
      throw invalid_dilation("dilation modulus must be positive");
    }
    auto const* base = std::get_if<GapMatrix>(&sys.gap);
    if (base == nullptr) {
      throw invalid_dilation("only gap-matrix systems can be dilated");
    }
    for (auto const& [label, o] : d.offsets) {
      static_cast<void>(sys.colour_index(label));
    }
    auto offset_of = [&](std::size_t c) -> std::int64_t {
      auto it = d.offsets.find(sys.colours[c].label);
      return it == d.offsets.end() ? 0 : it->second;
    };

    ColouredSystem out = sys;
    if (!d.is_identity()) {
      out.name = sys.name + " dilated";
    }
    auto* m            = std::get_if<GapMatrix>(&out.gap);
    for (std::size_t x = 0; x < sys.colours.size(); ++x) {
      for (std::size_t r = 0; r < base->period; ++r) {
        for (std::size_t y = 0; y < sys.colours.size(); ++y) {
          auto v = d.modulus * base->entries[x][r][y] + offset_of(x)
                   - offset_of(y);
          if (v < 0) {
            throw invalid_dilation(
                "dilated gap from " + sys.colours[x].label + " to "
                + sys.colours[y].label + " is negative (" + std::to_string(v)
                + ")");
          }
          m->entries[x][r][y] = v;
        }
      }
    }
    for (std::size_t c = 0; c < out.colours.size(); ++c) {
      auto& col  = out.colours[c];
      col.scale  = d.modulus * col.scale;
      col.offset = d.modulus * col.offset + offset_of(c);
      auto k     = col.domain.smallest();
      if (k && col.size_of(*k) < out.min_size) {
        throw invalid_dilation("colour " + col.label + " has a part of size "
                               + std::to_string(col.size_of(*k))
                               + " after dilation");
      }
    }
    out.validate();
    return out;
  }

  SubstitutionMap statistic_substitution(DilationSpec const&   d,
                                         ColouredSystem const& sys) {
    if (d.modulus <= 0) {
      throw invalid_dilation("dilation modulus must be positive");
    }
    SubstitutionMap s;
    s.qpower = static_cast<std::uint32_t>(d.modulus);
    auto offset_of = [&](ColourDef const& c) -> std::int64_t {
      auto it = d.offsets.find(c.label);
      return it == d.offsets.end() ? 0 : it->second;
    };
    // Solve for per-variable shifts: first from single-variable weights of
    // exponent 1, then check every colour.
    std::map<var_type, std::int64_t> shift;
    bool                             progress = true;
    while (progress) {
      progress = false;
      for (auto const& c : sys.colours) {
        std::int64_t rest    = offset_of(c);
        int          unknown = 0;
        var_type     u       = 0;
        std::int64_t ue      = 0;
        for (auto const& [v, e] : c.weight) {
          auto it = shift.find(v);
          if (it == shift.end()) {
            ++unknown;
            u  = v;
            ue = e;
          } else {
            rest -= static_cast<std::int64_t>(e) * it->second;
          }
        }
        if (unknown == 1) {
          if (rest % ue != 0) {
            throw invalid_dilation("colour offsets of " + c.label
                                   + " are not induced by variable shifts");
          }
          shift[u] = rest / ue;
          progress = true;
        }
      }
    }
    for (auto const& c : sys.colours) {
      std::int64_t total = 0;
      for (auto const& [v, e] : c.weight) {
        auto it = shift.find(v);
        total += it == shift.end() ? 0 : static_cast<std::int64_t>(e) * it->second;
      }
      if (total != offset_of(c)) {
        throw invalid_dilation("colour offsets of " + c.label
                               + " are not induced by variable shifts");
      }
    }
    for (auto const& [v, k] : shift) {
      if (k != 0) {
        s.images[v] = VarImage{Monomial::of(v), k};
      }
    }
    return s;
  }

  std::size_t weighted_order_for(ColouredSystem const& sys,
                                 DilationSpec const&   d,
                                 std::size_t           dilated_qmax) {
    // Each part of size s maps to modulus*s + o. The ratio is smallest at the
    // smallest admissible size of a colour with negative offset.
    std::int64_t num = d.modulus, den = 1;
    for (auto const& c : sys.colours) {
      auto it = d.offsets.find(c.label);
      if (it == d.offsets.end() || it->second >= 0) {
        continue;
      }
      auto k = c.domain.smallest();
      if (!k) {
        continue;
      }
      auto s = std::max<std::int64_t>(c.size_of(*k), sys.min_size);
      auto v = d.modulus * s + it->second;
      if (s == 0 || v <= 0) {
        throw invalid_dilation("colour " + c.label
                               + " maps to a part of non-positive size");
      }
      if (v * den < num * s) {
        num = v;
        den = s;
      }
    }
    return static_cast<std::size_t>(
        static_cast<std::int64_t>(dilated_qmax) * den / num);
  }

  std::string format_gap_matrix(ColouredSystem const& sys) {
    auto const* m = std::get_if<GapMatrix>(&sys.gap);
    if (m == nullptr) {
      return "";
    }
    std::vector<std::string> heads;
    for (std::size_t x = 0; x < sys.colours.size(); ++x) {
      for (std::size_t r = 0; r < m->period; ++r) {
        std::string head = sys.colours[x].label;
        if (m->period > 1) {
          head += " [k=" + std::to_string(r) + " mod "
                  + std::to_string(m->period) + "]";
        }
        heads.push_back(head);
      }
    }
    std::size_t head_width = 0, width = 1;
    for (auto const& h : heads) {
      head_width = std::max(head_width, h.size());
    }
    for (std::size_t x = 0; x < sys.colours.size(); ++x) {
      width = std::max(width, sys.colours[x].label.size());
      for (auto const& row : m->entries[x]) {
        for (auto e : row) {
          width = std::max(width, std::to_string(e).size());
        }
      }
    }
    auto pad = [](std::string const& text, std::size_t w) {
      return std::string(w - std::min(w, text.size()), ' ') + text;
    };
    std::ostringstream os;
    os << std::string(head_width + 1, ' ');
    for (auto const& c : sys.colours) {
      os << ' ' << pad(c.label, width);
    }
    os << '\n';
    std::size_t i = 0;
    for (std::size_t x = 0; x < sys.colours.size(); ++x) {
      for (std::size_t r = 0; r < m->period; ++r, ++i) {
        os << heads[i] << ':' << std::string(head_width - heads[i].size(), ' ');
        for (std::size_t y = 0; y < sys.colours.size(); ++y) {
          os << ' ' << pad(std::to_string(m->entries[x][r][y]), width);
        }
        os << '\n';
      }
    }
    return os.str();
  }

}  // namespace wwords
