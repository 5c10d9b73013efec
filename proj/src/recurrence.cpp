#include "wwords/recurrence.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "wwords/errors.hpp"

namespace wwords {

  namespace {
    struct Entry {
      ColouredPart part;
      std::int64_t index;
      Monomial     monomial;  // weight after the image map
      std::size_t  exponent;  // q-exponent after the image map
    };

    // Parts that can occur below qmax, in increasing key order, with their
    // (possibly mapped) weights.
    std::vector<Entry> collect_parts(ColouredSystem const&                 sys,
                                     std::size_t                           qmax,
                                     degree_cap                            degmax,
                                     std::optional<SubstitutionMap> const& image) {
      auto const   q     = static_cast<std::int64_t>(qmax);
      std::int64_t bound = q;
      if (image) {
        bound = 0;
        for (std::size_t c = 0; c < sys.colours.size(); ++c) {
          for (bool over : {false, true}) {
            auto o = image->apply(sys.weight({0, c, over}), 0).second;
            bound  = std::max<std::int64_t>(
                bound, (q - o) / static_cast<std::int64_t>(image->qpower));
          }
        }
      }
      std::vector<Entry> entries;
      for (auto const& p : sys.parts_up_to(bound)) {
        auto         w = sys.weight(p);
        std::int64_t e = p.size;
        if (image) {
          std::tie(w, e) = image->apply(w, p.size);
          if (e < 0) {
            throw invalid_dilation("part " + sys.describe(p)
                                   + " maps to a negative q-exponent");
          }
        }
        if (e > q) {
          continue;
        }
        if (e == 0 && w.is_one()) {
          throw invalid_argument("part " + sys.describe(p)
                                 + " has trivial weight and size");
        }
        if (e == 0 && !degmax) {
          throw invalid_argument("system " + sys.name
                                 + " has parts of size 0; a degree cap is "
                                   "required");
        }
        entries.push_back(
            {p, *sys.index_of(p), std::move(w), static_cast<std::size_t>(e)});
      }
      return entries;
    }

    [[noreturn]] void inconsistent(ColouredSystem const& sys,
                                   ColouredPart const&   p,
                                   ColouredPart const&   other) {
      throw rank_inconsistency("system " + sys.name + ": " + sys.describe(p)
                               + " admits " + sys.describe(other)
                               + ", which is not yet computed in rank order");
    }

    // E = m q^e S, solving for the E_p term on the right when p may repeat.
    Series close_part(Series const& s, Entry const& x, bool self_loop) {
      auto e = s.shifted(x.exponent, x.monomial);
      if (self_loop) {
        e.multiply_binomial(x.monomial, 1, x.exponent, -1);
      }
      return e;
    }

    // Smallest-part recursion: F_p counts partitions with smallest part p,
    // F_p = w(p) q^{|p|} (1 + sum of F_{p''} over parts p'' that p may
    // follow). Uppers are grouped by (colour, overline, row class) since the
    // gap depends on the upper part's row class.
    Series smallest_part_series(ColouredSystem const&                 sys,
                                std::size_t                           qmax,
                                degree_cap                            degmax,
                                std::optional<SubstitutionMap> const& image) {
      auto entries = collect_parts(sys, qmax, degmax, image);
      auto period  = static_cast<std::int64_t>(sys.row_period());

      struct Sublane {
        std::size_t               colour;
        bool                      overlined;
        std::int64_t              row;
        std::vector<std::size_t>  members;  // entry ids, ascending size
        std::vector<Series>       suffix;
        std::size_t               first_done;
      };
      std::vector<Sublane>                                     sublanes;
      std::map<std::tuple<std::size_t, bool, std::int64_t>, std::size_t> id;
      std::vector<std::pair<std::size_t, std::size_t>> where(entries.size());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        auto const& p   = entries[i].part;
        auto        row = ((entries[i].index % period) + period) % period;
        auto [it, fresh]
            = id.emplace(std::make_tuple(p.colour, p.overlined, row),
                         sublanes.size());
        if (fresh) {
          sublanes.push_back({p.colour, p.overlined, row, {}, {}, 0});
        }
        auto& u = sublanes[it->second];
        where[i] = {it->second, u.members.size()};
        u.members.push_back(i);
      }
      Series const zero(qmax, degmax);
      for (auto& u : sublanes) {
        u.suffix.assign(u.members.size() + 1, zero);
        u.first_done = u.members.size();
      }

      for (std::size_t i = entries.size(); i-- > 0;) {
        auto const& x    = entries[i];
        Series      s    = Series::one(qmax, degmax);
        bool        self = false;
        for (auto& u : sublanes) {
          auto threshold
              = x.part.size
                + sys.gap_for(u.colour, u.row, x.part.colour, x.part.overlined);
          auto pos = static_cast<std::size_t>(
              std::lower_bound(u.members.begin(),
                               u.members.end(),
                               threshold,
                               [&](std::size_t m, std::int64_t t) {
                                 return entries[m].part.size < t;
                               })
              - u.members.begin());
          if (pos < u.first_done) {
            if (u.members[pos] == i && pos + 1 == u.first_done) {
              self = true;
              ++pos;
            } else {
              inconsistent(sys, x.part, entries[u.members[pos]].part);
            }
          }
          s += u.suffix[pos];
        }
        auto [lane, pos]    = where[i];
        auto& u             = sublanes[lane];
        u.suffix[pos]       = close_part(s, x, self) + u.suffix[pos + 1];
        u.first_done        = pos;
      }
      Series total = Series::one(qmax, degmax);
      for (auto const& u : sublanes) {
        total += u.suffix[0];
      }
      return total;
    }
  }  // namespace

  RecurrenceState::RecurrenceState(ColouredSystem                 sys,
                                   std::size_t                    qmax,
                                   degree_cap                     degmax,
                                   std::optional<SubstitutionMap> image)
      : _sys(std::move(sys)),
        _qmax(qmax),
        _degmax(degmax),
        _total(Series::one(qmax, degmax)) {
    auto entries = collect_parts(_sys, qmax, degmax, image);

    std::map<std::pair<std::size_t, bool>, std::size_t> id;
    std::vector<std::size_t>                            lane_of(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      auto const& p = entries[i].part;
      auto [it, fresh]
          = id.emplace(std::make_pair(p.colour, p.overlined), _lanes.size());
      if (fresh) {
        _lanes.push_back({p.colour, p.overlined, {}, {}, {}});
      }
      lane_of[i] = it->second;
      _lanes[it->second].sizes.push_back(p.size);
      _lanes[it->second].ranks.push_back(_sys.rank(p));
    }

    std::vector<std::size_t> lane_members(_lanes.size(), 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      auto const& x    = entries[i];
      Series      s    = Series::one(qmax, degmax);
      bool        self = false;
      for (std::size_t l = 0; l < _lanes.size(); ++l) {
        auto const& lane  = _lanes[l];
        auto        bound = x.part.size
                     - _sys.gap_for(x.part.colour, x.index, lane.colour,
                                    lane.overlined);
        auto count = static_cast<std::size_t>(
            std::upper_bound(lane.sizes.begin(), lane.sizes.end(), bound)
            - lane.sizes.begin());
        if (count > lane.prefix.size()) {
          if (l == lane_of[i] && count == lane.prefix.size() + 1) {
            self = true;
            --count;
          } else {
            inconsistent(_sys,
                         x.part,
                         {lane.sizes[lane.prefix.size()], lane.colour,
                          lane.overlined});
          }
        }
        if (count > 0) {
          s += lane.prefix[count - 1];
        }
      }
      auto  e    = close_part(s, x, self);
      auto& lane = _lanes[lane_of[i]];
      if (!lane.prefix.empty()) {
        e += lane.prefix.back();
      }
      lane.prefix.push_back(std::move(e));
    }
    for (auto const& lane : _lanes) {
      _total += lane.prefix.back();
    }
  }

  Series RecurrenceState::G(std::size_t colour, std::int64_t k) const {
    if (colour >= _sys.colours.size()) {
      throw invalid_argument("colour index out of range");
    }
    if (k < 0) {
      return Series(_qmax, _degmax);
    }
    auto   r      = _sys.rank_mult * k + _sys.rank_offset[colour];
    Series result = Series::one(_qmax, _degmax);
    for (auto const& lane : _lanes) {
      auto count = std::upper_bound(lane.ranks.begin(), lane.ranks.end(), r)
                   - lane.ranks.begin();
      if (count > 0) {
        result += lane.prefix[count - 1];
      }
    }
    return result;
  }

  Series RecurrenceState::E(std::size_t  colour,
                            std::int64_t k,
                            bool         overlined) const {
    if (colour >= _sys.colours.size()) {
      throw invalid_argument("colour index out of range");
    }
    auto size = _sys.colours[colour].size_of(k);
    for (auto const& lane : _lanes) {
      if (lane.colour != colour || lane.overlined != overlined) {
        continue;
      }
      auto it = std::lower_bound(lane.sizes.begin(), lane.sizes.end(), size);
      if (it == lane.sizes.end() || *it != size) {
        break;
      }
      auto j = static_cast<std::size_t>(it - lane.sizes.begin());
      return j == 0 ? lane.prefix[0] : lane.prefix[j] - lane.prefix[j - 1];
    }
    return Series(_qmax, _degmax);
  }

  Series dp_series(ColouredSystem const& sys,
                   std::size_t           qmax,
                   degree_cap            degmax,
                   DpOptions const&      opts) {
    auto direction = opts.direction;
    if (direction == dp_direction::automatic) {
      direction = sys.has_overlines() ? dp_direction::smallest
                                      : dp_direction::largest;
    }
    if (direction == dp_direction::smallest) {
      return smallest_part_series(sys, qmax, degmax, opts.image);
    }
    return RecurrenceState(sys, qmax, degmax, opts.image).total();
  }

}  // namespace wwords
