#include "wwords/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "wwords/errors.hpp"

namespace wwords {

  PartitionCheck is_valid_partition(ColouredSystem const& sys,
                                    PartitionSeq const&   seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto const& p = seq[i];
      if (p.colour >= sys.colours.size()) {
        return {false, i, "part " + std::to_string(i) + " has no colour"};
      }
      if (!sys.is_valid(p)) {
        auto const& c = sys.colours[p.colour];
        std::string why;
        if (p.size < sys.min_size) {
          why = "is below the minimum size";
        } else if (p.overlined && !c.overline_allowed) {
          why = "cannot be overlined";
        } else if (!c.index_of(p.size)) {
          why = "does not exist in colour " + c.label;
        } else {
          why = "is not an allowed part";
        }
        return {false, i,
                "part " + std::to_string(i) + " (" + sys.describe(p) + ") "
                    + why};
      }
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      auto const& x = seq[i];
      auto const& y = seq[i + 1];
      auto        g = sys.min_gap(x, y);
      if (x.size - y.size < g) {
        return {false, i,
                "parts " + std::to_string(i) + " and " + std::to_string(i + 1)
                    + " (" + sys.describe(x) + ", " + sys.describe(y)
                    + ") differ by " + std::to_string(x.size - y.size)
                    + ", need at least " + std::to_string(g)};
      }
    }
    return {};
  }

  std::uint64_t default_node_limit() {
    if (char const* env = std::getenv("WWORDS_NODE_LIMIT")) {
      char* end   = nullptr;
      auto  value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return value;
      }
    }
    return 10'000'000;
  }

  Monomial partition_weight(ColouredSystem const& sys,
                            PartitionSeq const&   seq) {
    Monomial m;
    for (auto const& p : seq) {
      m *= sys.weight(p);
    }
    return m;
  }

  std::string format_partition(ColouredSystem const& sys,
                               PartitionSeq const&   seq) {
    if (seq.empty()) {
      return "()";
    }
    std::string s;
    for (auto const& p : seq) {
      s += (s.empty() ? "" : " + ") + sys.describe(p);
    }
    return s;
  }

  namespace {
    using wide = unsigned __int128;

    struct WideHash {
      std::size_t operator()(wide x) const noexcept {
        auto lo = static_cast<std::uint64_t>(x);
        auto hi = static_cast<std::uint64_t>(x >> 64);
        return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
      }
    };

    // The parts available below qmax, grouped by (colour, overline) lanes
    // sorted by size, with precomputed weights.
    struct PartTable {
      std::vector<ColouredPart>             parts;
      std::vector<std::int64_t>             index;
      std::vector<std::uint32_t>            degree;
      std::vector<Monomial>                 weight;
      std::vector<std::vector<std::size_t>> lanes;
      std::vector<std::size_t>              lane_colour;
      std::vector<bool>                     lane_overlined;

      PartTable(ColouredSystem const& sys, std::size_t qmax) {
        parts = sys.parts_up_to(static_cast<std::int64_t>(qmax));
        std::stable_sort(parts.begin(),
                         parts.end(),
                         [](auto const& x, auto const& y) {
                           return x.size < y.size;
                         });
        std::map<std::pair<std::size_t, bool>, std::size_t> lane_of;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          auto const& p = parts[i];
          index.push_back(*sys.index_of(p));
          weight.push_back(sys.weight(p));
          degree.push_back(weight.back().degree());
          auto [it, fresh]
              = lane_of.emplace(std::make_pair(p.colour, p.overlined),
                                lanes.size());
          if (fresh) {
            lanes.emplace_back();
            lane_colour.push_back(p.colour);
            lane_overlined.push_back(p.overlined);
          }
          lanes[it->second].push_back(i);
        }
      }
    };

    template <typename Key, typename Hash>
    Series run_enumeration(ColouredSystem const&        sys,
                           PartTable const&             table,
                           std::size_t                  qmax,
                           degree_cap                   degmax,
                           std::uint64_t                node_limit,
                           std::vector<var_type> const& vars,
                           std::vector<unsigned> const& shifts,
                           unsigned                     nbits) {
      std::vector<Key> increment(table.parts.size());
      for (std::size_t i = 0; i < table.parts.size(); ++i) {
        Key k = static_cast<Key>(table.parts[i].size);
        for (std::size_t v = 0; v < vars.size(); ++v) {
          k += static_cast<Key>(table.weight[i].exponent(vars[v])) << shifts[v];
        }
        increment[i] = k;
      }
      auto const  cap = degmax ? *degmax : ~std::uint32_t(0);
      auto const& sizes_ok = [&](std::size_t i, std::int64_t limit,
                                 std::uint32_t d) {
        return table.parts[i].size <= limit && d + table.degree[i] <= cap;
      };

      std::unordered_map<Key, std::uint64_t, Hash> counts;
      std::uint64_t                                nodes = 0;

      std::function<void(std::size_t, std::int64_t, std::uint32_t, Key)> visit
          = [&](std::size_t last, std::int64_t remaining, std::uint32_t d,
                Key key) {
              if (++nodes > node_limit) {
                throw safety_bound_exceeded(
                    "enumeration exceeded " + std::to_string(node_limit)
                    + " nodes (set WWORDS_NODE_LIMIT to raise)");
              }
              ++counts[key];
              auto const& x = table.parts[last];
              for (std::size_t l = 0; l < table.lanes.size(); ++l) {
                auto g     = sys.gap_for(x.colour, table.index[last],
                                     table.lane_colour[l],
                                     table.lane_overlined[l]);
                auto limit = std::min(x.size - g, remaining);
                for (auto i : table.lanes[l]) {
                  if (table.parts[i].size > limit) {
                    break;
                  }
                  if (d + table.degree[i] > cap) {
                    continue;
                  }
                  visit(i, remaining - table.parts[i].size,
                        d + table.degree[i], key + increment[i]);
                }
              }
            };

      counts[Key(0)] = 1;
      auto const q   = static_cast<std::int64_t>(qmax);
      for (std::size_t i = 0; i < table.parts.size(); ++i) {
        if (sizes_ok(i, q, 0)) {
          visit(i, q - table.parts[i].size, table.degree[i], increment[i]);
        }
      }

      Series     result(qmax, degmax);
      Key const  nmask = (Key(1) << nbits) - 1;
      for (auto const& [key, c] : counts) {
        auto n = static_cast<std::size_t>(key & nmask);
        std::vector<Monomial::entry_type> entries;
        for (std::size_t v = 0; v < vars.size(); ++v) {
          auto next = v + 1 < vars.size() ? shifts[v + 1]
                                          : static_cast<unsigned>(
                                              sizeof(Key) * 8);
          auto width = next - shifts[v];
          auto mask  = width >= sizeof(Key) * 8 ? ~Key(0)
                                                : (Key(1) << width) - 1;
          auto e = static_cast<std::uint32_t>((key >> shifts[v]) & mask);
          if (e != 0) {
            entries.emplace_back(vars[v], e);
          }
        }
        result.add_term(n, Monomial::from_entries(std::move(entries)),
                        integer(c));
      }
      return result;
    }
  }  // namespace

  Series enumerate_series(ColouredSystem const& sys,
                          std::size_t           qmax,
                          degree_cap            degmax,
                          std::uint64_t         node_limit) {
    if (sys.min_size <= 0 && !degmax) {
      throw invalid_argument("system " + sys.name
                             + " has parts of size 0; a degree cap is "
                               "required");
    }
    if (node_limit == 0) {
      node_limit = default_node_limit();
    }
    PartTable table(sys, qmax);
    auto      vars = sys.output_variables();

    // Bound every exponent to choose a packing of (n, exponents).
    std::uint64_t max_parts = qmax + (degmax ? *degmax : 0) + 1;
    unsigned      nbits     = std::bit_width(static_cast<std::uint64_t>(qmax));
    nbits                   = std::max(nbits, 1u);
    std::vector<unsigned> shifts;
    unsigned              total = nbits;
    for (auto v : vars) {
      std::uint64_t top = 0;
      for (auto const& w : table.weight) {
        top = std::max<std::uint64_t>(top, w.exponent(v));
      }
      std::uint64_t bound = top * max_parts;
      if (degmax) {
        bound = std::min<std::uint64_t>(bound, *degmax);
      }
      shifts.push_back(total);
      total += std::max(1u, static_cast<unsigned>(std::bit_width(bound)));
    }
    if (total <= 64) {
      return run_enumeration<std::uint64_t, std::hash<std::uint64_t>>(
          sys, table, qmax, degmax, node_limit, vars, shifts, nbits);
    }
    if (total <= 128) {
      return run_enumeration<wide, WideHash>(
          sys, table, qmax, degmax, node_limit, vars, shifts, nbits);
    }
    throw safety_bound_exceeded("too many colour variables to enumerate "
                                + sys.name);
  }

  std::vector<PartitionSeq> list_partitions(ColouredSystem const& sys,
                                            std::size_t           n,
                                            degree_cap            degmax,
                                            std::size_t           limit) {
    if (sys.min_size <= 0 && !degmax) {
      throw invalid_argument("system " + sys.name
                             + " has parts of size 0; a degree cap is "
                               "required");
    }
    PartTable                 table(sys, n);
    auto const                cap = degmax ? *degmax : ~std::uint32_t(0);
    std::vector<PartitionSeq> result;
    PartitionSeq              current;
    std::uint64_t             nodes      = 0;
    auto const                node_limit = default_node_limit();

    std::function<void(std::int64_t, std::uint32_t)> extend
        = [&](std::int64_t remaining, std::uint32_t d) {
            if (++nodes > node_limit) {
              throw safety_bound_exceeded("listing exceeded "
                                          + std::to_string(node_limit)
                                          + " nodes");
            }
            if (remaining == 0) {
              if (result.size() == limit) {
                throw safety_bound_exceeded("more than " + std::to_string(limit)
                                            + " partitions of "
                                            + std::to_string(n));
              }
              result.push_back(current);
            }
            for (std::size_t i = 0; i < table.parts.size(); ++i) {
              auto const& p = table.parts[i];
              if (p.size > remaining) {
                break;
              }
              if (d + table.degree[i] > cap) {
                continue;
              }
              if (!current.empty()) {
                auto const& x = current.back();
                if (x.size - p.size < sys.min_gap(x, p)) {
                  continue;
                }
              }
              current.push_back(p);
              extend(remaining - p.size, d + table.degree[i]);
              current.pop_back();
            }
          };
    extend(static_cast<std::int64_t>(n), 0);

    std::sort(result.begin(), result.end(), [&](auto const& x, auto const& y) {
      return std::lexicographical_compare(
          x.begin(), x.end(), y.begin(), y.end(),
          [&](auto const& p, auto const& q) { return sys.key_less(p, q); });
    });
    return result;
  }

}  // namespace wwords
