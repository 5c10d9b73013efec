#ifndef WWORDS_RECURRENCE_HPP_
#define WWORDS_RECURRENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wwords/series.hpp"
#include "wwords/systems.hpp"

namespace wwords {

  // Largest-part generating functions of a system, computed part by part in
  // key order:
  //
  //   E_p = w(p) q^{|p|} (1 + sum of E_{p'} over parts p' that may follow p)
  //
  // with the sums over each (colour, overline) lane kept as running totals.
  // With an image map, each part contributes image(w(p) q^{|p|}) instead,
  // which computes a dilated series from the undilated rules.
  class RecurrenceState {
   public:
    RecurrenceState(ColouredSystem                 sys,
                    std::size_t                    qmax,
                    degree_cap                     degmax = std::nullopt,
                    std::optional<SubstitutionMap> image  = std::nullopt);

    [[nodiscard]] ColouredSystem const& system() const noexcept {
      return _sys;
    }
    [[nodiscard]] std::size_t qmax() const noexcept {
      return _qmax;
    }
    [[nodiscard]] degree_cap degmax() const noexcept {
      return _degmax;
    }

    // Generating function with largest part at most k_colour (k a base
    // index); 0 for negative k.
    [[nodiscard]] Series G(std::size_t colour, std::int64_t k) const;
    // Generating function with largest part exactly k_colour; 0 when that
    // coloured integer is not a part.
    [[nodiscard]] Series E(std::size_t  colour,
                           std::int64_t k,
                           bool         overlined = false) const;
    // Generating function of all partitions.
    [[nodiscard]] Series const& total() const noexcept {
      return _total;
    }

   private:
    struct Lane {
      std::size_t               colour;
      bool                      overlined;
      std::vector<std::int64_t> sizes;
      std::vector<std::int64_t> ranks;
      std::vector<Series>       prefix;  // running sums of E along the lane
    };

    ColouredSystem    _sys;
    std::size_t       _qmax;
    degree_cap        _degmax;
    std::vector<Lane> _lanes;
    Series            _total;
  };

  enum class dp_direction { automatic, largest, smallest };

  struct DpOptions {
    dp_direction                   direction = dp_direction::automatic;
    std::optional<SubstitutionMap> image;
  };

  // Generating function of the system by the recurrence engine. The smallest
  // part direction runs the mirrored recursion on smallest parts; automatic
  // picks it for overpartition systems.
  Series dp_series(ColouredSystem const& sys,
                   std::size_t           qmax,
                   degree_cap            degmax = std::nullopt,
                   DpOptions const&      opts   = {});

}  // namespace wwords

#endif  // WWORDS_RECURRENCE_HPP_
