#ifndef WWORDS_SYSTEMS_HPP_
#define WWORDS_SYSTEMS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wwords/monomial.hpp"
#include "wwords/series.hpp"

namespace wwords {

  // Admissible base indices k of a colour: k >= min_index, k mod modulus in
  // residues, k not forbidden.
  struct IndexDomain {
    std::int64_t               min_index = 1;
    std::uint32_t              modulus   = 1;
    std::vector<std::uint32_t> residues  = {0};
    std::vector<std::int64_t>  forbidden;

    [[nodiscard]] bool contains(std::int64_t k) const;
    // Smallest admissible index, if any within a few periods of min_index.
    [[nodiscard]] std::optional<std::int64_t> smallest() const;

    friend bool operator==(IndexDomain const&, IndexDomain const&) = default;
  };

  // A colour. Its coloured integers have sizes scale*k + offset for admissible
  // base indices k; dilation rescales sizes but keeps k.
  struct ColourDef {
    std::string  label;
    Monomial     weight;
    std::int64_t scale  = 1;
    std::int64_t offset = 0;
    IndexDomain  domain;
    bool         overline_allowed = false;
    // The weight is a marker specialized to 1 in every output.
    bool erased = false;

    [[nodiscard]] std::int64_t size_of(std::int64_t k) const noexcept {
      return scale * k + offset;
    }
    [[nodiscard]] std::optional<std::int64_t>
    index_of(std::int64_t size) const noexcept;

    friend bool operator==(ColourDef const&, ColourDef const&) = default;
  };

  struct ColouredPart {
    std::int64_t size      = 0;
    std::size_t  colour    = 0;
    bool         overlined = false;

    friend auto operator<=>(ColouredPart const&, ColouredPart const&)
        = default;
  };

  // entries[upper colour][row class][lower colour] is the minimal difference
  // between an upper part and the part following it; the row class is the
  // upper part's base index mod period.
  struct GapMatrix {
    std::uint32_t                                        period = 1;
    std::vector<std::vector<std::vector<std::int64_t>>> entries;

    friend bool operator==(GapMatrix const&, GapMatrix const&) = default;
  };

  // w(c_lower) + chi(lower overlined) - 1 + delta(c_upper, c_lower), with
  // colours indexed 1..2^r-1 by their position.
  struct AndrewsGap {
    unsigned r = 1;

    friend bool operator==(AndrewsGap const&, AndrewsGap const&) = default;
  };

  // Coloured overpartitions into colours 1..r: equal sizes must strictly
  // decrease in colour, and an overlined part cannot follow an equal part of
  // its own colour.
  struct OverpartitionGap {
    friend bool operator==(OverpartitionGap const&, OverpartitionGap const&)
        = default;
  };

  using GapRule = std::variant<GapMatrix, AndrewsGap, OverpartitionGap>;

  struct AndrewsColour {
    Monomial weight;
    unsigned w = 0;  // number of primary colours
    unsigned v = 0;  // smallest primary index
    unsigned z = 0;  // largest primary index
  };

  // Colour i in 1..2^r-1 is prod u_k over the set bits k of i.
  AndrewsColour andrews_colour_data(unsigned r, std::uint64_t i);
  std::string   andrews_label(unsigned r, std::uint64_t i);

  class ColouredSystem {
   public:
    std::string               name;
    std::vector<ColourDef>    colours;
    std::int64_t              rank_mult = 1;
    std::vector<std::int64_t> rank_offset;
    GapRule                   gap;
    std::int64_t              min_size = 1;
    std::optional<var_type>   overline_marker;
    // Free-form conventions recorded by the preset (e.g. small-part sets).
    std::map<std::string, std::string> conventions;

    [[nodiscard]] std::size_t colour_index(std::string_view label) const;
    [[nodiscard]] ColouredPart part(std::string_view label,
                                    std::int64_t     size,
                                    bool             overlined = false) const;

    [[nodiscard]] std::optional<std::int64_t>
    index_of(ColouredPart const& p) const;
    [[nodiscard]] bool is_valid(ColouredPart const& p) const;
    // Valid plain parts of the given size, one per colour admitting it.
    [[nodiscard]] std::vector<ColouredPart>
    parts_of_size(std::int64_t size) const;

    [[nodiscard]] std::int64_t min_gap(ColouredPart const& upper,
                                       ColouredPart const& lower) const;
    // Gap for an upper part of the given colour and base index.
    [[nodiscard]] std::int64_t gap_for(std::size_t  upper_colour,
                                       std::int64_t upper_index,
                                       std::size_t  lower_colour,
                                       bool         lower_overlined) const;
    [[nodiscard]] std::uint32_t row_period() const noexcept;

    // Position in the total order; overlined and plain copies share it.
    [[nodiscard]] std::int64_t rank(ColouredPart const& p) const;
    // Rank of the position (colour, size) whether or not that coloured
    // integer is an admissible part; empty when size is off the colour's
    // lattice.
    [[nodiscard]] std::optional<std::int64_t>
    rank_at(std::size_t colour, std::int64_t size) const;
    // Strict total order used for indexing: by rank, plain before overlined.
    [[nodiscard]] bool key_less(ColouredPart const& x,
                                ColouredPart const& y) const;

    // Output weight of a part, including the overline marker on plain parts
    // and with erased colours dropped.
    [[nodiscard]] Monomial weight(ColouredPart const& p) const;
    [[nodiscard]] std::vector<var_type> output_variables() const;

    // Every valid part of size <= max_size, ascending in key order.
    [[nodiscard]] std::vector<ColouredPart>
    parts_up_to(std::int64_t max_size) const;

    [[nodiscard]] bool is_matrix() const noexcept {
      return std::holds_alternative<GapMatrix>(gap);
    }
    [[nodiscard]] bool has_overlines() const noexcept;

    [[nodiscard]] std::string describe(ColouredPart const& p) const;

    // Structural checks plus the gap-implies-order invariant for all parts of
    // size <= check_size. Throws on failure.
    void validate(std::int64_t check_size = 40) const;
  };

  // Rank of a valid part; throws invalid_argument otherwise.
  std::int64_t part_rank(ColouredSystem const& sys, ColouredPart const& p);

  // Sizes map k -> modulus*size + offset(colour).
  struct DilationSpec {
    std::int64_t                        modulus = 1;
    std::map<std::string, std::int64_t> offsets;  // by colour label

    [[nodiscard]] bool is_identity() const;
  };

  // Colour offsets induced by variable images v -> v q^{shift}.
  DilationSpec dilation_from_shifts(
      ColouredSystem const&                      sys,
      std::int64_t                               modulus,
      std::map<std::string, std::int64_t> const& variable_shifts);

  ColouredSystem dilate_system(ColouredSystem const& sys,
                               DilationSpec const&   d);

  // The series-level substitution matching dilate_system: q -> q^m and
  // v -> v q^{s_v} with sum of weight exponents times shifts equal to each
  // colour's offset.
  SubstitutionMap statistic_substitution(DilationSpec const&   d,
                                         ColouredSystem const& sys);

  // Smallest weighted order that determines the dilated series to
  // dilated_qmax.
  std::size_t weighted_order_for(ColouredSystem const& sys,
                                 DilationSpec const&   d,
                                 std::size_t           dilated_qmax);

  // Text rendering of a gap matrix with row classes.
  std::string format_gap_matrix(ColouredSystem const& sys);

}  // namespace wwords

#endif  // WWORDS_SYSTEMS_HPP_
