#ifndef WWORDS_VERIFY_HPP_
#define WWORDS_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wwords/enumerate.hpp"
#include "wwords/io.hpp"
#include "wwords/product.hpp"
#include "wwords/series.hpp"
#include "wwords/systems.hpp"

namespace wwords {

  enum class engine { enumeration, recurrence, product, dilation };

  std::string engine_name(engine e);
  // Accepts enum, recurrence, product, dilation. Throws invalid_argument.
  engine parse_engine(std::string_view name);
  // Comma separated list, e.g. "enum,product".
  std::vector<engine> parse_engines(std::string_view list);

  // A weighted system whose dilation is the case's counted system.
  struct DilationLink {
    ColouredSystem weighted;
    DilationSpec   spec;
  };

  // A statistic stated in words, checked against the colour weights of
  // sampled partitions. `statistic` reads only part sizes and the
  // primed/overlined status; `extra` may add a membership test and returns
  // a message on failure.
  struct StatisticCheck {
    std::function<Monomial(ColouredSystem const&, PartitionSeq const&)>
        statistic;
    std::function<std::optional<std::string>(ColouredSystem const&,
                                              PartitionSeq const&)>
                extra;
    std::size_t max_size = 40;
    std::size_t samples  = 200;
  };

  struct IdentityCase {
    std::string name;
    std::string description;
    // Counted side. More than one entry lists competing conventions, of
    // which exactly one is expected to match.
    std::vector<ColouredSystem>    systems;
    std::optional<ColouredSystem>  other_side;
    std::optional<ProductSpec>     product;
    std::optional<DilationLink>    dilation;
    // Applied to every computed side before comparison (e.g. a = b = 1).
    std::optional<SubstitutionMap> specialize;
    std::optional<StatisticCheck>  statistic;
    std::size_t                    qmax = 20;
    degree_cap                     degmax;

    [[nodiscard]] std::vector<engine> applicable_engines() const;
  };

  std::vector<IdentityCase> const& identity_cases();
  // Also accepts "theorem-8:r" for any r >= 1. Throws unknown_name.
  IdentityCase identity_case(std::string_view name);

  struct ReportMismatch {
    Mismatch    mismatch;
    std::string lhs_source;
    std::string rhs_source;
  };

  struct Report {
    std::string                        identity;
    std::size_t                        qmax = 0;
    degree_cap                         degmax;
    std::vector<std::string>           engines;
    bool                               equal = false;
    std::optional<ReportMismatch>      first_mismatch;
    std::map<std::string, std::string> conventions;
    std::int64_t                       ms = 0;
  };

  struct VerifyOptions {
    std::uint64_t seed = 1;
  };

  // Computes every requested engine's series to (qmax, degmax) and compares
  // them pairwise. Empty `engines` means all applicable ones. Throws
  // engine_inapplicable naming the applicable engines.
  Report verify_identity(IdentityCase const&        c,
                         std::size_t                qmax,
                         degree_cap                 degmax,
                         std::vector<engine> const& engines = {},
                         VerifyOptions const&       opts    = {});

  Report verify_identity(IdentityCase const& c, VerifyOptions const& opts = {});

  json        report_to_json(Report const& r);
  std::string report_to_text(Report const& r);

  // Samples valid partitions of size <= check.max_size uniformly by size
  // then uniformly among partitions of that size, and returns a description
  // of the first disagreement.
  std::optional<std::string> run_statistic_check(ColouredSystem const& sys,
                                                 StatisticCheck const& check,
                                                 degree_cap            degmax,
                                                 std::uint64_t         seed);

}  // namespace wwords

#endif  // WWORDS_VERIFY_HPP_
