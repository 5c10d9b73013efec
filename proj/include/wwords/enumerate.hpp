#ifndef WWORDS_ENUMERATE_HPP_
#define WWORDS_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wwords/series.hpp"
#include "wwords/systems.hpp"

namespace wwords {

  // Parts listed largest first.
  using PartitionSeq = std::vector<ColouredPart>;

  struct PartitionCheck {
    bool                       valid = true;
    std::optional<std::size_t> position;  // offending part or pair start
    std::string                reason;

    explicit operator bool() const noexcept {
      return valid;
    }
  };

  PartitionCheck is_valid_partition(ColouredSystem const& sys,
                                    PartitionSeq const&   seq);

  // Generated-node budget for one enumeration call: 10^7 unless the
  // WWORDS_NODE_LIMIT environment variable says otherwise.
  std::uint64_t default_node_limit();

  Series enumerate_series(ColouredSystem const& sys,
                          std::size_t           qmax,
                          degree_cap            degmax     = std::nullopt,
                          std::uint64_t         node_limit = 0);

  // Every valid partition of n, ordered lexicographically by the sequence of
  // part keys (largest part first).
  std::vector<PartitionSeq> list_partitions(ColouredSystem const& sys,
                                            std::size_t           n,
                                            degree_cap    degmax = std::nullopt,
                                            std::size_t   limit  = 100000);

  Monomial    partition_weight(ColouredSystem const& sys,
                               PartitionSeq const&   seq);
  std::string format_partition(ColouredSystem const& sys,
                               PartitionSeq const&   seq);

}  // namespace wwords

#endif  // WWORDS_ENUMERATE_HPP_
