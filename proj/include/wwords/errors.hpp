#ifndef WWORDS_ERRORS_HPP_
#define WWORDS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wwords {

  // Base class of every error raised by the library.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Two series carry different truncation orders.
  class incompatible_truncation : public error {
   public:
    using error::error;
  };

  // A dilation or substitution would produce a negative q-exponent, a
  // negative gap, or a part below the minimum size.
  class invalid_dilation : public error {
   public:
    using error::error;
  };

  // A product factor has a non-unit constant term, or a series is not a
  // unit where one is required.
  class invalid_product : public error {
   public:
    using error::error;
  };

  class unknown_name : public error {
   public:
    using error::error;
  };

  class invalid_argument : public error {
   public:
    using error::error;
  };

  // The gap rule admits a part that is not yet computed in rank order.
  class rank_inconsistency : public error {
   public:
    using error::error;
  };

  // A rational coefficient has a vanishing constant term in its denominator.
  class singular_coefficient : public error {
   public:
    using error::error;
  };

  class safety_bound_exceeded : public error {
   public:
    using error::error;
  };

  class engine_inapplicable : public error {
   public:
    using error::error;
  };

  class search_space_too_large : public error {
   public:
    using error::error;
  };

}  // namespace wwords

#endif  // WWORDS_ERRORS_HPP_
