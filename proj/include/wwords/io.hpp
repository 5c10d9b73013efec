#ifndef WWORDS_IO_HPP_
#define WWORDS_IO_HPP_

#include <string>

#include "json.hpp"

#include "wwords/equations.hpp"
#include "wwords/product.hpp"
#include "wwords/series.hpp"
#include "wwords/systems.hpp"

namespace wwords {

  using json = nlohmann::ordered_json;

  // Reading throws invalid_argument on malformed documents.

  json     monomial_to_json(Monomial const& m);  // {"a": 1, "b": 2}
  Monomial monomial_from_json(json const& j);

  json        product_to_json(ProductSpec const& p);
  ProductSpec product_from_json(json const& j);

  json            substitution_to_json(SubstitutionMap const& s);
  SubstitutionMap substitution_from_json(json const& j);

  json           system_to_json(ColouredSystem const& sys);
  ColouredSystem system_from_json(json const& j);

  json         equation_to_json(EquationSpec const& e);
  EquationSpec equation_from_json(json const& j);

  // {"qmax": N, "degmax": L|null, "coefficients": [{"n": 0, "terms":
  // [{"monomial": {...}, "coeff": "1"}]}, ...]}, rows up to `upto`.
  json   series_to_json(Series const& f);
  json   coefficient_table(Series const& f, std::size_t upto);
  Series series_from_json(json const& j);
  // One line per q-exponent: "n: polynomial".
  std::string coefficient_table_text(Series const& f, std::size_t upto);

  json read_json_file(std::string const& path);

}  // namespace wwords

#endif  // WWORDS_IO_HPP_
