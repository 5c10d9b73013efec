#ifndef WWORDS_PRESETS_HPP_
#define WWORDS_PRESETS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wwords/product.hpp"
#include "wwords/systems.hpp"

namespace wwords {

  struct PresetInfo {
    std::string name;
    std::string description;
    bool        takes_r = false;
  };

  std::vector<PresetInfo> const& preset_list();

  // Builds a registered system. Parametric families take r either as the
  // argument or as a "name:r" suffix.
  ColouredSystem build_preset(std::string_view        name,
                              std::optional<unsigned> r = std::nullopt);

  struct NamedProduct {
    std::string name;
    std::string description;
    ProductSpec spec;
  };

  std::vector<NamedProduct> const& product_list();
  // Throws unknown_name.
  ProductSpec const& named_product(std::string_view name);

}  // namespace wwords

#endif  // WWORDS_PRESETS_HPP_
