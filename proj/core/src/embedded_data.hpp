#pragma once

#include <string_view>

namespace stablegenus::detail {

std::string_view embedded_catalog_text();
std::string_view embedded_facts_text();

}  // namespace stablegenus::detail
