#pragma once

#include <string_view>

namespace cavityqed {

std::string_view version();

} // namespace cavityqed
