#include "gmpd/local_class.hpp"

namespace gmpd {

std::string_view to_string(LocalClass c) noexcept {
  switch (c) {
  case LocalClass::K1: return "K1";
  case LocalClass::K2: return "K2";
  case LocalClass::K3: return "K3";
  case LocalClass::K4: return "K4";
  }
  return "?";
}

std::optional<LocalClass> parse_local_class(std::string_view text) noexcept {
  for (LocalClass c : all_local_classes) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

} // namespace gmpd
