#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace gmpd {

/// The four quasi-local MPD classes a localization D_M can belong to.
///
///   K1  two-generated pseudo-valuation domain that is not a DVR
///       (not integrally closed; overrings D < D' < K)
///   K2  rank-one valuation domain with value group R
///   K3  rank-two valuation domain with value group Z x Z (lexicographic)
///   K4  DVR, value group Z
///
/// The classes are pairwise disjoint: a PVD that happens to be a valuation
/// domain is filed under K2, K3 or K4.
enum class LocalClass : std::uint8_t { K1, K2, K3, K4 };

inline constexpr std::array<LocalClass, 4> all_local_classes{
    LocalClass::K1, LocalClass::K2, LocalClass::K3, LocalClass::K4};

/// Number of overrings of the localization, itself and the quotient field
/// included.
constexpr unsigned chain_length(LocalClass c) noexcept {
  switch (c) {
  case LocalClass::K1: return 3;
  case LocalClass::K2: return 2;
  case LocalClass::K3: return 3;
  case LocalClass::K4: return 2;
  }
  return 0;
}

/// Krull dimension of the localization.
constexpr unsigned dimension(LocalClass c) noexcept {
  return c == LocalClass::K3 ? 2U : 1U;
}

constexpr bool is_valuation(LocalClass c) noexcept { return c != LocalClass::K1; }

constexpr bool is_noetherian(LocalClass c) noexcept {
  return c == LocalClass::K1 || c == LocalClass::K4;
}

constexpr bool is_integrally_closed(LocalClass c) noexcept { return c != LocalClass::K1; }

constexpr std::size_t index_of(LocalClass c) noexcept { return static_cast<std::size_t>(c); }

std::string_view to_string(LocalClass c) noexcept;

/// Accepts exactly "K1".."K4".
std::optional<LocalClass> parse_local_class(std::string_view text) noexcept;

} // namespace gmpd
