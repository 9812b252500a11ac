#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "gmpd/domain_model.hpp"

namespace gmpd {

/// Value groups admitted for a valuation domain in an intersection
/// D = V_1 n ... n V_n that is GMPD. ZxZ is the lexicographic product.
enum class ValueGroup : std::uint8_t { Z, ZxZ, R };

constexpr unsigned rank(ValueGroup g) noexcept { return g == ValueGroup::ZxZ ? 2U : 1U; }

constexpr LocalClass local_class(ValueGroup g) noexcept {
  switch (g) {
  case ValueGroup::Z: return LocalClass::K4;
  case ValueGroup::ZxZ: return LocalClass::K3;
  case ValueGroup::R: return LocalClass::K2;
  }
  return LocalClass::K4;
}

std::string_view to_string(ValueGroup g) noexcept;
std::optional<ValueGroup> parse_value_group(std::string_view text) noexcept;

struct ValuationSpec {
  ValueGroup group;
};

/// Intersection of pairwise independent valuation domains. Independence is
/// the caller's promise: distinct entries become distinct maximal ideals,
/// and D localized at the center of V_i is V_i.
DomainModel from_valuations(std::span<const ValuationSpec> specs);

/// Localization D_S of a Krull domain at the complement of n - 1 height-one
/// primes: n - 1 DVR locals, hence exactly n quasi-local overrings.
/// Throws precondition_error for n = 0.
DomainModel krull_example(std::size_t n);

/// Canonical model with the given multiplicities, ordered K1..K4.
DomainModel from_counts(const ClassCounts &counts);

inline DomainModel from_counts(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t n4) {
  return from_counts(ClassCounts{n1, n2, n3, n4});
}

} // namespace gmpd
