#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmpd/domain_model.hpp"

namespace gmpd {

inline constexpr std::size_t default_size_guard = 1'000'000;

/// One overring E = (intersection over i of E_i), E_i in O(D_{M_i}),
/// recorded by the position of E_i in the chain of overrings of D_{M_i}.
/// Level 0 is the localization itself; the top level is the quotient field.
struct OverringVector {
  std::vector<unsigned> levels;

  friend auto operator<=>(const OverringVector &, const OverringVector &) = default;
};

std::string to_string(const OverringVector &v); // "2,0"

/// The overrings of a model, materialized as the product of the per-ideal
/// overring chains and ordered componentwise. Elements are stored in
/// lexicographic order, so index_of() is a mixed-radix rank.
class OverringLattice {
public:
  /// Throws resource_limit_error if the element count would exceed
  /// `size_guard`.
  static OverringLattice build(DomainModel model, std::size_t size_guard = default_size_guard);

  const DomainModel &model() const noexcept { return model_; }
  std::span<const OverringVector> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Highest level per coordinate (chain_length - 1).
  std::span<const unsigned> tops() const noexcept { return tops_; }

  const OverringVector &bottom() const noexcept { return elements_.front(); }
  const OverringVector &top() const noexcept { return elements_.back(); }

  bool contains(const OverringVector &v) const noexcept;
  std::optional<std::size_t> index_of(const OverringVector &v) const noexcept;

  bool leq(const OverringVector &a, const OverringVector &b) const;
  OverringVector meet(const OverringVector &a, const OverringVector &b) const;
  OverringVector join(const OverringVector &a, const OverringVector &b) const;

  /// Index pairs (lower, upper) of every cover relation, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

private:
  OverringLattice() = default;

  DomainModel model_;
  std::vector<unsigned> tops_;
  std::vector<std::size_t> strides_;
  std::vector<OverringVector> elements_;
};

inline OverringLattice build(const DomainModel &model,
                             std::size_t size_guard = default_size_guard) {
  return OverringLattice::build(model, size_guard);
}

/// Elements with at most one coordinate below its top: the overrings that are
/// overrings of a single localization, i.e. the quasi-local ones.
std::vector<OverringVector> quasi_local_elements(const OverringLattice &lat);

/// O(D_{M_i}) embedded in the lattice: coordinate `ideal` free, all others
/// at top.
std::vector<OverringVector> quasi_local_elements_via(const OverringLattice &lat,
                                                     std::size_t ideal);

/// Number of elements in a longest chain from bottom to top, found by
/// dynamic programming over the cover relation.
std::size_t longest_chain_length(const OverringLattice &lat);

/// Level 1 on K1 coordinates (the overring D'), 0 elsewhere.
OverringVector closure_of_bottom(const OverringLattice &lat);

/// Hasse diagram as a DOT digraph named "overrings". One node per element in
/// lexicographic order, labelled with its comma-joined levels; one edge per
/// cover, smaller to larger.
std::string emit_hasse(const OverringLattice &lat);

} // namespace gmpd
