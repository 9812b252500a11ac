#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gmpd/local_class.hpp"

namespace gmpd {

/// Multiplicities n1..n4 of the classes K1..K4 among the maximal ideals.
struct ClassCounts {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t k3 = 0;
  std::size_t k4 = 0;

  constexpr std::size_t total() const noexcept { return k1 + k2 + k3 + k4; }

  constexpr std::size_t of(LocalClass c) const noexcept {
    switch (c) {
    case LocalClass::K1: return k1;
    case LocalClass::K2: return k2;
    case LocalClass::K3: return k3;
    case LocalClass::K4: return k4;
    }
    return 0;
  }

  friend constexpr auto operator<=>(const ClassCounts &, const ClassCounts &) = default;
};

/// Symbolic stand-in for an h-local GMPD domain with finitely many maximal
/// ideals: one LocalClass per maximal ideal. List positions identify the
/// maximal ideals; algebraic meaning depends only on the multiset.
///
/// The empty model is the quotient field itself.
class DomainModel {
public:
  DomainModel() = default;
  explicit DomainModel(std::vector<LocalClass> locals) : locals_(std::move(locals)) {}
  DomainModel(std::initializer_list<LocalClass> locals) : locals_(locals) {}

  std::span<const LocalClass> maximal_ideals() const noexcept { return locals_; }
  std::size_t max_count() const noexcept { return locals_.size(); }
  bool is_field() const noexcept { return locals_.empty(); }
  LocalClass operator[](std::size_t i) const { return locals_.at(i); }

  ClassCounts counts() const noexcept;

  /// Positional equality. Use same_multiset() for algebraic equality.
  friend bool operator==(const DomainModel &, const DomainModel &) = default;

private:
  std::vector<LocalClass> locals_;
};

bool same_multiset(const DomainModel &a, const DomainModel &b) noexcept;

/// Every localization is a valuation domain (n1 = 0).
bool is_prufer(const DomainModel &model) noexcept;

/// Every localization is Noetherian (n2 = n3 = 0).
bool is_noetherian(const DomainModel &model) noexcept;

/// Every localization is a DVR.
bool is_dedekind(const DomainModel &model) noexcept;

/// At most one localization is not a DVR.
bool is_mpd(const DomainModel &model) noexcept;

/// Replaces each K1 local by its integral closure D', a DVR.
DomainModel integral_closure(const DomainModel &model);

/// "[K1,K4,K4]"
std::string to_string(const DomainModel &model);

} // namespace gmpd
