#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmpd/domain_model.hpp"
#include "gmpd/lattice.hpp"

namespace gmpd {

/// Canonical models for every count tuple with n1 + n2 + n3 + n4 <= bound,
/// in lexicographic order of (n1, n2, n3, n4).
std::vector<DomainModel> canonical_models_up_to(std::size_t max_maximals);

struct VerificationFailure {
  DomainModel model;
  std::string check;
  std::string detail;
};

struct VerificationSummary {
  std::size_t max_maximals = 0;
  std::size_t models_checked = 0;
  std::size_t checks_run = 0;
  std::vector<VerificationFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Cross-checks one model: formula counts against the lattice census,
/// characterize() consistency, the corollary criteria when Prufer, MPD
/// branch membership when MPD, spectrum validity and shape.
std::vector<VerificationFailure> verify_model(const DomainModel &model,
                                              std::size_t size_guard, std::size_t &checks_run);

/// verify_model() over canonical_models_up_to(max_maximals).
VerificationSummary verify_all(std::size_t max_maximals,
                               std::size_t size_guard = default_size_guard);

} // namespace gmpd
