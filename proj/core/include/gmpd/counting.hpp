#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gmpd/domain_model.hpp"

namespace gmpd {

/// Exact overring counts. Totals grow like 3^n, so fixed-width integers are
/// not enough for large models.
using Count = boost::multiprecision::cpp_int;

struct CountReport {
  Count total_overrings;       // |O(D)|
  Count quasi_local_overrings; // |O_ql(D)|
  std::size_t max_count = 0;   // |Max(D)|
  ClassCounts counts;
};

/// |O_ql(D)| = 2(n1 + n3) + (n2 + n4) + 1.
Count quasi_local_count(const DomainModel &model);

/// |O_ql(D)| summed over the localizations instead:
/// sum |O(D_M)| - |Max(D)| + 1. Agrees with quasi_local_count().
Count quasi_local_count_from_localizations(const DomainModel &model);

/// |O(D)| = product of |O(D_M)| over the maximal ideals (1 for a field).
Count total_count(const DomainModel &model);

CountReport count_report(const DomainModel &model);

/// Structural and count-based verdicts for Noetherian, Prufer and Dedekind.
/// Each boolean is both the structural predicate and the outcome of
/// comparing quasi_local_count() against the matching formula; the two are
/// checked against each other on every call.
struct Characterization {
  bool noetherian = false;
  bool prufer = false;
  bool dedekind = false;
  Count count_noetherian_formula; // 2 n1 + n4 + 1
  Count count_prufer_formula;     // 2 n3 + (n2 + n4) + 1
  Count count_dedekind_formula;   // n4 + 1
};

/// Throws internal_error if a structural predicate and its count criterion
/// ever disagree.
Characterization characterize(const DomainModel &model);

struct MpdCounts {
  Count total;       // 2^n or 3 * 2^(n-1)
  Count quasi_local; // n + 1 or n + 2
};

/// Throws precondition_error unless is_mpd(model).
MpdCounts mpd_counts(const DomainModel &model);

namespace detail {
/// Throws internal_error naming `property` when the two verdicts differ.
void require_agreement(const DomainModel &model, const char *property, bool structural,
                       bool by_count);
} // namespace detail

} // namespace gmpd
