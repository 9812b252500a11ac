#include "gmpd/counting.hpp"

#include <string>

#include "gmpd/error.hpp"

namespace gmpd {

Count quasi_local_count(const DomainModel &model) {
  const ClassCounts n = model.counts();
  return Count(2) * (n.k1 + n.k3) + (n.k2 + n.k4) + 1;
}

Count quasi_local_count_from_localizations(const DomainModel &model) {
  Count sum = 0;
  for (LocalClass c : model.maximal_ideals()) sum += chain_length(c);
  return sum - model.max_count() + 1;
}

Count total_count(const DomainModel &model) {
  Count product = 1;
  for (LocalClass c : model.maximal_ideals()) product *= chain_length(c);
  return product;
}

CountReport count_report(const DomainModel &model) {
  return CountReport{total_count(model), quasi_local_count(model), model.max_count(),
                     model.counts()};
}

namespace detail {

void require_agreement(const DomainModel &model, const char *property, bool structural,
                       bool by_count) {
  if (structural == by_count) return;
  throw internal_error(std::string("characterization mismatch for ") + property + " on " +
                       to_string(model) + ": structural=" + (structural ? "true" : "false") +
                       ", by count=" + (by_count ? "true" : "false"));
}

} // namespace detail

Characterization characterize(const DomainModel &model) {
  const ClassCounts n = model.counts();
  const Count ql = quasi_local_count(model);

  Characterization out;
  out.count_noetherian_formula = Count(2) * n.k1 + n.k4 + 1;
  out.count_prufer_formula = Count(2) * n.k3 + (n.k2 + n.k4) + 1;
  out.count_dedekind_formula = Count(n.k4) + 1;

  out.noetherian = is_noetherian(model);
  out.prufer = is_prufer(model);
  out.dedekind = is_dedekind(model);

  detail::require_agreement(model, "noetherian", out.noetherian,
                            ql == out.count_noetherian_formula);
  detail::require_agreement(model, "prufer", out.prufer, ql == out.count_prufer_formula);
  detail::require_agreement(model, "dedekind", out.dedekind, ql == out.count_dedekind_formula);
  return out;
}

MpdCounts mpd_counts(const DomainModel &model) {
  if (!is_mpd(model)) {
    throw precondition_error("mpd_counts: " + to_string(model) +
                             " has more than one non-DVR localization");
  }
  return MpdCounts{total_count(model), quasi_local_count(model)};
}

} // namespace gmpd
