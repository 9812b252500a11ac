#include "gmpd/verify.hpp"

#include <sstream>

#include "gmpd/constructors.hpp"
#include "gmpd/counting.hpp"
#include "gmpd/error.hpp"
#include "gmpd/spectrum.hpp"

namespace gmpd {

std::vector<DomainModel> canonical_models_up_to(std::size_t max_maximals) {
  std::vector<DomainModel> out;
  const std::size_t m = max_maximals;
  for (std::size_t n1 = 0; n1 <= m; ++n1)
    for (std::size_t n2 = 0; n1 + n2 <= m; ++n2)
      for (std::size_t n3 = 0; n1 + n2 + n3 <= m; ++n3)
        for (std::size_t n4 = 0; n1 + n2 + n3 + n4 <= m; ++n4)
          out.push_back(from_counts(n1, n2, n3, n4));
  return out;
}

namespace {

class Checker {
public:
  Checker(const DomainModel &model, std::size_t &checks_run)
      : model_(model), checks_run_(checks_run) {}

  template <typename L, typename R>
  void equal(const char *check, const L &lhs, const R &rhs) {
    ++checks_run_;
    if (lhs == rhs) return;
    std::ostringstream detail;
    detail << lhs << " != " << rhs;
    failures.push_back({model_, check, detail.str()});
  }

  void holds(const char *check, bool condition, const std::string &detail = {}) {
    ++checks_run_;
    if (!condition) failures.push_back({model_, check, detail});
  }

  std::vector<VerificationFailure> failures;

private:
  const DomainModel &model_;
  std::size_t &checks_run_;
};

} // namespace

std::vector<VerificationFailure> verify_model(const DomainModel &model, std::size_t size_guard,
                                              std::size_t &checks_run) {
  Checker check(model, checks_run);
  const ClassCounts n = model.counts();
  const std::size_t max = model.max_count();
  const Count total = total_count(model);
  const Count quasi_local = quasi_local_count(model);

  check.equal("quasi_local_count matches sum over localizations", quasi_local,
              quasi_local_count_from_localizations(model));

  try {
    const OverringLattice lat = build(model, size_guard);
    check.equal("lattice census equals total_count", Count(lat.size()), total);
    check.equal("quasi-local census equals quasi_local_count",
                Count(quasi_local_elements(lat).size()), quasi_local);

    std::size_t expected_chain = 1;
    for (LocalClass c : model.maximal_ideals()) expected_chain += chain_length(c) - 1;
    check.equal("longest chain", longest_chain_length(lat), expected_chain);

    const OverringVector closure = closure_of_bottom(lat);
    const DomainModel closed = integral_closure(model);
    for (std::size_t i = 0; i < max; ++i) {
      check.equal("closure_of_bottom matches integral_closure",
                  chain_length(model[i]) - closure.levels[i], chain_length(closed[i]));
    }
  } catch (const resource_limit_error &e) {
    check.holds("lattice within size guard", false, e.what());
  }

  try {
    characterize(model);
    check.holds("characterize consistency", true);
  } catch (const internal_error &e) {
    check.holds("characterize consistency", false, e.what());
  }

  if (is_prufer(model)) {
    check.holds("corollary: |O_ql| = n+1 iff no K3",
                (quasi_local == Count(max) + 1) == (n.k3 == 0));
    check.holds("corollary: |O_ql| = 2n+1 iff all K3",
                (quasi_local == Count(2) * max + 1) == (n.k3 == max));
  }

  if (is_mpd(model)) {
    const Count pow2 = Count(1) << max;
    const bool big_total = max > 0 && total == 3 * (pow2 / 2);
    check.holds("MPD total in {2^n, 3*2^(n-1)}", total == pow2 || big_total);
    check.holds("MPD quasi-local in {n+1, n+2}",
                quasi_local == Count(max) + 1 || quasi_local == Count(max) + 2);
    check.holds("MPD branches paired", big_total == (quasi_local == Count(max) + 2));
  }

  const SpecPoset spectrum = spectrum_of(model);
  const ValidationVerdict verdict = validate(spectrum);
  check.holds("spectrum validates", verdict.ok());
  if (verdict.ok()) {
    check.holds("spectrum shape is (n3, n1+n2+n4)",
                canonical_shape(spectrum) == SpecShape{n.k3, n.k1 + n.k2 + n.k4});
    const DomainModel witness = prufer_witness(model);
    check.holds("Prufer witness is Prufer", is_prufer(witness));
    check.holds("Prufer witness spectrum isomorphic",
                order_isomorphic(spectrum, spectrum_of(witness)));
  }

  return std::move(check.failures);
}

VerificationSummary verify_all(std::size_t max_maximals, std::size_t size_guard) {
  VerificationSummary summary;
  summary.max_maximals = max_maximals;
  for (const DomainModel &model : canonical_models_up_to(max_maximals)) {
    auto failures = verify_model(model, size_guard, summary.checks_run);
    ++summary.models_checked;
    summary.failures.insert(summary.failures.end(), std::make_move_iterator(failures.begin()),
                            std::make_move_iterator(failures.end()));
  }
  return summary;
}

} // namespace gmpd
