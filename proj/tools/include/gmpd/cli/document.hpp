#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "gmpd/counting.hpp"
#include "gmpd/domain_model.hpp"
#include "gmpd/lattice.hpp"
#include "gmpd/spectrum.hpp"
#include "gmpd/verify.hpp"

namespace gmpd::cli {

using Json = nlohmann::ordered_json;

/// Malformed model document or command-line value.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest number of maximal ideals a model document may declare.
inline constexpr std::size_t max_document_ideals = 1'000'000;

/// Parses either form of model document:
///
///   {"counts": {"K1": 1, "K4": 2}}          missing classes count as 0
///   {"maximal_ideals": ["K1", "K4", "K4"]}
///
/// Exactly one of the two keys, nothing else. Throws input_error, or
/// resource_limit_error past max_document_ideals.
DomainModel parse_model_document(std::string_view text);

/// A count as a JSON number when it fits in 64 bits, else a decimal string.
Json count_json(const Count &value);

/// {"maximal_ideals": [...], "counts": {"K1": .., "K2": .., "K3": .., "K4": ..}}
Json model_json(const DomainModel &model);

struct ReportOptions {
  bool lattice_stats = false;
  std::size_t size_guard = default_size_guard;
};

/// Model echo, counts, characterization, MPD counts and spectrum shape; the
/// lattice census too when requested. Throws internal_error if the lattice
/// census ever disagrees with the formulas.
Json report_json(const DomainModel &model, const ReportOptions &options = {});

/// Lattice statistics plus the full node and cover lists.
Json lattice_json(const OverringLattice &lat);

struct EnumSpecOptions {
  bool oracle = false;
  std::size_t bound = default_bruteforce_bound;
};

/// Shapes with a realizing model each; with the oracle, the brute-force class
/// count and the agreement verdict under "oracle".
Json enum_spec_json(std::size_t n, const EnumSpecOptions &options = {});

Json verification_json(const VerificationSummary &summary);

} // namespace gmpd::cli
