#include "gmpd/cli/document.hpp"

#include <limits>
#include <set>
#include <string>

#include "gmpd/error.hpp"

namespace gmpd::cli {

namespace {

std::size_t parse_count(const std::string &key, const nlohmann::json &value) {
  if (!value.is_number_unsigned()) {
    throw input_error("count for " + key + " must be a non-negative integer");
  }
  const auto raw = value.get<std::uint64_t>();
  if (raw > max_document_ideals) {
    throw resource_limit_error("count for " + key + " exceeds " +
                               std::to_string(max_document_ideals) + " maximal ideals");
  }
  return static_cast<std::size_t>(raw);
}

DomainModel parse_counts(const nlohmann::json &counts) {
  if (!counts.is_object()) throw input_error("\"counts\" must be an object");
  ClassCounts parsed;
  for (const auto &[key, value] : counts.items()) {
    const auto tag = parse_local_class(key);
    if (!tag) throw input_error("unknown local class tag \"" + key + "\"");
    const std::size_t n = parse_count(key, value);
    switch (*tag) {
    case LocalClass::K1: parsed.k1 = n; break;
    case LocalClass::K2: parsed.k2 = n; break;
    case LocalClass::K3: parsed.k3 = n; break;
    case LocalClass::K4: parsed.k4 = n; break;
    }
  }
  if (parsed.total() > max_document_ideals) {
    throw resource_limit_error("model declares more than " + std::to_string(max_document_ideals) +
                               " maximal ideals");
  }
  std::vector<LocalClass> locals;
  locals.reserve(parsed.total());
  for (LocalClass c : all_local_classes) locals.insert(locals.end(), parsed.of(c), c);
  return DomainModel(std::move(locals));
}

DomainModel parse_list(const nlohmann::json &list) {
  if (!list.is_array()) throw input_error("\"maximal_ideals\" must be an array");
  if (list.size() > max_document_ideals) {
    throw resource_limit_error("model declares more than " + std::to_string(max_document_ideals) +
                               " maximal ideals");
  }
  std::vector<LocalClass> locals;
  locals.reserve(list.size());
  for (const auto &entry : list) {
    if (!entry.is_string()) throw input_error("maximal ideal entries must be strings");
    const auto text = entry.get<std::string>();
    const auto tag = parse_local_class(text);
    if (!tag) throw input_error("unknown local class tag \"" + text + "\"");
    locals.push_back(*tag);
  }
  return DomainModel(std::move(locals));
}

} // namespace

DomainModel parse_model_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw input_error(std::string("model document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("model document must be a JSON object");

  for (const auto &[key, value] : doc.items()) {
    if (key != "counts" && key != "maximal_ideals") {
      throw input_error("unexpected key \"" + key + "\" in model document");
    }
  }
  const bool has_counts = doc.contains("counts");
  const bool has_list = doc.contains("maximal_ideals");
  if (has_counts == has_list) {
    throw input_error("model document needs exactly one of \"counts\" or \"maximal_ideals\"");
  }
  return has_counts ? parse_counts(doc["counts"]) : parse_list(doc["maximal_ideals"]);
}

Json count_json(const Count &value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(value.convert_to<std::uint64_t>());
  }
  return Json(value.str());
}

Json model_json(const DomainModel &model) {
  Json tags = Json::array();
  for (LocalClass c : model.maximal_ideals()) tags.push_back(std::string(to_string(c)));
  const ClassCounts n = model.counts();
  return Json{{"maximal_ideals", std::move(tags)},
              {"counts", Json{{"K1", n.k1}, {"K2", n.k2}, {"K3", n.k3}, {"K4", n.k4}}}};
}

Json report_json(const DomainModel &model, const ReportOptions &options) {
  const CountReport counts = count_report(model);
  const Characterization ch = characterize(model);
  const SpecShape shape = spectrum_shape(model);

  Json report;
  report["model"] = model_json(model);
  report["count_report"] = Json{
      {"total_overrings", count_json(counts.total_overrings)},
      {"quasi_local_overrings", count_json(counts.quasi_local_overrings)},
      {"max_count", counts.max_count},
      {"counts",
       Json{{"n1", counts.counts.k1}, {"n2", counts.counts.k2}, {"n3", counts.counts.k3},
            {"n4", counts.counts.k4}}}};
  report["characterization"] = Json{
      {"noetherian", ch.noetherian},
      {"prufer", ch.prufer},
      {"dedekind", ch.dedekind},
      {"count_noetherian_formula", count_json(ch.count_noetherian_formula)},
      {"count_prufer_formula", count_json(ch.count_prufer_formula)},
      {"count_dedekind_formula", count_json(ch.count_dedekind_formula)}};
  if (is_mpd(model)) {
    const MpdCounts mpd = mpd_counts(model);
    report["mpd"] = Json{{"is_mpd", true},
                         {"total", count_json(mpd.total)},
                         {"quasi_local", count_json(mpd.quasi_local)}};
  } else {
    report["mpd"] = Json{{"is_mpd", false}};
  }
  report["spectrum"] = Json{
      {"elements", shape.spectrum_size()},
      {"maximal_ideals", shape.maximal_count()},
      {"shape", Json{{"a", shape.long_branches}, {"b", shape.short_branches}}}};

  if (options.lattice_stats) {
    const OverringLattice lat = build(model, options.size_guard);
    const std::size_t quasi_local = quasi_local_elements(lat).size();
    if (Count(lat.size()) != counts.total_overrings ||
        Count(quasi_local) != counts.quasi_local_overrings) {
      throw internal_error("lattice census disagrees with the counting formulas for " +
                           to_string(model));
    }
    report["lattice"] = Json{{"elements", lat.size()},
                             {"quasi_local_elements", quasi_local},
                             {"longest_chain", longest_chain_length(lat)}};
  }
  return report;
}

Json lattice_json(const OverringLattice &lat) {
  const auto covers = lat.covers();
  Json nodes = Json::array();
  for (const OverringVector &v : lat.elements()) nodes.push_back(v.levels);
  Json edges = Json::array();
  for (const auto &[lower, upper] : covers) edges.push_back(Json::array({lower, upper}));

  return Json{{"model", model_json(lat.model())},
              {"elements", lat.size()},
              {"covers", covers.size()},
              {"quasi_local_elements", quasi_local_elements(lat).size()},
              {"longest_chain", longest_chain_length(lat)},
              {"bottom", lat.bottom().levels},
              {"top", lat.top().levels},
              {"closure_of_bottom", closure_of_bottom(lat).levels},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

Json enum_spec_json(std::size_t n, const EnumSpecOptions &options) {
  const auto shapes = enumerate_shapes(n);

  Json listed = Json::array();
  for (const SpecShape &shape : shapes) {
    listed.push_back(Json{{"a", shape.long_branches},
                          {"b", shape.short_branches},
                          {"maximal_ideals", shape.maximal_count()},
                          {"realizing_model", model_json(realizing_model(shape))["maximal_ideals"]}});
  }
  Json doc{{"n", n},
           {"shape_count", shapes.size()},
           {"ceil_half", (n + 1) / 2},
           {"shapes", std::move(listed)}};

  if (options.oracle) {
    const BruteforceResult brute = enumerate_bruteforce(n, options.bound);
    std::set<SpecShape> brute_shapes;
    for (const SpecPoset &rep : brute.representatives) brute_shapes.insert(canonical_shape(rep));
    const bool agree = brute.representatives.size() == shapes.size() &&
                       brute_shapes == std::set<SpecShape>(shapes.begin(), shapes.end());
    doc["oracle"] = Json{{"classes", brute.representatives.size()},
                         {"labeled_posets", brute.labeled_posets},
                         {"valid_labeled_posets", brute.valid_labeled_posets},
                         {"agree", agree}};
  }
  return doc;
}

Json verification_json(const VerificationSummary &summary) {
  std::set<std::string> failed_models;
  Json failures = Json::array();
  for (const VerificationFailure &f : summary.failures) {
    failed_models.insert(to_string(f.model));
    failures.push_back(Json{{"model", model_json(f.model)["maximal_ideals"]},
                            {"check", f.check},
                            {"detail", f.detail}});
  }
  return Json{{"max_maximals", summary.max_maximals},
              {"models_checked", summary.models_checked},
              {"models_failed", failed_models.size()},
              {"checks_run", summary.checks_run},
              {"checks_failed", summary.failures.size()},
              {"result", summary.passed() ? "pass" : "fail"},
              {"failures", std::move(failures)}};
}

} // namespace gmpd::cli
