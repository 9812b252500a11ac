#include "gmpd/constructors.hpp"

#include "gmpd/error.hpp"

namespace gmpd {

std::string_view to_string(ValueGroup g) noexcept {
  switch (g) {
  case ValueGroup::Z: return "Z";
  case ValueGroup::ZxZ: return "ZxZ";
  case ValueGroup::R: return "R";
  }
  return "?";
}

std::optional<ValueGroup> parse_value_group(std::string_view text) noexcept {
  for (ValueGroup g : {ValueGroup::Z, ValueGroup::ZxZ, ValueGroup::R}) {
    if (to_string(g) == text) return g;
  }
  return std::nullopt;
}

DomainModel from_valuations(std::span<const ValuationSpec> specs) {
  std::vector<LocalClass> locals;
  locals.reserve(specs.size());
  for (const ValuationSpec &spec : specs) locals.push_back(local_class(spec.group));
  return DomainModel(std::move(locals));
}

DomainModel krull_example(std::size_t n) {
  if (n == 0) throw precondition_error("krull_example: n must be at least 1");
  return DomainModel(std::vector<LocalClass>(n - 1, LocalClass::K4));
}

DomainModel from_counts(const ClassCounts &counts) {
  std::vector<LocalClass> locals;
  locals.reserve(counts.total());
  for (LocalClass c : all_local_classes) locals.insert(locals.end(), counts.of(c), c);
  return DomainModel(std::move(locals));
}

} // namespace gmpd
