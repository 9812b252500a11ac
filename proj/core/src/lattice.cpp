#include "gmpd/lattice.hpp"

#include <algorithm>

#include "gmpd/dot.hpp"
#include "gmpd/error.hpp"

namespace gmpd {

std::string to_string(const OverringVector &v) {
  std::string out;
  for (std::size_t i = 0; i < v.levels.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(v.levels[i]);
  }
  return out;
}

OverringLattice OverringLattice::build(DomainModel model, std::size_t size_guard) {
  OverringLattice lat;
  const std::size_t width = model.max_count();

  std::size_t size = 1;
  for (LocalClass c : model.maximal_ideals()) {
    const std::size_t len = chain_length(c);
    if (size > size_guard / len) {
      throw resource_limit_error("lattice too large: " + to_string(model) +
                                 " exceeds the size guard of " + std::to_string(size_guard) +
                                 " elements");
    }
    size *= len;
  }
  if (size > size_guard) {
    throw resource_limit_error("lattice too large: size guard is " + std::to_string(size_guard));
  }

  lat.tops_.resize(width);
  lat.strides_.assign(width, 1);
  for (std::size_t i = 0; i < width; ++i) lat.tops_[i] = chain_length(model[i]) - 1;
  // Last coordinate varies fastest, so rank order is lexicographic order.
  for (std::size_t i = width; i-- > 1;) lat.strides_[i - 1] = lat.strides_[i] * (lat.tops_[i] + 1);

  lat.elements_.reserve(size);
  OverringVector current{std::vector<unsigned>(width, 0)};
  for (std::size_t k = 0; k < size; ++k) {
    lat.elements_.push_back(current);
    for (std::size_t i = width; i-- > 0;) {
      if (current.levels[i] < lat.tops_[i]) {
        ++current.levels[i];
        break;
      }
      current.levels[i] = 0;
    }
  }
  lat.model_ = std::move(model);
  return lat;
}

bool OverringLattice::contains(const OverringVector &v) const noexcept {
  if (v.levels.size() != tops_.size()) return false;
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    if (v.levels[i] > tops_[i]) return false;
  }
  return true;
}

std::optional<std::size_t> OverringLattice::index_of(const OverringVector &v) const noexcept {
  if (!contains(v)) return std::nullopt;
  std::size_t index = 0;
  for (std::size_t i = 0; i < tops_.size(); ++i) index += v.levels[i] * strides_[i];
  return index;
}

bool OverringLattice::leq(const OverringVector &a, const OverringVector &b) const {
  if (!contains(a) || !contains(b)) throw precondition_error("leq: vector outside lattice");
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    if (a.levels[i] > b.levels[i]) return false;
  }
  return true;
}

OverringVector OverringLattice::meet(const OverringVector &a, const OverringVector &b) const {
  if (!contains(a) || !contains(b)) throw precondition_error("meet: vector outside lattice");
  OverringVector out = a;
  for (std::size_t i = 0; i < tops_.size(); ++i)
    out.levels[i] = std::min(a.levels[i], b.levels[i]);
  return out;
}

OverringVector OverringLattice::join(const OverringVector &a, const OverringVector &b) const {
  if (!contains(a) || !contains(b)) throw precondition_error("join: vector outside lattice");
  OverringVector out = a;
  for (std::size_t i = 0; i < tops_.size(); ++i)
    out.levels[i] = std::max(a.levels[i], b.levels[i]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> OverringLattice::covers() const {
  // In a product of chains, b covers a iff b is a with one coordinate raised
  // by exactly one. Strides shrink left to right, so walking the coordinates
  // backwards emits the pairs already sorted.
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const auto &levels = elements_[k].levels;
    for (std::size_t i = tops_.size(); i-- > 0;) {
      if (levels[i] < tops_[i]) out.emplace_back(k, k + strides_[i]);
    }
  }
  return out;
}

std::vector<OverringVector> quasi_local_elements(const OverringLattice &lat) {
  const auto tops = lat.tops();
  std::vector<OverringVector> out;
  for (const OverringVector &v : lat.elements()) {
    std::size_t below_top = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (v.levels[i] < tops[i]) ++below_top;
    }
    if (below_top <= 1) out.push_back(v);
  }
  return out;
}

std::vector<OverringVector> quasi_local_elements_via(const OverringLattice &lat,
                                                     std::size_t ideal) {
  const auto tops = lat.tops();
  if (ideal >= tops.size()) throw precondition_error("quasi_local_elements_via: no such maximal ideal");
  std::vector<OverringVector> out;
  OverringVector v{std::vector<unsigned>(tops.begin(), tops.end())};
  for (unsigned level = 0; level <= tops[ideal]; ++level) {
    v.levels[ideal] = level;
    out.push_back(v);
  }
  return out;
}

std::size_t longest_chain_length(const OverringLattice &lat) {
  // Covers always go to a larger rank, so one forward pass suffices.
  std::vector<std::size_t> longest(lat.size(), 1);
  for (const auto &[lower, upper] : lat.covers()) {
    longest[upper] = std::max(longest[upper], longest[lower] + 1);
  }
  return longest.back();
}

OverringVector closure_of_bottom(const OverringLattice &lat) {
  OverringVector v = lat.bottom();
  const auto locals = lat.model().maximal_ideals();
  for (std::size_t i = 0; i < locals.size(); ++i) {
    if (!is_integrally_closed(locals[i])) v.levels[i] = 1;
  }
  return v;
}

std::string emit_hasse(const OverringLattice &lat) {
  DotWriter dot("overrings");
  const auto elements = lat.elements();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    dot.add_node("n" + std::to_string(k), to_string(elements[k]));
  }
  for (const auto &[lower, upper] : lat.covers()) {
    dot.add_edge("n" + std::to_string(lower), "n" + std::to_string(upper));
  }
  return dot.str();
}

} // namespace gmpd
