#include "gmpd/domain_model.hpp"

#include <algorithm>

namespace gmpd {

ClassCounts DomainModel::counts() const noexcept {
  ClassCounts c;
  for (LocalClass local : locals_) {
    switch (local) {
    case LocalClass::K1: ++c.k1; break;
    case LocalClass::K2: ++c.k2; break;
    case LocalClass::K3: ++c.k3; break;
    case LocalClass::K4: ++c.k4; break;
    }
  }
  return c;
}

bool same_multiset(const DomainModel &a, const DomainModel &b) noexcept {
  return a.counts() == b.counts();
}

bool is_prufer(const DomainModel &model) noexcept {
  return std::ranges::all_of(model.maximal_ideals(),
                             [](LocalClass c) { return is_valuation(c); });
}

bool is_noetherian(const DomainModel &model) noexcept {
  return std::ranges::all_of(model.maximal_ideals(),
                             [](LocalClass c) { return is_noetherian(c); });
}

bool is_dedekind(const DomainModel &model) noexcept {
  return std::ranges::all_of(model.maximal_ideals(),
                             [](LocalClass c) { return c == LocalClass::K4; });
}

bool is_mpd(const DomainModel &model) noexcept {
  return std::ranges::count_if(model.maximal_ideals(),
                               [](LocalClass c) { return c != LocalClass::K4; }) <= 1;
}

DomainModel integral_closure(const DomainModel &model) {
  std::vector<LocalClass> closed(model.maximal_ideals().begin(), model.maximal_ideals().end());
  std::ranges::replace(closed, LocalClass::K1, LocalClass::K4);
  return DomainModel(std::move(closed));
}

std::string to_string(const DomainModel &model) {
  std::string out = "[";
  bool first = true;
  for (LocalClass c : model.maximal_ideals()) {
    if (!first) out += ',';
    out += to_string(c);
    first = false;
  }
  out += ']';
  return out;
}

} // namespace gmpd
