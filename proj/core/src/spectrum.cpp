#include "gmpd/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gmpd/dot.hpp"
#include "gmpd/error.hpp"

namespace gmpd {

namespace {

using Edge = SpecPoset::Edge;

} // namespace

SpecPoset SpecPoset::from_relations(std::size_t size, std::span<const Edge> less_than,
                                    std::size_t root) {
  if (size == 0) throw precondition_error("SpecPoset: a spectrum has at least one element");
  if (root >= size) throw precondition_error("SpecPoset: root out of range");

  std::vector<std::vector<std::size_t>> up(size);
  for (const auto &[a, b] : less_than) {
    if (a >= size || b >= size) throw precondition_error("SpecPoset: relation index out of range");
    up[a].push_back(b);
  }

  SpecPoset p;
  p.size_ = size;
  p.root_ = root;
  p.less_.assign(size * size, 0);

  // Transitive closure by a DFS from every element.
  std::vector<std::size_t> stack;
  for (std::size_t src = 0; src < size; ++src) {
    stack.assign(up[src].begin(), up[src].end());
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      if (p.less_[src * size + x] != 0) continue;
      p.less_[src * size + x] = 1;
      stack.insert(stack.end(), up[x].begin(), up[x].end());
    }
  }
  for (std::size_t x = 0; x < size; ++x) {
    if (p.less(x, x)) throw precondition_error("SpecPoset: relations contain a cycle");
  }
  return p;
}

std::vector<std::size_t> SpecPoset::heights() const {
  // Strict down-sets grow strictly along the order, so sorting by down-set
  // size yields a linear extension.
  std::vector<std::size_t> below(size_, 0);
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (less(a, b)) ++below[b];

  std::vector<std::size_t> order(size_);
  for (std::size_t i = 0; i < size_; ++i) order[i] = i;
  std::ranges::stable_sort(order, [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });

  std::vector<std::size_t> height(size_, 0);
  for (std::size_t b : order) {
    for (std::size_t a = 0; a < size_; ++a) {
      if (less(a, b)) height[b] = std::max(height[b], height[a] + 1);
    }
  }
  return height;
}

std::vector<std::size_t> SpecPoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size_; ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < size_ && minimal; ++y) minimal = !less(y, x);
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> SpecPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size_; ++x) {
    bool maximal = true;
    for (std::size_t y = 0; y < size_ && maximal; ++y) maximal = !less(x, y);
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<Edge> SpecPoset::covers() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size_ && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string_view to_string(SpecAxiom axiom) noexcept {
  switch (axiom) {
  case SpecAxiom::unique_minimum: return "unique_minimum";
  case SpecAxiom::height_at_most_two: return "height_at_most_two";
  case SpecAxiom::treed: return "treed";
  case SpecAxiom::y_free: return "y_free";
  case SpecAxiom::unique_height_one: return "unique_height_one";
  }
  return "?";
}

bool ValidationVerdict::violates(SpecAxiom axiom) const noexcept {
  return std::ranges::find(violations, axiom) != violations.end();
}

ValidationVerdict validate(const SpecPoset &p) {
  const std::size_t n = p.size();
  const auto height = p.heights();
  const auto maximals = p.maximal_elements();
  ValidationVerdict verdict;

  const auto minimals = p.minimal_elements();
  if (minimals.size() != 1 || minimals.front() != p.root()) {
    verdict.violations.push_back(SpecAxiom::unique_minimum);
  }

  if (std::ranges::any_of(height, [](std::size_t h) { return h > 2; })) {
    verdict.violations.push_back(SpecAxiom::height_at_most_two);
  }

  bool treed = true;
  for (std::size_t x = 0; x < n && treed; ++x) {
    for (std::size_t a = 0; a < n && treed; ++a) {
      if (!p.leq(a, x)) continue;
      for (std::size_t b = a + 1; b < n && treed; ++b) {
        if (p.leq(b, x) && !p.comparable(a, b)) treed = false;
      }
    }
  }
  if (!treed) verdict.violations.push_back(SpecAxiom::treed);

  bool y_free = true;
  for (std::size_t x = 0; x < n && y_free; ++x) {
    if (x == p.root()) continue;
    const auto above = std::ranges::count_if(maximals, [&](std::size_t m) { return p.leq(x, m); });
    y_free = above == 1;
  }
  if (!y_free) verdict.violations.push_back(SpecAxiom::y_free);

  bool unique_height_one = true;
  for (std::size_t m : maximals) {
    if (height[m] != 2) continue;
    std::size_t height_one = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (p.less(y, m) && height[y] == 1) ++height_one;
    }
    if (height_one != 1) unique_height_one = false;
  }
  if (!unique_height_one) verdict.violations.push_back(SpecAxiom::unique_height_one);

  return verdict;
}

std::string to_string(const SpecShape &shape) {
  return "(" + std::to_string(shape.long_branches) + "," + std::to_string(shape.short_branches) +
         ")";
}

SpecPoset spectrum_of(const DomainModel &model) {
  std::vector<Edge> relations;
  std::size_t next = 1;
  for (LocalClass c : model.maximal_ideals()) {
    if (dimension(c) == 2) {
      const std::size_t height_one = next++;
      const std::size_t maximal = next++;
      relations.emplace_back(0, height_one);
      relations.emplace_back(height_one, maximal);
    } else {
      relations.emplace_back(0, next++);
    }
  }
  return SpecPoset::from_relations(next, relations, 0);
}

SpecShape spectrum_shape(const DomainModel &model) noexcept {
  const ClassCounts n = model.counts();
  return SpecShape{n.k3, n.k1 + n.k2 + n.k4};
}

SpecShape canonical_shape(const SpecPoset &poset) {
  const ValidationVerdict verdict = validate(poset);
  if (!verdict.ok()) {
    std::string what = "canonical_shape: poset is not a GMPD spectrum (violates";
    for (SpecAxiom a : verdict.violations) what += " " + std::string(to_string(a));
    throw precondition_error(what + ")");
  }
  const auto height = poset.heights();
  SpecShape shape;
  for (std::size_t m : poset.maximal_elements()) {
    if (height[m] == 2) ++shape.long_branches;
    if (height[m] == 1) ++shape.short_branches;
  }
  return shape;
}

std::vector<SpecShape> enumerate_shapes(std::size_t n) {
  if (n == 0) throw precondition_error("enumerate_shapes: n must be at least 1");
  std::vector<SpecShape> out;
  for (std::size_t a = 0; 2 * a <= n - 1; ++a) out.push_back(SpecShape{a, n - 1 - 2 * a});
  return out;
}

DomainModel realizing_model(const SpecShape &shape) {
  std::vector<LocalClass> locals(shape.long_branches, LocalClass::K3);
  locals.insert(locals.end(), shape.short_branches, LocalClass::K4);
  return DomainModel(std::move(locals));
}

std::string canonical_form(const SpecPoset &poset) {
  const std::size_t n = poset.size();
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> lower_covers(n, 0);
  for (const auto &[a, b] : poset.covers()) {
    children[a].push_back(b);
    ++lower_covers[b];
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t expected = x == poset.root() ? 0 : 1;
    if (lower_covers[x] != expected) {
      throw precondition_error("canonical_form: Hasse diagram is not a tree rooted at the root");
    }
  }

  const auto height = poset.heights();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::ranges::stable_sort(order, [&](std::size_t x, std::size_t y) { return height[x] > height[y]; });

  std::vector<std::string> code(n);
  for (std::size_t x : order) {
    std::vector<std::string> parts;
    parts.reserve(children[x].size());
    for (std::size_t c : children[x]) parts.push_back(std::move(code[c]));
    std::ranges::sort(parts, [](const std::string &l, const std::string &r) {
      return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    std::string joined = "(";
    for (const auto &part : parts) joined += part;
    code[x] = joined + ")";
  }
  return code[poset.root()];
}

bool order_isomorphic(const SpecPoset &a, const SpecPoset &b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

using Mask = std::uint32_t;

class PosetGenerator {
public:
  PosetGenerator(std::size_t n, BruteforceResult &result) : n_(n), below_(n, 0), result_(result) {}

  void run() { extend(1); }

  std::map<std::string, SpecPoset> classes;

private:
  // Adds element m to a poset on 0..m-1 in every admissible way: m sits above
  // a down-closed set D (containing 0) and below an up-closed set U whose
  // members all lie above D.
  void extend(std::size_t m) {
    if (m == n_) {
      emit();
      return;
    }
    const Mask existing = (Mask{1} << m) - 1;
    for (Mask down = 1; down <= existing; down += 2) {
      if (!down_closed(down, existing)) continue;
      Mask candidates = 0;
      for (std::size_t u = 1; u < m; ++u) {
        if ((down >> u & 1) == 0 && (below_[u] & down) == down) candidates |= Mask{1} << u;
      }
      // Every submask of the candidates, the empty set included.
      for (Mask up = candidates;; up = (up - 1) & candidates) {
        if (up_closed(up, m)) place(m, down, up);
        if (up == 0) break;
      }
    }
  }

  bool down_closed(Mask set, Mask existing) const {
    for (Mask rest = set & existing; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(rest));
      if ((below_[x] & set) != below_[x]) return false;
    }
    return true;
  }

  bool up_closed(Mask set, std::size_t m) const {
    for (std::size_t v = 0; v < m; ++v) {
      if ((set >> v & 1) != 0) continue;
      if ((below_[v] & set) != 0) return false;
    }
    return true;
  }

  void place(std::size_t m, Mask down, Mask up) {
    const Mask bit = Mask{1} << m;
    below_[m] = down;
    for (Mask rest = up; rest != 0; rest &= rest - 1) {
      below_[static_cast<std::size_t>(std::countr_zero(rest))] |= bit;
    }
    if (!exceeds_height_two(m + 1)) extend(m + 1);
    below_[m] = 0;
    for (Mask rest = up; rest != 0; rest &= rest - 1) {
      below_[static_cast<std::size_t>(std::countr_zero(rest))] &= ~bit;
    }
  }

  // Every element sits above 0, so height > 2 iff some chain y < z < w
  // avoids 0.
  bool exceeds_height_two(std::size_t count) const {
    for (std::size_t w = 1; w < count; ++w) {
      for (Mask rest = below_[w] & ~Mask{1}; rest != 0; rest &= rest - 1) {
        const auto z = static_cast<std::size_t>(std::countr_zero(rest));
        if ((below_[z] & ~Mask{1}) != 0) return true;
      }
    }
    return false;
  }

  void emit() {
    ++result_.labeled_posets;
    std::vector<Edge> relations;
    for (std::size_t y = 0; y < n_; ++y) {
      for (Mask rest = below_[y]; rest != 0; rest &= rest - 1) {
        relations.emplace_back(static_cast<std::size_t>(std::countr_zero(rest)), y);
      }
    }
    SpecPoset poset = SpecPoset::from_relations(n_, relations, 0);
    if (!validate(poset).ok()) return;
    ++result_.valid_labeled_posets;
    classes.try_emplace(canonical_form(poset), std::move(poset));
  }

  std::size_t n_;
  std::vector<Mask> below_;
  BruteforceResult &result_;
};

} // namespace

BruteforceResult enumerate_bruteforce(std::size_t n, std::size_t bound) {
  if (n == 0) throw precondition_error("enumerate_bruteforce: n must be at least 1");
  if (n > bound || n > 32) {
    throw resource_limit_error("enumerate_bruteforce: n = " + std::to_string(n) +
                               " exceeds the search bound of " + std::to_string(bound));
  }
  BruteforceResult result;
  PosetGenerator gen(n, result);
  gen.run();
  for (auto &[code, poset] : gen.classes) result.representatives.push_back(std::move(poset));
  return result;
}

DomainModel prufer_witness(const DomainModel &model) {
  std::vector<LocalClass> locals(model.maximal_ideals().begin(), model.maximal_ideals().end());
  std::ranges::replace(locals, LocalClass::K1, LocalClass::K4);
  return DomainModel(std::move(locals));
}

std::string emit_dot(const SpecPoset &poset, const std::string &graph_name) {
  DotWriter dot(graph_name);
  for (std::size_t x = 0; x < poset.size(); ++x) {
    dot.add_node("p" + std::to_string(x), x == poset.root() ? "0" : std::to_string(x));
  }
  for (const auto &[a, b] : poset.covers()) {
    dot.add_edge("p" + std::to_string(a), "p" + std::to_string(b));
  }
  return dot.str();
}

} // namespace gmpd
