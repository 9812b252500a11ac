#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmpd/domain_model.hpp"

namespace gmpd {

/// A finite poset with a designated root, standing in for Spec(D) with the
/// zero ideal as root. The order is stored as its full strict relation.
class SpecPoset {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Builds the order generated by `less_than` pairs (a < b) by transitive
  /// closure. Throws precondition_error on out-of-range indices, an empty
  /// poset, or a cycle.
  static SpecPoset from_relations(std::size_t size, std::span<const Edge> less_than,
                                  std::size_t root = 0);

  std::size_t size() const noexcept { return size_; }
  std::size_t root() const noexcept { return root_; }

  bool less(std::size_t a, std::size_t b) const noexcept { return less_[a * size_ + b] != 0; }
  bool leq(std::size_t a, std::size_t b) const noexcept { return a == b || less(a, b); }
  bool comparable(std::size_t a, std::size_t b) const noexcept {
    return leq(a, b) || leq(b, a);
  }

  /// Length of a longest chain ending at each element, starting from a
  /// minimal element (minimal elements have height 0).
  std::vector<std::size_t> heights() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Cover pairs (a, b): a < b with nothing strictly between. Sorted.
  std::vector<Edge> covers() const;

private:
  SpecPoset() = default;

  std::size_t size_ = 0;
  std::size_t root_ = 0;
  std::vector<std::uint8_t> less_;
};

/// Structural axioms of the spectrum of a GMPD domain.
enum class SpecAxiom : std::uint8_t {
  unique_minimum,      // the root is the only minimal element
  height_at_most_two,  // dim(D) <= 2
  treed,               // every down-set is a chain
  y_free,              // every non-root element lies under exactly one maximal
  unique_height_one,   // each height-2 maximal contains exactly one height-1
};

std::string_view to_string(SpecAxiom axiom) noexcept;

struct ValidationVerdict {
  std::vector<SpecAxiom> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(SpecAxiom axiom) const noexcept;
};

/// Checks every axiom independently and reports all failures.
ValidationVerdict validate(const SpecPoset &poset);

/// Isomorphism class of a valid spectrum: a root with `long_branches` chains
/// root < P < M and `short_branches` chains root < M.
struct SpecShape {
  std::size_t long_branches = 0;  // a
  std::size_t short_branches = 0; // b

  constexpr std::size_t spectrum_size() const noexcept {
    return 2 * long_branches + short_branches + 1;
  }
  constexpr std::size_t maximal_count() const noexcept {
    return long_branches + short_branches;
  }

  friend constexpr auto operator<=>(const SpecShape &, const SpecShape &) = default;
};

std::string to_string(const SpecShape &shape); // "(a,b)"

/// Root, then per maximal ideal in model order: P, M for K3, M otherwise.
SpecPoset spectrum_of(const DomainModel &model);

/// Shape of spectrum_of(model), read off the class counts without building
/// the poset: (n3, n1 + n2 + n4).
SpecShape spectrum_shape(const DomainModel &model) noexcept;

/// Throws precondition_error if the poset does not validate.
SpecShape canonical_shape(const SpecPoset &poset);

/// Every shape with 2a + b = n - 1, in increasing a. There are ceil(n/2).
/// Throws precondition_error for n = 0.
std::vector<SpecShape> enumerate_shapes(std::size_t n);

/// a copies of K3 followed by b copies of K4.
DomainModel realizing_model(const SpecShape &shape);

/// Canonical label of a poset whose Hasse diagram is a tree rooted at the
/// root: each node's code is its children's codes, sorted, wrapped in
/// parentheses. Equal labels iff the posets are order-isomorphic.
/// Throws precondition_error when the Hasse diagram is not a rooted tree.
std::string canonical_form(const SpecPoset &poset);

bool order_isomorphic(const SpecPoset &a, const SpecPoset &b);

inline constexpr std::size_t default_bruteforce_bound = 9;

struct BruteforceResult {
  /// One representative per isomorphism class, ordered by canonical_form().
  std::vector<SpecPoset> representatives;
  /// Labeled posets on n points with label 0 as minimum and height <= 2.
  std::uint64_t labeled_posets = 0;
  /// How many of those passed validate().
  std::uint64_t valid_labeled_posets = 0;
};

/// Generates every partial order on labels 0..n-1 having 0 as its minimum,
/// pruning any branch whose height exceeds two, keeps those passing
/// validate(), and groups them by canonical_form().
///
/// Throws precondition_error for n = 0 and resource_limit_error for n > bound.
BruteforceResult enumerate_bruteforce(std::size_t n,
                                      std::size_t bound = default_bruteforce_bound);

/// Prufer model with an order-isomorphic spectrum: every K1 becomes K4.
DomainModel prufer_witness(const DomainModel &model);

/// Hasse diagram of the poset as a DOT digraph, edges bottom to top.
std::string emit_dot(const SpecPoset &poset, const std::string &graph_name = "spectrum");

} // namespace gmpd
