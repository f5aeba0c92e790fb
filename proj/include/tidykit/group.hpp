#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tidykit/element_set.hpp"
#include "tidykit/error.hpp"

namespace tidykit {

// Global ceiling on group orders this library will materialize. Constructions
// that would exceed it throw ("closure_too_large" / "order_bound_exceeded").
// The initial value is 5000, or the TIDYKIT_MAX_ORDER environment variable if
// set; the CLI exposes it as --max-order. Hard cap 65535 (elements are stored
// as 16-bit indices).
int max_group_order();
void set_max_group_order(int n);

class Group;

namespace detail {
Group build_group(std::vector<std::uint16_t> mul, int n, std::string label,
                  bool force_full_assoc);
}

// A finite group given by its full multiplication table. Immutable once
// built; construction validates the group axioms and renumbers so that the
// identity is element 0. Copies share the same id, so an ElementSet made for
// a group works with any copy of it.
class Group {
public:
  int order() const { return n_; }
  const std::string& label() const { return label_; }
  std::uint64_t uid() const { return uid_; }

  int mul(int a, int b) const { return mul_[std::size_t(a) * n_ + b]; }
  int inv(int x) const { return inv_[x]; }
  int ord(int x) const { return ord_[x]; }

  // g^-1 * x * g
  int conj_elem(int x, int g) const { return mul(mul(inv(g), x), g); }
  // [a,b] = a^-1 * b^-1 * a * b
  int comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  // The cyclic subgroup <x>, precomputed at construction.
  const ElementSet& cyc_closure(int x) const { return cyc_[x]; }

  ElementSet empty_set() const { return ElementSet(uid_, n_); }
  ElementSet full_set() const {
    ElementSet s(uid_, n_);
    for (int i = 0; i < n_; ++i) s.set(i);
    return s;
  }
  ElementSet singleton(int x) const {
    check_element(x);
    ElementSet s(uid_, n_);
    s.set(x);
    return s;
  }
  ElementSet set_of(const std::vector<int>& xs) const {
    ElementSet s(uid_, n_);
    for (int x : xs) {
      check_element(x);
      s.set(x);
    }
    return s;
  }

  void check_element(int x) const {
    if (x < 0 || x >= n_)
      fail("bad_parameter", "element " + std::to_string(x) +
                                " out of range for group of order " +
                                std::to_string(n_));
  }
  void check_owns(const ElementSet& s) const {
    if (s.owner() != uid_ || s.universe() != n_)
      fail("set_owner_mismatch",
           "element set does not belong to group \"" + label_ + "\"");
  }

  // Same group, different display label (the id is preserved).
  Group with_label(std::string label) const {
    Group g = *this;
    g.label_ = std::move(label);
    return g;
  }

private:
  Group() = default;
  friend Group detail::build_group(std::vector<std::uint16_t>, int, std::string,
                                   bool);

  int n_ = 0;
  std::string label_;
  std::uint64_t uid_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<int> ord_;
  std::vector<ElementSet> cyc_;
};

// --- construction -----------------------------------------------------------

// Validates the table (shape, cancellation, identity, inverses,
// associativity) and builds the group. Associativity is checked in full for
// orders <= 512 or when force_full_validation is set; above that a fixed-seed
// sample of 10*n^2 triples is used. Throws "not_a_group" with a witness.
Group from_cayley_table(const std::vector<std::vector<int>>& table,
                        const std::string& label,
                        bool force_full_validation = false);

// Closes a generating set of permutations (images of 0..m-1) under products.
// Element 0 is the identity; the rest are numbered in breadth-first discovery
// order, expanding by right-multiplication with the generators in input
// order. Throws "invalid_permutation" or, past the order ceiling,
// "closure_too_large".
Group from_permutation_generators(const std::vector<std::vector<int>>& gens,
                                  const std::string& label);

// --- subgroup machinery ------------------------------------------------------

// Subgroup generated by `seed` (empty seed gives the trivial subgroup).
ElementSet generated_subgroup(const Group& g, const ElementSet& seed);
ElementSet generated_subgroup(const Group& g, const std::vector<int>& seed);

// Same, but gives up (returns nullopt) once more than `cap` elements appear.
std::optional<ElementSet> generated_subgroup_bounded(const Group& g,
                                                     const ElementSet& seed,
                                                     int cap);

// Errors with "empty_set" on an empty set; otherwise decides closure under
// products and inverses (identity membership follows).
bool is_subgroup(const Group& g, const ElementSet& s);

// { g^-1 s g : s in S }
ElementSet conjugate_set(const Group& g, const ElementSet& s, int by);

// Smallest normal subgroup containing S.
ElementSet normal_closure(const Group& g, const ElementSet& s);

std::vector<ElementSet> conjugacy_classes(const Group& g);

// A subgroup rebuilt as a standalone group, with translation maps in both
// directions. Errors: "not_a_subgroup".
struct SubgroupView {
  Group group;
  std::vector<int> to_parent;  // local index -> parent element
  std::vector<int> to_local;   // parent element -> local index, -1 outside
};
SubgroupView subgroup_group(const Group& g, const ElementSet& members);

// Restrict a set of parent elements to a subgroup view (elements outside the
// subgroup are dropped).
ElementSet restrict_to(const SubgroupView& v, const ElementSet& parent_set);
ElementSet lift_from(const SubgroupView& v, const Group& parent,
                     const ElementSet& local_set);

// Quotient by a normal subgroup. Cosets are numbered by their least parent
// representative, so the coset of the identity is element 0. Errors:
// "not_a_subgroup", "not_normal".
struct QuotientMap {
  ElementSet kernel;
  Group child;
  std::vector<int> proj;  // parent element -> coset index
};
QuotientMap quotient(const Group& g, const ElementSet& n);

ElementSet project_set(const QuotientMap& q, const ElementSet& parent_set);
ElementSet preimage_set(const QuotientMap& q, const Group& parent,
                        const ElementSet& child_set);

// --- products ----------------------------------------------------------------

// Label is "<a> x <b>". Pair (x, y) gets index x*|B| + y.
Group direct_product(const Group& a, const Group& b);

// Semidirect product N x| H for a right action of H on N given as
// act[h] = the automorphism of N applied when conjugating by h:
//   (n1, h1) * (n2, h2) = (n1 * act[h1](n2), h1 * h2).
// Each act[h] must be an automorphism of N and h -> act[h] a homomorphism
// (act[h1*h2] = act[h1] after act[h2]). Errors: "not_an_automorphism",
// "not_an_action". Pair (n, h) gets index n*|H| + h.
Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<int>>& act);

// --- isomorphism -------------------------------------------------------------

// Backtracking isomorphism test with invariant pruning. Intended for the
// small groups this library compares against catalog models; throws
// "order_bound_exceeded" when either order exceeds `bound`.
bool are_isomorphic(const Group& a, const Group& b, int bound = 96);

}  // namespace tidykit
