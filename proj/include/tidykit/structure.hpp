#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "tidykit/group.hpp"

namespace tidykit {

// --- arithmetic helpers -------------------------------------------------------

std::vector<int> prime_divisors(int n);
// Largest power of p dividing n.
int p_part(int n, int p);
// If n = p^k with k >= 1, reports p.
bool is_prime_power(int n, int* p_out = nullptr);

// --- commuting and series -----------------------------------------------------

ElementSet center(const Group& g);
ElementSet centralizer_of(const Group& g, int x);
// Elements commuting with every member of s.
ElementSet centralizer(const Group& g, const ElementSet& s);
ElementSet normalizer(const Group& g, const ElementSet& s);

// Z_0 = 1 <= Z_1 = Z(G) <= ..., strictly increasing, ending at the
// hypercenter (the first repeated term is dropped).
std::vector<ElementSet> upper_central_series(const Group& g);
ElementSet hypercenter(const Group& g);

// Subgroup generated by the commutators of elements of s.
ElementSet derived_of_set(const Group& g, const ElementSet& s);
// G >= G' >= G'' >= ..., ending at the first repeated term.
std::vector<ElementSet> derived_series(const Group& g);

bool is_abelian(const Group& g);
bool is_nilpotent(const Group& g);
bool is_solvable(const Group& g);
// Errors with "not_solvable" when the derived series stalls above 1.
int derived_length(const Group& g);
long long exponent(const Group& g);

// --- characteristic subgroups -------------------------------------------------

ElementSet sylow(const Group& g, int p);
// O_p(G): the intersection of the conjugates of one Sylow p-subgroup.
ElementSet p_core(const Group& g, int p);
ElementSet fitting_subgroup(const Group& g);
// Iterated Fitting quotients until the group is exhausted. Errors with
// "not_solvable" when a nontrivial quotient has trivial Fitting subgroup.
int fitting_height(const Group& g);

// All normal subgroups, as the join closure of the subgroups generated by
// single conjugacy classes. Sorted by size, then by members.
std::vector<ElementSet> normal_subgroups(const Group& g);

// All subgroups (join closure of the cyclic ones). Meant for small groups;
// errors with "order_bound_exceeded" above the bound.
std::vector<ElementSet> all_subgroups(const Group& g, int bound = 96);

// The p'-elements, when they happen to be closed under products.
std::optional<ElementSet> normal_p_complement(const Group& g, int p);

// Subgroup fixed by conjugation by every element.
bool is_normal(const Group& g, const ElementSet& s);

// A Hall subgroup for the given set of primes in a solvable group, built by
// joining conjugates of Sylow subgroups one prime at a time. Errors:
// "bad_prime", "not_found".
ElementSet hall_subgroup(const Group& g, const std::vector<int>& primes);

// A Hall {p,q}-subgroup of a solvable group, searched as <P, Q^g> over
// conjugates of a Sylow q-subgroup. Errors: "bad_prime", "same_prime",
// "not_solvable", "not_found".
ElementSet hall_pq(const Group& g, int p, int q);

// A Hall p'-subgroup of a solvable group. Errors: "not_found".
ElementSet hall_complement(const Group& g, int p);

// --- Frobenius structure -------------------------------------------------------

// K is a proper nontrivial normal subgroup with C_G(k) <= K for every
// nonidentity k in K (the internal characterization of a Frobenius kernel).
bool is_frobenius_with_kernel(const Group& g, const ElementSet& k);

// The largest normal subgroup passing is_frobenius_with_kernel, if any.
std::optional<ElementSet> frobenius_kernel(const Group& g);

// A pair K < N of normal subgroups with N Frobenius with kernel K and G/K
// Frobenius with kernel N/K.
std::optional<std::pair<ElementSet, ElementSet>> two_frobenius_pair(
    const Group& g);

}  // namespace tidykit
