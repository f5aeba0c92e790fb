#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tidykit/group.hpp"

namespace tidykit {

// Shape flags for a p-group; tidiness is equivalent to matching at least one.
// Dihedral and generalized quaternion are only flagged for p = 2 and order
// at least 8. Several flags can hold at once (Z2 is cyclic and has exponent
// 2); all that hold are reported.
struct PGroupShape {
  int p = 0;
  bool cyclic = false;
  bool exponent_p = false;
  bool dihedral = false;
  bool generalized_quaternion = false;
  bool tidy = false;
};

// Requires |P| to be a power of p (the trivial group counts for any p).
// Errors: "not_a_p_group".
PGroupShape classify_p_group(const Group& p_group, int p);

// The five structural cases a tidy {p,q}-group falls into, plus the verdict
// for everything else.
enum class PqCase {
  Nilpotent,
  HyperFrobenius,
  S4Type,
  Sl23Type,
  Gl23Tilde,
  NotTidy,
};

// Serialization names: "nilpotent", "hyperfrobenius", "s4type", "sl23type",
// "gl23tilde", "not_tidy".
const char* pq_case_name(PqCase c);

struct PqClassification {
  PqCase kase = PqCase::NotTidy;
  int p = 0;  // smaller prime of the pair
  int q = 0;  // larger prime
  // HyperFrobenius only: the prime of the Frobenius kernel of G/Z_inf(G).
  int kernel_prime = 0;
  int hypercenter_order = 1;
  // NotTidy only: "sylow" when a Sylow subgroup already fails, otherwise
  // "no_case_matched".
  std::string failed_condition;
  // Trail of per-case outcomes, for reports and debugging.
  std::string detail;
};

// Decides tidiness of a group with exactly two prime divisors by matching
// the structural case list. Errors: "not_a_pq_group", "not_solvable"
// (defensive; two-prime groups are always solvable),
// "classification_violation" when a matched case's asserted center/
// hypercenter consequence fails.
PqClassification classify_pq_group(const Group& g);

struct StructuralVerdict {
  bool tidy = false;
  // "trivial", "p_group", "pq_group", or "hall_pairs".
  std::string route;
  // Case name for the pq route, shape or failure summary otherwise; names
  // the failing Hall pair when the hall_pairs route rejects.
  std::string explanation;
};

// Structural tidiness decision without the brute-force oracle: p-groups via
// shape, {p,q}-groups via the case list, more primes via tidiness of every
// Hall {p,q}-subgroup. Errors: "not_solvable".
StructuralVerdict is_tidy_structural(const Group& g);

struct CentralizerQuotientReport {
  int p = 0;
  int kase = 0;  // 1..5
  ElementSet c;  // centralizer of O_p(G) in the Hall p-complement
  std::string detail;
};

// For solvable tidy G with O_p(G) > 1: computes the Hall p-complement H and
// C = C_H(O_p(G)), verifies C is normal, and matches G/C against the five
// centralizer-quotient cases. Errors: "bad_parameter" (preconditions),
// "no_match" (would falsify the classification).
CentralizerQuotientReport centralizer_quotient_case(const Group& g, int p);

enum class CoprimeActionOutcome { Centralizes, FrobeniusAction, Sl23Exception };

const char* coprime_action_name(CoprimeActionOutcome o);

// For tidy G, O_p(G) > 1, and x of order coprime to p: decides which of the
// three coprime-action outcomes holds for <x> acting on O_p(G).
// Errors: "bad_parameter" (preconditions), "no_match" (would falsify the
// trichotomy).
CoprimeActionOutcome coprime_action_trichotomy(const Group& g, int p, int x);

struct FrobeniusExtensionCheck {
  bool ok = false;
  int alternative = 0;  // 1 = nilpotent complement, 2 = derived-split clause
  // First failed clause when !ok: "n_not_normal", "n_not_proper_in_fitting",
  // "n_not_hall_in_fitting", "quotient_not_frobenius",
  // "kernel_not_fitting_image", "complement_alternatives_failed",
  // "sylow_not_tidy".
  std::string failed_clause;
};

// Checks the Frobenius-extension sufficiency hypotheses for the pair (G, N):
// N normal and proper in F(G), N Hall in F(G), G/N Frobenius with kernel
// F(G)/N, the complement alternative (1) or (2), and tidy Sylow subgroups
// for every prime dividing |F(G)|. When they all hold the group is tidy.
FrobeniusExtensionCheck frobenius_extension_check(const Group& g,
                                                  const ElementSet& n);

// Matches the literal {2,3}-group sufficiency clauses (1), (2), (3): O_2
// shape, G/O_3 isomorphism target, and the G/O_2 Frobenius condition.
// Returns the clause number, or nothing if none match.
std::optional<int> two_three_structure_match(const Group& g);

}  // namespace tidykit
