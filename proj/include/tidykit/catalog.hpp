#pragma once
#include <string>
#include <vector>

#include "tidykit/group.hpp"

namespace tidykit::catalog {

// Named constructors for the group families used throughout. Each builds a
// validated Group whose label is the canonical descriptor string (so
// cyclic(12).label() == "cyclic:12"), which build_family() can parse back.

Group trivial();
Group cyclic(int n);
// Order n = 2m with m >= 3 (presentation <r, s | r^m, s^2, (rs)^2>).
Group dihedral(int n);
// Order n = 4m with m >= 2 (<r, s | r^2m = 1, s^2 = r^m, s^-1 r s = r^-1>).
Group dicyclic(int n);
// Order n = 2^k >= 8; the dicyclic group of that order.
Group generalized_quaternion(int n);
// (Z_p)^r.
Group elementary_abelian(int p, int r);
// Order p^3, exponent p, for odd primes p (upper unitriangular 3x3 over F_p).
Group extraspecial(int p);
// Z_p wr Z_p: (Z_p)^p extended by a coordinate rotation. Order p^(p+1).
Group wreath_pp(int p);
// Z_p x| Z_m, the generator of Z_m multiplying by r (needs r^m = 1 mod p).
Group metacyclic(int p, int m, int r);
// Same, but requires r to have multiplicative order exactly q mod p, which
// makes the action fixed-point-free and the group Frobenius of order pq.
Group frobenius_metacyclic(int p, int q, int r);
// (Z_p)^r x| Z_m for even m, odd p: odd positions of Z_m act by negation.
Group inversion_ext(int p, int r, int m);

Group a4();
Group s4();
// SL(2,3) as matrices acting on the 9 points of (F_3)^2.
Group sl2_3();
// The order-48 double cover of S4 with quaternion Sylow 2-subgroup,
// generated inside SL(2,9) acting on the 81 points of (F_9)^2.
Group binary_octahedral();
// (Z_3)^2 x| Q8 of order 72, as affine maps of (F_3)^2.
Group e9_q8();
// Z_15 x| Q8 of order 120 (Q8 acting through its Klein quotient).
Group z15_q8();
// (Z_13)^2 x| Dic3 of order 2028, a Frobenius group as affine maps of (F_13)^2.
Group f169_dic3();
// (Z_3)^r x| S4, even permutations acting trivially and odd ones by negation.
Group sign_ext_s4(int r);
// (Z_3)^r x| binary_octahedral, with the same sign action.
Group sign_ext_2o(int r);

// Build a group from a descriptor: a family name with colon-separated
// integer arguments ("cyclic:12", "metacyclic:7,9,2", "s4"), or
// "direct_product:" followed by semicolon-separated descriptors, folded left.
// Errors: "unknown_family", "bad_parameter".
Group build_family(const std::string& descriptor);

std::vector<std::string> family_names();

// --- file ingestion -----------------------------------------------------------

// Parses the two text formats. Cayley: first line "cayley <n>", then n*n
// whitespace-separated 0-based indices. Permutation: first line "perm <m>",
// then one generator per line as an image list of 0..m-1. '#' starts a
// comment anywhere on a line. Errors: "bad_parameter" on malformed input,
// plus anything table validation raises.
Group parse_group_text(const std::string& text, const std::string& label,
                       bool force_full_validation = false);

// Reads a file and parses it; the label is the file name without directories.
Group load_group_file(const std::string& path,
                      bool force_full_validation = false);

// --- corpus ---------------------------------------------------------------

struct CorpusSpec {
  struct Family {
    std::string name;
    // Integer arguments, or nested descriptors for direct_product.
    std::vector<std::string> params;

    std::string descriptor() const;
  };
  std::vector<Family> families;
  std::vector<std::string> ingest;
  // Groups above this order are dropped after construction; 0 means no cap
  // beyond the engine ceiling.
  int max_order = 0;
  // Drop later isomorphic duplicates (applied only at orders within the
  // isomorphism-test bound).
  bool dedup = false;
};

// The pinned corpus the verification suites and acceptance run use.
CorpusSpec default_corpus_spec();

// Parse a spec from JSON: {"families": [{"name":..., "params":[...]}],
// "ingest": [...], "max_order": K, "dedup": bool}. Params may be numbers or
// strings. Errors: "bad_parameter".
CorpusSpec corpus_spec_from_json(const std::string& json_text);

// Deterministic order: families in spec order, then ingested files.
std::vector<Group> build_corpus(const CorpusSpec& spec);

}  // namespace tidykit::catalog
