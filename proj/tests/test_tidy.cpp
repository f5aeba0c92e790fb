#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "tidykit/catalog.hpp"
#include "tidykit/group.hpp"
#include "tidykit/structure.hpp"
#include "tidykit/tidy.hpp"

using namespace tidykit;
namespace cat = tidykit::catalog;

namespace {

// The definition, computed the expensive way: g is in the set iff <x, g> is
// cyclic, i.e. the subgroup they generate contains an element of full order.
ElementSet cyc_set_pairwise(const Group& g, int x) {
  ElementSet out = g.empty_set();
  for (int y = 0; y < g.order(); ++y) {
    ElementSet h = generated_subgroup(g, std::vector<int>{x, y});
    bool cyclic = false;
    for (int z : h.elements())
      if (g.ord(z) == h.count()) {
        cyclic = true;
        break;
      }
    if (cyclic) out.set(y);
  }
  return out;
}

}  // namespace

TEST_CASE("cyc sets match the pairwise definition exhaustively") {
  for (const Group& g :
       {cat::dihedral(6), cat::generalized_quaternion(8), cat::cyclic(12),
        cat::a4(), cat::dicyclic(12), cat::sl2_3(),
        cat::build_family("direct_product:dihedral:6;cyclic:3"),
        cat::build_family("direct_product:cyclic:4;cyclic:2")}) {
    for (int x = 0; x < g.order(); ++x) {
      ElementSet s = cyc_set(g, x);
      CHECK(s == cyc_set_pairwise(g, x));
      CHECK(is_tidy_at(g, x) == is_subgroup(g, s));
      // The set always contains <x> itself.
      CHECK((s & g.cyc_closure(x)) == g.cyc_closure(x));
    }
  }
}

TEST_CASE("cyc set of the identity is everything") {
  for (const Group& g : {cat::s4(), cat::dihedral(20)})
    CHECK(cyc_set(g, 0) == g.full_set());
}

TEST_CASE("generators of the same cyclic subgroup share a cyc set") {
  Group g = cat::dicyclic(24);
  for (int x = 0; x < g.order(); ++x)
    for (int y : g.cyc_closure(x).elements())
      if (g.ord(y) == g.ord(x) && g.cyc_closure(y) == g.cyc_closure(x))
        CHECK(cyc_set(g, x) == cyc_set(g, y));
}

TEST_CASE("frozen oracle verdicts across the families") {
  const std::vector<std::pair<std::string, bool>> expected = {
      {"cyclic:12", true},
      {"dihedral:8", true},
      {"dihedral:12", true},
      {"generalized_quaternion:16", true},
      {"elementary_abelian:3,3", true},
      {"extraspecial:5", true},
      {"wreath_pp:2", true},
      {"a4", true},
      {"s4", true},
      {"sl2_3", true},
      {"binary_octahedral", true},
      {"frobenius_metacyclic:7,3,2", true},
      {"metacyclic:5,8,4", true},
      {"dicyclic:24", true},
      {"e9_q8", true},
      {"z15_q8", true},
      {"inversion_ext:3,2,4", true},
      {"sign_ext_s4:1", true},
      {"direct_product:generalized_quaternion:8;cyclic:3", true},
      {"direct_product:dihedral:8;cyclic:9", true},
      {"direct_product:s4;cyclic:5", true},
      {"direct_product:sl2_3;cyclic:3", true},
      {"wreath_pp:3", false},
      {"direct_product:cyclic:4;cyclic:2", false},
      {"direct_product:cyclic:9;cyclic:3", false},
      {"direct_product:dihedral:6;cyclic:3", false},
      {"direct_product:s4;cyclic:3", false},
      {"direct_product:cyclic:4;cyclic:2;cyclic:3", false},
  };
  for (const auto& [descriptor, tidy] : expected) {
    Group g = cat::build_family(descriptor);
    TidinessReport r = is_tidy_bruteforce(g);
    CHECK_MESSAGE(r.tidy == tidy, descriptor);
    TidinessReport rp = is_tidy_bruteforce(g, OracleMode::PrimePowerOnly);
    CHECK_MESSAGE(rp.tidy == tidy, descriptor << " (prime power mode)");
  }
}

TEST_CASE("witnesses are genuine violations") {
  for (const std::string& descriptor :
       {std::string("direct_product:dihedral:6;cyclic:3"),
        std::string("direct_product:generalized_quaternion:16;cyclic:24"),
        std::string("wreath_pp:3")}) {
    Group g = cat::build_family(descriptor);
    TidinessReport r =
        is_tidy_bruteforce(g, OracleMode::AllElements, /*all_witnesses=*/true);
    REQUIRE(!r.tidy);
    REQUIRE(!r.witnesses.empty());
    for (const TidyWitness& w : r.witnesses) {
      ElementSet s = cyc_set(g, w.x);
      CHECK(s.test(w.a));
      CHECK(s.test(w.b));
      CHECK(g.mul(w.a, w.b) == w.product);
      CHECK(!s.test(w.product));
    }
  }
}

TEST_CASE("default reporting stops at the first failing element") {
  Group g = cat::build_family("direct_product:dihedral:6;cyclic:3");
  TidinessReport r = is_tidy_bruteforce(g);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].x == 1);
  CHECK(r.witnesses[0].a == 9);
  CHECK(r.witnesses[0].b == 12);
  CHECK(r.witnesses[0].product == 6);

  TidinessReport all =
      is_tidy_bruteforce(g, OracleMode::AllElements, /*all_witnesses=*/true);
  CHECK(all.witnesses.size() > 1);
  CHECK(all.witnesses[0].x == r.witnesses[0].x);
  // One witness per failing element, in element order.
  for (std::size_t i = 1; i < all.witnesses.size(); ++i)
    CHECK(all.witnesses[i - 1].x < all.witnesses[i].x);
}

TEST_CASE("prime power mode inspects only prime power elements") {
  Group g = cat::build_family("direct_product:dihedral:6;cyclic:3");
  TidinessReport r =
      is_tidy_bruteforce(g, OracleMode::PrimePowerOnly, /*all_witnesses=*/true);
  CHECK(r.mode == OracleMode::PrimePowerOnly);
  REQUIRE(!r.witnesses.empty());
  for (const TidyWitness& w : r.witnesses)
    CHECK(is_prime_power(g.ord(w.x)));
}

TEST_CASE("a tidy group with the same frame: swapping one factor flips the verdict") {
  // Same construction, coprime twist: over Z5 the cyc set of a rotation
  // closes up, over Z3 it does not.
  Group tidy_one = cat::build_family("direct_product:dihedral:6;cyclic:5");
  Group untidy_one = cat::build_family("direct_product:dihedral:6;cyclic:3");
  CHECK(is_tidy_bruteforce(tidy_one).tidy);
  CHECK(!is_tidy_bruteforce(untidy_one).tidy);
}
