#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "tidykit/catalog.hpp"
#include "tidykit/group.hpp"
#include "tidykit/structure.hpp"

using namespace tidykit;
namespace cat = tidykit::catalog;

namespace {

template <class F>
std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.code();
  }
  return "";
}

int involutions(const Group& g) {
  int k = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.ord(x) == 2) ++k;
  return k;
}

}  // namespace

TEST_CASE("every listed family is constructible and labels round-trip") {
  const std::map<std::string, std::string> sample = {
      {"trivial", "trivial"},
      {"cyclic", "cyclic:12"},
      {"dihedral", "dihedral:10"},
      {"dicyclic", "dicyclic:12"},
      {"generalized_quaternion", "generalized_quaternion:16"},
      {"elementary_abelian", "elementary_abelian:3,2"},
      {"extraspecial", "extraspecial:3"},
      {"wreath_pp", "wreath_pp:2"},
      {"metacyclic", "metacyclic:7,3,2"},
      {"frobenius_metacyclic", "frobenius_metacyclic:5,4,2"},
      {"inversion_ext", "inversion_ext:3,2,2"},
      {"a4", "a4"},
      {"s4", "s4"},
      {"sl2_3", "sl2_3"},
      {"binary_octahedral", "binary_octahedral"},
      {"e9_q8", "e9_q8"},
      {"z15_q8", "z15_q8"},
      {"f169_dic3", "f169_dic3"},
      {"sign_ext_s4", "sign_ext_s4:1"},
      {"sign_ext_2o", "sign_ext_2o:1"},
      {"direct_product", "direct_product:cyclic:2;cyclic:3"},
  };
  for (const std::string& name : cat::family_names()) {
    auto it = sample.find(name);
    REQUIRE_MESSAGE(it != sample.end(), "no sample for family " << name);
    Group g = cat::build_family(it->second);
    CHECK(g.order() >= 1);
    if (name != "direct_product") CHECK(g.label() == it->second);
  }
  CHECK(cat::family_names().size() == sample.size());
}

TEST_CASE("build_family rejects junk") {
  CHECK(thrown_code([] { cat::build_family("lie_type:8"); }) ==
        "unknown_family");
  CHECK(thrown_code([] { cat::build_family("cyclic"); }) == "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("cyclic:0"); }) == "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("cyclic:2,3"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("dihedral:7"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("dicyclic:10"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("generalized_quaternion:24"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("elementary_abelian:4,2"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("extraspecial:2"); }) ==
        "bad_parameter");
  // 3^3 = 27 is not 1 mod 7, so the action is not fixed-point-free of order 3.
  CHECK(thrown_code([] { cat::build_family("frobenius_metacyclic:7,3,3"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("metacyclic:7,3,3"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("direct_product:cyclic:2"); }) ==
        "bad_parameter");
  CHECK(thrown_code([] { cat::build_family("inversion_ext:3,2,3"); }) ==
        "bad_parameter");
}

TEST_CASE("cyclic groups have one subgroup per divisor") {
  Group g = cat::cyclic(12);
  auto subs = all_subgroups(g);
  CHECK(subs.size() == 6);
  std::set<int> sizes;
  for (const auto& s : subs) sizes.insert(s.count());
  CHECK(sizes == std::set<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("dihedral and dicyclic shapes") {
  Group d = cat::dihedral(16);
  CHECK(d.order() == 16);
  CHECK(involutions(d) == 9);
  int max_ord = 0;
  for (int x = 0; x < 16; ++x) max_ord = std::max(max_ord, d.ord(x));
  CHECK(max_ord == 8);

  Group q = cat::dicyclic(20);
  CHECK(q.order() == 20);
  CHECK(involutions(q) == 1);

  CHECK(are_isomorphic(cat::dicyclic(16), cat::generalized_quaternion(16)));
}

TEST_CASE("elementary abelian, extraspecial, wreath shapes") {
  Group e = cat::elementary_abelian(3, 3);
  CHECK(e.order() == 27);
  CHECK(is_abelian(e));
  CHECK(exponent(e) == 3);

  Group x = cat::extraspecial(5);
  CHECK(x.order() == 125);
  CHECK(!is_abelian(x));
  CHECK(exponent(x) == 5);
  CHECK(center(x).count() == 5);

  Group w = cat::wreath_pp(2);
  CHECK(w.order() == 8);
  CHECK(are_isomorphic(w, cat::dihedral(8)));
  CHECK(cat::wreath_pp(3).order() == 81);
  CHECK(exponent(cat::wreath_pp(3)) == 9);
}

TEST_CASE("metacyclic orders and the frobenius special case") {
  CHECK(cat::metacyclic(7, 9, 2).order() == 63);
  CHECK(cat::frobenius_metacyclic(7, 3, 2).order() == 21);
  CHECK(are_isomorphic(cat::metacyclic(5, 4, 2),
                       cat::frobenius_metacyclic(5, 4, 2)));
  Group fm = cat::frobenius_metacyclic(7, 6, 3);
  CHECK(fm.order() == 42);
  CHECK(is_frobenius_with_kernel(fm, sylow(fm, 7)));
}

TEST_CASE("inversion extensions") {
  Group g = cat::inversion_ext(3, 2, 4);
  CHECK(g.order() == 36);
  // The even part of the top acts trivially, so O_2 is the order-2 subgroup
  // inside the acting cyclic group.
  CHECK(p_core(g, 2).count() == 2);
  CHECK(p_core(g, 3).count() == 9);
  CHECK(cat::inversion_ext(3, 2, 8).order() == 72);
  CHECK(cat::inversion_ext(5, 2, 2).order() == 50);
}

TEST_CASE("a4 has no subgroup of order 6") {
  auto subs = all_subgroups(cat::a4());
  for (const auto& s : subs) CHECK(s.count() != 6);
  CHECK(subs.size() == 10);
}

TEST_CASE("s4 has exactly four normal subgroups") {
  auto normals = normal_subgroups(cat::s4());
  std::multiset<int> sizes;
  for (const auto& n : normals) sizes.insert(n.count());
  CHECK(sizes == std::multiset<int>{1, 4, 12, 24});
}

TEST_CASE("sl2_3 shape") {
  Group g = cat::sl2_3();
  CHECK(g.order() == 24);
  CHECK(center(g).count() == 2);
  CHECK(involutions(g) == 1);
  ElementSet o2 = p_core(g, 2);
  CHECK(o2.count() == 8);
  CHECK(are_isomorphic(subgroup_group(g, o2).group,
                       cat::generalized_quaternion(8)));
  CHECK(!are_isomorphic(g, cat::s4()));
}

TEST_CASE("binary octahedral shape") {
  Group g = cat::binary_octahedral();
  CHECK(g.order() == 48);
  CHECK(involutions(g) == 1);
  ElementSet syl2 = sylow(g, 2);
  CHECK(syl2.count() == 16);
  CHECK(are_isomorphic(subgroup_group(g, syl2).group,
                       cat::generalized_quaternion(16)));
  ElementSet der = derived_of_set(g, g.full_set());
  CHECK(der.count() == 24);
  CHECK(are_isomorphic(subgroup_group(g, der).group, cat::sl2_3()));
  QuotientMap q = quotient(g, center(g));
  CHECK(are_isomorphic(q.child, cat::s4()));
}

TEST_CASE("bespoke semidirect products have the advertised orders") {
  CHECK(cat::e9_q8().order() == 72);
  CHECK(cat::z15_q8().order() == 120);
  CHECK(cat::sign_ext_s4(1).order() == 72);
  CHECK(cat::sign_ext_s4(2).order() == 216);
  CHECK(cat::sign_ext_2o(1).order() == 144);
  Group f = cat::f169_dic3();
  CHECK(f.order() == 2028);
  CHECK(is_frobenius_with_kernel(f, sylow(f, 13)));
}
