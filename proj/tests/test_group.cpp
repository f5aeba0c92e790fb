#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "tidykit/catalog.hpp"
#include "tidykit/group.hpp"

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

std::vector<std::vector<int>> z6_table() {
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = (i + j) % 6;
  return t;
}

int involutions(const Group& g) {
  int k = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.ord(x) == 2) ++k;
  return k;
}

}  // namespace

TEST_CASE("element orders match naive powering") {
  for (const Group& g : {cat::cyclic(12), cat::s4(), cat::dicyclic(12),
                         cat::generalized_quaternion(16)}) {
    for (int x = 0; x < g.order(); ++x) {
      int y = x, k = 1;
      while (y != 0) {
        y = g.mul(y, x);
        ++k;
      }
      CHECK(g.ord(x) == k);
      CHECK(g.cyc_closure(x).count() == k);
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.mul(g.inv(x), x) == 0);
    }
  }
}

TEST_CASE("cayley validation accepts Z6 and rejects a non-associative latin square") {
  Group z6 = from_cayley_table(z6_table(), "z6");
  CHECK(z6.order() == 6);
  CHECK(z6.ord(1) == 6);

  // Swapping an intercalate keeps every row and column a permutation and
  // keeps the identity, but breaks associativity: (1*1)*1 != 1*(1*1).
  auto t = z6_table();
  std::swap(t[1][2], t[1][5]);
  std::swap(t[4][2], t[4][5]);
  CHECK(thrown_code([&] { from_cayley_table(t, "broken"); }) == "not_a_group");
}

TEST_CASE("cayley validation rejects malformed tables") {
  auto t = z6_table();
  t[3][3] = 17;
  CHECK(thrown_code([&] { from_cayley_table(t, "oob"); }) == "not_a_group");
  t = z6_table();
  t[2].pop_back();
  CHECK(thrown_code([&] { from_cayley_table(t, "ragged"); }) == "not_a_group");
  CHECK(thrown_code([&] { from_cayley_table({}, "empty"); }) == "not_a_group");
}

TEST_CASE("permutation generators: two transpositions make S3") {
  Group g = from_permutation_generators({{1, 0, 2}, {0, 2, 1}}, "s3");
  CHECK(g.order() == 6);
  CHECK(are_isomorphic(g, cat::dihedral(6)));
}

TEST_CASE("permutation generators: 4-cycle plus diagonal swap make D8") {
  Group g = from_permutation_generators({{1, 2, 3, 0}, {2, 1, 0, 3}}, "d8");
  CHECK(g.order() == 8);
  CHECK(are_isomorphic(g, cat::dihedral(8)));
}

TEST_CASE("permutation generators: bad inputs") {
  CHECK(thrown_code([] {
          from_permutation_generators({{0, 0, 1}}, "bad");
        }) == "invalid_permutation");
  // No generators still produces a group: the trivial one.
  CHECK(from_permutation_generators({}, "none").order() == 1);
  // An 8-cycle and a transposition generate all 40320 permutations, far past
  // the default order ceiling.
  CHECK(thrown_code([] {
          from_permutation_generators(
              {{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}, "s8");
        }) == "closure_too_large");
}

TEST_CASE("generated subgroups and normal closure in S4") {
  Group s4 = cat::s4();
  int four_cycle = -1, transposition = -1;
  for (int x = 1; x < 24; ++x) {
    if (s4.ord(x) == 4 && four_cycle < 0) four_cycle = x;
    if (s4.ord(x) == 2 && transposition < 0) transposition = x;
  }
  // <4-cycle> has order 4; its normal closure picks up all of them.
  ElementSet c4 = generated_subgroup(s4, std::vector<int>{four_cycle});
  CHECK(c4.count() == 4);
  CHECK(normal_closure(s4, c4).count() == 24);
  CHECK(generated_subgroup(s4, std::vector<int>{}).count() == 1);
  CHECK(is_subgroup(s4, c4));
  ElementSet not_closed = s4.set_of({0, four_cycle});
  CHECK(!is_subgroup(s4, not_closed));
}

TEST_CASE("conjugacy classes of S4 have the textbook sizes") {
  auto classes = conjugacy_classes(cat::s4());
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(c.count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 3, 6, 6, 8});
}

TEST_CASE("quotient S4 by the klein four subgroup is S3") {
  Group s4 = cat::s4();
  // The klein four subgroup is the identity plus the double transpositions,
  // which form the unique conjugacy class of size 3.
  ElementSet v = s4.singleton(0);
  for (const auto& c : conjugacy_classes(s4))
    if (c.count() == 3) v |= c;
  CHECK(v.count() == 4);
  QuotientMap q = quotient(s4, v);
  CHECK(q.child.order() == 6);
  CHECK(are_isomorphic(q.child, cat::dihedral(6)));
  CHECK(q.proj[0] == 0);
  // Projection and preimage are inverse on subgroups containing the kernel.
  ElementSet back = preimage_set(q, s4, project_set(q, v));
  CHECK(back == v);
}

TEST_CASE("quotient rejects non-normal subgroups") {
  Group s4 = cat::s4();
  int transposition = -1;
  for (int x = 1; x < 24; ++x)
    if (s4.ord(x) == 2) {
      bool cls3 = false;
      for (const auto& c : conjugacy_classes(s4))
        if (c.count() == 3 && c.test(x)) cls3 = true;
      if (!cls3) {
        transposition = x;
        break;
      }
    }
  ElementSet h = generated_subgroup(s4, std::vector<int>{transposition});
  CHECK(thrown_code([&] { quotient(s4, h); }) == "not_normal");
}

TEST_CASE("subgroup views translate both directions") {
  Group g = cat::dihedral(12);
  // The rotation subgroup: all elements of order dividing 6 that power into
  // one cyclic subgroup.
  int r = -1;
  for (int x = 1; x < 12; ++x)
    if (g.ord(x) == 6) r = x;
  ElementSet rot = g.cyc_closure(r);
  SubgroupView v = subgroup_group(g, rot);
  CHECK(v.group.order() == 6);
  CHECK(are_isomorphic(v.group, cat::cyclic(6)));
  for (int i = 0; i < 6; ++i) CHECK(v.to_local[std::size_t(v.to_parent[std::size_t(i)])] == i);
  ElementSet local_all = v.group.full_set();
  CHECK(lift_from(v, g, local_all) == rot);
  CHECK(restrict_to(v, g.full_set()) == local_all);

  ElementSet not_sub = g.set_of({0, 1, 2, 3});
  if (!is_subgroup(g, not_sub))
    CHECK(thrown_code([&] { subgroup_group(g, not_sub); }) == "not_a_subgroup");
}

TEST_CASE("direct product layout and labels") {
  Group a = cat::dihedral(8);
  Group b = cat::cyclic(3);
  Group p = direct_product(a, b);
  CHECK(p.order() == 24);
  CHECK(p.label() == "dihedral:8 x cyclic:3");
  for (int x1 = 0; x1 < 8; ++x1)
    for (int y1 = 0; y1 < 3; ++y1)
      for (int x2 = 0; x2 < 8; ++x2)
        for (int y2 = 0; y2 < 3; ++y2)
          CHECK(p.mul(x1 * 3 + y1, x2 * 3 + y2) ==
                a.mul(x1, x2) * 3 + b.mul(y1, y2));
}

TEST_CASE("semidirect product validates the action") {
  Group n = cat::cyclic(5);
  Group h = cat::cyclic(4);
  // x -> 2x is an order-4 automorphism of Z5, so Z5 x| Z4 is Frobenius of
  // order 20.
  std::vector<std::vector<int>> act(4, std::vector<int>(5));
  for (int k = 0; k < 4; ++k) {
    int m = 1;
    for (int i = 0; i < k; ++i) m = m * 2 % 5;
    for (int x = 0; x < 5; ++x) act[std::size_t(k)][std::size_t(x)] = x * m % 5;
  }
  Group g = semidirect_product(n, h, act);
  CHECK(g.order() == 20);
  CHECK(are_isomorphic(g, cat::frobenius_metacyclic(5, 4, 2)));

  auto bad = act;
  bad[1] = {0, 0, 1, 2, 3};
  CHECK(thrown_code([&] { semidirect_product(n, h, bad); }) ==
        "not_an_automorphism");
  auto skew = act;
  skew[2] = act[1];
  CHECK(thrown_code([&] { semidirect_product(n, h, skew); }) ==
        "not_an_action");
}

TEST_CASE("isomorphism testing separates same-order groups") {
  CHECK(!are_isomorphic(cat::cyclic(4), cat::elementary_abelian(2, 2)));
  CHECK(!are_isomorphic(cat::dihedral(8), cat::generalized_quaternion(8)));
  CHECK(!are_isomorphic(cat::dihedral(12), cat::dicyclic(12)));
  CHECK(are_isomorphic(cat::dicyclic(8), cat::generalized_quaternion(8)));
  CHECK(are_isomorphic(cat::a4(),
                       from_permutation_generators(
                           {{1, 0, 3, 2}, {1, 2, 0, 3}}, "a4_perms")));
  CHECK(thrown_code([] {
          are_isomorphic(cat::cyclic(100), cat::cyclic(100));
        }) == "order_bound_exceeded");
  CHECK(are_isomorphic(cat::cyclic(100), cat::cyclic(100), 128));
}

TEST_CASE("involution counts separate D8 from Q8") {
  CHECK(involutions(cat::dihedral(8)) == 5);
  CHECK(involutions(cat::generalized_quaternion(8)) == 1);
  CHECK(involutions(cat::generalized_quaternion(16)) == 1);
}

TEST_CASE("element sets refuse foreign groups") {
  Group a = cat::cyclic(6);
  Group b = cat::cyclic(6);
  ElementSet s = a.singleton(1);
  CHECK(thrown_code([&] { b.check_owns(s); }) == "set_owner_mismatch");
  // A relabeled copy is still the same group.
  Group a2 = a.with_label("renamed");
  a2.check_owns(s);
  CHECK(a2.label() == "renamed");
}

TEST_CASE("set algebra basics") {
  Group g = cat::cyclic(10);
  ElementSet a = g.set_of({0, 1, 2});
  ElementSet b = g.set_of({2, 3});
  CHECK((a | b).count() == 4);
  CHECK((a & b).count() == 1);
  CHECK((a - b) == g.set_of({0, 1}));
  CHECK(a != b);
  ElementSet c = a;
  c -= g.singleton(1);
  CHECK(c == g.set_of({0, 2}));
  std::vector<int> members = (a | b).elements();
  CHECK(members == std::vector<int>{0, 1, 2, 3});
}
