#include "tidykit/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace tidykit::catalog {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; 1LL * d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail("bad_parameter", what);
}

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int pow_mod(int b, int e, int m) {
  long long r = 1, x = b % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return int(r);
}

int mult_order(int r, int p) {
  int k = 1, x = r % p;
  while (x != 1) {
    x = int(1LL * x * r % p);
    ++k;
    if (k > p) fail("bad_parameter", "multiplier not a unit");
  }
  return k;
}

Group table_group(int n, const std::string& label,
                  int (*f)(int, int, int), int param) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = f(a, b, param);
  return from_cayley_table(t, label);
}

}  // namespace

Group trivial() { return cyclic(1).with_label("trivial"); }

Group cyclic(int n) {
  require(n >= 1, "cyclic group needs order >= 1");
  return table_group(n, "cyclic:" + std::to_string(n),
                     [](int a, int b, int n_) { return (a + b) % n_; }, n);
}

Group dihedral(int n) {
  require(n >= 6 && n % 2 == 0, "dihedral group needs even order >= 6");
  int m = n / 2;
  // 0..m-1 are the rotations r^a; m..2m-1 are the reflections r^a s.
  return table_group(n, "dihedral:" + std::to_string(n),
                     [](int x, int y, int m_) {
                       int a = x % m_, b = y % m_;
                       bool xf = x >= m_, yf = y >= m_;
                       int rot = xf ? (a - b % m_ + m_) % m_ : (a + b) % m_;
                       return rot + (xf != yf ? m_ : 0);
                     },
                     m);
}

Group dicyclic(int n) {
  require(n >= 8 && n % 4 == 0, "dicyclic group needs order 4m, m >= 2");
  int m2 = n / 2;  // r has order 2m
  // 0..2m-1 are r^a; 2m..4m-1 are r^a s, with s^2 = r^m and s^-1 r s = r^-1.
  return table_group(n, "dicyclic:" + std::to_string(n),
                     [](int x, int y, int m2_) {
                       int a = x % m2_, b = y % m2_;
                       bool xf = x >= m2_, yf = y >= m2_;
                       if (!xf && !yf) return (a + b) % m2_;
                       if (!xf && yf) return m2_ + (a + b) % m2_;
                       if (xf && !yf) return m2_ + (a - b + m2_) % m2_;
                       return (a - b + m2_ / 2 + m2_) % m2_;
                     },
                     m2);
}

Group generalized_quaternion(int n) {
  require(n >= 8 && (n & (n - 1)) == 0,
          "generalized quaternion group needs order 2^k >= 8");
  return dicyclic(n).with_label("generalized_quaternion:" + std::to_string(n));
}

Group elementary_abelian(int p, int r) {
  require(is_prime(p), "elementary abelian group needs a prime");
  require(r >= 1, "elementary abelian group needs rank >= 1");
  long long n = pow_ll(p, r);
  require(n <= max_group_order(), "elementary abelian group too large");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < int(n); ++a)
    for (int b = 0; b < int(n); ++b) {
      int x = a, y = b, v = 0, place = 1;
      for (int i = 0; i < r; ++i) {
        v += (x % p + y % p) % p * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
    }
  return from_cayley_table(
      t, "elementary_abelian:" + std::to_string(p) + "," + std::to_string(r));
}

Group extraspecial(int p) {
  require(is_prime(p) && p >= 3, "extraspecial family defined for odd primes");
  int n = p * p * p;
  require(n <= max_group_order(), "extraspecial group too large");
  // Triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a1 = x / (p * p), b1 = x / p % p, c1 = x % p;
      int a2 = y / (p * p), b2 = y / p % p, c2 = y % p;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (a1 + a2) % p * p * p +
                                          (b1 + b2) % p * p +
                                          (c1 + c2 + a1 * b2) % p;
    }
  return from_cayley_table(t, "extraspecial:" + std::to_string(p));
}

Group wreath_pp(int p) {
  require(is_prime(p), "wreath family needs a prime");
  require(pow_ll(p, p + 1) <= max_group_order(), "wreath group too large");
  Group base = elementary_abelian(p, p);
  Group top = cyclic(p);
  int n = base.order();
  std::vector<std::vector<int>> act(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(n)));
  for (int h = 0; h < p; ++h)
    for (int v = 0; v < n; ++v) {
      std::vector<int> d(static_cast<std::size_t>(p));
      int x = v;
      for (int i = 0; i < p; ++i) {
        d[static_cast<std::size_t>(i)] = x % p;
        x /= p;
      }
      int out = 0, place = 1;
      for (int i = 0; i < p; ++i) {
        out += d[static_cast<std::size_t>((i + h) % p)] * place;
        place *= p;
      }
      act[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)] = out;
    }
  return semidirect_product(base, top, act)
      .with_label("wreath_pp:" + std::to_string(p));
}

namespace {

Group multiplier_ext(int p, int m, int r, const std::string& label) {
  require(is_prime(p), "base of the extension must be Z_p for a prime p");
  require(m >= 1 && r >= 1 && r < p, "need m >= 1 and a multiplier in 1..p-1");
  require(pow_mod(r, m, p) == 1, "multiplier^m must be 1 mod p");
  Group n = cyclic(p);
  Group h = cyclic(m);
  std::vector<std::vector<int>> act(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(p)));
  for (int t = 0; t < m; ++t) {
    int mult = pow_mod(r, t, p);
    for (int x = 0; x < p; ++x)
      act[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)] = int(1LL * x * mult % p);
  }
  return semidirect_product(n, h, act).with_label(label);
}

}  // namespace

Group metacyclic(int p, int m, int r) {
  return multiplier_ext(p, m, r,
                        "metacyclic:" + std::to_string(p) + "," +
                            std::to_string(m) + "," + std::to_string(r));
}

Group frobenius_metacyclic(int p, int q, int r) {
  require(is_prime(p) && q >= 2 && r >= 2 && r < p,
          "Frobenius extension needs a prime base and a nontrivial multiplier");
  require(mult_order(r, p) == q,
          "multiplier must have order exactly q mod p for a Frobenius action");
  return multiplier_ext(p, q, r,
                        "frobenius_metacyclic:" + std::to_string(p) + "," +
                            std::to_string(q) + "," + std::to_string(r));
}

Group inversion_ext(int p, int r, int m) {
  require(is_prime(p) && p >= 3, "inversion extension needs an odd prime");
  require(r >= 1 && m >= 2 && m % 2 == 0,
          "inversion extension needs rank >= 1 and even m");
  Group n = elementary_abelian(p, r);
  Group h = cyclic(m);
  int nn = n.order();
  std::vector<std::vector<int>> act(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(nn)));
  for (int t = 0; t < m; ++t)
    for (int v = 0; v < nn; ++v) {
      if (t % 2 == 0) {
        act[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = v;
      } else {
        int x = v, out = 0, place = 1;
        for (int i = 0; i < r; ++i) {
          out += (p - x % p) % p * place;
          x /= p;
          place *= p;
        }
        act[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = out;
      }
    }
  return semidirect_product(n, h, act)
      .with_label("inversion_ext:" + std::to_string(p) + "," +
                  std::to_string(r) + "," + std::to_string(m));
}

Group a4() {
  return from_permutation_generators({{1, 2, 0, 3}, {0, 2, 3, 1}}, "a4");
}

Group s4() {
  return from_permutation_generators({{1, 2, 3, 0}, {1, 0, 2, 3}}, "s4");
}

Group sl2_3() {
  // Matrices [[1,1],[0,1]] and [[1,0],[1,1]] on column vectors (a, b) over
  // F_3; point (a, b) has index 3a + b.
  std::vector<int> t1(9), t2(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      t1[static_cast<std::size_t>(3 * a + b)] = 3 * ((a + b) % 3) + b;
      t2[static_cast<std::size_t>(3 * a + b)] = 3 * a + (a + b) % 3;
    }
  return from_permutation_generators({t1, t2}, "sl2_3");
}

namespace {

// F_9 = F_3[s]/(s^2 + 1), element x + 3y standing for x + y*s.
int f9_add(int u, int v) { return (u % 3 + v % 3) % 3 + 3 * ((u / 3 + v / 3) % 3); }
int f9_mul(int u, int v) {
  int x1 = u % 3, y1 = u / 3, x2 = v % 3, y2 = v / 3;
  return (x1 * x2 + 2 * y1 * y2) % 3 + 3 * ((x1 * y2 + y1 * x2) % 3);
}

std::vector<int> f9_mat_perm(int m00, int m01, int m10, int m11) {
  std::vector<int> perm(81);
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v) {
      int nu = f9_add(f9_mul(m00, u), f9_mul(m01, v));
      int nv = f9_add(f9_mul(m10, u), f9_mul(m11, v));
      perm[static_cast<std::size_t>(9 * u + v)] = 9 * nu + nv;
    }
  return perm;
}

}  // namespace

Group binary_octahedral() {
  // Inside SL(2,9) acting on (F_9)^2: the standard SL(2,3) generators
  // [[0,-1],[1,0]] and [[1,1],[0,1]] plus W = [[s,0],[0,-s]], whose square
  // is -I and which conjugates SL(2,3) to itself. Everything here has
  // determinant 1, so -I is the only involution and the Sylow 2-subgroup is
  // generalized quaternion.
  auto a = f9_mat_perm(0, 2, 1, 0);
  auto b = f9_mat_perm(1, 1, 0, 1);
  auto w = f9_mat_perm(3, 0, 0, 6);  // 3 = s, 6 = -s
  return from_permutation_generators({a, b, w}, "binary_octahedral");
}

Group e9_q8() {
  // Affine maps of (F_3)^2, point (a, b) at index 3a + b: two translations
  // and the matrices i = [[0,2],[1,0]], j = [[1,1],[1,2]], which satisfy
  // i^2 = j^2 = -I and ij = -ji, so they generate a quaternion group acting
  // without fixed points.
  std::vector<int> t1(9), t2(9), mi(9), mj(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      int at = static_cast<std::size_t>(3 * a + b);
      t1[at] = 3 * ((a + 1) % 3) + b;
      t2[at] = 3 * a + (b + 1) % 3;
      mi[at] = 3 * (2 * b % 3) + a;
      mj[at] = 3 * ((a + b) % 3) + (a + 2 * b) % 3;
    }
  return from_permutation_generators({t1, t2, mi, mj}, "e9_q8");
}

Group z15_q8() {
  Group n = cyclic(15);
  Group h = generalized_quaternion(8);
  // Q8 acts through its Klein quotient: i multiplies by 11, j by 4 (both
  // square to 1 mod 15, product 44 = -1). In the dicyclic numbering,
  // elements 0..3 are powers of i and 4..7 are i^a j.
  const int unit[8] = {1, 11, 1, 11, 4, 14, 4, 14};
  std::vector<std::vector<int>> act(8, std::vector<int>(15));
  for (int t = 0; t < 8; ++t)
    for (int x = 0; x < 15; ++x) act[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)] = x * unit[t] % 15;
  return semidirect_product(n, h, act).with_label("z15_q8");
}

Group f169_dic3() {
  // Affine maps of (F_13)^2, point (u, v) at index 13u + v: translations
  // plus a = diag(3, 9) of order 3 and b = [[0,1],[12,0]] with b^2 = -I and
  // b a b^-1 = a^-1, so <a, b> is dicyclic of order 12. No nontrivial
  // element fixes a nonzero vector, making the extension Frobenius.
  std::vector<int> t1(169), t2(169), ma(169), mb(169);
  for (int u = 0; u < 13; ++u)
    for (int v = 0; v < 13; ++v) {
      std::size_t at = static_cast<std::size_t>(13 * u + v);
      t1[at] = 13 * ((u + 1) % 13) + v;
      t2[at] = 13 * u + (v + 1) % 13;
      ma[at] = 13 * (3 * u % 13) + 9 * v % 13;
      mb[at] = 13 * v + 12 * u % 13;
    }
  return from_permutation_generators({t1, t2, ma, mb}, "f169_dic3");
}

namespace {

Group sign_ext(const Group& h, int r, const std::string& label) {
  // The index-2 normal subgroup acting trivially is the derived subgroup
  // (A4 in S4, SL(2,3) in the binary octahedral group).
  ElementSet comms = h.empty_set();
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y) comms.set(h.comm(x, y));
  ElementSet der = generated_subgroup(h, comms);
  Group n = elementary_abelian(3, r);
  int nn = n.order();
  std::vector<int> ident(static_cast<std::size_t>(nn)), negate(static_cast<std::size_t>(nn));
  for (int v = 0; v < nn; ++v) {
    ident[static_cast<std::size_t>(v)] = v;
    int x = v, out = 0, place = 1;
    for (int i = 0; i < r; ++i) {
      out += (3 - x % 3) % 3 * place;
      x /= 3;
      place *= 3;
    }
    negate[static_cast<std::size_t>(v)] = out;
  }
  std::vector<std::vector<int>> act(static_cast<std::size_t>(h.order()));
  for (int t = 0; t < h.order(); ++t) act[static_cast<std::size_t>(t)] = der.test(t) ? ident : negate;
  return semidirect_product(n, h, act).with_label(label);
}

}  // namespace

Group sign_ext_s4(int r) {
  require(r >= 1, "rank must be >= 1");
  return sign_ext(s4(), r, "sign_ext_s4:" + std::to_string(r));
}

Group sign_ext_2o(int r) {
  require(r >= 1, "rank must be >= 1");
  return sign_ext(binary_octahedral(), r, "sign_ext_2o:" + std::to_string(r));
}

namespace {

std::vector<int> parse_int_args(const std::string& s, const std::string& family) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail("bad_parameter",
           "family \"" + family + "\": bad integer argument \"" + tok + "\"");
    }
    pos = next + 1;
  }
  return out;
}

}  // namespace

Group build_family(const std::string& descriptor) {
  std::size_t colon = descriptor.find(':');
  std::string name = descriptor.substr(0, colon);
  std::string rest =
      colon == std::string::npos ? "" : descriptor.substr(colon + 1);

  if (name == "direct_product") {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t next = rest.find(';', pos);
      if (next == std::string::npos) next = rest.size();
      parts.push_back(rest.substr(pos, next - pos));
      pos = next + 1;
    }
    if (parts.size() < 2 || parts.back().empty())
      fail("bad_parameter", "direct_product needs at least two factors");
    Group g = build_family(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = direct_product(g, build_family(parts[i]));
    return g;
  }

  auto args = parse_int_args(rest, name);
  auto arity = [&](std::size_t k) {
    if (args.size() != k)
      fail("bad_parameter", "family \"" + name + "\" takes " +
                                std::to_string(k) + " integer argument(s), got " +
                                std::to_string(args.size()));
  };

  if (name == "trivial") { arity(0); return trivial(); }
  if (name == "cyclic") { arity(1); return cyclic(args[0]); }
  if (name == "dihedral") { arity(1); return dihedral(args[0]); }
  if (name == "dicyclic") { arity(1); return dicyclic(args[0]); }
  if (name == "generalized_quaternion") { arity(1); return generalized_quaternion(args[0]); }
  if (name == "elementary_abelian") { arity(2); return elementary_abelian(args[0], args[1]); }
  if (name == "extraspecial") { arity(1); return extraspecial(args[0]); }
  if (name == "wreath_pp") { arity(1); return wreath_pp(args[0]); }
  if (name == "metacyclic") { arity(3); return metacyclic(args[0], args[1], args[2]); }
  if (name == "frobenius_metacyclic") { arity(3); return frobenius_metacyclic(args[0], args[1], args[2]); }
  if (name == "inversion_ext") { arity(3); return inversion_ext(args[0], args[1], args[2]); }
  if (name == "a4") { arity(0); return a4(); }
  if (name == "s4") { arity(0); return s4(); }
  if (name == "sl2_3") { arity(0); return sl2_3(); }
  if (name == "binary_octahedral") { arity(0); return binary_octahedral(); }
  if (name == "e9_q8") { arity(0); return e9_q8(); }
  if (name == "z15_q8") { arity(0); return z15_q8(); }
  if (name == "f169_dic3") { arity(0); return f169_dic3(); }
  if (name == "sign_ext_s4") { arity(1); return sign_ext_s4(args[0]); }
  if (name == "sign_ext_2o") { arity(1); return sign_ext_2o(args[0]); }

  fail("unknown_family", "no group family named \"" + name + "\"");
}

std::vector<std::string> family_names() {
  return {"trivial",
          "cyclic",
          "dihedral",
          "dicyclic",
          "generalized_quaternion",
          "elementary_abelian",
          "extraspecial",
          "wreath_pp",
          "metacyclic",
          "frobenius_metacyclic",
          "inversion_ext",
          "a4",
          "s4",
          "sl2_3",
          "binary_octahedral",
          "e9_q8",
          "z15_q8",
          "f169_dic3",
          "sign_ext_s4",
          "sign_ext_2o",
          "direct_product"};
}

}  // namespace tidykit::catalog
