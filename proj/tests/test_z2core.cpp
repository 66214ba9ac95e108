// Unit tests for the GF(2) symplectic layer and the group-order BFS.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "spinmcg/group_enum.hpp"
#include "spinmcg/z2.hpp"

using namespace spinmcg;

namespace {

Z2Vec rnd_vec(int g, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, (1u << (2 * g)) - 1);
  return Z2Vec{g, d(rng)};
}

Z2Vec rnd_nonzero(int g, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(1, (1u << (2 * g)) - 1);
  return Z2Vec{g, d(rng)};
}

Z2Matrix rnd_symplectic(int g, int factors, std::mt19937& rng) {
  Z2Matrix m = z2_identity(g);
  for (int i = 0; i < factors; ++i) {
    m = mul(transvection_mod2(rnd_nonzero(g, rng)), m);
  }
  return m;
}

}  // namespace

TEST_CASE("genus bounds") {
  CHECK_THROWS_AS(checked_genus(0), std::invalid_argument);
  CHECK_THROWS_AS(checked_genus(-3), std::invalid_argument);
  CHECK_THROWS_AS(checked_genus(kMaxGenus + 1), std::invalid_argument);
  for (int g = 1; g <= kMaxGenus; ++g) CHECK(checked_genus(g) == g);
}

TEST_CASE("vector construction and round trips") {
  Z2Vec v = z2vec(2, 0b0110);
  CHECK(coords(v) == std::vector<int>{0, 1, 1, 0});
  CHECK(to_string(v) == "0,1,1,0");
  CHECK(z2vec_from_coords(2, {0, 1, 1, 0}) == v);

  CHECK_THROWS_AS(z2vec(1, 0b0100), std::invalid_argument);  // bit beyond 2g
  CHECK_THROWS_AS(z2vec_from_coords(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(z2vec_from_coords(2, {0, 2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(add(z2vec(1, 1), z2vec(2, 1)), std::invalid_argument);
}

TEST_CASE("intersection pairing on hyperbolic pairs") {
  for (int g = 1; g <= 4; ++g) {
    for (int a = 0; a < 2 * g; ++a) {
      for (int b = 0; b < 2 * g; ++b) {
        Z2Vec ea{g, std::uint32_t{1} << a}, eb{g, std::uint32_t{1} << b};
        // <x_i, y_i> = 1; all other basis pairs vanish.
        int expect = (a / 2 == b / 2 && a != b) ? 1 : 0;
        CHECK(intersection_mod2(ea, eb) == expect);
      }
    }
  }
  // Bilinearity: <u+v, w> = <u,w> + <v,w>, exhaustive at g = 2.
  for (std::uint32_t u = 0; u < 16; ++u) {
    for (std::uint32_t v = 0; v < 16; ++v) {
      for (std::uint32_t w = 0; w < 16; ++w) {
        Z2Vec U{2, u}, V{2, v}, W{2, w};
        CHECK(intersection_mod2(add(U, V), W) ==
              (intersection_mod2(U, W) ^ intersection_mod2(V, W)));
      }
    }
  }
}

TEST_CASE("quadratic forms: polarization and labels") {
  // q0 vanishes on the basis and picks up only the cross terms.
  QuadForm q = q0(2);
  CHECK(quad_eval(q, z2vec(2, 0b0001)) == 0);   // x1
  CHECK(quad_eval(q, z2vec(2, 0b0011)) == 1);   // x1 + y1
  CHECK(quad_eval(q, z2vec(2, 0b1111)) == 0);   // both cross terms cancel
  CHECK(quad_eval(q, z2vec(2, 0b0111)) == 1);   // x1 + y1 + x2

  // Polarization q(u+v) = q(u) + q(v) + <u,v> for every form, exhaustive g=2.
  for (const QuadForm& f : enumerate_forms(2, -1)) {
    for (std::uint32_t u = 0; u < 16; ++u) {
      for (std::uint32_t v = 0; v < 16; ++v) {
        Z2Vec U{2, u}, V{2, v};
        CHECK(quad_eval(f, add(U, V)) ==
              (quad_eval(f, U) ^ quad_eval(f, V) ^ intersection_mod2(U, V)));
      }
    }
  }

  // label round trip
  QuadForm f = form_from_label(2, {1, 0, 1, 1});
  CHECK(form_label(f) == std::vector<int>{1, 0, 1, 1});
  CHECK(quad_eval(f, z2vec(2, 0b0001)) == 1);
  CHECK_THROWS_AS(form_from_label(2, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("arf invariant and form counts") {
  CHECK(arf(q0(3)) == 0);
  CHECK(arf(form_from_label(1, {1, 1})) == 1);
  CHECK(arf(form_from_label(2, {1, 1, 1, 1})) == 0);  // 1*1 + 1*1 = 0

  // Frozen counts of Arf-0 forms: 2^(2g-1) + 2^(g-1).
  const std::size_t even_counts[] = {3, 10, 36, 136};
  for (int g = 1; g <= 4; ++g) {
    auto all = enumerate_forms(g, -1);
    auto even = enumerate_forms(g, 0);
    auto odd = enumerate_forms(g, 1);
    CHECK(all.size() == (std::size_t{1} << (2 * g)));
    CHECK(even.size() == even_counts[g - 1]);
    CHECK(even.size() + odd.size() == all.size());
    CHECK(even.size() ==
          (std::size_t{1} << (2 * g - 1)) + (std::size_t{1} << (g - 1)));
    // Label order: strictly increasing lexicographically.
    for (std::size_t i = 0; i + 1 < even.size(); ++i) {
      CHECK(form_label(even[i]) < form_label(even[i + 1]));
    }
    CHECK(form_label(all.front()) == std::vector<int>(2 * g, 0));
  }
  CHECK_THROWS_AS(enumerate_forms(2, 2), std::invalid_argument);
}

TEST_CASE("lambda sets") {
  const std::size_t sizes[] = {1, 6, 28, 120};  // 2^(2g-1) - 2^(g-1)
  for (int g = 1; g <= 4; ++g) {
    auto lam = lambda_set(g);
    CHECK(lam.size() == sizes[g - 1]);
    for (const Z2Vec& z : lam) CHECK(quad_eval(q0(g), z) == 1);
    CHECK(std::is_sorted(lam.begin(), lam.end(),
                         [](const Z2Vec& a, const Z2Vec& b) {
                           return a.bits < b.bits;
                         }));
    // Complement check against a direct scan.
    std::size_t direct = 0;
    for (std::uint32_t bits = 0; bits < (1u << (2 * g)); ++bits) {
      direct += static_cast<std::size_t>(quad_eval(q0(g), Z2Vec{g, bits}));
    }
    CHECK(direct == lam.size());
  }
  // vectors_with_q1 for a nonzero-label form: still 2^(2g-1) - (+-) 2^(g-1).
  auto v1 = vectors_with_q1(form_from_label(2, {1, 1, 0, 0}));  // arf 1
  CHECK(v1.size() == 10);  // odd forms have 2^(2g-1) + 2^(g-1) ones
}

TEST_CASE("matrix basics") {
  Z2Matrix id = z2_identity(2);
  CHECK(matrix_rows(id) ==
        std::vector<std::vector<int>>{
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(matrix_from_rows(2, matrix_rows(id)) == id);
  CHECK_THROWS_AS(matrix_from_rows(2, {{1, 0}, {0, 1}}), std::invalid_argument);

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Z2Matrix a = rnd_symplectic(2, 4, rng);
    Z2Matrix b = rnd_symplectic(2, 4, rng);
    Z2Vec v = rnd_vec(2, rng);
    CHECK(apply(mul(a, b), v) == apply(a, apply(b, v)));   // action is a left action
    CHECK(mul(a, z2_identity(2)) == a);
    CHECK(mul(z2_identity(2), a) == a);
    Z2Vec w = rnd_vec(2, rng);
    CHECK(apply(a, add(v, w)) == add(apply(a, v), apply(a, w)));  // linearity
  }
}

TEST_CASE("transvections mod 2") {
  CHECK_THROWS_AS(transvection_mod2(z2vec(2, 0)), std::domain_error);
  for (std::uint32_t zb = 1; zb < 16; ++zb) {
    Z2Vec z{2, zb};
    Z2Matrix t = transvection_mod2(z);
    CHECK(is_symplectic_mod2(t));
    CHECK(mul(t, t) == z2_identity(2));  // involution over GF(2)
    for (std::uint32_t vb = 0; vb < 16; ++vb) {
      Z2Vec v{2, vb};
      Z2Vec expect = intersection_mod2(z, v) ? add(v, z) : v;
      CHECK(apply(t, v) == expect);
    }
  }
}

TEST_CASE("symplectic test") {
  CHECK(is_symplectic_mod2(z2_identity(3)));
  // A projection (duplicate row) kills the pairing.
  Z2Matrix bad = z2_identity(2);
  bad.rows[1] = bad.rows[0];
  CHECK_FALSE(is_symplectic_mod2(bad));
  // Swapping x1 <-> x2 and y1 <-> y2 together is symplectic...
  Z2Matrix swap = matrix_from_rows(
      2, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(is_symplectic_mod2(swap));
  // ...but swapping only x1 <-> x2 is not.
  Z2Matrix half = matrix_from_rows(
      2, {{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(is_symplectic_mod2(half));
}

TEST_CASE("form preservation characterizes transvection directions") {
  // Tv_z preserves q exactly when q(z) = 1: exhaustive over g = 2.
  for (const QuadForm& q : enumerate_forms(2, -1)) {
    for (std::uint32_t zb = 1; zb < 16; ++zb) {
      Z2Vec z{2, zb};
      CHECK(preserves_form(transvection_mod2(z), q) ==
            (quad_eval(q, z) == 1));
    }
  }
  Z2Matrix bad = z2_identity(2);
  bad.rows[1] = bad.rows[0];
  CHECK_THROWS_AS(preserves_form(bad, q0(2)), std::domain_error);
}

TEST_CASE("compose_form is the pointwise pullback and a right action") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Z2Matrix m = rnd_symplectic(2, 5, rng);
    for (const QuadForm& q : enumerate_forms(2, -1)) {
      QuadForm qm = compose_form(q, m);
      for (std::uint32_t vb = 0; vb < 16; ++vb) {
        Z2Vec v{2, vb};
        CHECK(quad_eval(qm, v) == quad_eval(q, apply(m, v)));
      }
    }
    Z2Matrix n = rnd_symplectic(2, 5, rng);
    QuadForm q = q0(2);
    CHECK(compose_form(q, mul(m, n)) == compose_form(compose_form(q, m), n));
  }
  CHECK(compose_form(q0(3), z2_identity(3)) == q0(3));
  Z2Matrix bad = z2_identity(2);
  bad.rows[1] = bad.rows[0];
  CHECK_THROWS_AS(compose_form(q0(2), bad), std::domain_error);
}

TEST_CASE("group orders: formula and small BFS closures") {
  CHECK(sp_order_formula(1) == 6);
  CHECK(sp_order_formula(2) == 720);
  CHECK(sp_order_formula(3) == 1451520);
  CHECK(sp_order_formula(4) == 47377612800ull);

  CHECK(sp_order_bfs(1) == 6);
  CHECK(sp_order_bfs(2) == 720);
  CHECK(orthogonal_order_bfs(1) == 2);
  // Dimension-4 exception: the Lambda_2 transvections generate an index-2
  // subgroup of the full stabilizer of q0.
  CHECK(orthogonal_order_bfs(2) == 36);

  SpClosureStats s2 = sp_closure_stats(2);
  CHECK(s2.sp_order == 720);
  CHECK(s2.stabilizer_order == 72);

  auto stab = orthogonal_stabilizer_elements(2);
  CHECK(stab.size() == 72);
  for (const Z2Matrix& m : stab) {
    CHECK(is_symplectic_mod2(m));
    CHECK(preserves_form(m, q0(2)));
  }
  // Index 10 = number of even forms: orbit-stabilizer cross-check.
  CHECK(720 / stab.size() == 10);

  CHECK_THROWS_AS(sp_order_bfs(4), std::invalid_argument);
  std::vector<Z2Matrix> gens;
  for (std::uint32_t b = 1; b < 16; ++b) {
    gens.push_back(transvection_mod2(Z2Vec{2, b}));
  }
  CHECK_THROWS_AS(closure_order(gens, 10), std::runtime_error);
  CHECK(closure_order({}, 1) == 1);
}
