// Unit tests for the mod-2 square-move calculus, orthogonal factorization,
// and orbit witnesses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "spinmcg/group_enum.hpp"
#include "spinmcg/json_io.hpp"
#include "spinmcg/lambda.hpp"

using namespace spinmcg;

namespace {

Z2Vec rnd_lambda(int g, std::mt19937& rng) {
  auto lam = lambda_set(g);
  std::uniform_int_distribution<std::size_t> d(0, lam.size() - 1);
  return lam[d(rng)];
}

Z2Matrix rnd_orthogonal(int g, int factors, std::mt19937& rng) {
  Z2Matrix m = z2_identity(g);
  for (int i = 0; i < factors; ++i) {
    m = mul(transvection_mod2(rnd_lambda(g, rng)), m);
  }
  return m;
}

}  // namespace

TEST_CASE("square move follows its formula and is a conjugation") {
  for (int g = 2; g <= 3; ++g) {
    auto lam = lambda_set(g);
    for (const Z2Vec& z1 : lam) {
      for (const Z2Vec& z2 : lam) {
        Z2Vec expect = intersection_mod2(z2, z1) ? add(z1, z2) : z1;
        Z2Vec got = square_op(z1, z2);
        CHECK(got == expect);
        CHECK(quad_eval(q0(g), got) == 1);  // stays in Lambda_g
        // Tv_{z2} Tv_{z1} Tv_{z2}^-1 = Tv_{z1 [sq] z2} (involutions).
        Z2Matrix t1 = transvection_mod2(z1), t2 = transvection_mod2(z2);
        CHECK(mul(t2, mul(t1, t2)) == transvection_mod2(got));
        // Involution law: z [sq] w [sq] w = z.
        CHECK(square_op(got, z2) == z1);
      }
    }
  }
  // The operand must have q0 = 1.
  CHECK_THROWS_AS(square_op(z2vec(2, 0b0011), z2vec(2, 0b0001)),
                  std::domain_error);
}

TEST_CASE("standard generators") {
  for (int g = 1; g <= 4; ++g) {
    auto gens = lambda_generators(g);
    CHECK(gens.size() == static_cast<std::size_t>(3 * g - 2));
    for (const Z2Vec& v : gens) {
      CHECK(quad_eval(q0(g), v) == 1);
      CHECK(is_lambda_generator(v));
    }
    // Distinct.
    auto sorted = gens;
    std::sort(sorted.begin(), sorted.end(),
              [](const Z2Vec& a, const Z2Vec& b) { return a.bits < b.bits; });
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
  CHECK(lambda_generators(2)[0] == z2vec(2, 0b0011));       // x1 + y1
  CHECK_FALSE(is_lambda_generator(z2vec(3, 0b110011)));     // q0 = 0
}

TEST_CASE("lambda_reduce covers the whole set for small genus") {
  for (int g = 1; g <= 4; ++g) {
    for (const Z2Vec& z : lambda_set(g)) {
      LambdaCert cert = lambda_reduce(z);
      std::string why;
      CHECK(verify_lambda_cert(cert, &why));
      CHECK(cert.input == z);
      // The reduction lands on one of the two leftmost generators.
      bool standard_end = cert.output == z2vec(g, 0b0011) ||
                          (g >= 2 && cert.output == z2vec(g, 0b0111));
      CHECK(standard_end);
    }
    CHECK(lambda_set(g).size() ==
          (std::size_t{1} << (2 * g - 1)) - (std::size_t{1} << (g - 1)));
  }
  CHECK_THROWS_AS(lambda_reduce(z2vec(2, 0b0001)), std::domain_error);

  // Certificate tampering is caught.
  LambdaCert cert = lambda_reduce(z2vec(3, 0b001110));
  LambdaCert bad = cert;
  bad.output = z2vec(3, 0b1100);
  CHECK_FALSE(verify_lambda_cert(bad));
  bad = cert;
  // x1 + x2 + y2 pairs to 1 with both possible outputs, so this extra move
  // really changes the replay (an operand disjoint from the output would not).
  bad.moves.push_back(SquareMove{z2vec(3, 0b001101)});
  CHECK_FALSE(verify_lambda_cert(bad));
}

TEST_CASE("factorization into form transvections") {
  // Identity and single transvections.
  CHECK(factor_into_z2_transvections(z2_identity(2)).empty());
  for (int g = 2; g <= 3; ++g) {
    for (const Z2Vec& z : lambda_set(g)) {
      auto factors = factor_into_z2_transvections(transvection_mod2(z));
      Z2Matrix prod = z2_identity(g);
      for (const Z2Vec& v : factors) prod = mul(prod, transvection_mod2(v));
      CHECK(prod == transvection_mod2(z));
    }
  }

  std::mt19937 rng(31);
  for (int g = 2; g <= 3; ++g) {
    for (int trial = 0; trial < 25; ++trial) {
      Z2Matrix m = rnd_orthogonal(g, 6, rng);
      auto factors = factor_into_z2_transvections(m);
      Z2Matrix prod = z2_identity(g);
      for (const Z2Vec& v : factors) {
        CHECK(quad_eval(q0(g), v) == 1);
        prod = mul(prod, transvection_mod2(v));
      }
      CHECK(prod == m);
    }
  }

  // Not in the orthogonal group: a plain symplectic transvection about a
  // q0 = 0 direction.
  CHECK_THROWS_AS(factor_into_z2_transvections(transvection_mod2(z2vec(2, 1))),
                  std::domain_error);
}

TEST_CASE("dimension-4 exception: half the stabilizer does not factor") {
  auto stab = orthogonal_stabilizer_elements(2);
  REQUIRE(stab.size() == 72);
  int factored = 0, unfactorable = 0;
  for (const Z2Matrix& m : stab) {
    try {
      OrthFactorization f = factor_orthogonal(m);
      std::string why;
      CHECK(verify_orth_factorization(f, &why));
      ++factored;
    } catch (const std::domain_error&) {
      ++unfactorable;
    }
  }
  CHECK(factored == 36);
  CHECK(unfactorable == 36);
  // The factorable half is exactly the transvection closure.
  CHECK(orthogonal_order_bfs(2) == 36);
}

TEST_CASE("factor_orthogonal refines factors to standard generators") {
  std::mt19937 rng(37);
  for (int g = 2; g <= 3; ++g) {
    for (int trial = 0; trial < 20; ++trial) {
      Z2Matrix m = rnd_orthogonal(g, 7, rng);
      OrthFactorization f = factor_orthogonal(m);
      std::string why;
      CHECK(verify_orth_factorization(f, &why));
      CHECK(f.input == m);
      for (const Z2Vec& v : f.factors) CHECK(is_lambda_generator(v));
    }
  }

  Z2Matrix m = rnd_orthogonal(3, 5, rng);
  OrthFactorization f = factor_orthogonal(m);
  OrthFactorization bad = f;
  if (!bad.factors.empty()) {
    bad.factors.pop_back();
    CHECK_FALSE(verify_orth_factorization(bad));
  }
  bad = f;
  bad.factors.push_back(z2vec(3, 0b0001));  // not a standard generator
  CHECK_FALSE(verify_orth_factorization(bad));
}

TEST_CASE("lambda and orthogonal certificates round-trip through JSON") {
  std::mt19937 rng(41);
  LambdaCert cert = lambda_reduce(z2vec(3, 0b101110));
  nlohmann::json j = to_json(cert);
  CHECK(lambda_from_json(j) == cert);
  j["kind"] = "mystery";
  CHECK_THROWS_AS(lambda_from_json(j), std::invalid_argument);

  Z2Matrix m = rnd_orthogonal(3, 6, rng);
  OrthFactorization f = factor_orthogonal(m);
  nlohmann::json jf = to_json(f);
  OrthFactorization back = orth_from_json(jf);
  CHECK(back.input == f.input);
  CHECK(back.raw == f.raw);
  CHECK(back.factors == f.factors);
  CHECK(verify_orth_factorization(back));
}

TEST_CASE("orbit witnesses at genus 3") {
  CHECK_THROWS_AS(orbit_witness(2, z2vec(2, 0b0001)), std::invalid_argument);
  CHECK_THROWS_AS(orbit_witness(3, z2vec(3, 0)), std::domain_error);

  auto targets = witness_targets(3);
  REQUIRE(targets.size() == 3);
  CHECK(targets[0] == z2vec(3, 0b000010));  // y1
  CHECK(targets[1] == z2vec(3, 0b000011));  // x1 + y1
  CHECK(targets[2] == z2vec(3, 0b001100));  // x2 + y2

  for (std::uint32_t bits = 1; bits < (1u << 6); ++bits) {
    WitnessCert cert = orbit_witness(3, Z2Vec{3, bits});
    std::string why;
    CHECK(verify_witness(cert, &why));
    CHECK(cert.vector.bits == bits);
  }

  // Tampered target is rejected.
  WitnessCert cert = orbit_witness(3, z2vec(3, 0b111111));
  WitnessCert bad = cert;
  bad.target = z2vec(3, 0b110000);
  CHECK_FALSE(verify_witness(bad));
  bad = cert;
  // Note a D_i would not do here: squared twists act trivially mod 2.  C1
  // moves the all-ones class, so the replay diverges.
  bad.word.push_back("C1");
  CHECK_FALSE(verify_witness(bad));

  nlohmann::json j = to_json(cert);
  WitnessCert back = witness_from_json(j);
  CHECK(back.vector == cert.vector);
  CHECK(back.word == cert.word);
  CHECK(back.target == cert.target);
  CHECK(verify_witness(back));
}
