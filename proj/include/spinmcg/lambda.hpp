#pragma once
// Mod-2 conjugation calculus on Lambda_g = { z : q0(z) = 1 }.  The square
// move z1 [sq] z2 = z1 + <z2,z1> z2 realizes conjugation of orthogonal
// transvections: Tv_{z2} Tv_{z1} Tv_{z2}^-1 = Tv_{z1 [sq] z2}.  Reducing any
// z in Lambda_g to one of the 3g-2 standard generators factors Tv_z — and by
// column stabilization any element of O(q0) — into generator transvections.

#include <string>
#include <vector>

#include "spinmcg/words.hpp"
#include "spinmcg/z2.hpp"

namespace spinmcg {

// z1 [sq] z2.  Requires q0(z2) = 1 (the operand must be a transvection
// direction in the orthogonal group); preserves q0(z1).
Z2Vec square_op(const Z2Vec& z1, const Z2Vec& z2);

// The standard generators of Lambda_g under [sq]:
//   x_i + y_i               (i = 1..g)
//   x_i + y_i + x_{i+1}     (i = 1..g-1)
//   x_i + x_{i+1} + y_{i+1} (i = 1..g-1)
std::vector<Z2Vec> lambda_generators(int g);
bool is_lambda_generator(const Z2Vec& v);

struct SquareMove {
  Z2Vec operand;

  bool operator==(const SquareMove&) const = default;
};

// Certificate: output == input folded through the moves; every operand is a
// standard generator; output is a standard generator.
struct LambdaCert {
  int g = 0;
  Z2Vec input;
  std::vector<SquareMove> moves;
  Z2Vec output;

  bool operator==(const LambdaCert&) const = default;
};

Z2Vec replay_square_moves(const Z2Vec& input, const std::vector<SquareMove>& moves);
bool verify_lambda_cert(const LambdaCert& cert, std::string* why = nullptr);

// Reduce z in Lambda_g to a standard generator (always x_1+y_1 or
// x_1+y_1+x_2) using only standard-generator operands.
LambdaCert lambda_reduce(const Z2Vec& z);

// Factor M in O(q0) as Tv_{z_1} ... Tv_{z_m} (product in returned order, the
// rightmost factor acting first) with z_i in Lambda_g, by fixing the basis
// columns one at a time.  Falls back to a BFS with parent pointers over the
// whole group for g <= 3 if stabilization stalls.  Throws std::domain_error
// if M does not preserve q0.
std::vector<Z2Vec> factor_into_z2_transvections(const Z2Matrix& m);

// The same, with every raw transvection direction further reduced so that
// all factors are standard generators.
struct OrthFactorization {
  int g = 0;
  Z2Matrix input;
  std::vector<Z2Vec> raw;      // unrestricted Lambda directions
  std::vector<Z2Vec> factors;  // standard generators only
};

OrthFactorization factor_orthogonal(const Z2Matrix& m);
bool verify_orth_factorization(const OrthFactorization& f, std::string* why = nullptr);

// Witness word moving a nonzero mod-2 class to one of the standard targets
// y_1, x_1+y_1, x_2+y_2 under the mod-2 action of the genus-g generating
// set (g >= 3).  The word lists generator names, rightmost acting first.
struct WitnessCert {
  int g = 0;
  Z2Vec vector;
  std::vector<std::string> word;
  Z2Vec target;
};

std::vector<Z2Vec> witness_targets(int g);
WitnessCert orbit_witness(int g, const Z2Vec& v);
bool verify_witness(const WitnessCert& cert, std::string* why = nullptr);

}  // namespace spinmcg
