#pragma once
// Box-move calculus on primitive integral homology classes.  The moves
//   a [+] b = a + 2 (a,b) b     (realized by the square transvection T_b^-2)
//   a [-] b = a - 2 (a,b) b     (realized by T_b^2)
// with operands b restricted to {0,1}-vectors reduce any primitive class to a
// standard delta vector, giving a factorization of T_a^2 as a conjugate of a
// standard square transvection.  Every step is recorded in a replayable
// certificate.

#include <string>
#include <vector>

#include "spinmcg/intsym.hpp"

namespace spinmcg {

struct BoxMove {
  bool plus = true;  // true = [+], false = [-]
  IntVec operand;    // entries in {0,1}

  bool operator==(const BoxMove&) const = default;
};

IntVec box_plus(const IntVec& a, const IntVec& b);
IntVec box_minus(const IntVec& a, const IntVec& b);
IntVec apply_move(const IntVec& a, const BoxMove& m);
IntVec replay_moves(const IntVec& input, const std::vector<BoxMove>& moves);

// Certificate for a box-move reduction: output == replay of moves on input.
struct ReductionCert {
  std::string kind;  // "block_reduction" or "delta_reduction"
  int g = 0;
  IntVec input;
  std::vector<BoxMove> moves;
  IntVec output;

  bool operator==(const ReductionCert&) const = default;
};

// Replays the certificate; returns false (with a reason in *why if non-null)
// on any inconsistency: wrong genus, non-{0,1} operands, or output mismatch.
bool verify_reduction(const ReductionCert& cert, std::string* why = nullptr);

// Per-block Euclid with operands e_i, f_i only: drives every hyperbolic block
// (m, n) of a primitive vector to one of (0,0), (p,0), (0,p), (p,p).
// The gcd p of a block keeps whatever sign the Euclid steps leave.
ReductionCert reduce_blocks(const IntVec& a);

// Full reduction of a primitive vector to a {0,1} delta vector using
// arbitrary {0,1} operands, with one documented exception: when the final
// active block is (-1, 0) and every other block is zero, the vector
// -x_i is returned as-is, since T_{-a}^2 = T_a^2 makes it equivalent to x_i
// as a square transvection.
ReductionCert reduce_to_delta(const IntVec& a);

// T_a^2 = U T_core^2 U^-1 where U is the product, in move order, of
// T_b^(+2) for each [+] move and T_b^(-2) for each [-] move: a [+] b is the
// image of a under T_b^-2, so T^2_{a[+]b} = T_b^-2 T_a^2 T_b^2, and solving
// for T_a^2 contributes T_b^(+2) on the left.
struct SqtvFactorization {
  ReductionCert reduction;  // kind "delta_reduction"
  IntVec core;              // the reduced vector
};

SqtvFactorization factor_square_transvection(const IntVec& a);

// The conjugator U above.
IntMatrix conjugator(const std::vector<BoxMove>& moves, int g);

// Exact matrix check: square_transvection(input) == U * square_transvection(core) * U^-1.
bool verify_factorization(const SqtvFactorization& f, std::string* why = nullptr);

}  // namespace spinmcg
