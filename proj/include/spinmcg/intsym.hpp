#pragma once
// Exact integer symplectic linear algebra on H_1 of a closed genus-g surface,
// interleaved basis x1,y1,...,xg,yg (same coordinate layout as the mod-2
// layer).  All arithmetic is overflow-checked int64; overflow throws
// std::overflow_error instead of wrapping.

#include <cstdint>
#include <string>
#include <vector>

#include "spinmcg/z2.hpp"

namespace spinmcg {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

struct IntVec {
  int g = 0;
  std::vector<Int> c;  // size 2g

  bool operator==(const IntVec&) const = default;
};

IntVec intvec(int g, std::vector<Int> coords);
IntVec basis_vector_int(int g, int k);  // e_k
std::string to_string(const IntVec& v);  // "5,2,0,0"
IntVec add(const IntVec& a, const IntVec& b);
IntVec scale(Int s, const IntVec& a);
Z2Vec mod2(const IntVec& v);

// Algebraic intersection pairing (u,v) = sum_i (u_{x_i} v_{y_i} - u_{y_i} v_{x_i}).
Int intersection_int(const IntVec& u, const IntVec& v);

// gcd of the coordinates is 1 (the zero vector is not primitive).
bool is_primitive(const IntVec& v);

struct IntMatrix {
  int g = 0;
  std::vector<Int> a;  // row-major, size (2g)^2

  Int at(int r, int k) const { return a[static_cast<std::size_t>(r) * 2 * g + k]; }
  Int& at(int r, int k) { return a[static_cast<std::size_t>(r) * 2 * g + k]; }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix int_identity(int g);
IntMatrix neg(const IntMatrix& m);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntVec apply(const IntMatrix& m, const IntVec& v);
Z2Matrix mod2(const IntMatrix& m);
std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m);
std::string to_string(const IntMatrix& m);  // one row per line

// M^T J M = J over Z, i.e. (Mu, Mv) = (u, v) for all basis pairs.
bool is_symplectic_int(const IntMatrix& m);

// Transvection (Dehn-twist action) about a nonzero class a:
// T_a(v) = v + (a,v) a, with inverse v |-> v - (a,v) a.  Both symplectic.
IntMatrix transvection_int(const IntVec& a);
IntMatrix transvection_int_inverse(const IntVec& a);

// T_a^2(v) = v + 2 (a,v) a.  Requires a primitive (throws std::domain_error
// otherwise).  Satisfies T_{-a}^2 = T_a^2, so the matrix depends only on the
// class up to sign.
IntMatrix square_transvection(const IntVec& a);

}  // namespace spinmcg
