#pragma once
// GF(2) symplectic linear algebra on H_1 of a closed genus-g surface with
// Z/2 coefficients, in the interleaved basis x1,y1,x2,y2,...,xg,yg.
// Coordinate k (0-based, 0 <= k < 2g) is bit k of a mask; x_i sits at
// coordinate 2(i-1) and y_i at 2(i-1)+1, so (x_i,y_i) are hyperbolic pairs.

#include <cstdint>
#include <string>
#include <vector>

namespace spinmcg {

inline constexpr int kMaxGenus = 8;

// Throws std::invalid_argument unless 1 <= g <= kMaxGenus; returns g.
int checked_genus(int g);

inline int dim2(int g) { return 2 * g; }

// ---------------------------------------------------------------------------
// Vectors over GF(2)

struct Z2Vec {
  int g = 0;
  std::uint32_t bits = 0;  // bit k = coordinate k, 0 <= k < 2g

  bool operator==(const Z2Vec&) const = default;
};

Z2Vec z2vec(int g, std::uint32_t bits);
Z2Vec z2vec_from_coords(int g, const std::vector<int>& coords);  // entries 0/1
std::vector<int> coords(const Z2Vec& v);
std::string to_string(const Z2Vec& v);  // "0,1,1,0"

// Sum (= difference) of vectors; genera must match.
Z2Vec add(const Z2Vec& a, const Z2Vec& b);

// Mod-2 intersection pairing <u,v> = sum_i (u_{x_i} v_{y_i} + u_{y_i} v_{x_i}).
int intersection_mod2(const Z2Vec& u, const Z2Vec& v);

// ---------------------------------------------------------------------------
// Quadratic forms refining the mod-2 intersection pairing

// q(v) is determined by the values on the basis via the polarization rule
// q(u+v) = q(u) + q(v) + <u,v>.  basis_bits stores q on the 2g basis vectors
// (bit k = value on basis vector k).  The reference form q0 has all zeros.
struct QuadForm {
  int g = 0;
  std::uint32_t basis_bits = 0;

  bool operator==(const QuadForm&) const = default;
};

QuadForm q0(int g);
QuadForm form_from_label(int g, const std::vector<int>& label);
std::vector<int> form_label(const QuadForm& q);
std::string to_string(const QuadForm& q);

// Evaluate q on v from the basis values by polarization:
// q(v) = sum_k v_k q(b_k) + sum over coordinate pairs sharing a hyperbolic
// block of v_{x_i} v_{y_i} (cross terms between distinct blocks vanish).
int quad_eval(const QuadForm& q, const Z2Vec& v);

// Arf invariant: sum_i q(x_i) q(y_i).
int arf(const QuadForm& q);

// All forms with the given Arf value, in lexicographic order of their labels
// (label = values on x1,y1,...,xg,yg; first coordinate most significant).
// arf_value of -1 means "all forms".
std::vector<QuadForm> enumerate_forms(int g, int arf_value);

// All v with q(v) = 1, ascending by bit pattern.  For q0 this is Lambda_g.
std::vector<Z2Vec> vectors_with_q1(const QuadForm& q);
std::vector<Z2Vec> lambda_set(int g);  // vectors_with_q1(q0(g))

// ---------------------------------------------------------------------------
// Matrices over GF(2)

// Row-major bitmask rows; rows[r] bit k = entry (r,k).  Matrices act on
// column vectors from the left: (M v)_r = <row r, v>.
struct Z2Matrix {
  int g = 0;
  std::vector<std::uint32_t> rows;

  bool operator==(const Z2Matrix&) const = default;
};

Z2Matrix z2_identity(int g);
Z2Matrix mul(const Z2Matrix& a, const Z2Matrix& b);
Z2Vec apply(const Z2Matrix& m, const Z2Vec& v);
Z2Matrix matrix_from_rows(int g, const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> matrix_rows(const Z2Matrix& m);

// M^T J M = J over GF(2), i.e. <Mu,Mv> = <u,v> for all u,v (checked on basis
// pairs, which suffices by bilinearity).
bool is_symplectic_mod2(const Z2Matrix& m);

// Transvection about a nonzero vector z: v |-> v + <z,v> z.  An involution
// over GF(2).  Throws std::domain_error for z = 0.
Z2Matrix transvection_mod2(const Z2Vec& z);

// Whether symplectic M satisfies q(Mv) = q(v) for all v.  By polarization it
// suffices to check the basis vectors once M is symplectic; that reduction is
// used here.  Throws std::domain_error if M is not symplectic.
bool preserves_form(const Z2Matrix& m, const QuadForm& q);

// The pullback q.M, (q.M)(v) = q(Mv).  For symplectic M this is again a form
// refining the intersection pairing, and q.(MN) = (q.M).N, so it is a right
// action.  Throws std::domain_error if M is not symplectic.
QuadForm compose_form(const QuadForm& q, const Z2Matrix& m);

}  // namespace spinmcg
