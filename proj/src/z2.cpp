#include "spinmcg/z2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace spinmcg {

int checked_genus(int g) {
  if (g < 1 || g > kMaxGenus) {
    throw std::invalid_argument("genus must be between 1 and " +
                                std::to_string(kMaxGenus) + ", got " +
                                std::to_string(g));
  }
  return g;
}

namespace {

std::uint32_t mask2g(int g) { return (std::uint32_t{1} << (2 * g)) - 1; }

void check_same_genus(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": genus mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

// Swap the two coordinates of every hyperbolic block: x_i <-> y_i.
std::uint32_t pair_swap(std::uint32_t bits) {
  constexpr std::uint32_t even = 0x55555555u;  // bits 0,2,4,...
  return ((bits & even) << 1) | ((bits >> 1) & even);
}

}  // namespace

Z2Vec z2vec(int g, std::uint32_t bits) {
  checked_genus(g);
  if (bits & ~mask2g(g)) {
    throw std::invalid_argument("vector has bits beyond coordinate 2g");
  }
  return Z2Vec{g, bits};
}

Z2Vec z2vec_from_coords(int g, const std::vector<int>& c) {
  checked_genus(g);
  if (static_cast<int>(c.size()) != 2 * g) {
    throw std::invalid_argument("vector needs exactly 2g = " +
                                std::to_string(2 * g) + " coordinates, got " +
                                std::to_string(c.size()));
  }
  std::uint32_t bits = 0;
  for (int k = 0; k < 2 * g; ++k) {
    if (c[k] != 0 && c[k] != 1) {
      throw std::invalid_argument("mod-2 coordinate must be 0 or 1, got " +
                                  std::to_string(c[k]));
    }
    bits |= std::uint32_t(c[k]) << k;
  }
  return Z2Vec{g, bits};
}

std::vector<int> coords(const Z2Vec& v) {
  std::vector<int> c(2 * v.g);
  for (int k = 0; k < 2 * v.g; ++k) c[k] = (v.bits >> k) & 1;
  return c;
}

std::string to_string(const Z2Vec& v) {
  std::ostringstream os;
  for (int k = 0; k < 2 * v.g; ++k) {
    if (k) os << ',';
    os << ((v.bits >> k) & 1);
  }
  return os.str();
}

Z2Vec add(const Z2Vec& a, const Z2Vec& b) {
  check_same_genus(a.g, b.g, "add");
  return Z2Vec{a.g, a.bits ^ b.bits};
}

int intersection_mod2(const Z2Vec& u, const Z2Vec& v) {
  check_same_genus(u.g, v.g, "intersection_mod2");
  return std::popcount(u.bits & pair_swap(v.bits)) & 1;
}

QuadForm q0(int g) {
  checked_genus(g);
  return QuadForm{g, 0};
}

QuadForm form_from_label(int g, const std::vector<int>& label) {
  Z2Vec v = z2vec_from_coords(g, label);
  return QuadForm{g, v.bits};
}

std::vector<int> form_label(const QuadForm& q) {
  return coords(Z2Vec{q.g, q.basis_bits});
}

std::string to_string(const QuadForm& q) {
  return to_string(Z2Vec{q.g, q.basis_bits});
}

int quad_eval(const QuadForm& q, const Z2Vec& v) {
  check_same_genus(q.g, v.g, "quad_eval");
  // Linear part from the basis values, plus one cross term per hyperbolic
  // block (expanding q(sum v_k b_k) by polarization; <b_j,b_k> = 1 exactly
  // for partners within a block).
  int linear = std::popcount(q.basis_bits & v.bits) & 1;
  std::uint32_t cross = v.bits & (v.bits >> 1) & 0x55555555u;
  return linear ^ (std::popcount(cross) & 1);
}

int arf(const QuadForm& q) {
  std::uint32_t prod = q.basis_bits & (q.basis_bits >> 1) & 0x55555555u;
  return std::popcount(prod) & 1;
}

std::vector<QuadForm> enumerate_forms(int g, int arf_value) {
  checked_genus(g);
  if (arf_value < -1 || arf_value > 1) {
    throw std::invalid_argument("arf value must be 0 or 1");
  }
  std::vector<QuadForm> out;
  int n = 2 * g;
  // Lexicographic order of labels with the first coordinate most
  // significant: the counter's low bit holds the last coordinate.
  for (std::uint32_t counter = 0; counter < (std::uint32_t{1} << n); ++counter) {
    std::uint32_t bits = 0;
    for (int k = 0; k < n; ++k) {
      bits |= ((counter >> (n - 1 - k)) & 1u) << k;
    }
    QuadForm q{g, bits};
    if (arf_value == -1 || arf(q) == arf_value) out.push_back(q);
  }
  return out;
}

std::vector<Z2Vec> vectors_with_q1(const QuadForm& q) {
  std::vector<Z2Vec> out;
  for (std::uint32_t bits = 0; bits <= mask2g(q.g); ++bits) {
    Z2Vec v{q.g, bits};
    if (quad_eval(q, v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Z2Vec> lambda_set(int g) { return vectors_with_q1(q0(g)); }

Z2Matrix z2_identity(int g) {
  checked_genus(g);
  Z2Matrix m{g, std::vector<std::uint32_t>(2 * g, 0)};
  for (int r = 0; r < 2 * g; ++r) m.rows[r] = std::uint32_t{1} << r;
  return m;
}

Z2Matrix mul(const Z2Matrix& a, const Z2Matrix& b) {
  check_same_genus(a.g, b.g, "mul");
  Z2Matrix c{a.g, std::vector<std::uint32_t>(2 * a.g, 0)};
  for (int r = 0; r < 2 * a.g; ++r) {
    std::uint32_t acc = 0;
    std::uint32_t row = a.rows[r];
    while (row) {
      acc ^= b.rows[std::countr_zero(row)];
      row &= row - 1;
    }
    c.rows[r] = acc;
  }
  return c;
}

Z2Vec apply(const Z2Matrix& m, const Z2Vec& v) {
  check_same_genus(m.g, v.g, "apply");
  std::uint32_t out = 0;
  for (int r = 0; r < 2 * m.g; ++r) {
    out |= std::uint32_t(std::popcount(m.rows[r] & v.bits) & 1) << r;
  }
  return Z2Vec{m.g, out};
}

Z2Matrix matrix_from_rows(int g, const std::vector<std::vector<int>>& rows) {
  checked_genus(g);
  if (static_cast<int>(rows.size()) != 2 * g) {
    throw std::invalid_argument("matrix needs 2g rows");
  }
  Z2Matrix m{g, std::vector<std::uint32_t>(2 * g, 0)};
  for (int r = 0; r < 2 * g; ++r) {
    m.rows[r] = z2vec_from_coords(g, rows[r]).bits;
  }
  return m;
}

std::vector<std::vector<int>> matrix_rows(const Z2Matrix& m) {
  std::vector<std::vector<int>> rows;
  rows.reserve(2 * m.g);
  for (int r = 0; r < 2 * m.g; ++r) rows.push_back(coords(Z2Vec{m.g, m.rows[r]}));
  return rows;
}

bool is_symplectic_mod2(const Z2Matrix& m) {
  if (static_cast<int>(m.rows.size()) != 2 * m.g) return false;
  // Columns of M are the images of the basis vectors; check all pairings.
  std::vector<Z2Vec> col(2 * m.g);
  for (int k = 0; k < 2 * m.g; ++k) {
    col[k] = apply(m, Z2Vec{m.g, std::uint32_t{1} << k});
  }
  for (int j = 0; j < 2 * m.g; ++j) {
    for (int k = j + 1; k < 2 * m.g; ++k) {
      int expect = (k == j + 1 && j % 2 == 0) ? 1 : 0;
      if (intersection_mod2(col[j], col[k]) != expect) return false;
    }
  }
  return true;
}

Z2Matrix transvection_mod2(const Z2Vec& z) {
  checked_genus(z.g);
  if (z.bits == 0) {
    throw std::domain_error("transvection about the zero vector");
  }
  // v |-> v + <z,v> z.  <z, e_k> = z at the partner coordinate of k, so the
  // update row mask is pair_swap(z).
  Z2Matrix m = z2_identity(z.g);
  std::uint32_t w = pair_swap(z.bits);
  for (int r = 0; r < 2 * z.g; ++r) {
    if ((z.bits >> r) & 1) m.rows[r] ^= w;
  }
  return m;
}

bool preserves_form(const Z2Matrix& m, const QuadForm& q) {
  check_same_genus(m.g, q.g, "preserves_form");
  if (!is_symplectic_mod2(m)) {
    throw std::domain_error(
        "preserves_form requires a symplectic matrix; the basis-vector check "
        "is only sufficient under the polarization identity");
  }
  for (int k = 0; k < 2 * m.g; ++k) {
    Z2Vec e{m.g, std::uint32_t{1} << k};
    if (quad_eval(q, apply(m, e)) != quad_eval(q, e)) return false;
  }
  return true;
}

QuadForm compose_form(const QuadForm& q, const Z2Matrix& m) {
  check_same_genus(q.g, m.g, "compose_form");
  if (!is_symplectic_mod2(m)) {
    throw std::domain_error("compose_form requires a symplectic matrix");
  }
  std::uint32_t bits = 0;
  for (int k = 0; k < 2 * m.g; ++k) {
    Z2Vec e{m.g, std::uint32_t{1} << k};
    bits |= std::uint32_t(quad_eval(q, apply(m, e))) << k;
  }
  return QuadForm{q.g, bits};
}

}  // namespace spinmcg
