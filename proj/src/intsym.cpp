#include "spinmcg/intsym.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinmcg {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in subtraction");
  }
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return r;
}

namespace {

void check_same_genus(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": genus mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

IntVec intvec(int g, std::vector<Int> coords) {
  checked_genus(g);
  if (static_cast<int>(coords.size()) != 2 * g) {
    throw std::invalid_argument("vector needs exactly 2g = " +
                                std::to_string(2 * g) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  return IntVec{g, std::move(coords)};
}

IntVec basis_vector_int(int g, int k) {
  checked_genus(g);
  if (k < 0 || k >= 2 * g) throw std::invalid_argument("basis index out of range");
  IntVec v{g, std::vector<Int>(2 * g, 0)};
  v.c[k] = 1;
  return v;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  for (int k = 0; k < 2 * v.g; ++k) {
    if (k) os << ',';
    os << v.c[k];
  }
  return os.str();
}

IntVec add(const IntVec& a, const IntVec& b) {
  check_same_genus(a.g, b.g, "add");
  IntVec r{a.g, std::vector<Int>(2 * a.g)};
  for (int k = 0; k < 2 * a.g; ++k) r.c[k] = checked_add(a.c[k], b.c[k]);
  return r;
}

IntVec scale(Int s, const IntVec& a) {
  IntVec r{a.g, std::vector<Int>(2 * a.g)};
  for (int k = 0; k < 2 * a.g; ++k) r.c[k] = checked_mul(s, a.c[k]);
  return r;
}

Z2Vec mod2(const IntVec& v) {
  std::uint32_t bits = 0;
  for (int k = 0; k < 2 * v.g; ++k) {
    bits |= std::uint32_t(v.c[k] & 1) << k;
  }
  return Z2Vec{v.g, bits};
}

Int intersection_int(const IntVec& u, const IntVec& v) {
  check_same_genus(u.g, v.g, "intersection_int");
  Int acc = 0;
  for (int i = 0; i < u.g; ++i) {
    acc = checked_add(acc, checked_mul(u.c[2 * i], v.c[2 * i + 1]));
    acc = checked_sub(acc, checked_mul(u.c[2 * i + 1], v.c[2 * i]));
  }
  return acc;
}

bool is_primitive(const IntVec& v) {
  Int d = 0;
  for (Int x : v.c) {
    Int ax = x < 0 ? -x : x;  // |INT64_MIN| would overflow, but inputs that
                              // large cannot arise from checked arithmetic
                              // starting at small coordinates
    d = std::gcd(d, ax);
  }
  return d == 1;
}

IntMatrix int_identity(int g) {
  checked_genus(g);
  IntMatrix m{g, std::vector<Int>(static_cast<std::size_t>(2 * g) * 2 * g, 0)};
  for (int r = 0; r < 2 * g; ++r) m.at(r, r) = 1;
  return m;
}

IntMatrix neg(const IntMatrix& m) {
  IntMatrix r = m;
  for (Int& x : r.a) x = checked_sub(0, x);
  return r;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  check_same_genus(a.g, b.g, "mul");
  int n = 2 * a.g;
  IntMatrix c{a.g, std::vector<Int>(static_cast<std::size_t>(n) * n, 0)};
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      Int arj = a.at(r, j);
      if (arj == 0) continue;
      for (int k = 0; k < n; ++k) {
        c.at(r, k) = checked_add(c.at(r, k), checked_mul(arj, b.at(j, k)));
      }
    }
  }
  return c;
}

IntVec apply(const IntMatrix& m, const IntVec& v) {
  check_same_genus(m.g, v.g, "apply");
  int n = 2 * m.g;
  IntVec r{m.g, std::vector<Int>(n, 0)};
  for (int row = 0; row < n; ++row) {
    Int acc = 0;
    for (int k = 0; k < n; ++k) {
      acc = checked_add(acc, checked_mul(m.at(row, k), v.c[k]));
    }
    r.c[row] = acc;
  }
  return r;
}

Z2Matrix mod2(const IntMatrix& m) {
  Z2Matrix r{m.g, std::vector<std::uint32_t>(2 * m.g, 0)};
  for (int row = 0; row < 2 * m.g; ++row) {
    std::uint32_t bits = 0;
    for (int k = 0; k < 2 * m.g; ++k) {
      bits |= std::uint32_t(m.at(row, k) & 1) << k;
    }
    r.rows[row] = bits;
  }
  return r;
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
  int n = 2 * m.g;
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) rows[r][k] = m.at(r, k);
  }
  return rows;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  int n = 2 * m.g;
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      if (k) os << ' ';
      os << m.at(r, k);
    }
    os << '\n';
  }
  return os.str();
}

bool is_symplectic_int(const IntMatrix& m) {
  int n = 2 * m.g;
  if (static_cast<int>(m.a.size()) != n * n) return false;
  std::vector<IntVec> col(n);
  for (int k = 0; k < n; ++k) col[k] = apply(m, basis_vector_int(m.g, k));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Int expect = (k == j + 1 && j % 2 == 0) ? 1 : 0;
      if (intersection_int(col[j], col[k]) != expect) return false;
    }
  }
  return true;
}

namespace {

// I + s * a (a, .): columns are T(e_k) = e_k + s (a, e_k) a.
IntMatrix transvection_power(const IntVec& a, Int s) {
  int n = 2 * a.g;
  IntMatrix m = int_identity(a.g);
  for (int k = 0; k < n; ++k) {
    Int w = intersection_int(a, basis_vector_int(a.g, k));
    if (w == 0) continue;
    Int sw = checked_mul(s, w);
    for (int r = 0; r < n; ++r) {
      m.at(r, k) = checked_add(m.at(r, k), checked_mul(sw, a.c[r]));
    }
  }
  return m;
}

bool is_zero(const IntVec& v) {
  for (Int x : v.c) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

IntMatrix transvection_int(const IntVec& a) {
  if (is_zero(a)) throw std::domain_error("transvection about the zero vector");
  return transvection_power(a, 1);
}

IntMatrix transvection_int_inverse(const IntVec& a) {
  if (is_zero(a)) throw std::domain_error("transvection about the zero vector");
  return transvection_power(a, -1);
}

IntMatrix square_transvection(const IntVec& a) {
  if (!is_primitive(a)) {
    throw std::domain_error("square_transvection requires a primitive vector, got (" +
                            to_string(a) + ")");
  }
  return transvection_power(a, 2);
}

}  // namespace spinmcg
