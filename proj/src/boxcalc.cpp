#include "spinmcg/boxcalc.hpp"

#include <cassert>
#include <stdexcept>

namespace spinmcg {

namespace {

void check_operand(const IntVec& b) {
  for (Int x : b.c) {
    if (x != 0 && x != 1) {
      throw std::domain_error("box-move operand must have {0,1} entries, got (" +
                              to_string(b) + ")");
    }
  }
}

Int iabs(Int v) { return v < 0 ? -v : v; }

// k minimizing |v - k*d| for d != 0; ties resolved toward a nonnegative
// remainder, then toward smaller |k| (both for determinism).
Int nearest_k(Int v, Int d) {
  Int k0 = v / d;
  Int best = k0;
  Int best_rem = v - checked_mul(k0, d);
  for (Int k : {k0 - 1, k0 + 1}) {
    Int rem = v - checked_mul(k, d);
    bool better = iabs(rem) < iabs(best_rem) ||
                  (iabs(rem) == iabs(best_rem) &&
                   (rem > best_rem || (rem == best_rem && iabs(k) < iabs(best))));
    if (better) {
      best = k;
      best_rem = rem;
    }
  }
  return best;
}

}  // namespace

IntVec box_plus(const IntVec& a, const IntVec& b) {
  check_operand(b);
  Int p = intersection_int(a, b);
  return add(a, scale(checked_mul(2, p), b));
}

IntVec box_minus(const IntVec& a, const IntVec& b) {
  check_operand(b);
  Int p = intersection_int(a, b);
  return add(a, scale(checked_mul(-2, p), b));
}

IntVec apply_move(const IntVec& a, const BoxMove& m) {
  return m.plus ? box_plus(a, m.operand) : box_minus(a, m.operand);
}

IntVec replay_moves(const IntVec& input, const std::vector<BoxMove>& moves) {
  IntVec a = input;
  for (const BoxMove& m : moves) a = apply_move(a, m);
  return a;
}

bool verify_reduction(const ReductionCert& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.kind != "block_reduction" && cert.kind != "delta_reduction") {
    return fail("unknown certificate kind '" + cert.kind + "'");
  }
  if (cert.input.g != cert.g || cert.output.g != cert.g) {
    return fail("certificate genus mismatch");
  }
  for (const BoxMove& m : cert.moves) {
    if (m.operand.g != cert.g) return fail("move operand genus mismatch");
    for (Int x : m.operand.c) {
      if (x != 0 && x != 1) return fail("move operand entries must be 0 or 1");
    }
  }
  IntVec got = replay_moves(cert.input, cert.moves);
  if (!(got == cert.output)) {
    return fail("replay mismatch: moves lead to (" + to_string(got) +
                "), certificate claims (" + to_string(cert.output) + ")");
  }
  return true;
}

namespace {

struct BlockView {
  Int m = 0, n = 0;
  bool active() const { return m != 0 || n != 0; }
  // Gcd-scale value of a reduced block: (p,0) -> p, (0,p) -> p, (p,p) -> p.
  Int value() const { return m != 0 ? m : n; }
};

BlockView block(const IntVec& a, int i) {
  return BlockView{a.c[2 * i], a.c[2 * i + 1]};
}

IntVec unit_operand(int g, std::initializer_list<int> coords) {
  IntVec v{g, std::vector<Int>(2 * g, 0)};
  for (int k : coords) v.c[k] = 1;
  return v;
}

void emit(std::vector<BoxMove>& moves, IntVec& a, bool plus, IntVec operand) {
  BoxMove m{plus, std::move(operand)};
  a = apply_move(a, m);
  moves.push_back(std::move(m));
}

// Phase A: within-block Euclid with operands e_i, f_i.
// [+]e_i: m -> m - 2n;  [-]e_i: m -> m + 2n;
// [+]f_i: n -> n + 2m;  [-]f_i: n -> n - 2m.
void reduce_one_block(IntVec& a, int i, std::vector<BoxMove>& moves) {
  int g = a.g;
  IntVec e = unit_operand(g, {2 * i});
  IntVec f = unit_operand(g, {2 * i + 1});
  for (;;) {
    BlockView b = block(a, i);
    if (b.m == 0 || b.n == 0 || b.m == b.n) return;
    if (b.m == -b.n) {
      emit(moves, a, true, f);  // n -> n + 2m = m, reaching the (p,p) shape
      continue;
    }
    if (iabs(b.m) >= iabs(b.n)) {
      Int k = nearest_k(b.m, checked_mul(2, b.n));  // m' = m - 2kn
      assert(k != 0);
      for (Int s = 0; s < iabs(k); ++s) emit(moves, a, k > 0, e);
    } else {
      Int k = nearest_k(b.n, checked_mul(2, b.m));  // n' = n - 2km
      assert(k != 0);
      for (Int s = 0; s < iabs(k); ++s) emit(moves, a, k < 0, f);
    }
  }
}

// Zero-pairing writer for a reduced block: adding multiples of it shifts the
// block's value without perturbing the pairing readout of the block itself.
IntVec writer_for(const IntVec& a, int i) {
  BlockView b = block(a, i);
  int g = a.g;
  if (b.n == 0) return unit_operand(g, {2 * i});                // (p,0): e_i
  if (b.m == 0) return unit_operand(g, {2 * i + 1});            // (0,p): f_i
  assert(b.m == b.n);
  return unit_operand(g, {2 * i, 2 * i + 1});                   // (p,p): e_i+f_i
}

// Reader for a reduced block: a single basis operand whose pairing with a is
// +-(block value), and which the paired macro move can cleanly undo.
IntVec reader_for(const IntVec& a, int j) {
  BlockView b = block(a, j);
  int g = a.g;
  if (b.m != 0) return unit_operand(g, {2 * j + 1});  // f_j, reads m_j
  return unit_operand(g, {2 * j});                    // e_j, reads -n_j
}

// Two-move macro: value of block i += 2*delta*(a, reader_j); block j and all
// other blocks are unchanged.  Valid for any pair of reduced blocks; the
// operands stay {0,1} because writer and reader live in different blocks.
void pair_macro(IntVec& a, int i, int j, bool plus_first,
                std::vector<BoxMove>& moves) {
  IntVec u = writer_for(a, i);
  IntVec r = reader_for(a, j);
  assert(intersection_int(a, u) == 0);
  IntVec w1 = add(u, r);
  emit(moves, a, plus_first, w1);
  emit(moves, a, !plus_first, r);
}

}  // namespace

ReductionCert reduce_blocks(const IntVec& a) {
  checked_genus(a.g);
  if (!is_primitive(a)) {
    throw std::domain_error("reduce_blocks requires a primitive vector, got (" +
                            to_string(a) + ")");
  }
  ReductionCert cert;
  cert.kind = "block_reduction";
  cert.g = a.g;
  cert.input = a;
  IntVec cur = a;
  for (int i = 0; i < a.g; ++i) reduce_one_block(cur, i, cert.moves);
  cert.output = cur;
  return cert;
}

ReductionCert reduce_to_delta(const IntVec& a) {
  ReductionCert cert = reduce_blocks(a);
  cert.kind = "delta_reduction";
  IntVec cur = cert.output;
  int g = a.g;

  // Phase B: cross-block Euclid.  While some reduced block has |value| >= 2,
  // primitivity guarantees another active block with strictly smaller
  // |value|; pair macros shrink the larger modulo twice the smaller.
  for (;;) {
    int target = -1, reader = -1;
    Int maxval = 0, minval = 0;
    for (int i = 0; i < g; ++i) {
      BlockView b = block(cur, i);
      if (!b.active()) continue;
      if (iabs(b.value()) > iabs(maxval)) {
        maxval = b.value();
        target = i;
      }
    }
    if (iabs(maxval) <= 1) break;
    for (int j = 0; j < g; ++j) {
      if (j == target) continue;
      BlockView b = block(cur, j);
      if (!b.active()) continue;
      if (reader == -1 || iabs(b.value()) < iabs(minval)) {
        minval = b.value();
        reader = j;
      }
    }
    // All-equal magnitudes >= 2 would force gcd >= 2 on a primitive vector.
    assert(reader != -1 && iabs(minval) < iabs(maxval));
    Int readout = intersection_int(cur, reader_for(cur, reader));
    assert(iabs(readout) == iabs(minval));
    Int k = nearest_k(maxval, checked_mul(2, readout));  // value' = value - 2k*readout
    assert(k != 0);
    // A [-]-first macro subtracts 2*readout from the value; [+]-first adds.
    for (Int s = 0; s < iabs(k); ++s) {
      pair_macro(cur, target, reader, k < 0, cert.moves);
    }
  }

  // Phase C: per-block sign/shape normalization to {0,1} entries.
  for (int i = 0; i < g; ++i) {
    BlockView b = block(cur, i);
    IntVec e = unit_operand(g, {2 * i});
    IntVec f = unit_operand(g, {2 * i + 1});
    IntVec ef = unit_operand(g, {2 * i, 2 * i + 1});
    if (b.m == -1 && b.n == -1) {
      emit(cert.moves, cur, true, e);  // (-1,-1) -> (1,-1)
      emit(cert.moves, cur, true, f);  // (1,-1) -> (1,1)
    } else if (b.m == 0 && b.n == -1) {
      emit(cert.moves, cur, true, ef);  // (0,-1) -> (2,1)
      emit(cert.moves, cur, true, e);   // (2,1) -> (0,1)
    } else if (b.m == -1 && b.n == 0) {
      bool only_active = true;
      for (int j = 0; j < g; ++j) {
        if (j != i && block(cur, j).active()) only_active = false;
      }
      if (only_active) {
        // Documented exception: -x_i stays as-is; T_{-a}^2 = T_a^2 makes it
        // interchangeable with x_i as a square transvection.
        continue;
      }
      emit(cert.moves, cur, false, ef);  // (-1,0) -> (1,2)
      emit(cert.moves, cur, false, f);   // (1,2) -> (1,0)
    }
  }

  cert.output = cur;
  // Postcondition: {0,1} entries, except possibly a single surviving -x_i.
  int negatives = 0;
  for (Int x : cur.c) {
    if (x == -1) ++negatives;
    else if (x != 0 && x != 1) throw std::logic_error("delta reduction failed");
  }
  if (negatives > 1) throw std::logic_error("delta reduction failed");
  assert(mod2(cur) == mod2(a));
  return cert;
}

IntMatrix conjugator(const std::vector<BoxMove>& moves, int g) {
  IntMatrix u = int_identity(g);
  for (const BoxMove& m : moves) {
    IntMatrix t2 = square_transvection(m.operand);  // operands are delta vectors
    if (!m.plus) {
      // T_b^-2: negate the rank-one update by replaying it with -b readout.
      IntMatrix inv = int_identity(g);
      int n = 2 * g;
      for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
          if (r == k) continue;
          inv.at(r, k) = checked_sub(0, t2.at(r, k));
        }
        inv.at(r, r) = checked_sub(2, t2.at(r, r));
      }
      t2 = inv;
    }
    u = mul(u, t2);
  }
  return u;
}

SqtvFactorization factor_square_transvection(const IntVec& a) {
  SqtvFactorization f;
  f.reduction = reduce_to_delta(a);
  f.core = f.reduction.output;
  std::string why;
  if (!verify_factorization(f, &why)) {
    throw std::logic_error("square transvection factorization failed: " + why);
  }
  return f;
}

bool verify_factorization(const SqtvFactorization& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.reduction.kind != "delta_reduction") {
    return fail("factorization must carry a delta_reduction certificate");
  }
  if (!verify_reduction(f.reduction, why)) return false;
  if (!(f.core == f.reduction.output)) {
    return fail("core vector differs from the reduction output");
  }
  int negatives = 0;
  for (Int x : f.core.c) {
    if (x == -1) ++negatives;
    else if (x != 0 && x != 1) return fail("core vector is not a delta vector");
  }
  if (negatives > 1) return fail("core vector is not a delta vector");
  IntMatrix u = conjugator(f.reduction.moves, f.reduction.g);
  IntMatrix lhs = mul(square_transvection(f.reduction.input), u);
  IntMatrix rhs = mul(u, square_transvection(f.core));
  if (!(lhs == rhs)) return fail("T_a^2 U != U T_core^2");
  return true;
}

}  // namespace spinmcg
