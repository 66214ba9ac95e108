#include "spinmcg/lambda.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

namespace spinmcg {

Z2Vec square_op(const Z2Vec& z1, const Z2Vec& z2) {
  if (quad_eval(q0(z2.g), z2) != 1) {
    throw std::domain_error("square-move operand must satisfy q0 = 1, got (" +
                            to_string(z2) + ")");
  }
  if (intersection_mod2(z2, z1) == 0) return z1;
  return add(z1, z2);
}

std::vector<Z2Vec> lambda_generators(int g) {
  checked_genus(g);
  std::vector<Z2Vec> out;
  auto bit = [](int k) { return std::uint32_t{1} << k; };
  for (int i = 0; i < g; ++i) {
    out.push_back(Z2Vec{g, bit(2 * i) | bit(2 * i + 1)});  // x_i + y_i
  }
  for (int i = 0; i + 1 < g; ++i) {
    out.push_back(Z2Vec{g, bit(2 * i) | bit(2 * i + 1) | bit(2 * i + 2)});
  }
  for (int i = 0; i + 1 < g; ++i) {
    out.push_back(Z2Vec{g, bit(2 * i) | bit(2 * i + 2) | bit(2 * i + 3)});
  }
  return out;
}

bool is_lambda_generator(const Z2Vec& v) {
  for (const Z2Vec& gen : lambda_generators(v.g)) {
    if (gen == v) return true;
  }
  return false;
}

Z2Vec replay_square_moves(const Z2Vec& input, const std::vector<SquareMove>& moves) {
  Z2Vec z = input;
  for (const SquareMove& m : moves) z = square_op(z, m.operand);
  return z;
}

bool verify_lambda_cert(const LambdaCert& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.input.g != cert.g || cert.output.g != cert.g) {
    return fail("certificate genus mismatch");
  }
  if (quad_eval(q0(cert.g), cert.input) != 1) {
    return fail("input is not in Lambda_g");
  }
  for (const SquareMove& m : cert.moves) {
    if (m.operand.g != cert.g || !is_lambda_generator(m.operand)) {
      return fail("move operand (" + to_string(m.operand) +
                  ") is not a standard generator");
    }
  }
  if (!is_lambda_generator(cert.output)) {
    return fail("output is not a standard generator");
  }
  Z2Vec got = replay_square_moves(cert.input, cert.moves);
  if (!(got == cert.output)) {
    return fail("replay mismatch: moves lead to (" + to_string(got) +
                "), certificate claims (" + to_string(cert.output) + ")");
  }
  return true;
}

namespace {

// Block i of z (0-based): pair (z_{x_i}, z_{y_i}) as a 2-bit value m | n<<1.
int block_bits(const Z2Vec& z, int i) { return (z.bits >> (2 * i)) & 3; }

struct Reducer {
  int g;
  Z2Vec z;
  std::vector<SquareMove> moves;

  Z2Vec gen_a(int i) const {  // x_i + y_i (0-based block i)
    return Z2Vec{g, std::uint32_t{3} << (2 * i)};
  }
  Z2Vec gen_b(int i) const {  // x_i + y_i + x_{i+1}
    return Z2Vec{g, (std::uint32_t{3} << (2 * i)) | (std::uint32_t{1} << (2 * i + 2))};
  }
  Z2Vec gen_c(int i) const {  // x_i + x_{i+1} + y_{i+1}
    return Z2Vec{g, (std::uint32_t{1} << (2 * i)) | (std::uint32_t{3} << (2 * i + 2))};
  }

  void apply(const Z2Vec& w) {
    z = square_op(z, w);
    moves.push_back(SquareMove{w});
  }

  int rightmost_full_block() const {  // largest i with block = (1,1), or -1
    for (int i = g - 1; i >= 0; --i) {
      if (block_bits(z, i) == 3) return i;
    }
    return -1;
  }
};

}  // namespace

LambdaCert lambda_reduce(const Z2Vec& z) {
  checked_genus(z.g);
  if (quad_eval(q0(z.g), z) != 1) {
    throw std::domain_error("lambda_reduce requires q0(z) = 1, got (" +
                            to_string(z) + ")");
  }
  Reducer r{z.g, z, {}};

  // Phase 1: q0(z) counts (1,1) blocks mod 2, so a rightmost full block j
  // exists; drive it to block 0.  Each case acts only on blocks j-1, j and
  // strictly decreases j.
  for (;;) {
    int j = r.rightmost_full_block();
    assert(j >= 0);
    if (j == 0) break;
    switch (block_bits(r.z, j - 1)) {
      case 0:  // (00|11) --b_{j-1}--> (11|01)
        r.apply(r.gen_b(j - 1));
        break;
      case 1:  // (10|11) --a_{j-1}--> (01|11) --c_{j-1}--> (11|00)
        r.apply(r.gen_a(j - 1));
        r.apply(r.gen_c(j - 1));
        break;
      case 2:  // (01|11) --c_{j-1}--> (11|00)
        r.apply(r.gen_c(j - 1));
        break;
      case 3:  // (11|11) --c_{j-1}--> (01|00); parity keeps a full block left
        r.apply(r.gen_c(j - 1));
        break;
    }
    assert(r.rightmost_full_block() < j);
  }

  // Phase 2: block 0 is (1,1); blocks 1..g-1 lie in {00,10,01}.  Convert
  // (01) to (10), then sweep the rightmost (10) leftward: into an empty
  // left neighbor by a 4-move shuffle, into a (10) neighbor by a 2-move
  // cancellation.  Ends at x_1+y_1 or x_1+y_1+x_2.
  for (int i = 1; i < r.g; ++i) {
    if (block_bits(r.z, i) == 2) r.apply(r.gen_a(i));  // (01) -> (10)
  }
  for (;;) {
    int hi = -1;
    for (int i = r.g - 1; i >= 1; --i) {
      if (block_bits(r.z, i) == 1) {
        hi = i;
        break;
      }
    }
    if (hi <= 1) break;  // nothing beyond block 1 remains
    if (block_bits(r.z, hi - 1) == 0) {
      // (00|10) --c--> (10|01) --a--> (10|10) --b--> (01|00) --a--> (10|00)
      r.apply(r.gen_c(hi - 1));
      r.apply(r.gen_a(hi));
      r.apply(r.gen_b(hi - 1));
      r.apply(r.gen_a(hi - 1));
    } else {
      // (10|10) --b--> (01|00) --a--> (10|00)
      assert(block_bits(r.z, hi - 1) == 1);
      r.apply(r.gen_b(hi - 1));
      r.apply(r.gen_a(hi - 1));
    }
  }

  LambdaCert cert{z.g, z, std::move(r.moves), r.z};
  std::string why;
  if (!verify_lambda_cert(cert, &why)) {
    throw std::logic_error("lambda_reduce produced an invalid certificate: " + why);
  }
  return cert;
}

namespace {

void check_orthogonal(const Z2Matrix& m) {
  if (!is_symplectic_mod2(m) || !preserves_form(m, q0(m.g))) {
    throw std::domain_error("matrix is not in the orthogonal group of q0");
  }
}

// BFS with parent pointers over O(q0), used when column stabilization stalls.
std::vector<Z2Vec> factor_by_bfs(const Z2Matrix& target) {
  int g = target.g;
  if (g > 3) {
    throw std::runtime_error(
        "transvection factorization stalled and the BFS fallback is limited "
        "to g <= 3");
  }
  std::vector<Z2Vec> lambda = lambda_set(g);
  std::vector<Z2Matrix> gens;
  gens.reserve(lambda.size());
  for (const Z2Vec& v : lambda) gens.push_back(transvection_mod2(v));

  Z2Matrix id = z2_identity(g);
  std::map<std::vector<std::uint32_t>, std::pair<std::vector<std::uint32_t>, int>> parent;
  parent[id.rows] = {id.rows, -1};
  std::deque<Z2Matrix> frontier{id};
  while (!frontier.empty()) {
    Z2Matrix cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur == target) break;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Z2Matrix next = mul(gens[k], cur);
      if (parent.emplace(next.rows, std::make_pair(cur.rows, int(k))).second) {
        frontier.push_back(std::move(next));
      }
    }
  }
  auto it = parent.find(target.rows);
  if (it == parent.end()) {
    // The search exhausted the subgroup generated by the transvections
    // without meeting the target.  In dimension 4 that subgroup has index 2
    // in the full stabilizer of q0, so this is a real (and expected)
    // possibility, not an internal failure.
    throw std::domain_error(
        "matrix preserves the form but is not a product of its "
        "transvections (in dimension 4 they generate an index-2 subgroup)");
  }
  // target = Tv(z_last) * ... * Tv(z_first) * I; returned order has the
  // rightmost factor acting first, i.e. reversed discovery order.
  std::vector<Z2Vec> out;
  std::vector<std::uint32_t> cur = target.rows;
  while (parent[cur].second != -1) {
    out.push_back(lambda[static_cast<std::size_t>(parent[cur].second)]);
    cur = parent[cur].first;
  }
  return out;
}

}  // namespace

std::vector<Z2Vec> factor_into_z2_transvections(const Z2Matrix& m) {
  check_orthogonal(m);
  int g = m.g;
  QuadForm q = q0(g);
  std::vector<Z2Vec> applied;  // transvections applied on the left, in order
  Z2Matrix cur = m;
  bool stalled = false;

  for (int k = 0; k < 2 * g && !stalled; ++k) {
    Z2Vec b{g, std::uint32_t{1} << k};
    Z2Vec u = apply(cur, b);
    if (u == b) continue;
    if (intersection_mod2(u, b) == 1) {
      // Tv_{u+b} swaps u and b; q0(u+b) = q0(u)+q0(b)+<u,b> = 1 automatically,
      // and u+b pairs to zero with every already-fixed basis vector.
      Z2Vec zdir = add(u, b);
      cur = mul(transvection_mod2(zdir), cur);
      applied.push_back(zdir);
      continue;
    }
    // <u,b> = 0: route through w with <u,w> = <w,b> = 1, q0(w) = q0(b), and
    // <w,e> = <b,e> for every already-fixed basis vector e, so both steps
    // leave the fixed columns alone.
    bool found = false;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << (2 * g)); ++bits) {
      Z2Vec w{g, bits};
      if (quad_eval(q, w) != quad_eval(q, b)) continue;
      if (intersection_mod2(u, w) != 1 || intersection_mod2(w, b) != 1) continue;
      bool ok = true;
      for (int j = 0; j < k; ++j) {
        Z2Vec e{g, std::uint32_t{1} << j};
        if (intersection_mod2(w, e) != intersection_mod2(b, e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Z2Vec z1 = add(u, w), z2 = add(w, b);
      cur = mul(transvection_mod2(z1), cur);
      cur = mul(transvection_mod2(z2), cur);
      applied.push_back(z1);
      applied.push_back(z2);
      found = true;
      break;
    }
    if (!found) stalled = true;
  }

  if (!stalled && !(cur == z2_identity(g))) stalled = true;
  if (stalled) return factor_by_bfs(m);

  // applied (first..last) gives Tv(last)...Tv(first) M = I, so
  // M = Tv(first)...Tv(last): application order is already product order.
  for (const Z2Vec& zv : applied) {
    assert(quad_eval(q, zv) == 1);
    (void)zv;
  }
  return applied;
}

OrthFactorization factor_orthogonal(const Z2Matrix& m) {
  OrthFactorization f;
  f.g = m.g;
  f.input = m;
  f.raw = factor_into_z2_transvections(m);
  for (const Z2Vec& zdir : f.raw) {
    if (is_lambda_generator(zdir)) {
      f.factors.push_back(zdir);
      continue;
    }
    // z [sq] w1 ... [sq] wk = gen, so
    // Tv_z = Tv_{w1} ... Tv_{wk} Tv_gen Tv_{wk} ... Tv_{w1}.
    LambdaCert cert = lambda_reduce(zdir);
    for (const SquareMove& mv : cert.moves) f.factors.push_back(mv.operand);
    f.factors.push_back(cert.output);
    for (auto it = cert.moves.rbegin(); it != cert.moves.rend(); ++it) {
      f.factors.push_back(it->operand);
    }
  }
  std::string why;
  if (!verify_orth_factorization(f, &why)) {
    throw std::logic_error("orthogonal factorization failed: " + why);
  }
  return f;
}

bool verify_orth_factorization(const OrthFactorization& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.input.g != f.g) return fail("matrix genus mismatch");
  for (const Z2Vec& v : f.factors) {
    if (v.g != f.g || !is_lambda_generator(v)) {
      return fail("factor (" + to_string(v) + ") is not a standard generator");
    }
  }
  Z2Matrix prod = z2_identity(f.g);
  for (const Z2Vec& v : f.factors) prod = mul(prod, transvection_mod2(v));
  if (!(prod == f.input)) return fail("factor product does not equal the input");
  return true;
}

std::vector<Z2Vec> witness_targets(int g) {
  checked_genus(g);
  if (g < 2) throw std::invalid_argument("witness targets need g >= 2");
  return {
      Z2Vec{g, 0b0010},  // y_1
      Z2Vec{g, 0b0011},  // x_1 + y_1
      Z2Vec{g, 0b1100},  // x_2 + y_2
  };
}

WitnessCert orbit_witness(int g, const Z2Vec& v) {
  checked_genus(g);
  if (g < 3) throw std::invalid_argument("orbit_witness is defined for g >= 3");
  if (v.g != g) throw std::invalid_argument("vector genus mismatch");
  if (v.bits == 0) throw std::domain_error("orbit_witness needs a nonzero class");

  CurveClassTable table = default_curve_classes(g);
  auto gens = group_generators(g);
  std::vector<Z2Matrix> mats;
  mats.reserve(gens.size());
  for (const auto& [name, word] : gens) mats.push_back(eval_mod2(word, table));
  std::vector<Z2Vec> targets = witness_targets(g);
  auto is_target = [&](const Z2Vec& u) {
    return std::find(targets.begin(), targets.end(), u) != targets.end();
  };

  // BFS over the (at most 2^2g - 1) nonzero classes.
  std::vector<int> parent_gen(std::size_t{1} << (2 * g), -2);
  std::vector<std::uint32_t> parent_vec(std::size_t{1} << (2 * g), 0);
  parent_gen[v.bits] = -1;
  std::deque<std::uint32_t> frontier{v.bits};
  std::uint32_t hit = v.bits;
  bool found = is_target(v);
  while (!found && !frontier.empty()) {
    std::uint32_t cur = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k < mats.size() && !found; ++k) {
      std::uint32_t next = apply(mats[k], Z2Vec{g, cur}).bits;
      if (parent_gen[next] != -2) continue;
      parent_gen[next] = int(k);
      parent_vec[next] = cur;
      if (is_target(Z2Vec{g, next})) {
        hit = next;
        found = true;
        break;
      }
      frontier.push_back(next);
    }
  }
  if (!found) {
    throw std::runtime_error("no witness found: class (" + to_string(v) +
                             ") does not reach a standard target");
  }

  WitnessCert cert;
  cert.g = g;
  cert.vector = v;
  cert.target = Z2Vec{g, hit};
  // Path edges applied first sit deepest; the word lists leftmost-latest, so
  // walking back from the target already yields evaluation order.
  std::uint32_t cur = hit;
  while (parent_gen[cur] != -1) {
    cert.word.push_back(gens[static_cast<std::size_t>(parent_gen[cur])].first);
    cur = parent_vec[cur];
  }
  std::string why;
  if (!verify_witness(cert, &why)) {
    throw std::logic_error("orbit_witness produced an invalid certificate: " + why);
  }
  return cert;
}

bool verify_witness(const WitnessCert& cert, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.vector.g != cert.g || cert.target.g != cert.g) {
    return fail("witness genus mismatch");
  }
  std::vector<Z2Vec> targets = witness_targets(cert.g);
  if (std::find(targets.begin(), targets.end(), cert.target) == targets.end()) {
    return fail("target (" + to_string(cert.target) + ") is not a standard target");
  }
  CurveClassTable table = default_curve_classes(cert.g);
  GenWord word;
  try {
    for (const std::string& name : cert.word) {
      word = concat(word, parse_word(cert.g, name));
    }
  } catch (const std::exception& e) {
    return fail(std::string("bad generator name in witness word: ") + e.what());
  }
  Z2Vec got = apply(eval_mod2(word, table), cert.vector);
  if (!(got == cert.target)) {
    return fail("witness word moves the class to (" + to_string(got) +
                "), certificate claims (" + to_string(cert.target) + ")");
  }
  return true;
}

}  // namespace spinmcg
