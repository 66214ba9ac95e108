#include "spinmcg/rewriter.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace spinmcg {

namespace {

bool adjacent(int a, int b) { return std::abs(a - b) == 1; }

void check_chain_word(int g, const GenWord& w) {
  for (const Letter& l : w) {
    check_letter(g, l);
    if (l.kind != LetterKind::C) {
      throw std::invalid_argument("rewriter accepts chain letters only, got " +
                                  letter_to_string(l));
    }
  }
}

GToken token_inverse(const GToken& t) { return {t.kind, t.index, -t.sign}; }

// Token for the conjugating pair C_u C_v C_u^-1 with |u - v| = 1:
//   u = v+1:  C_{v+1} C_v C_{v+1}^-1 = X_v
//   u = v-1:  C_u C_{u+1} C_u^-1 = C_{u+1}^-1 C_u C_{u+1} = Xs_u  (braid)
GToken pair_token(int u, int v) {
  assert(adjacent(u, v));
  if (u == v + 1) return {TokenKind::X, v, 1};
  return {TokenKind::Xs, u, 1};
}

struct Rewriter {
  int g;
  int fuel;

  std::vector<GToken> claim(std::vector<int> idx, int t);
};

void append(std::vector<GToken>& out, const std::vector<GToken>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Rewrites W C_t^2 W^-1 for a positive square-free chain word W (indices in
// idx, leftmost first).  Loop invariants are restored at the top of every
// iteration; each branch is an exact group identity.
std::vector<GToken> Rewriter::claim(std::vector<int> idx, int t) {
  std::vector<GToken> out;
  while (true) {
    if (--fuel < 0) throw std::logic_error("rewriter: step budget exhausted");

    // Strip rightmost letters that commute with C_t (non-adjacent or equal):
    // W = V x1 with [x1, C_t] = 1 gives W C_t^2 W^-1 = V C_t^2 V^-1.
    while (!idx.empty() && !adjacent(idx.back(), t)) idx.pop_back();
    const int l = static_cast<int>(idx.size());

    if (l == 0) {
      out.push_back({TokenKind::D, t, 1});
      return out;
    }
    if (l == 1) {
      // C_u C_t^2 C_u^-1 = (C_u C_t C_u^-1)^2 with u adjacent to t.
      GToken a = pair_token(idx[0], t);
      out.push_back(a);
      out.push_back(a);
      return out;
    }

    // Peel an internal square: W = W1 C_j^2 W2 gives
    // W C_t^2 W^-1 = (W1 C_j^2 W1^-1) (W1 W2 C_t^2 W2^-1 W1^-1) (...)^-1.
    {
      int sq = -1;
      for (int k = 0; k + 1 < l; ++k) {
        if (idx[k] == idx[k + 1]) {
          sq = k;
          break;
        }
      }
      if (sq >= 0) {
        std::vector<int> w1(idx.begin(), idx.begin() + sq);
        std::vector<int> rest = w1;
        rest.insert(rest.end(), idx.begin() + sq + 2, idx.end());
        std::vector<GToken> r = claim(w1, idx[sq]);
        append(out, r);
        append(out, claim(std::move(rest), t));
        append(out, inverse_tokens(r));
        return out;
      }
    }

    // x2 == C_t: W = V C_t x1 with x1 adjacent to C_t, and
    // C_t x1 C_t^2 x1^-1 C_t^-1 = x1^2 (braid), so W C_t^2 W^-1 = V x1^2 V^-1.
    if (idx[l - 2] == t) {
      int nt = idx.back();
      idx.pop_back();
      idx.pop_back();
      t = nt;
      continue;
    }

    std::optional<int> jp = rightmost_jump(idx);
    std::optional<int> tp = rightmost_turn(idx);

    if (!jp && !tp) {
      // Monotone staircase x_l x_{l-1} ... x_1.  With A = x_l x_{l-1} x_l^-1
      // (a single token), A . (x_l x_{l-2} ... x_1) = W in the free group.
      GToken a = pair_token(idx[0], idx[1]);
      idx.erase(idx.begin() + 1);
      out.push_back(a);
      append(out, claim(std::move(idx), t));
      out.push_back(token_inverse(a));
      return out;
    }

    const int p = std::min(jp.value_or(l + 1), tp.value_or(l + 1));

    if (tp && p == *tp) {
      // Turn at p: suffix positions (p, p-1, p-2) read a b a.  Braid to
      // b a b, then the trailing b commutes past positions p-3..1 (the
      // staircase sits >= 2 away) and past C_t (|b - t| = p-1 >= 2), so it
      // cancels against its inverse on the right of C_t^2.
      const int a = idx[l - p];
      const int b = idx[l - p + 1];
      std::vector<int> nw(idx.begin(), idx.begin() + (l - p));
      nw.push_back(b);
      nw.push_back(a);
      nw.insert(nw.end(), idx.begin() + (l - p + 3), idx.end());
      idx = std::move(nw);
      continue;
    }

    // Jump at p.
    if (p == 2) {
      const int x2 = idx[l - 2];
      if (!adjacent(x2, t)) {
        // x2 commutes past both x1 and C_t: delete it.
        idx.erase(idx.begin() + (l - 2));
        continue;
      }
      // Split: W = U x1 with U = W' x2 and x2 adjacent to C_t.  The braid
      // x1 C_t^2 x1^-1 = C_t^-1 x1^2 C_t turns the whole conjugate into
      //   (U C_t^2 U^-1)^-1 . (U C_t x1^2 C_t^-1 U^-1) . (U C_t^2 U^-1),
      // i.e. inv(R) ++ claim(U C_t, x1) ++ R.  The middle word has the
      // position-2 jump resolved (x2 is adjacent to its new neighbor C_t).
      const int x1 = idx.back();
      std::vector<int> u(idx.begin(), idx.end() - 1);
      std::vector<int> v = u;
      v.push_back(t);
      std::vector<GToken> r = claim(u, t);
      append(out, inverse_tokens(r));
      append(out, claim(std::move(v), x1));
      append(out, r);
      return out;
    }

    // Jump at p >= 3: letter m = x_p above a clean staircase x_{p-1}..x_1.
    const int jl = l - p;
    const int m = idx[jl];
    int i = 0;  // largest position in 1..p-1 whose letter is adjacent to m
    for (int q = p - 1; q >= 1; --q) {
      if (adjacent(idx[l - q], m)) {
        i = q;
        break;
      }
    }

    if (i == 0) {
      // m commutes (or is equal) with every staircase letter: move it to the
      // right end.  The next iteration strips it, peels the square it forms
      // with an equal x1, or handles the position-2 jump.
      idx.erase(idx.begin() + jl);
      idx.push_back(m);
      continue;
    }

    if (i == 1) {
      // m is adjacent only to x1.  The staircase runs away from m, which
      // forces t == m: commute m down to position 2, where the x2 == C_t
      // braid above applies, i.e. W C_t^2 W^-1 = (W without m, x1) x1^2 (...)^-1.
      if (m != t) throw std::logic_error("rewriter: lone-contact letter != twist");
      int nt = idx.back();
      idx.erase(idx.begin() + jl);
      idx.pop_back();
      t = nt;
      continue;
    }

    // i >= 2: the staircase passes through m's chain neighborhood, so the
    // letter at position i-1 equals m.  Commute m down next to x_i (positions
    // p-1..i+1 are non-adjacent to m), braid m x_i m -> x_i m x_i, then the
    // trailing x_i commutes past x_{i-2}..x_1 (all >= 2 away) to the right
    // end.  Same length; the defect moves to the right edge.
    {
      const int vi = idx[l - i];
      if (idx[l - i + 1] != m) {
        throw std::logic_error("rewriter: staircase does not pass through jump letter");
      }
      std::vector<int> nw(idx.begin(), idx.begin() + jl);
      nw.insert(nw.end(), idx.begin() + jl + 1, idx.begin() + (l - i));
      nw.push_back(vi);
      nw.push_back(m);
      nw.insert(nw.end(), idx.begin() + (l - i + 2), idx.end());
      nw.push_back(vi);
      assert(static_cast<int>(nw.size()) == l);
      idx = std::move(nw);
      continue;
    }
  }
}

struct Item {
  bool marker;  // true: C_index^-2, false: C_index
  int index;
};

std::vector<GToken> rewrite_items(Rewriter& rw, const std::vector<Item>& items,
                                  int t);

// W = W1 S W2 with S a central-free factor C_j^{+-2}:
// W C_t^2 W^-1 = (W1 C_j^{+-2} W1^-1) (W1 W2 C_t^2 W2^-1 W1^-1) (...inverse).
std::vector<GToken> peel_at(Rewriter& rw, const std::vector<Item>& items,
                            int pos, int len, bool inverted, int j, int t) {
  std::vector<Item> w1(items.begin(), items.begin() + pos);
  std::vector<Item> rest = w1;
  rest.insert(rest.end(), items.begin() + pos + len, items.end());
  std::vector<GToken> r = rewrite_items(rw, w1, j);
  std::vector<GToken> out;
  append(out, inverted ? inverse_tokens(r) : r);
  append(out, rewrite_items(rw, rest, t));
  append(out, inverted ? r : inverse_tokens(r));
  return out;
}

std::vector<GToken> rewrite_items(Rewriter& rw, const std::vector<Item>& items,
                                  int t) {
  if (--rw.fuel < 0) throw std::logic_error("rewriter: step budget exhausted");
  const int n = static_cast<int>(items.size());
  for (int k = 0; k < n; ++k) {
    if (items[k].marker) {
      return peel_at(rw, items, k, 1, /*inverted=*/true, items[k].index, t);
    }
    if (k + 1 < n && !items[k + 1].marker &&
        items[k + 1].index == items[k].index) {
      return peel_at(rw, items, k, 2, /*inverted=*/false, items[k].index, t);
    }
  }
  std::vector<int> idx;
  idx.reserve(items.size());
  for (const Item& it : items) idx.push_back(it.index);
  return rw.claim(std::move(idx), t);
}

}  // namespace

std::string token_to_string(const GToken& t) {
  std::string s;
  switch (t.kind) {
    case TokenKind::X: s = "X"; break;
    case TokenKind::Xs: s = "Xs"; break;
    case TokenKind::D: s = "D"; break;
  }
  s += std::to_string(t.index);
  if (t.sign < 0) s += "^-1";
  return s;
}

std::vector<GToken> inverse_tokens(const std::vector<GToken>& ts) {
  std::vector<GToken> out;
  out.reserve(ts.size());
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    out.push_back({it->kind, it->index, -it->sign});
  }
  return out;
}

GenWord token_word(const GToken& t, int g) {
  NamedElement e;
  switch (t.kind) {
    case TokenKind::X: e = {NamedKind::X, t.index}; break;
    case TokenKind::Xs: e = {NamedKind::Xs, t.index}; break;
    case TokenKind::D: e = {NamedKind::D, t.index}; break;
  }
  GenWord w = expand_named(e, g);
  return t.sign < 0 ? inverse(w) : w;
}

IntMatrix token_matrix(const GToken& t, const CurveClassTable& table) {
  return eval_int(token_word(t, table.g), table);
}

std::optional<int> rightmost_jump(const std::vector<int>& indices) {
  const int l = static_cast<int>(indices.size());
  for (int p = 2; p <= l; ++p) {
    if (!adjacent(indices[l - p], indices[l - p + 1])) return p;
  }
  return std::nullopt;
}

std::optional<int> rightmost_turn(const std::vector<int>& indices) {
  const int l = static_cast<int>(indices.size());
  auto is_jump = [&](int p) {
    return !adjacent(indices[l - p], indices[l - p + 1]);
  };
  for (int p = 3; p <= l; ++p) {
    if (indices[l - p] == indices[l - p + 2] && !is_jump(p) && !is_jump(p - 1)) {
      return p;
    }
  }
  return std::nullopt;
}

GenWord normalize_negatives(const GenWord& w) {
  GenWord out;
  for (const Letter& l : w) {
    if (l.kind != LetterKind::C) {
      throw std::invalid_argument("rewriter accepts chain letters only, got " +
                                  letter_to_string(l));
    }
    if (l.sign < 0) {
      out.push_back({LetterKind::C, l.index, -1});
      out.push_back({LetterKind::C, l.index, -1});
      out.push_back({LetterKind::C, l.index, 1});
    } else {
      out.push_back(l);
    }
  }
  return out;
}

RewriteCert rewrite_square_conjugate(int g, const GenWord& w, int twist) {
  checked_genus(g);
  check_chain_word(g, w);
  if (twist < 1 || twist > 2 * g + 1) {
    throw std::invalid_argument("twist index out of range: " +
                                std::to_string(twist));
  }
  std::vector<Item> items;
  for (const Letter& l : w) {
    if (l.sign < 0) items.push_back({true, l.index});
    items.push_back({false, l.index});
  }
  Rewriter rw{g, 0};
  rw.fuel = 5000 + 4000 * static_cast<int>(w.size()) * static_cast<int>(w.size());
  RewriteCert cert;
  cert.g = g;
  cert.word = w;
  cert.twist = twist;
  cert.tokens = rewrite_items(rw, items, twist);
  return cert;
}

bool check_rewrite(const RewriteCert& cert, const CurveClassTable& table,
                   std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.g != table.g) return fail("genus mismatch with class table");
  check_chain_word(cert.g, cert.word);
  if (cert.twist < 1 || cert.twist > 2 * cert.g + 1) {
    return fail("twist index out of range");
  }
  for (const GToken& t : cert.tokens) {
    if (t.sign != 1 && t.sign != -1) return fail("bad token sign");
    const int hi = t.kind == TokenKind::D ? 2 * cert.g + 1 : 2 * cert.g;
    if (t.index < 1 || t.index > hi) {
      return fail("token index out of range: " + token_to_string(t));
    }
  }
  GenWord lhs = cert.word;
  lhs.push_back({LetterKind::C, cert.twist, 1});
  lhs.push_back({LetterKind::C, cert.twist, 1});
  GenWord winv = inverse(cert.word);
  lhs.insert(lhs.end(), winv.begin(), winv.end());
  IntMatrix left = eval_int(lhs, table);
  IntMatrix right = int_identity(cert.g);
  for (const GToken& t : cert.tokens) right = mul(right, token_matrix(t, table));
  if (!(left == right)) return fail("token product differs from conjugate");
  return true;
}

}  // namespace spinmcg
