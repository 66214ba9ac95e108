#pragma once
// Rewriting conjugates of squared chain twists, W C_t^2 W^-1 with W a word in
// C_1..C_{2g+1}^{+-1}, as products of the tokens X_i, Xs_i, D_i (and their
// inverses).  Every transformation step is a braid relation, a disjointness
// commutation, or a free cancellation, so the result is equal in the group;
// certificates are checked by exact integer matrix evaluation.

#include <optional>
#include <string>
#include <vector>

#include "spinmcg/words.hpp"

namespace spinmcg {

enum class TokenKind { X, Xs, D };

struct GToken {
  TokenKind kind = TokenKind::D;
  int index = 1;
  int sign = 1;  // +1 or -1

  bool operator==(const GToken&) const = default;
};

std::string token_to_string(const GToken& t);  // "X2", "Xs2^-1", "D5"
std::vector<GToken> inverse_tokens(const std::vector<GToken>& ts);
GenWord token_word(const GToken& t, int g);  // expansion as chain letters
IntMatrix token_matrix(const GToken& t, const CurveClassTable& table);

// Positions are 1-based counting from the RIGHT end of the word, so the
// rightmost letter is position 1.  A jump is a position p >= 2 whose letter
// is not adjacent in the chain to the letter at p-1 (|index difference| != 1).
// A turn is a position p >= 3 with equal letters at p and p-2 where neither
// p nor p-1 is a jump.  Returns the smallest qualifying position.
std::optional<int> rightmost_jump(const std::vector<int>& indices);
std::optional<int> rightmost_turn(const std::vector<int>& indices);

// C_j^-1 -> C_j^-2 . C_j, written out as three letters.  Positive letters
// pass through.  Rejects B letters.
GenWord normalize_negatives(const GenWord& w);

struct RewriteCert {
  int g = 0;
  GenWord word;  // W, chain letters with signs
  int twist = 1; // t
  std::vector<GToken> tokens;

  bool operator==(const RewriteCert&) const = default;
};

// Rewrites W C_t^2 W^-1 into tokens.  Throws std::invalid_argument for B
// letters or a twist index outside 1..2g+1.
RewriteCert rewrite_square_conjugate(int g, const GenWord& w, int twist);

// Exact check: eval_int(W C_t^2 W^-1) == product of token matrices.
bool check_rewrite(const RewriteCert& cert, const CurveClassTable& table,
                   std::string* why = nullptr);

}  // namespace spinmcg
