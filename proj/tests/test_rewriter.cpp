// Unit tests for the chain-word rewriter: defect scanning, token algebra, and
// matrix-checked certificates on random conjugates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "spinmcg/json_io.hpp"
#include "spinmcg/rewriter.hpp"

using namespace spinmcg;

namespace {

GenWord rnd_cword(int g, int maxlen, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, maxlen), idx(1, 2 * g + 1), sgn(0, 1);
  GenWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    w.push_back(Letter{LetterKind::C, idx(rng), sgn(rng) ? 1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("token strings and inverses") {
  CHECK(token_to_string(GToken{TokenKind::X, 2, 1}) == "X2");
  CHECK(token_to_string(GToken{TokenKind::Xs, 3, -1}) == "Xs3^-1");
  CHECK(token_to_string(GToken{TokenKind::D, 5, 1}) == "D5");

  CHECK(token_from_string("X2") == GToken{TokenKind::X, 2, 1});
  CHECK(token_from_string("Xs3^-1") == GToken{TokenKind::Xs, 3, -1});
  CHECK(token_from_string("D5") == GToken{TokenKind::D, 5, 1});
  CHECK_THROWS_AS(token_from_string("Q2"), std::invalid_argument);
  CHECK_THROWS_AS(token_from_string("X"), std::invalid_argument);
  CHECK_THROWS_AS(token_from_string("X2^2"), std::invalid_argument);
  CHECK_THROWS_AS(token_from_string(""), std::invalid_argument);

  std::vector<GToken> ts{GToken{TokenKind::X, 1, 1}, GToken{TokenKind::D, 2, -1}};
  std::vector<GToken> inv = inverse_tokens(ts);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == GToken{TokenKind::D, 2, 1});
  CHECK(inv[1] == GToken{TokenKind::X, 1, -1});
  CHECK(inverse_tokens(inv) == ts);
}

TEST_CASE("token expansion matches the named elements") {
  for (int g = 2; g <= 3; ++g) {
    CurveClassTable t = default_curve_classes(g);
    for (int i = 1; i <= 2 * g; ++i) {
      GToken x{TokenKind::X, i, 1};
      GToken xs{TokenKind::Xs, i, 1};
      CHECK(token_word(x, g) == parse_word(g, "X" + std::to_string(i)));
      CHECK(token_word(xs, g) == parse_word(g, "Xs" + std::to_string(i)));
      CHECK(token_matrix(x, t) == eval_int(token_word(x, g), t));
      GToken xinv{TokenKind::X, i, -1};
      CHECK(token_word(xinv, g) == inverse(token_word(x, g)));
      CHECK(mul(token_matrix(x, t), token_matrix(xinv, t)) == int_identity(g));
    }
    for (int i = 1; i <= 2 * g + 1; ++i) {
      GToken d{TokenKind::D, i, 1};
      CHECK(token_word(d, g) == parse_word(g, "D" + std::to_string(i)));
      CHECK(token_matrix(d, t) == eval_int(token_word(d, g), t));
    }
  }
}

TEST_CASE("jump and turn scanning") {
  using V = std::vector<int>;
  // Positions count from the right, starting at 1.
  CHECK(rightmost_jump(V{}) == std::nullopt);
  CHECK(rightmost_jump(V{3}) == std::nullopt);
  CHECK(rightmost_jump(V{2, 3}) == std::nullopt);
  CHECK(rightmost_jump(V{2, 4}) == 2);      // |2-4| != 1
  CHECK(rightmost_jump(V{3, 3}) == 2);      // equal letters are a jump too
  CHECK(rightmost_jump(V{1, 2, 3, 3}) == 2);
  CHECK(rightmost_jump(V{5, 1, 2, 3}) == 4);
  CHECK(rightmost_jump(V{1, 2, 5, 4, 3}) == 4);  // 2 against 5, counted from the right

  CHECK(rightmost_turn(V{1, 2, 1}) == 3);
  CHECK(rightmost_turn(V{1, 2}) == std::nullopt);
  CHECK(rightmost_turn(V{2, 1, 2, 3}) == 4);
  CHECK(rightmost_turn(V{3, 2, 3, 2, 3}) == 3);
  CHECK(rightmost_turn(V{1, 2, 2, 1}) == std::nullopt);  // defect is a jump
  CHECK(rightmost_turn(V{4, 1, 2, 1}) == 3);
  // A straight run has neither defect.
  CHECK(rightmost_jump(V{1, 2, 3, 4, 5}) == std::nullopt);
  CHECK(rightmost_turn(V{1, 2, 3, 4, 5}) == std::nullopt);
  CHECK(rightmost_turn(V{5, 4, 3, 2, 1}) == std::nullopt);
}

TEST_CASE("negative letters normalize to squares times a positive letter") {
  GenWord w = parse_word(2, "C1 C2^-1 C3");
  GenWord n = normalize_negatives(w);
  CHECK(n == parse_word(2, "C1 C2^-1 C2^-1 C2 C3"));
  CurveClassTable t = default_curve_classes(2);
  CHECK(eval_int(n, t) == eval_int(w, t));  // same group element
  CHECK(normalize_negatives(parse_word(2, "C1 C2")) == parse_word(2, "C1 C2"));
  CHECK_THROWS_AS(normalize_negatives(parse_word(3, "B4")),
                  std::invalid_argument);
}

TEST_CASE("small frozen rewrites") {
  CurveClassTable t = default_curve_classes(2);

  // Empty conjugator: C_t^2 is the token D_t.
  for (int twist = 1; twist <= 5; ++twist) {
    RewriteCert cert = rewrite_square_conjugate(2, {}, twist);
    REQUIRE(cert.tokens.size() == 1);
    CHECK(cert.tokens[0] == GToken{TokenKind::D, twist, 1});
    CHECK(check_rewrite(cert, t));
  }

  // C2 C1^2 C2^-1 = (C2 C1 C2^-1)^2 = X1^2.
  RewriteCert up = rewrite_square_conjugate(2, parse_word(2, "C2"), 1);
  CHECK(up.tokens == std::vector<GToken>{GToken{TokenKind::X, 1, 1},
                                         GToken{TokenKind::X, 1, 1}});
  CHECK(check_rewrite(up, t));

  // C1 C2^2 C1^-1 = (C1 C2 C1^-1)^2 = Xs1^2.
  RewriteCert down = rewrite_square_conjugate(2, parse_word(2, "C1"), 2);
  CHECK(down.tokens == std::vector<GToken>{GToken{TokenKind::Xs, 1, 1},
                                           GToken{TokenKind::Xs, 1, 1}});
  CHECK(check_rewrite(down, t));

  // A letter disjoint from the twist cancels: C4 C1^2 C4^-1 = C1^2 = D1.
  RewriteCert far = rewrite_square_conjugate(2, parse_word(2, "C4"), 1);
  CHECK(far.tokens == std::vector<GToken>{GToken{TokenKind::D, 1, 1}});
  CHECK(check_rewrite(far, t));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(rewrite_square_conjugate(2, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(rewrite_square_conjugate(2, {}, 6), std::invalid_argument);
  CHECK_THROWS_AS(rewrite_square_conjugate(3, parse_word(3, "B4"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rewrite_square_conjugate(2, parse_word(2, "C1"), -1),
                  std::invalid_argument);
}

TEST_CASE("certificate checking catches corruption") {
  CurveClassTable t = default_curve_classes(2);
  RewriteCert cert =
      rewrite_square_conjugate(2, parse_word(2, "C2 C4 C5 C2"), 3);
  std::string why;
  REQUIRE(check_rewrite(cert, t, &why));

  RewriteCert bad = cert;
  bad.tokens.push_back(GToken{TokenKind::D, 1, 1});
  CHECK_FALSE(check_rewrite(bad, t, &why));
  CHECK(why == "token product differs from conjugate");

  bad = cert;
  bad.twist = 4;
  CHECK_FALSE(check_rewrite(bad, t, &why));

  bad = cert;
  bad.tokens[0].index = 23;
  CHECK_FALSE(check_rewrite(bad, t, &why));
  CHECK(why.find("token index out of range") != std::string::npos);

  bad = cert;
  bad.tokens[0].sign = 2;
  CHECK_FALSE(check_rewrite(bad, t, &why));

  CHECK_FALSE(check_rewrite(cert, default_curve_classes(3), &why));
  CHECK(why == "genus mismatch with class table");
}

TEST_CASE("random conjugates rewrite soundly") {
  std::mt19937 rng(20240817);
  for (int g = 2; g <= 4; ++g) {
    CurveClassTable t = default_curve_classes(g);
    std::uniform_int_distribution<int> twist(1, 2 * g + 1);
    for (int trial = 0; trial < 120; ++trial) {
      GenWord w = rnd_cword(g, 12, rng);
      int tw = twist(rng);
      CAPTURE(g);
      CAPTURE(format_word(w));
      CAPTURE(tw);
      RewriteCert cert = rewrite_square_conjugate(g, w, tw);
      std::string why;
      CHECK(check_rewrite(cert, t, &why));
      if (!why.empty()) MESSAGE(why);
      // Token purity: every token is an X/Xs/D with a legal index.
      for (const GToken& tok : cert.tokens) {
        CHECK((tok.sign == 1 || tok.sign == -1));
        int hi = tok.kind == TokenKind::D ? 2 * g + 1 : 2 * g;
        CHECK(tok.index >= 1);
        CHECK(tok.index <= hi);
      }
    }
  }
}

TEST_CASE("rewrite certificates round-trip through JSON") {
  RewriteCert cert =
      rewrite_square_conjugate(3, parse_word(3, "C2 C5^-1 C3 C4"), 2);
  nlohmann::json j = to_json(cert);
  CHECK(j.at("kind") == "square_conjugate_rewrite");
  RewriteCert back = rewrite_from_json(j);
  CHECK(back == cert);
  CHECK(check_rewrite(back, default_curve_classes(3)));

  // Deserialization is lenient; the checker is the gate.
  j["twist"] = 99;
  std::string why;
  CHECK_FALSE(check_rewrite(rewrite_from_json(j), default_curve_classes(3), &why));
  CHECK(why == "twist index out of range");
  j["kind"] = "mystery";
  CHECK_THROWS_AS(rewrite_from_json(j), std::invalid_argument);
}
