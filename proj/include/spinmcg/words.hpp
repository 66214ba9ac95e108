#pragma once
// Words in the hyperelliptic mapping class group generators and their action
// on homology.  The genus-g chain carries Dehn twists C_1..C_{2g+1}; for
// g >= 3 there are additional twists B_4, B_6, ..., B_{2g-2} about curves
// whose mod-2 classes are forced by the chain.  Named elements (X_i, Y_{2j},
// D_i, ... ) abbreviate fixed short words in these letters.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinmcg/intsym.hpp"
#include "spinmcg/z2.hpp"

namespace spinmcg {

// ---------------------------------------------------------------------------
// Letters and words

enum class LetterKind { C, B };

struct Letter {
  LetterKind kind = LetterKind::C;
  int index = 1;  // C: 1..2g+1; B: even, 4..2g-2 (g >= 3)
  int sign = 1;   // +1 or -1

  bool operator==(const Letter&) const = default;
};

using GenWord = std::vector<Letter>;

GenWord inverse(const GenWord& w);
GenWord concat(const GenWord& a, const GenWord& b);
std::string letter_to_string(const Letter& l);  // "C3", "C3^-1", "B4"
std::string format_word(const GenWord& w);      // space separated; "" if empty

// Validates letter indices for the given genus; throws std::invalid_argument
// naming the offending letter.
void check_letter(int g, const Letter& l);

// ---------------------------------------------------------------------------
// Named elements

enum class NamedKind { X, Xs, Y, Ys, D, DB, T, T1, T2 };

struct NamedElement {
  NamedKind kind = NamedKind::X;
  int index = 0;  // X/Xs: 1..2g; Y/Ys/DB: even 4..2g-2; D: 1..2g+1; unused for T/T1/T2
};

// X_i  = C_{i+1} C_i C_{i+1}^-1        Xs_i = C_{i+1}^-1 C_i C_{i+1}
// Y_k  = C_k B_k C_k^-1                Ys_k = C_k^-1 B_k C_k        (k even)
// D_i  = C_i^2                         DB_k = B_k^2
// T    = C_1 C_3 C_5                                     (g = 2 only)
// T1   = C_1 C_3 B_4    T2 = B_4 C_5 C_7 ... C_{2g+1}    (g >= 3)
GenWord expand_named(const NamedElement& e, int g);

// The mod-2 spin-stabilizer generating set for genus g:
// g = 2:  X_1..X_4, D_1..D_5, T
// g >= 3: X_1..X_2g, Y_4..Y_{2g-2}, D_1..D_{2g+1}, DB_4..DB_{2g-2}, T1, T2
std::vector<std::pair<std::string, GenWord>> group_generators(int g);

// ---------------------------------------------------------------------------
// Parsing

// Space-separated tokens: raw letters (C3, C3^-1, B4), named elements
// (X2, Xs2, Y4, Ys4, D5, DB4, T, T1, T2), each with an optional integer
// exponent suffix ^e.  Named tokens expand in place.  Throws
// std::invalid_argument naming the offending token.
GenWord parse_word(int g, const std::string& text);

// ---------------------------------------------------------------------------
// Curve classes

// Integral homology classes of the chain curves, plus the forced mod-2
// classes (and optional integral lifts) of the B-curves.
struct CurveClassTable {
  int g = 0;
  std::vector<IntVec> c;                       // c[i-1] = class of C_i, i = 1..2g+1
  std::vector<std::optional<IntVec>> b_int;    // slot j-2 = lift for B_{2j}, j = 2..g-1
  std::vector<Z2Vec> b_mod2;                   // slot j-2 = mod-2 class of B_{2j} (= x_j)

  const IntVec& c_class(int i) const;          // 1-based chain index
  const Z2Vec& b_class_mod2(int two_j) const;  // letter index 2j
  const std::optional<IntVec>& b_class_int(int two_j) const;
};

// Canonical table: [c_1] = x_1, [c_2k] = y_k, [c_{2k+1}] = x_k + x_{k+1}
// (with x_{g+1} = 0), [B_2j] = x_j mod 2, no integral B lifts.
CurveClassTable default_curve_classes(int g);

// Validation suite; throws std::domain_error describing the first violation.
// Checks: primitivity, the chain intersection pattern |(c_i,c_{i+1})| = 1 and
// (c_i,c_j) = 0 for |i-j| >= 2, q0 = 0 on every class, the forced mod-2
// transvection identities for all X_i and Y_2j, and consistency of any
// integral B lifts with the forced mod-2 classes.
void validate(const CurveClassTable& t);

// ---------------------------------------------------------------------------
// Evaluation

// Integral symplectic action: the word L_1 L_2 ... L_n maps to
// M(L_1) M(L_2) ... M(L_n) acting on column vectors, so the rightmost letter
// acts first.  M(C_i) is the transvection about [c_i].  Throws
// std::domain_error for a B letter without a configured integral lift.
IntMatrix eval_int(const GenWord& w, const CurveClassTable& t);

// The same action reduced mod 2 (B letters always work: their mod-2 classes
// are forced).
Z2Matrix eval_mod2(const GenWord& w, const CurveClassTable& t);

// Whether the mod-2 action preserves the reference form q0 — membership in
// the spin stabilizer.
bool spin_check(const GenWord& w, const CurveClassTable& t);

// ---------------------------------------------------------------------------
// Relation checks

struct BraidReport {
  int g = 0;
  bool ok = false;                  // every check passed
  std::vector<std::string> lines;   // one human-readable line per check
  // Genus-2 extras (false/unset for g != 2):
  bool chain_power_identity = false;        // (C1..C5)^6 == I
  bool hyperelliptic_is_minus_identity = false;  // C1..C5 C5..C1 == -I
  bool hyperelliptic_square_identity = false;    // (C1..C5 C5..C1)^2 == I
  bool hyperelliptic_central = false;            // commutes with C1
};

// Adjacent braid relations T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1} and distant
// commutation on the C-chain (exact integer matrix equality); for g = 2 also
// the chain relations, whose values are only determined up to the +-I center
// by the homology action (computed values are recorded in the report).
BraidReport braid_check(const CurveClassTable& t);

}  // namespace spinmcg
