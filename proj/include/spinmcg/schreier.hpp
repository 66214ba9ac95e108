#pragma once
// Genus-2 coset bookkeeping for the spin stabilizer inside the hyperelliptic
// mapping class group.  The chain letters act on the sixteen quadratic forms
// on the right (q |-> q . Phi2(w)); the ten Arf-0 forms are one orbit, and a
// fixed ten-element transversal of chain words induces a 10 x 5 generating
// table for the stabilizer of q0, whose entries are recognized as short words
// in the named generators.

#include <string>
#include <vector>

#include "spinmcg/words.hpp"

namespace spinmcg {

// q . Phi2(w).  Inverse letters act the same as positive ones (mod-2
// transvections are involutions).  Requires t.g == q.g.
QuadForm form_after_word(const QuadForm& q, const GenWord& w,
                         const CurveClassTable& t);

// ---------------------------------------------------------------------------
// Orbit graph of the ten even forms under the five chain letters (g = 2).

struct OrbitEdge {
  int from = 0;   // vertex indices into OrbitGraph::vertices, from < to
  int to = 0;
  int letter = 1; // chain index 1..5

  bool operator==(const OrbitEdge&) const = default;
};

struct OrbitGraph {
  std::vector<QuadForm> vertices;  // Arf-0 forms in label order
  std::vector<OrbitEdge> edges;    // one per unordered pair and letter;
                                   // self-loops (fixed forms) omitted
};

OrbitGraph orbit_graph(const CurveClassTable& t);  // t.g must be 2
std::string orbit_graph_dot(const OrbitGraph& gr);

// ---------------------------------------------------------------------------
// Transversal and induced generating table (g = 2)

// The fixed ten-word transversal, one word per even form, starting with the
// empty word for q0.
std::vector<GenWord> coset_transversal();

// The transversal word whose coset contains w, i.e. the unique s with
// q0 . Phi2(s) = q0 . Phi2(w).  Requires t.g == 2.
GenWord representative(const GenWord& w, const CurveClassTable& t);

struct TableEntry {
  int row = 0;       // transversal index 0..9
  int letter = 1;    // 1..5
  GenWord raw;       // s C_i rep(s C_i)^-1, a stabilizer element
  std::string name;  // its value as a word in the named generators
};

struct SchreierTable {
  std::vector<GenWord> transversal;
  std::vector<TableEntry> entries;  // 50 entries, row-major
};

SchreierTable schreier_table(const CurveClassTable& t);

// Verifies the table: every named value equals its raw word by exact integer
// matrix evaluation, every raw word preserves q0 mod 2, and the mod-2 closures
// of the 50 entries and of the named generating set both have order 72.
struct TableReport {
  bool ok = false;
  std::vector<std::string> lines;
};

TableReport verify_table(const CurveClassTable& t);

}  // namespace spinmcg
