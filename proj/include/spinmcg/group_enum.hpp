#pragma once
// Orders of the mod-2 symplectic and orthogonal groups by breadth-first
// closure over transvection generators.  Feasible for g <= 3 (|Sp(6,Z2)| =
// 1451520); g = 4 would need ~47 billion elements and is rejected up front.

#include <cstdint>
#include <vector>

#include "spinmcg/z2.hpp"

namespace spinmcg {

// BFS closure size of the monoid generated by gens (a group here, since every
// generator has finite order).  Throws std::runtime_error if the closure
// exceeds limit.
std::uint64_t closure_order(const std::vector<Z2Matrix>& gens,
                            std::uint64_t limit);

// Closure of the transvections about all nonzero mod-2 vectors = Sp(2g, Z2).
std::uint64_t sp_order_bfs(int g);  // g <= 3

// Closure of the transvections about Lambda_g (q0 = 1 vectors).  For g >= 3
// this is all of O(q0); in dimension 4 the transvections generate an
// index-2 subgroup (the classical exception), so the g = 2 closure is 36
// while the full stabilizer of q0 has order 72.
std::uint64_t orthogonal_order_bfs(int g);  // g <= 3

// One BFS pass over Sp(2g, Z2): its order, plus the number of elements that
// preserve q0 (= |O(q0)|, counted as a stabilizer rather than a closure, so
// it is correct at g = 2 too).
struct SpClosureStats {
  std::uint64_t sp_order = 0;
  std::uint64_t stabilizer_order = 0;
};

SpClosureStats sp_closure_stats(int g);  // g <= 3

// All elements of Sp(2g, Z2) that preserve q0, i.e. the full stabilizer
// O(q0), enumerated via the Sp BFS.  72 matrices at g = 2, 40320 at g = 3.
std::vector<Z2Matrix> orthogonal_stabilizer_elements(int g);  // g <= 3

// |Sp(2g, Z2)| = 2^(g^2) * prod_{i=1..g} (4^i - 1), for cross-checking.
std::uint64_t sp_order_formula(int g);

}  // namespace spinmcg
