#include "spinmcg/group_enum.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace spinmcg {

namespace {

// Rows are at most 16 bits wide (g <= 8); 12 packed uint16 rows fit g <= 6,
// well beyond what the element-count guard allows anyway.
using Key = std::array<std::uint64_t, 3>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    // FNV-1a over the three words.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : k) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Key pack(const Z2Matrix& m) {
  Key k{};
  std::array<std::uint16_t, 12> rows16{};
  for (int r = 0; r < 2 * m.g; ++r) rows16[r] = static_cast<std::uint16_t>(m.rows[r]);
  std::memcpy(k.data(), rows16.data(), sizeof(rows16));
  return k;
}

int checked_bfs_genus(int g) {
  checked_genus(g);
  if (g > 3) {
    throw std::invalid_argument(
        "group-order BFS is limited to g <= 3 (Sp(8,Z2) has ~4.7e10 elements)");
  }
  return g;
}

}  // namespace

std::uint64_t closure_order(const std::vector<Z2Matrix>& gens,
                            std::uint64_t limit) {
  if (gens.empty()) return 1;
  int g = gens[0].g;
  if (2 * g > 12) throw std::invalid_argument("closure_order supports 2g <= 12");

  std::unordered_set<Key, KeyHash> seen;
  seen.reserve(static_cast<std::size_t>(limit < (1u << 21) ? limit + 1 : (1u << 21)));
  std::deque<Z2Matrix> frontier;

  Z2Matrix id = z2_identity(g);
  seen.insert(pack(id));
  frontier.push_back(id);

  while (!frontier.empty()) {
    Z2Matrix m = std::move(frontier.front());
    frontier.pop_front();
    for (const Z2Matrix& t : gens) {
      Z2Matrix next = mul(t, m);
      if (seen.insert(pack(next)).second) {
        if (seen.size() > limit) {
          throw std::runtime_error("closure exceeded the element limit");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::uint64_t sp_order_bfs(int g) {
  checked_bfs_genus(g);
  std::vector<Z2Matrix> gens;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << (2 * g)); ++bits) {
    gens.push_back(transvection_mod2(Z2Vec{g, bits}));
  }
  return closure_order(gens, 2'000'000);
}

std::uint64_t orthogonal_order_bfs(int g) {
  checked_bfs_genus(g);
  std::vector<Z2Matrix> gens;
  for (const Z2Vec& z : lambda_set(g)) gens.push_back(transvection_mod2(z));
  return closure_order(gens, 2'000'000);
}

namespace {

// Every Sp-BFS element is symplectic (a product of transvections), so q0
// preservation reduces to the basis columns: q0(col_k) = 0 for all k.
bool stabilizes_q0(const Z2Matrix& m) {
  for (int k = 0; k < 2 * m.g; ++k) {
    std::uint32_t col = 0;
    for (int r = 0; r < 2 * m.g; ++r) col |= ((m.rows[r] >> k) & 1u) << r;
    if (std::popcount(col & (col >> 1) & 0x55555555u) & 1) return false;
  }
  return true;
}

// BFS over Sp(2g, Z2) from all-transvection generators, invoking visit on
// every element (identity included) exactly once.
template <typename Visit>
void sp_bfs_visit(int g, Visit visit) {
  checked_bfs_genus(g);
  std::vector<Z2Matrix> gens;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << (2 * g)); ++bits) {
    gens.push_back(transvection_mod2(Z2Vec{g, bits}));
  }

  std::unordered_set<Key, KeyHash> seen;
  seen.reserve(1u << 21);
  std::deque<Z2Matrix> frontier;

  Z2Matrix id = z2_identity(g);
  seen.insert(pack(id));
  visit(id);
  frontier.push_back(id);

  while (!frontier.empty()) {
    Z2Matrix m = std::move(frontier.front());
    frontier.pop_front();
    for (const Z2Matrix& t : gens) {
      Z2Matrix next = mul(t, m);
      if (seen.insert(pack(next)).second) {
        if (seen.size() > 2'000'000) {
          throw std::runtime_error("closure exceeded the element limit");
        }
        visit(next);
        frontier.push_back(std::move(next));
      }
    }
  }
}

}  // namespace

SpClosureStats sp_closure_stats(int g) {
  SpClosureStats stats;
  sp_bfs_visit(g, [&stats](const Z2Matrix& m) {
    ++stats.sp_order;
    if (stabilizes_q0(m)) ++stats.stabilizer_order;
  });
  return stats;
}

std::vector<Z2Matrix> orthogonal_stabilizer_elements(int g) {
  std::vector<Z2Matrix> out;
  sp_bfs_visit(g, [&out](const Z2Matrix& m) {
    if (stabilizes_q0(m)) out.push_back(m);
  });
  return out;
}

std::uint64_t sp_order_formula(int g) {
  checked_genus(g);
  std::uint64_t order = std::uint64_t{1} << (g * g);
  for (int i = 1; i <= g; ++i) {
    order *= (std::uint64_t{1} << (2 * i)) - 1;
  }
  return order;
}

}  // namespace spinmcg
