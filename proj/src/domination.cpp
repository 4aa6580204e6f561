#include "zagreb/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace zagreb {
namespace {

constexpr int kNone = std::numeric_limits<int>::min() / 2;

void check_radius(int k) {
  if (k < 1) throw std::invalid_argument("radius k must be >= 1, got " + std::to_string(k));
}

void check_members(const Tree& t, std::span<const Vertex> set) {
  if (set.empty()) throw std::invalid_argument("dominating set must be nonempty");
  for (Vertex v : set) {
    if (!t.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
}

// Multi-source BFS distance to the nearest member of `sources`.
std::vector<int> nearest_distance(const Tree& t, std::span<const Vertex> sources) {
  std::vector<int> dist(t.order(), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : t.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_k_dominating(const Tree& t, std::span<const Vertex> dominators, int k) {
  check_radius(k);
  check_members(t, dominators);
  auto dist = nearest_distance(t, dominators);
  return std::all_of(dist.begin(), dist.end(), [k](int d) { return d <= k; });
}

DominationResult gamma_k(const Tree& t, int k) {
  check_radius(k);
  const int n = t.order();

  std::vector<Vertex> order{0}, parent(n, -1);
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex x = order[i];
    for (Vertex y : t.neighbors(x)) {
      if (y != parent[x]) {
        parent[y] = x;
        order.push_back(y);
      }
    }
  }

  // coverage: k minus distance to the nearest chosen vertex below, or kNone.
  // demand: distance to the farthest still-uncovered vertex below, or kNone.
  std::vector<int> coverage(n, kNone), demand(n, kNone);
  std::vector<char> chosen(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    int cov = kNone, dem = kNone;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent[v]) continue;
      if (coverage[c] != kNone) cov = std::max(cov, coverage[c] - 1);
      if (demand[c] != kNone) dem = std::max(dem, demand[c] + 1);
    }
    if (cov < 0) dem = std::max(dem, 0);
    if (cov >= dem) dem = kNone;
    if (dem == k || (v == 0 && dem >= 0)) {
      chosen[v] = 1;
      cov = k;
      dem = kNone;
    }
    coverage[v] = cov;
    demand[v] = dem;
  }

  DominationResult result;
  for (Vertex v = 0; v < n; ++v) {
    if (chosen[v]) result.witness.push_back(v);
  }
  result.gamma = static_cast<int>(result.witness.size());
  return result;
}

int gamma_k_bruteforce(const Tree& t, int k, int cap) {
  check_radius(k);
  const int n = t.order();
  if (n > cap || n > 31) {
    throw std::invalid_argument("brute-force oracle cap exceeded: n=" + std::to_string(n) +
                                " > cap=" + std::to_string(cap));
  }
  auto dist = distance_matrix(t);
  std::vector<std::uint32_t> ball(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (dist[u][v] <= k) ball[u] |= 1u << v;
    }
  }
  const std::uint32_t full = (1u << n) - 1;
  for (int size = 1; size <= n; ++size) {
    // Gosper's hack over all n-bit masks with `size` bits set.
    std::uint32_t mask = (1u << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      std::uint32_t covered = 0;
      for (std::uint32_t m = mask; m; m &= m - 1) covered |= ball[std::countr_zero(m)];
      if (covered == full) return size;
      std::uint32_t low = mask & (~mask + 1);
      std::uint32_t ripple = mask + low;
      if (ripple == 0) break;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return n;
}

RemovablePendants removable_pendants(const Tree& t, int k) {
  check_radius(k);
  if (t.order() < 2) throw std::invalid_argument("removable_pendants requires n >= 2");
  const int base = gamma_k(t, k).gamma;
  RemovablePendants out;
  for (Vertex w : pendant_vertices(t)) {
    if (gamma_k(remove_leaf(t, w), k).gamma == base) {
      out.pendants.push_back(w);
      out.neighbors.push_back(t.neighbors(w)[0]);
    }
  }
  std::sort(out.neighbors.begin(), out.neighbors.end());
  out.neighbors.erase(std::unique(out.neighbors.begin(), out.neighbors.end()), out.neighbors.end());
  return out;
}

std::vector<Vertex> private_k_neighbors(const Tree& t, std::span<const Vertex> dominators, int k,
                                        Vertex u) {
  check_radius(k);
  check_members(t, dominators);
  if (std::find(dominators.begin(), dominators.end(), u) == dominators.end()) {
    throw std::invalid_argument("vertex " + std::to_string(u) + " is not in the dominating set");
  }
  std::vector<Vertex> others;
  for (Vertex x : dominators) {
    if (x != u) others.push_back(x);
  }
  auto from_u = distances_from(t, u);
  std::vector<int> from_others =
      others.empty() ? std::vector<int>(t.order(), std::numeric_limits<int>::max())
                     : nearest_distance(t, others);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (from_u[v] <= k && from_others[v] >= k + 1) out.push_back(v);
  }
  return out;
}

}  // namespace zagreb
