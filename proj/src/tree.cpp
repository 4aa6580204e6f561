#include "zagreb/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace zagreb {
namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Tree Tree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw TreeError("tree must have at least one vertex, got n=" + std::to_string(n));
  if (static_cast<long>(edges.size()) != n - 1) {
    throw TreeError("expected " + std::to_string(n - 1) + " edges for n=" + std::to_string(n) +
                    ", got " + std::to_string(edges.size()));
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    auto [u, v] = e;
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw TreeError("edge " + edge_text(e) + " has endpoint out of range 0.." +
                      std::to_string(n - 1));
    }
    if (u == v) throw TreeError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw TreeError("duplicate edge " + edge_text({std::min(v, *dup), std::max(v, *dup)}));
    }
  }
  // n-1 edges plus connectivity implies acyclic; a cycle shows up as an
  // unreached vertex.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) {
    throw TreeError("edges contain a cycle: graph is disconnected (" + std::to_string(reached) +
                    " of " + std::to_string(n) + " vertices reachable from 0)");
  }
  return Tree(std::move(adj));
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int Tree::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(adjacency_.size() ? adjacency_.size() - 1 : 0);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Tree::degrees() const {
  std::vector<int> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = static_cast<int>(adjacency_[v].size());
  return out;
}

std::vector<int> distances_from(const Tree& t, Vertex v) {
  if (!t.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::vector<int> dist(t.order(), -1);
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
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

std::vector<std::vector<int>> distance_matrix(const Tree& t) {
  std::vector<std::vector<int>> out;
  out.reserve(t.order());
  for (Vertex v = 0; v < t.order(); ++v) out.push_back(distances_from(t, v));
  return out;
}

namespace {

Vertex farthest(const std::vector<int>& dist) {
  return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

int diameter(const Tree& t) {
  auto from_zero = distances_from(t, 0);
  auto a = farthest(from_zero);
  auto from_a = distances_from(t, a);
  return from_a[farthest(from_a)];
}

std::vector<Vertex> diametral_path(const Tree& t) {
  const int n = t.order();
  if (n == 1) return {0};
  auto a = farthest(distances_from(t, 0));
  auto da = distances_from(t, a);
  auto b = farthest(da);
  auto db = distances_from(t, b);
  const int diam = da[b];

  Vertex start = 0;
  while (std::max(da[start], db[start]) != diam) ++start;

  // Root at `start`; deepest[v] is the largest depth reachable inside v's subtree.
  auto depth = distances_from(t, start);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return depth[x] > depth[y]; });
  std::vector<int> deepest = depth;
  for (Vertex v : order) {
    for (Vertex w : t.neighbors(v)) {
      if (depth[w] == depth[v] - 1) deepest[w] = std::max(deepest[w], deepest[v]);
    }
  }

  std::vector<Vertex> path{start};
  Vertex cur = start;
  while (depth[cur] < diam) {
    for (Vertex w : t.neighbors(cur)) {  // sorted, so first hit is smallest
      if (depth[w] == depth[cur] + 1 && deepest[w] == diam) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<Vertex> pendant_vertices(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != t.order()) {
    throw std::invalid_argument("permutation size does not match tree order");
  }
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
  return Tree::from_edges(t.order(), edges);
}

Tree remove_leaf(const Tree& t, Vertex v) {
  if (!t.contains(v) || t.order() < 2 || t.degree(v) != 1) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not a pendant vertex");
  }
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) {
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  }
  return Tree::from_edges(t.order() - 1, edges);
}

Tree induced_subtree(const Tree& t, std::span<const Vertex> keep) {
  std::vector<Vertex> ids(t.order(), -1);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) ids[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) {
    if (ids[a] >= 0 && ids[b] >= 0) edges.emplace_back(ids[a], ids[b]);
  }
  return Tree::from_edges(static_cast<int>(sorted.size()), edges);
}

}  // namespace zagreb
