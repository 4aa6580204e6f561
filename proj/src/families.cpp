#include "zagreb/families.hpp"

#include <algorithm>
#include <string>

#include "zagreb/canonical.hpp"

namespace zagreb {
namespace {

std::string params(int n, int k, int s) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", s=" + std::to_string(s) + ")";
}

void check_nks(int n, int k, int s) {
  if (k < 1 || s < 1) throw FamilyError("t_nks requires k >= 1 and s >= 1 " + params(n, k, s));
  if (n < (k + 1) * s) throw FamilyError("t_nks requires n >= (k+1)s " + params(n, k, s));
}

// Appends a path of `length` new vertices hanging from `anchor`.
void hang_path(std::vector<Edge>& edges, int& next, Vertex anchor, int length) {
  Vertex prev = anchor;
  for (int i = 0; i < length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
}

}  // namespace

Tree path(int n) {
  if (n < 1) throw FamilyError("path requires n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, edges);
}

Tree star(int n) {
  if (n < 2) throw FamilyError("star requires n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree::from_edges(n, edges);
}

Tree t_nks(int n, int k, int s) {
  check_nks(n, k, s);
  if (n - k * s < 3) return path(n);
  std::vector<Edge> edges;
  int next = 1;
  hang_path(edges, next, 0, k);
  for (int i = 1; i < s; ++i) hang_path(edges, next, 0, k + 1);
  for (int i = 0; i < n - (k + 1) * s; ++i) hang_path(edges, next, 0, 1);
  return Tree::from_edges(n, edges);
}

Tree t_a_nk2(int n, int k, int a) {
  if (k < 1) throw FamilyError("t_a_nk2 requires k >= 1");
  if (n < 2 * k + 2) throw FamilyError("t_a_nk2 requires n >= 2k+2, got n=" + std::to_string(n));
  if (a < 1 || a > k) throw FamilyError("t_a_nk2 requires 1 <= a <= k, got a=" + std::to_string(a));
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * k + 1; ++i) edges.emplace_back(i, i + 1);
  for (int v = 2 * k + 2; v < n; ++v) edges.emplace_back(a, v);
  return Tree::from_edges(n, edges);
}

Tree corona(const Tree& base, int k) {
  if (k < 1) throw FamilyError("corona requires k >= 1");
  const int m = base.order();
  std::vector<Edge> edges = base.edges();
  int next = m;
  for (Vertex i = 0; i < m; ++i) hang_path(edges, next, i, k);
  return Tree::from_edges(m * (k + 1), edges);
}

std::optional<Tree> corona_decompose(const Tree& t, int k) {
  if (k < 1) throw FamilyError("corona_decompose requires k >= 1");
  const int n = t.order();
  if (n % (k + 1) != 0) return std::nullopt;
  const int m = n / (k + 1);
  if (m == 1) {
    if (diameter(t) == n - 1) return path(1);
    return std::nullopt;
  }

  // With |R| >= 2 every leaf of R∘k ends one of the attached paths.
  auto leaves = pendant_vertices(t);
  if (static_cast<int>(leaves.size()) != m) return std::nullopt;
  std::vector<char> in_copy(n, 0);
  std::vector<Vertex> attach;
  for (Vertex leaf : leaves) {
    Vertex prev = -1, cur = leaf;
    for (int step = 0; step < k; ++step) {
      if (in_copy[cur]) return std::nullopt;
      if (step > 0 && t.degree(cur) != 2) return std::nullopt;
      in_copy[cur] = 1;
      Vertex nxt = -1;
      for (Vertex y : t.neighbors(cur)) {
        if (y != prev) nxt = y;
      }
      if (nxt < 0) return std::nullopt;
      prev = cur;
      cur = nxt;
    }
    attach.push_back(cur);
  }
  std::sort(attach.begin(), attach.end());
  if (std::adjacent_find(attach.begin(), attach.end()) != attach.end()) return std::nullopt;
  for (Vertex a : attach) {
    if (in_copy[a]) return std::nullopt;
  }

  std::optional<Tree> base;
  try {
    base = induced_subtree(t, attach);
  } catch (const TreeError&) {
    return std::nullopt;
  }
  if (!is_isomorphic(corona(*base, k), t)) return std::nullopt;
  return base;
}

ExactNat closed_form_pi1(int n, int k, int s) {
  check_nks(n, k, s);
  const auto center = static_cast<std::uint64_t>(n - k * s);
  return ExactNat::pow(4, k * s - 1) * ExactNat(center * center);
}

ExactNat closed_form_pi2(int n, int k, int s) {
  check_nks(n, k, s);
  const int center = n - k * s;
  return ExactNat::pow(4, k * s - 1) * ExactNat::pow(static_cast<std::uint64_t>(center), center);
}

}  // namespace zagreb
