#include "zagreb/canonical.hpp"

#include <algorithm>

namespace zagreb {

std::string CanonicalCode::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((bits_.size() + 3) / 4);
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits_.size() && bits_[i + j] == '1') nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

std::vector<Vertex> centroids(const Tree& t) {
  const int n = t.order();
  // Iterative DFS from 0 to get subtree sizes.
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (Vertex y : t.neighbors(x)) {
      if (y != parent[x]) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) size[parent[*it]] += size[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (Vertex y : t.neighbors(v)) {
      if (y != parent[v]) heaviest = std::max(heaviest, size[y]);
    }
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

std::string rooted_code(const Tree& t, Vertex root, Vertex parent) {
  // Post-order over the component of `root` that avoids `parent`.
  std::vector<Vertex> up(t.order(), -1), order;
  std::vector<Vertex> stack{root};
  up[root] = parent;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (Vertex y : t.neighbors(x)) {
      if (y != up[x]) {
        up[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(t.order());
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string code = "1";
    for (auto& k : kids) code += k;
    code += '0';
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) {
      result = std::move(code);
    } else {
      child_codes[up[v]].push_back(std::move(code));
    }
  }
  return result;
}

CanonicalCode canonical_code(const Tree& t) {
  auto cs = centroids(t);
  if (cs.size() == 1) return CanonicalCode(rooted_code(t, cs[0], -1));
  auto a = rooted_code(t, cs[0], cs[1]);
  auto b = rooted_code(t, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return CanonicalCode(a + b);
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace zagreb
