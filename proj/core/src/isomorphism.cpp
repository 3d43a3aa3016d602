#include "dihedra/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace dihedra {
namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), n_(a.vertex_count()) {}

  std::optional<std::vector<std::size_t>> run() {
    if (n_ != b_.vertex_count() || a_.edge_count() != b_.edge_count()) {
      return std::nullopt;
    }
    if (n_ == 0) return std::vector<std::size_t>{};
    std::vector<int> colors(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v) {
      colors[v] = static_cast<int>(degree(v));
    }
    if (!normalize(colors)) return std::nullopt;
    if (search(std::move(colors))) return result_;
    return std::nullopt;
  }

 private:
  // Union vertex u < n_ lives in a, u >= n_ in b.
  const std::vector<std::size_t>& neighbors(std::size_t u) const {
    return u < n_ ? a_.neighbors(u) : b_.neighbors(u - n_);
  }
  std::size_t degree(std::size_t u) const { return neighbors(u).size(); }
  std::size_t offset(std::size_t u) const { return u < n_ ? 0 : n_; }

  // Renames colors densely by sorted key and checks the two sides balance.
  template <typename Key>
  bool rename(const std::vector<Key>& keys, std::vector<int>& colors,
              std::size_t* distinct) {
    std::map<Key, int> ids;
    for (const auto& k : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> balance(ids.size(), 0);
    for (std::size_t v = 0; v < 2 * n_; ++v) {
      colors[v] = ids[keys[v]];
      balance[colors[v]] += v < n_ ? 1 : -1;
    }
    if (distinct != nullptr) *distinct = ids.size();
    return std::all_of(balance.begin(), balance.end(), [](int x) { return x == 0; });
  }

  bool normalize(std::vector<int>& colors) {
    return rename(std::vector<int>(colors), colors, nullptr);
  }

  // Color refinement to the coarsest equitable partition.
  bool refine(std::vector<int>& colors) {
    std::size_t cells = 0;
    {
      std::vector<int> sorted(colors);
      std::sort(sorted.begin(), sorted.end());
      cells = static_cast<std::size_t>(
          std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    while (true) {
      std::vector<std::pair<int, std::vector<int>>> keys(2 * n_);
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        keys[v].first = colors[v];
        auto& nb = keys[v].second;
        for (const std::size_t w : neighbors(v)) {
          nb.push_back(colors[w + offset(v)]);
        }
        std::sort(nb.begin(), nb.end());
      }
      std::size_t next_cells = 0;
      if (!rename(keys, colors, &next_cells)) return false;
      if (next_cells == cells) return true;
      cells = next_cells;
    }
  }

  bool individualize(std::vector<int>& colors, std::size_t va, std::size_t vb) {
    const std::vector<int> da = bfs_distances(a_, va);
    const std::vector<int> db = bfs_distances(b_, vb);
    std::vector<std::pair<int, int>> keys(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v) {
      const int dist = v < n_ ? da[v] : db[v - n_];
      keys[v] = {colors[v], dist};
    }
    // The chosen pair gets a color of its own.
    keys[va] = {-1, 0};
    keys[n_ + vb] = {-1, 0};
    return rename(keys, colors, nullptr);
  }

  bool search(std::vector<int> colors) {
    if (!refine(colors)) return false;

    // Target cell: the smallest non-singleton, lowest color on ties.
    std::vector<int> size(2 * n_, 0);
    for (std::size_t v = 0; v < n_; ++v) ++size[colors[v]];
    int target = -1;
    for (int c = 0; c < static_cast<int>(size.size()); ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }

    if (target < 0) {
      std::vector<std::size_t> by_color(2 * n_);
      for (std::size_t v = n_; v < 2 * n_; ++v) by_color[colors[v]] = v - n_;
      std::vector<std::size_t> perm(n_);
      for (std::size_t v = 0; v < n_; ++v) perm[v] = by_color[colors[v]];
      if (!is_isomorphism(a_, b_, perm)) return false;
      result_ = std::move(perm);
      return true;
    }

    std::size_t va = 0;
    while (colors[va] != target) ++va;
    for (std::size_t vb = 0; vb < n_; ++vb) {
      if (colors[n_ + vb] != target) continue;
      std::vector<int> child(colors);
      if (individualize(child, va, vb) && search(std::move(child))) return true;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::vector<std::size_t> result_;
};

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b,
                    const std::vector<std::size_t>& perm) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || perm.size() != n || a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (const std::size_t v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& [u, v] : a.edges()) {
    if (!b.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> brute_force_isomorphism(const Graph& a,
                                                                const Graph& b) {
  return IsomorphismSearch(a, b).run();
}

}  // namespace dihedra
