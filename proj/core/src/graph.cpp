#include "dihedra/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dihedra {

Graph::Graph(std::size_t vertex_count)
    : vertex_count_(vertex_count),
      words_per_row_((vertex_count + 63) / 64),
      rows_(vertex_count * ((vertex_count + 63) / 64), 0),
      neighbors_(vertex_count) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adjacent(u, v)) return;
  rows_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
  auto& nu = neighbors_[u];
  nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
  auto& nv = neighbors_[v];
  nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertex_count_; ++u) {
    for (const std::size_t v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::int64_t> Graph::adjacency_matrix() const {
  std::vector<std::int64_t> a(vertex_count_ * vertex_count_, 0);
  for (std::size_t u = 0; u < vertex_count_; ++u) {
    for (const std::size_t v : neighbors_[u]) a[u * vertex_count_ + v] = 1;
  }
  return a;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  Graph out(vertex_count_);
  for (const auto& [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const std::size_t v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    for (std::size_t v = 0; const int d : bfs_distances(g, s)) {
      if (d >= 0) seen[v] = true;
      ++v;
    }
  }
  return components;
}

bool is_connected_bfs(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  const std::vector<int> dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const std::size_t v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const std::size_t v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace dihedra
