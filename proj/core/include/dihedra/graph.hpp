#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dihedra {

/// Simple undirected graph on vertices 0..N-1. Adjacency is kept both as
/// row-major bitsets (constant-time lookups) and as sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Adds {u, v}; repeated insertions are no-ops. Self-loops are rejected
  /// with std::invalid_argument.
  void add_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  }

  const std::vector<std::size_t>& neighbors(std::size_t u) const {
    return neighbors_[u];
  }
  std::size_t degree(std::size_t u) const { return neighbors_[u].size(); }

  /// Edges {u, v} with u < v, sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Dense 0/1 adjacency matrix, row-major.
  std::vector<std::int64_t> adjacency_matrix() const;

  /// Graph with vertex v of this graph renamed to perm[v].
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && rows_ == other.rows_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::size_t words_per_row_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, std::size_t source);

std::size_t component_count(const Graph& g);

/// True iff a single traversal from vertex 0 reaches every vertex. The
/// empty graph is reported as disconnected.
bool is_connected_bfs(const Graph& g);

/// A proper 2-coloring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// True iff `cycle` lists every vertex exactly once and consecutive entries
/// (including last -> first) are adjacent.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle);

}  // namespace dihedra
