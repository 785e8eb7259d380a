#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccs {

// Hard cap of the bit-row adjacency representation: one 64-bit word per row.
inline constexpr int kMaxVertices = 64;

// Thrown by distance and eccentricity queries on graphs that are not
// connected. Distances of disconnected pairs are never encoded as sentinels.
class DisconnectedError : public std::runtime_error {
 public:
  explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

// Undirected simple graph on vertices 0..n-1. The neighborhood of each vertex
// is a single 64-bit mask, so complement, BFS and connectivity are word ops.
// Instances are immutable after construction except for add_edge.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  int degree(int v) const;
  std::uint64_t neighbor_bits(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  Graph complement() const;
  bool connected() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<std::uint64_t> rows_;
};

// Per-vertex eccentricities of a connected graph.
struct EccInfo {
  std::vector<int> ecc;
  int diameter = 0;
  int radius = 0;
};

// BFS distances from one source. Throws DisconnectedError if some vertex is
// unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// All-pairs distances, one BFS per vertex.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

EccInfo ecc_info(const Graph& g);

// A connected acyclic graph. Only constructible through from_graph or the
// builders below, so every instance satisfies the tree invariants.
class Tree {
 public:
  static Tree from_graph(Graph g);
  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

  bool operator==(const Tree&) const = default;

 private:
  explicit Tree(Graph g) : g_(std::move(g)) {}
  Graph g_;
};

Tree path_tree(int n);  // vertices 0..n-1, edges (i, i+1)
Tree star_tree(int n);  // center 0 adjacent to 1..n-1

// Diameter-3 double broom: path v0 v1 v2 v3 with `a` pendant vertices at v1
// and `b` at v2, a + b = n - 4, b >= a >= 0. Labels: v0..v3 = 0..3, then the
// a-block 4..3+a, then the b-block.
Tree double_broom3(int n, int a, int b);

// Diameter-d double broom, d >= 4: path v0..vd with `a` pendants at v1 and
// `b` pendants at v_{d-1}, a + b = n - d - 1, b >= a >= 0. Labels: v0..vd =
// 0..d, then the a-block, then the b-block.
Tree double_broom(int n, int d, int a, int b);

// The unique labeled tree on seq.size() + 2 vertices with the given Pruefer
// sequence (entries in 0..n-1).
Tree tree_from_pruefer(std::span<const int> seq);

// Edge-list text format: one "u v" pair per line, 0-indexed.
std::string format_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);
Tree tree_from_edge_list(const std::string& text);

// Pruefer sequences are exchanged as comma-separated integers.
std::vector<int> parse_pruefer_csv(const std::string& text);

}  // namespace eccs
