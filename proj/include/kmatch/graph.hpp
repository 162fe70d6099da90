#ifndef KMATCH_GRAPH_HPP
#define KMATCH_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmatch {

/// Simple undirected graph on vertices 1..n, stored as a symmetric 0/1
/// adjacency matrix with zero diagonal. Immutable once built.
class Graph {
public:
  using Edge = std::pair<int, int>;

  explicit Graph(int n);

  int n() const { return n_; }
  /// Entry A[i][j], 1-indexed.
  int adj(int i, int j) const { return adj_[index(i, j)]; }
  std::vector<Edge> edges() const;
  int edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend Graph from_edge_list(int, const std::vector<Edge>&);
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  void set_edge(int a, int b);

  int n_;
  std::vector<std::uint8_t> adj_;
};

using DegreeVector = std::vector<long>;

Graph from_edge_list(int n, const std::vector<Graph::Edge>& edges);

enum class GraphKind { path, cycle, complete, random };

GraphKind parse_graph_kind(std::string_view name);

/// Deterministic: the random kind draws each of the C(n,2) pairs, in
/// (1,2),(1,3),...,(n-1,n) order, from mt19937_64(seed).
Graph generate(GraphKind kind, int n, double p = 0.0, std::uint64_t seed = 0);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "n m" header followed by m lines "a b".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

DegreeVector degree_vector(const Graph& g);

/// Graph whose edge bitmask over pairs in (1,2),(1,3),...,(n-1,n) order is `mask`.
Graph graph_from_mask(int n, std::uint64_t mask);

constexpr int max_enumeration_order = 7;

/// 2^{C(n,2)}; throws capacity_error for n > 7.
std::uint64_t graph_count(int n);

/// Visits every labeled simple graph on n vertices once, in edge-bitmask order.
void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& visit);

/// Graph from a command-line spec: "graph6:STR", "gen:KIND:N[:P][:SEED]", or a
/// file path holding either an edge list or a single graph6 line.
Graph load_graph_spec(std::string_view spec);

/// Vertex i of g becomes vertex perm[i-1] of the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// g plus `extra` isolated vertices numbered n+1..n+extra.
Graph add_isolated(const Graph& g, int extra);

} // namespace kmatch

#endif // KMATCH_GRAPH_HPP
