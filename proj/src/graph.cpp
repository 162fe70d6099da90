#include "kmatch/graph.hpp"

#include "kmatch/error.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace kmatch {

Graph::Graph(int n) : n_(n) {
  if (n < 1)
    throw input_error("graph order must be positive, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::set_edge(int a, int b) {
  if (a < 1 || a > n_ || b < 1 || b > n_)
    throw input_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") out of range 1.." + std::to_string(n_));
  if (a == b)
    throw input_error("self-loop at vertex " + std::to_string(a));
  adj_[index(a, b)] = 1;
  adj_[index(b, a)] = 1;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adj(i, j))
        out.emplace_back(i, j);
  return out;
}

int Graph::edge_count() const {
  int m = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      m += adj(i, j);
  return m;
}

Graph from_edge_list(int n, const std::vector<Graph::Edge>& edges) {
  Graph g(n);
  for (auto [a, b] : edges)
    g.set_edge(a, b);
  return g;
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::path;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "complete") return GraphKind::complete;
  if (name == "random") return GraphKind::random;
  throw input_error("unknown graph kind '" + std::string(name) + "'");
}

Graph generate(GraphKind kind, int n, double p, std::uint64_t seed) {
  if (n < 1)
    throw input_error("graph order must be positive");
  std::vector<Graph::Edge> edges;
  switch (kind) {
  case GraphKind::path:
    for (int i = 1; i < n; ++i)
      edges.emplace_back(i, i + 1);
    break;
  case GraphKind::cycle:
    if (n < 3)
      throw input_error("cycle needs at least 3 vertices");
    for (int i = 1; i < n; ++i)
      edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    break;
  case GraphKind::complete:
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        edges.emplace_back(i, j);
    break;
  case GraphKind::random: {
    if (!(p >= 0.0 && p <= 1.0))
      throw input_error("edge probability must lie in [0,1]");
    // Top 53 bits as a uniform double in [0,1); distribution objects are
    // implementation-defined, so they are avoided for reproducibility.
    std::mt19937_64 rng(seed);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p)
          edges.emplace_back(i, j);
      }
    break;
  }
  }
  return from_edge_list(n, edges);
}

namespace {

constexpr int g6_bias = 63;

} // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n')
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<"))
    text.remove_prefix(10);
  if (text.empty())
    throw parse_error("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    int c = static_cast<unsigned char>(text[i]);
    if (c < g6_bias || c > 126)
      throw parse_error("graph6: byte out of range 63..126", i);
  }
  if (text[0] == 126)
    throw parse_error("graph6: multi-byte order (n > 62) is not supported", 0);
  int n = text[0] - g6_bias;
  if (n < 1)
    throw parse_error("graph6: graph order must be positive", 0);
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw parse_error("graph6: expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(text.size()),
                      std::min(text.size(), expected));
  std::vector<Graph::Edge> edges;
  std::size_t bit = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, ++bit) {
      int byte = text[1 + bit / 6] - g6_bias;
      if (byte & (0x20 >> (bit % 6)))
        edges.emplace_back(i, j);
    }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    int last = text.back() - g6_bias;
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw parse_error("graph6: nonzero padding bits", text.size() - 1);
  }
  return from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  if (n > 62)
    throw capacity_error("graph6 writer supports n <= 62");
  std::string out(1, static_cast<char>(n + g6_bias));
  int acc = 0, used = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | g.adj(i, j);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + g6_bias));
        acc = used = 0;
      }
    }
  if (used > 0)
    out.push_back(static_cast<char>((acc << (6 - used)) + g6_bias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, m = 0;
  if (!(in >> n >> m))
    throw input_error("edge list: expected header 'n m'");
  if (m < 0)
    throw input_error("edge list: negative edge count");
  std::vector<Graph::Edge> edges;
  for (int e = 0; e < m; ++e) {
    int a = 0, b = 0;
    if (!(in >> a >> b))
      throw input_error("edge list: expected " + std::to_string(m) + " edges, read " +
                        std::to_string(e));
    edges.emplace_back(a, b);
  }
  return from_edge_list(n, edges);
}

std::string to_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [a, b] : edges)
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

DegreeVector degree_vector(const Graph& g) {
  DegreeVector d(g.n(), 0);
  for (int p = 1; p <= g.n(); ++p)
    for (int j = 1; j <= g.n(); ++j)
      d[p - 1] += g.adj(j, p);
  return d;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Graph::Edge> edges;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if (mask >> bit & 1)
        edges.emplace_back(i, j);
  return from_edge_list(n, edges);
}

std::uint64_t graph_count(int n) {
  if (n < 1)
    throw input_error("graph order must be positive");
  if (n > max_enumeration_order)
    throw capacity_error("exhaustive graph enumeration is limited to n <= " +
                         std::to_string(max_enumeration_order));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& visit) {
  std::uint64_t total = graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    visit(graph_from_mask(n, mask));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return parts;
    start = pos + 1;
  }
}

template <typename T>
T parse_number(const std::string& s, const char* what) {
  std::istringstream in(s);
  T v{};
  if (!(in >> v) || !in.eof())
    throw input_error(std::string("graph spec: bad ") + what + " '" + s + "'");
  return v;
}

} // namespace

Graph load_graph_spec(std::string_view spec) {
  if (spec.starts_with("graph6:"))
    return parse_graph6(spec.substr(7));
  if (spec.starts_with("gen:")) {
    auto parts = split(spec.substr(4), ':');
    if (parts.size() < 2 || parts.size() > 4)
      throw input_error("graph spec: expected gen:KIND:N[:P][:SEED]");
    GraphKind kind = parse_graph_kind(parts[0]);
    int n = parse_number<int>(parts[1], "order");
    double p = parts.size() > 2 ? parse_number<double>(parts[2], "probability") : 0.0;
    std::uint64_t seed = parts.size() > 3 ? parse_number<std::uint64_t>(parts[3], "seed") : 0;
    return generate(kind, n, p, seed);
  }
  std::string path(spec);
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("graph spec: cannot read file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first])))
    return parse_edge_list(text);
  auto end = text.find_last_not_of(" \t\r\n");
  return parse_graph6(first == std::string::npos ? std::string_view{}
                                                 : std::string_view(text).substr(first, end - first + 1));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw input_error("relabel: permutation size mismatch");
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : g.edges())
    edges.emplace_back(perm[a - 1], perm[b - 1]);
  return from_edge_list(g.n(), edges);
}

Graph add_isolated(const Graph& g, int extra) {
  if (extra < 0)
    throw input_error("add_isolated: negative vertex count");
  return from_edge_list(g.n() + extra, g.edges());
}

} // namespace kmatch
