// Copyright 2026 The mycsym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mycsym/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace mycsym {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    auto& cell = matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell) continue;
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++num_edges_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& vertices) const {
  std::vector<int> pos(n_, -1);
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) {
    pos[vertices[k]] = k;
  }
  std::vector<Edge> out;
  for (const auto& [u, v] : edges()) {
    if (pos[u] >= 0 && pos[v] >= 0) out.emplace_back(pos[u], pos[v]);
  }
  return Graph(static_cast<int>(vertices.size()), out);
}

Graph Graph::relabeled(const std::vector<int>& image) const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [u, v] : edges()) out.emplace_back(image[u], image[v]);
  return Graph(n_, out);
}

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x]) {
      throw GraphError("not a permutation");
    }
    seen[x] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Perm(std::move(image));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Perm(std::move(inv));
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Graph parse_edge_list(std::string_view text, int n) {
  std::vector<Edge> edges;
  int line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    auto tokens = split_ws(strip_comment(line));
    if (tokens.empty()) continue;
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) ||
        !parse_int(tokens[1], v)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": vertex index out of range");
    }
    if (u == v) {
      throw ParseError("line " + std::to_string(line_no) + ": loop edge");
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph parse_edge_list_file(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && split_ws(strip_comment(lines[k])).empty()) ++k;
  if (k == lines.size()) throw ParseError("empty edge-list file");
  auto header = split_ws(strip_comment(lines[k]));
  int n = 0;
  if (header.size() != 1 || !parse_int(header[0], n) || n < 0) {
    throw ParseError("edge-list header must be the vertex count");
  }
  std::size_t offset = 0;
  for (std::size_t i = 0; i <= k; ++i) offset += lines[i].size() + 1;
  offset = std::min(offset, text.size());
  return parse_edge_list(text.substr(offset), n);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle_graph requires n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int m) {
  if (m < 0) throw GraphError("star_graph requires m >= 0");
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= m; ++leaf) edges.emplace_back(0, leaf);
  return Graph(m + 1, edges);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  for (const auto& [u, v] : h.edges()) {
    edges.emplace_back(u + g.order(), v + g.order());
  }
  return Graph(g.order() + h.order(), edges);
}

VertexSet open_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
  return g.neighbors(v);
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (g.size() != static_cast<std::size_t>(n - 1)) return false;
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) == n - 1) return true;
  }
  return false;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> queue;
    queue.push(s);
    comp[s] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      out[id].push_back(v);
      for (int u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = id;
          queue.push(u);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace mycsym
