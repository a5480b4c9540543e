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

#include "mycsym/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mycsym {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxLongOrder = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMaxLongOrder) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    throw GraphError("graph6 encoding supports at most 258047 vertices");
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty string");
  for (char c : text) {
    const int byte = static_cast<unsigned char>(c);
    if (byte < kBias || byte > 126) {
      throw ParseError("graph6: non-printable or out-of-range character");
    }
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("graph6: orders above 258047 are not supported");
    }
    if (text.size() < 4) throw ParseError("graph6: truncated length header");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kBias);
    if (n <= kMaxShortOrder) throw ParseError("graph6: bad length byte");
    pos = 4;
  } else {
    n = text[0] - kBias;
    pos = 1;
  }
  const std::size_t num_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t num_bytes = (num_bits + 5) / 6;
  if (text.size() - pos < num_bytes) {
    throw ParseError("graph6: truncated bit stream");
  }
  if (text.size() - pos > num_bytes) {
    throw ParseError("graph6: trailing characters after bit stream");
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    if (!line.empty()) out.push_back(parse_graph6(line));
    start = end + 1;
  }
  return out;
}

std::vector<Graph> parse_graph_file(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') {
      bool all_digits = true;
      for (char c : line) all_digits = all_digits && std::isdigit(static_cast<unsigned char>(c));
      if (all_digits) return {parse_edge_list_file(text)};
      return parse_graph6_lines(text);
    }
    start = end + 1;
  }
  throw ParseError("graph file contains no graph");
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

}  // namespace mycsym
