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

#ifndef MYCSYM_GRAPH6_HPP_
#define MYCSYM_GRAPH6_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mycsym/graph.hpp"

namespace mycsym {

// graph6 as used by nauty's geng/showg. Orders up to 62 use the one-byte
// header; larger orders use the "~" + 18-bit form.
std::string encode_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph parse_graph6(std::string_view text);
// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Reads a graph file in either graph6 (one graph per line) or edge-list form
// ("n" on the first line, then "u v" lines). The edge-list form is chosen
// when the first non-blank line is a bare integer.
std::vector<Graph> parse_graph_file(std::string_view text);
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace mycsym

#endif  // MYCSYM_GRAPH6_HPP_
