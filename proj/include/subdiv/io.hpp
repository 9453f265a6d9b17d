//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_IO_HPP
#define SUBDIV_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list format: "p <n> <m>", then m lines "e <u> <v>" (0-based);
// lines starting with "c" are comments. Face lines "f v1 v2 ..." may follow
// and are collected into `faces` when non-null, otherwise rejected.
Graph parse_edge_list(std::istream& in, const std::string& source = "<input>",
                      std::vector<std::vector<Vertex>>* faces = nullptr);
Graph read_edge_list_file(const std::string& path,
                          std::vector<std::vector<Vertex>>* faces = nullptr);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::vector<Vertex>>* faces = nullptr);
std::string to_edge_list(const Graph& g);

}  // namespace subdiv

#endif  // SUBDIV_IO_HPP
