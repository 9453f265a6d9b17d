//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace subdiv {

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

long long read_int(std::istringstream& fields, const std::string& source, int line,
                   const char* name) {
  long long v = 0;
  if (!(fields >> v)) throw ParseError(source, line, std::string("expected integer ") + name);
  return v;
}

void expect_end(std::istringstream& fields, const std::string& source, int line) {
  std::string extra;
  if (fields >> extra) throw ParseError(source, line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source,
                      std::vector<std::vector<Vertex>>* faces) {
  std::string text;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream fields(text);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (have_header) throw ParseError(source, line_no, "second header line");
      n = read_int(fields, source, line_no, "n");
      m = read_int(fields, source, line_no, "m");
      expect_end(fields, source, line_no);
      if (n < 0 || m < 0) throw ParseError(source, line_no, "negative size in header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(source, line_no, "edge before header");
      long long u = read_int(fields, source, line_no, "u");
      long long v = read_int(fields, source, line_no, "v");
      expect_end(fields, source, line_no);
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError(source, line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
      if (u == v) throw ParseError(source, line_no, "self-loop at " + std::to_string(u));
      Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!seen.insert(e).second)
        throw ParseError(source, line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      edges.push_back(e);
    } else if (tag == "f") {
      if (!faces) throw ParseError(source, line_no, "face line in a plain edge list");
      std::vector<Vertex> face;
      long long v = 0;
      while (fields >> v) {
        if (v < 0 || v >= n) throw ParseError(source, line_no, "face vertex out of range");
        face.push_back(static_cast<Vertex>(v));
      }
      if (!fields.eof()) throw ParseError(source, line_no, "malformed face line");
      if (face.size() < 3) throw ParseError(source, line_no, "face needs at least 3 vertices");
      faces->push_back(std::move(face));
    } else {
      throw ParseError(source, line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(source, line_no, "missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(source, line_no,
                     "header promises " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_edge_list_file(const std::string& path, std::vector<std::vector<Vertex>>* faces) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_edge_list(in, path, faces);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::vector<Vertex>>* faces) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (faces) {
    for (const auto& f : *faces) {
      out << 'f';
      for (Vertex v : f) out << ' ' << v;
      out << '\n';
    }
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace subdiv
