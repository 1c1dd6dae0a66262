#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chaindeck {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

// All n(n-1) arcs of the complete digraph on vertices 1..n, in ascending
// (tail, head) order. Throws std::domain_error for n < 2.
std::vector<Arc> all_arcs(int n);

// A directed path given by its vertex sequence: at least two vertices, all
// distinct, all positive. Membership in a particular ambient order is checked
// by Decomposition.
class DirectedPath {
 public:
  explicit DirectedPath(std::vector<Vertex> vertices);

  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Arc> arcs() const;
  DirectedPath reversed() const;

  bool operator==(const DirectedPath&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

// A claimed decomposition of the arc set of the complete digraph on n
// vertices. Construction only checks well-formedness (vertex ranges); whether
// the paths really partition the arcs is the verifier's job.
class Decomposition {
 public:
  Decomposition(int n, std::vector<DirectedPath> paths);

  int n() const { return n_; }
  const std::vector<DirectedPath>& paths() const { return paths_; }

  bool operator==(const Decomposition&) const = default;

 private:
  int n_;
  std::vector<DirectedPath> paths_;
};

// Canonical JSON form: {"n": <int>, "paths": [[<int>,...],...]}, field order
// fixed, newline-terminated. parse accepts exactly this schema.
Decomposition parse_decomposition(const std::string& text);
std::string emit_decomposition(const Decomposition& d);

// GraphViz export; every arc carries a 1-based part id attribute.
std::string to_dot(const Decomposition& d);

}  // namespace chaindeck
