#include "chaindeck/digraph.hpp"

#include <set>
#include <stdexcept>

#include "json.hpp"

namespace chaindeck {

std::vector<Arc> all_arcs(int n) {
  if (n < 2) throw std::domain_error("complete digraph needs n >= 2, got n=" + std::to_string(n));
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (u != v) arcs.push_back({u, v});
  return arcs;
}

DirectedPath::DirectedPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2)
    throw std::invalid_argument("directed path needs at least two vertices");
  std::set<Vertex> seen;
  for (Vertex v : vertices_) {
    if (v < 1) throw std::invalid_argument("vertex index must be positive, got " + std::to_string(v));
    if (!seen.insert(v).second)
      throw std::invalid_argument("repeated vertex " + std::to_string(v) + " in path");
  }
}

std::vector<Arc> DirectedPath::arcs() const {
  std::vector<Arc> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    out.push_back({vertices_[i], vertices_[i + 1]});
  return out;
}

DirectedPath DirectedPath::reversed() const {
  return DirectedPath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

Decomposition::Decomposition(int n, std::vector<DirectedPath> paths)
    : n_(n), paths_(std::move(paths)) {
  if (n_ < 2) throw std::invalid_argument("decomposition needs n >= 2, got n=" + std::to_string(n_));
  for (const auto& p : paths_)
    for (Vertex v : p.vertices())
      if (v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
}

Decomposition parse_decomposition(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("decomposition is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("paths") || doc.size() != 2)
    throw std::invalid_argument(R"(decomposition document must be {"n":..., "paths":[...]})");
  if (!doc["n"].is_number_integer())
    throw std::invalid_argument("\"n\" must be an integer");
  if (!doc["paths"].is_array())
    throw std::invalid_argument("\"paths\" must be an array of vertex arrays");
  int n = doc["n"].get<int>();
  std::vector<DirectedPath> paths;
  for (const auto& item : doc["paths"]) {
    if (!item.is_array())
      throw std::invalid_argument("each path must be an array of vertex indices");
    std::vector<Vertex> vs;
    for (const auto& v : item) {
      if (!v.is_number_integer())
        throw std::invalid_argument("vertex indices must be integers");
      vs.push_back(v.get<int>());
    }
    paths.emplace_back(std::move(vs));
  }
  return Decomposition(n, std::move(paths));
}

std::string emit_decomposition(const Decomposition& d) {
  nlohmann::ordered_json doc;
  doc["n"] = d.n();
  auto paths = nlohmann::ordered_json::array();
  for (const auto& p : d.paths()) paths.push_back(p.vertices());
  doc["paths"] = std::move(paths);
  return doc.dump() + "\n";
}

std::string to_dot(const Decomposition& d) {
  std::string out = "digraph decomposition {\n";
  for (std::size_t i = 0; i < d.paths().size(); ++i)
    for (const Arc& a : d.paths()[i].arcs())
      out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) +
             " [part=" + std::to_string(i + 1) + "];\n";
  out += "}\n";
  return out;
}

}  // namespace chaindeck
