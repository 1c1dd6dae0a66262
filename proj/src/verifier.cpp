#include "chaindeck/verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace chaindeck {

std::string defect_kind_name(Defect::Kind kind) {
  switch (kind) {
    case Defect::Kind::MissingArc: return "missing_arc";
    case Defect::Kind::DuplicateArc: return "duplicate_arc";
    case Defect::Kind::OverlongPath: return "overlong_path";
    case Defect::Kind::Imbalance: return "imbalance";
  }
  return "unknown";
}

namespace {

std::string arc_str(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

VerificationReport verify(const Decomposition& d) {
  VerificationReport r;
  r.paths_valid = true;  // enforced by the Decomposition type
  const int n = d.n();

  std::map<Arc, std::vector<int>> owners;
  for (std::size_t i = 0; i < d.paths().size(); ++i)
    for (const Arc& a : d.paths()[i].arcs()) owners[a].push_back(static_cast<int>(i));

  for (const Arc& a : all_arcs(n)) {
    if (!owners.contains(a)) {
      r.failures.push_back({Defect::Kind::MissingArc, a, {}, "arc " + arc_str(a) + " is not covered"});
    }
  }
  for (const auto& [a, paths] : owners) {
    if (paths.size() > 1) {
      std::string who;
      for (int idx : paths) who += (who.empty() ? "" : ", ") + std::to_string(idx);
      r.failures.push_back({Defect::Kind::DuplicateArc, a, paths,
                            "arc " + arc_str(a) + " covered by paths " + who});
    }
  }
  r.is_partition = std::none_of(r.failures.begin(), r.failures.end(), [](const Defect& f) {
    return f.kind == Defect::Kind::MissingArc || f.kind == Defect::Kind::DuplicateArc;
  });

  r.non_hamiltonian = true;
  for (std::size_t i = 0; i < d.paths().size(); ++i) {
    int len = d.paths()[i].length();
    if (len > n - 2) {
      r.non_hamiltonian = false;
      r.failures.push_back({Defect::Kind::OverlongPath, std::nullopt, {static_cast<int>(i)},
                            "path " + std::to_string(i) + " has length " + std::to_string(len) +
                                " > n-2 = " + std::to_string(n - 2)});
    }
  }

  r.vertex_path_counts.assign(static_cast<std::size_t>(n), 0);
  for (const auto& p : d.paths())
    for (Vertex v : p.vertices()) ++r.vertex_path_counts[static_cast<std::size_t>(v) - 1];

  auto [lo, hi] = std::minmax_element(r.vertex_path_counts.begin(), r.vertex_path_counts.end());
  r.balanced = *lo == *hi;
  if (r.balanced) {
    r.k = *lo;
  } else {
    int lo_v = static_cast<int>(lo - r.vertex_path_counts.begin()) + 1;
    int hi_v = static_cast<int>(hi - r.vertex_path_counts.begin()) + 1;
    r.failures.push_back({Defect::Kind::Imbalance, std::nullopt, {},
                          "vertex " + std::to_string(hi_v) + " lies in " + std::to_string(*hi) +
                              " paths but vertex " + std::to_string(lo_v) + " in " +
                              std::to_string(*lo)});
  }

  if (n >= 3 && r.non_hamiltonian) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) - 2, 0);
    for (const auto& p : d.paths()) ++counts[static_cast<std::size_t>(p.length()) - 1];
    r.profile = LengthProfile(n, std::move(counts));
  }
  return r;
}

LengthProfile extract_profile(const Decomposition& d) {
  if (d.n() < 3)
    throw std::domain_error("profile undefined for n=" + std::to_string(d.n()));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d.n()) - 2, 0);
  for (const auto& p : d.paths()) {
    if (p.length() > d.n() - 2)
      throw std::domain_error("path of length " + std::to_string(p.length()) +
                              " is spanning for n=" + std::to_string(d.n()));
    ++counts[static_cast<std::size_t>(p.length()) - 1];
  }
  return LengthProfile(d.n(), std::move(counts));
}

std::string report_to_text(const VerificationReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += std::string("partition:        ") + yn(r.is_partition) + "\n";
  out += std::string("paths valid:      ") + yn(r.paths_valid) + "\n";
  out += std::string("non-hamiltonian:  ") + yn(r.non_hamiltonian) + "\n";
  out += std::string("balanced:         ") + yn(r.balanced) + "\n";
  out += "k:                " + (r.k ? std::to_string(*r.k) : std::string("-")) + "\n";
  out += "profile:          " + (r.profile ? r.profile->to_string() : std::string("-")) + "\n";
  out += "vertex counts:    ";
  for (std::size_t i = 0; i < r.vertex_path_counts.size(); ++i)
    out += (i ? "," : "") + std::to_string(r.vertex_path_counts[i]);
  out += "\n";
  if (!r.failures.empty()) {
    out += "defects:\n";
    for (const Defect& f : r.failures)
      out += "  [" + defect_kind_name(f.kind) + "] " + f.message + "\n";
  }
  return out;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json doc;
  doc["is_partition"] = r.is_partition;
  doc["paths_valid"] = r.paths_valid;
  doc["non_hamiltonian"] = r.non_hamiltonian;
  doc["vertex_path_counts"] = r.vertex_path_counts;
  doc["balanced"] = r.balanced;
  doc["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  doc["profile"] = r.profile ? nlohmann::ordered_json(r.profile->counts())
                             : nlohmann::ordered_json(nullptr);
  auto failures = nlohmann::ordered_json::array();
  for (const Defect& f : r.failures) {
    nlohmann::ordered_json item;
    item["kind"] = defect_kind_name(f.kind);
    if (f.arc) item["arc"] = {f.arc->tail, f.arc->head};
    if (!f.path_indices.empty()) item["paths"] = f.path_indices;
    item["message"] = f.message;
    failures.push_back(std::move(item));
  }
  doc["failures"] = std::move(failures);
  return doc.dump(2) + "\n";
}

}  // namespace chaindeck
