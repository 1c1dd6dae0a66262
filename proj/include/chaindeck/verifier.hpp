#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaindeck/digraph.hpp"
#include "chaindeck/spectrum.hpp"

namespace chaindeck {

struct Defect {
  enum class Kind { MissingArc, DuplicateArc, OverlongPath, Imbalance };

  Kind kind;
  std::optional<Arc> arc;         // MissingArc, DuplicateArc
  std::vector<int> path_indices;  // 0-based owners (DuplicateArc) or the one path (OverlongPath)
  std::string message;
};

std::string defect_kind_name(Defect::Kind kind);

// profile is present when the paths census is expressible, i.e. n >= 3 and
// every length is at most n-2; k is present exactly when balanced.
struct VerificationReport {
  bool is_partition = false;
  bool paths_valid = false;
  bool non_hamiltonian = false;
  std::vector<std::int64_t> vertex_path_counts;
  bool balanced = false;
  std::optional<std::int64_t> k;
  std::optional<LengthProfile> profile;
  std::vector<Defect> failures;

  bool ok() const { return failures.empty(); }
};

VerificationReport verify(const Decomposition& d);

// Census of path lengths; throws std::domain_error when a path is longer
// than n-2 (or n < 3, where no length is expressible).
LengthProfile extract_profile(const Decomposition& d);

std::string report_to_text(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);

}  // namespace chaindeck
