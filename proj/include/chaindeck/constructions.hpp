#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chaindeck/digraph.hpp"
#include "chaindeck/spectrum.hpp"

namespace chaindeck {

// One stored construction: named path sets (P1, P1r, P2, ...) realizing a
// profile. Tables whose stored length-1 parts fall short of the declared
// x_1 are completed with the unused arcs as singletons at assembly time.
struct ConstructionTable {
  int n;
  LengthProfile profile;
  std::string source;  // subcase tag, e.g. "n5-1d"
  std::vector<std::pair<std::string, std::vector<DirectedPath>>> parts;
};

DirectedPath reverse_path(const DirectedPath& p);

// The bundled tables, sorted by source tag.
const std::vector<ConstructionTable>& stored_tables();
const ConstructionTable* find_table(int n, const LengthProfile& profile);

// Parts in stored order, then any singleton completion in ascending
// (tail, head) order.
Decomposition assemble(const ConstructionTable& table);

// All n(n-1) arcs as single-arc paths; balanced with k = 2(n-1).
Decomposition construct_trivial(int n);

// Decomposition for a supported (n, profile): the trivial profile for any
// n >= 3, or a stored table. Inadmissible profiles are rejected; admissible
// profiles without a stored table raise an error naming the nearest
// supported profiles.
Decomposition construct(int n, const LengthProfile& profile);

// Stored (profile, tag) pairs for this n, in tag order, followed by the
// trivial profile tagged "trivial".
std::vector<std::pair<LengthProfile, std::string>> list_supported(int n);

}  // namespace chaindeck
