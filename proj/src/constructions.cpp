#include "chaindeck/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace chaindeck {

namespace detail {
extern const char* const kTableJson[];
extern const std::size_t kTableJsonCount;
}  // namespace detail

DirectedPath reverse_path(const DirectedPath& p) { return p.reversed(); }

namespace {

ConstructionTable parse_table(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  int n = doc.at("n").get<int>();
  LengthProfile profile(n, doc.at("profile").get<std::vector<std::int64_t>>());
  ConstructionTable table{n, profile, doc.at("source").get<std::string>(), {}};
  for (const auto& [name, paths] : doc.at("parts").items()) {
    std::vector<DirectedPath> part;
    for (const auto& path : paths) part.emplace_back(path.get<std::vector<Vertex>>());
    table.parts.emplace_back(name, std::move(part));
  }
  return table;
}

// The declared profile must match what assembly produces; guards the data
// files against accidental edits.
void validate_table(const ConstructionTable& table) {
  Decomposition d = assemble(table);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(table.n) - 2, 0);
  for (const auto& p : d.paths()) {
    if (p.length() > table.n - 2)
      throw std::runtime_error("table " + table.source + ": stored path longer than n-2");
    ++counts[static_cast<std::size_t>(p.length()) - 1];
  }
  if (LengthProfile(table.n, counts) != table.profile)
    throw std::runtime_error("table " + table.source + ": assembled profile differs from declared");
}

std::vector<ConstructionTable> load_tables() {
  std::vector<ConstructionTable> tables;
  for (std::size_t i = 0; i < detail::kTableJsonCount; ++i)
    tables.push_back(parse_table(detail::kTableJson[i]));
  std::sort(tables.begin(), tables.end(),
            [](const auto& a, const auto& b) { return a.source < b.source; });
  for (const auto& t : tables) validate_table(t);
  return tables;
}

LengthProfile trivial_profile(int n) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) - 2, 0);
  counts[0] = static_cast<std::int64_t>(n) * (n - 1);
  return LengthProfile(n, std::move(counts));
}

}  // namespace

const std::vector<ConstructionTable>& stored_tables() {
  static const std::vector<ConstructionTable> tables = load_tables();
  return tables;
}

const ConstructionTable* find_table(int n, const LengthProfile& profile) {
  for (const auto& t : stored_tables())
    if (t.n == n && t.profile == profile) return &t;
  return nullptr;
}

Decomposition assemble(const ConstructionTable& table) {
  std::vector<DirectedPath> paths;
  std::int64_t singletons = 0;
  for (const auto& [name, part] : table.parts)
    for (const auto& p : part) {
      if (p.length() == 1) ++singletons;
      paths.push_back(p);
    }
  if (singletons < table.profile.count(1)) {
    std::set<Arc> used;
    for (const auto& p : paths)
      for (const Arc& a : p.arcs()) used.insert(a);
    for (const Arc& a : all_arcs(table.n))
      if (!used.contains(a)) paths.push_back(DirectedPath({a.tail, a.head}));
  }
  return Decomposition(table.n, std::move(paths));
}

Decomposition construct_trivial(int n) {
  std::vector<DirectedPath> paths;
  for (const Arc& a : all_arcs(n)) paths.push_back(DirectedPath({a.tail, a.head}));
  return Decomposition(n, std::move(paths));
}

Decomposition construct(int n, const LengthProfile& profile) {
  if (profile.n() != n)
    throw std::invalid_argument("profile is for n=" + std::to_string(profile.n()) +
                                ", requested n=" + std::to_string(n));
  ConditionReport report = necessary_conditions(profile);
  if (!report.admissible) {
    std::string why;
    if (!report.arc_count_ok) why += " arc count != n(n-1);";
    if (!report.path_count_divisible) why += " path count not divisible by n;";
    if (!report.interior_divisible) why += " interior vertex count not divisible by n;";
    throw std::domain_error("profile (" + profile.to_string() +
                            ") fails the necessary conditions:" + why);
  }
  if (profile == trivial_profile(n)) return construct_trivial(n);
  if (const ConstructionTable* table = find_table(n, profile)) return assemble(*table);

  auto supported = list_supported(n);
  std::int64_t best = -1;
  for (const auto& [p, tag] : supported) {
    std::int64_t dist = 0;
    for (int i = 1; i <= n - 2; ++i) dist += std::llabs(p.count(i) - profile.count(i));
    if (best < 0 || dist < best) best = dist;
  }
  std::string nearest;
  for (const auto& [p, tag] : supported) {
    std::int64_t dist = 0;
    for (int i = 1; i <= n - 2; ++i) dist += std::llabs(p.count(i) - profile.count(i));
    if (dist == best) {
      if (!nearest.empty()) nearest += ", ";
      nearest += "(" + p.to_string() + ") [" + tag + "]";
    }
  }
  throw std::runtime_error("no stored construction for n=" + std::to_string(n) + ", profile (" +
                           profile.to_string() + "); nearest supported: " +
                           (nearest.empty() ? "none" : nearest));
}

std::vector<std::pair<LengthProfile, std::string>> list_supported(int n) {
  std::vector<std::pair<LengthProfile, std::string>> out;
  for (const auto& t : stored_tables())
    if (t.n == n) out.emplace_back(t.profile, t.source);
  if (n >= 3) out.emplace_back(trivial_profile(n), "trivial");
  return out;
}

}  // namespace chaindeck
