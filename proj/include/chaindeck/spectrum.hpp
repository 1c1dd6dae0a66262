#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chaindeck {

inline constexpr int kDefaultEnumerationBound = 9;

// Path-length census of a decomposition of the complete digraph on n
// vertices: count(i) paths of length i for 1 <= i <= n-2. Lengths stop at
// n-2 because spanning paths are excluded by definition.
class LengthProfile {
 public:
  LengthProfile(int n, std::vector<std::int64_t> counts);

  int n() const { return n_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t count(int length) const;

  // Number of paths, sum of lengths, and the two incidence sums that drive
  // the divisibility conditions.
  std::int64_t size() const;
  std::int64_t arc_total() const;
  std::int64_t incidence_total() const;  // sum over paths of (length + 1)
  std::int64_t interior_total() const;   // sum over paths of (length - 1)

  std::string to_string() const;  // "3,4,3"

  auto operator<=>(const LengthProfile&) const = default;

 private:
  int n_;
  std::vector<std::int64_t> counts_;
};

// "x1,x2,..." with n inferred from the entry count.
LengthProfile parse_profile(const std::string& csv);

struct ConditionReport {
  bool arc_count_ok = false;
  std::optional<std::int64_t> k;  // present iff n divides the incidence total
  bool path_count_divisible = false;
  bool interior_divisible = false;
  bool admissible = false;
};

// True iff the profile accounts for all n(n-1) arcs.
bool arc_count_ok(const LengthProfile& p);

// The per-vertex path count forced by balance, when integral. Requires
// arc_count_ok(p); throws std::domain_error otherwise.
std::optional<std::int64_t> balanced_k(const LengthProfile& p);

ConditionReport necessary_conditions(const LengthProfile& p);

// Every nonnegative solution of sum(i * x_i) = n(n-1), in lexicographic
// order of (x_1,...,x_{n-2}); admissible_only filters by
// necessary_conditions. 3 <= n <= max_order.
std::vector<LengthProfile> enumerate_profiles(int n, bool admissible_only = false,
                                              int max_order = kDefaultEnumerationBound);

// Profile count grouped by size s = sum(x_i).
std::map<std::int64_t, std::int64_t> spectrum_histogram(int n,
                                                        int max_order = kDefaultEnumerationBound);

std::string histogram_csv(const std::map<std::int64_t, std::int64_t>& hist);

}  // namespace chaindeck
