#include "chaindeck/spectrum.hpp"

#include <stdexcept>

namespace chaindeck {

LengthProfile::LengthProfile(int n, std::vector<std::int64_t> counts)
    : n_(n), counts_(std::move(counts)) {
  if (n_ < 3) throw std::invalid_argument("length profile needs n >= 3, got n=" + std::to_string(n_));
  if (counts_.size() != static_cast<std::size_t>(n_ - 2))
    throw std::invalid_argument("profile for n=" + std::to_string(n_) + " needs " +
                                std::to_string(n_ - 2) + " entries, got " +
                                std::to_string(counts_.size()));
  for (std::int64_t c : counts_)
    if (c < 0) throw std::invalid_argument("profile entries must be nonnegative");
}

std::int64_t LengthProfile::count(int length) const {
  if (length < 1 || length > n_ - 2)
    throw std::out_of_range("length " + std::to_string(length) + " outside [1," +
                            std::to_string(n_ - 2) + "]");
  return counts_[static_cast<std::size_t>(length) - 1];
}

std::int64_t LengthProfile::size() const {
  std::int64_t s = 0;
  for (std::int64_t c : counts_) s += c;
  return s;
}

std::int64_t LengthProfile::arc_total() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<std::int64_t>(i + 1) * counts_[i];
  return s;
}

std::int64_t LengthProfile::incidence_total() const { return arc_total() + size(); }

std::int64_t LengthProfile::interior_total() const { return arc_total() - size(); }

std::string LengthProfile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

LengthProfile parse_profile(const std::string& csv) {
  std::vector<std::int64_t> counts;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string field = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      counts.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad profile entry \"" + field + "\" in \"" + csv + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  int n = static_cast<int>(counts.size()) + 2;
  return LengthProfile(n, std::move(counts));
}

bool arc_count_ok(const LengthProfile& p) {
  return p.arc_total() == static_cast<std::int64_t>(p.n()) * (p.n() - 1);
}

std::optional<std::int64_t> balanced_k(const LengthProfile& p) {
  if (!arc_count_ok(p))
    throw std::domain_error("balanced_k requires a profile covering all " +
                            std::to_string(static_cast<std::int64_t>(p.n()) * (p.n() - 1)) +
                            " arcs; this one covers " + std::to_string(p.arc_total()));
  std::int64_t incidences = p.incidence_total();
  if (incidences % p.n() != 0) return std::nullopt;
  return incidences / p.n();
}

ConditionReport necessary_conditions(const LengthProfile& p) {
  ConditionReport r;
  r.arc_count_ok = arc_count_ok(p);
  if (p.incidence_total() % p.n() == 0) r.k = p.incidence_total() / p.n();
  r.path_count_divisible = p.size() % p.n() == 0;
  r.interior_divisible = p.interior_total() % p.n() == 0;
  r.admissible = r.arc_count_ok && r.path_count_divisible && r.interior_divisible;
  return r;
}

namespace {

void enumerate_rec(int n, int length, std::int64_t arcs_left, std::vector<std::int64_t>& acc,
                   bool admissible_only, std::vector<LengthProfile>& out) {
  if (length == n - 2) {
    if (arcs_left % length != 0) return;
    acc.push_back(arcs_left / length);
    LengthProfile p(n, acc);
    if (!admissible_only || necessary_conditions(p).admissible) out.push_back(std::move(p));
    acc.pop_back();
    return;
  }
  for (std::int64_t x = 0; x * length <= arcs_left; ++x) {
    acc.push_back(x);
    enumerate_rec(n, length + 1, arcs_left - x * length, acc, admissible_only, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<LengthProfile> enumerate_profiles(int n, bool admissible_only, int max_order) {
  if (max_order < 3) throw std::domain_error("enumeration bound must be at least 3");
  if (n < 3 || n > max_order)
    throw std::domain_error("profile enumeration supports 3 <= n <= " + std::to_string(max_order) +
                            ", got n=" + std::to_string(n));
  std::vector<LengthProfile> out;
  std::vector<std::int64_t> acc;
  enumerate_rec(n, 1, static_cast<std::int64_t>(n) * (n - 1), acc, admissible_only, out);
  return out;
}

std::map<std::int64_t, std::int64_t> spectrum_histogram(int n, int max_order) {
  std::map<std::int64_t, std::int64_t> hist;
  for (const auto& p : enumerate_profiles(n, false, max_order)) ++hist[p.size()];
  return hist;
}

std::string histogram_csv(const std::map<std::int64_t, std::int64_t>& hist) {
  std::string out = "s,count\n";
  for (const auto& [s, count] : hist)
    out += std::to_string(s) + "," + std::to_string(count) + "\n";
  return out;
}

}  // namespace chaindeck
