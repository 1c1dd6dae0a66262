#include "chaindeck/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chaindeck {

std::string search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "unknown";
}

namespace {

class Searcher {
 public:
  Searcher(int n, const LengthProfile& profile, bool require_balanced, std::int64_t budget,
           bool prune)
      : n_(n),
        arcs_(all_arcs(n)),
        require_balanced_(require_balanced),
        prune_(prune),
        budget_(budget),
        quota_(static_cast<std::size_t>(n) - 1, 0),
        covered_(arcs_.size(), 0),
        cnt_(static_cast<std::size_t>(n) + 1, 0),
        in_unc_(static_cast<std::size_t>(n) + 1, n - 1),
        out_unc_(static_cast<std::size_t>(n) + 1, n - 1),
        in_seq_(static_cast<std::size_t>(n) + 1, 0) {
    for (int len = 1; len <= n - 2; ++len) {
      quota_[static_cast<std::size_t>(len)] = profile.count(len);
      remaining_parts_ += profile.count(len);
    }
    uncovered_left_ = static_cast<std::int64_t>(arcs_.size());
  }

  SearchOutcome run(const LengthProfile& profile) {
    SearchOutcome out;
    out.budget = budget_;
    if (require_balanced_) {
      auto k = balanced_k(profile);
      if (!k) {
        out.status = SearchStatus::Exhausted;  // balance is impossible for this profile
        return out;
      }
      k_ = *k;
    }
    bool found = dfs();
    out.nodes_explored = nodes_;
    if (found) {
      std::vector<DirectedPath> paths;
      for (const auto& seq : witness_) paths.emplace_back(seq);
      out.witness = Decomposition(n_, std::move(paths));
      out.status = SearchStatus::Found;
    } else {
      out.status = truncated_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return out;
  }

 private:
  int arc_id(int u, int v) const { return (u - 1) * (n_ - 1) + v - 1 - (v > u ? 1 : 0); }

  bool dfs() {
    if (truncated_) return false;
    if (nodes_ >= budget_) {
      truncated_ = true;
      return false;
    }
    ++nodes_;
    if (uncovered_left_ == 0) {
      if (require_balanced_ && !prune_)
        for (int v = 1; v <= n_; ++v)
          if (cnt_[static_cast<std::size_t>(v)] != k_) return false;
      witness_ = parts_;
      return true;
    }
    int a = 0;
    while (covered_[static_cast<std::size_t>(a)]) ++a;
    const int u0 = arcs_[static_cast<std::size_t>(a)].tail;
    const int v0 = arcs_[static_cast<std::size_t>(a)].head;
    // The part covering the smallest uncovered arc is enumerated by length,
    // the arc's position inside the part, then extension vertices ascending.
    for (int len = 1; len <= n_ - 2; ++len) {
      if (quota_[static_cast<std::size_t>(len)] == 0) continue;
      for (int pos = 0; pos < len; ++pos) {
        seq_ = {u0, v0};
        in_seq_[static_cast<std::size_t>(u0)] = in_seq_[static_cast<std::size_t>(v0)] = 1;
        bool found = extend(len, pos);
        in_seq_[static_cast<std::size_t>(u0)] = in_seq_[static_cast<std::size_t>(v0)] = 0;
        if (found) return true;
        if (truncated_) return false;
      }
    }
    return false;
  }

  bool extend(int len, int back_left) {
    if (truncated_) return false;
    if (back_left > 0) {
      int front = seq_.front();
      for (int w = 1; w <= n_; ++w) {
        if (in_seq_[static_cast<std::size_t>(w)] ||
            covered_[static_cast<std::size_t>(arc_id(w, front))])
          continue;
        seq_.insert(seq_.begin(), w);
        in_seq_[static_cast<std::size_t>(w)] = 1;
        bool found = extend(len, back_left - 1);
        seq_.erase(seq_.begin());
        in_seq_[static_cast<std::size_t>(w)] = 0;
        if (found) return true;
        if (truncated_) return false;
      }
      return false;
    }
    if (static_cast<int>(seq_.size()) < len + 1) {
      int back = seq_.back();
      for (int w = 1; w <= n_; ++w) {
        if (in_seq_[static_cast<std::size_t>(w)] ||
            covered_[static_cast<std::size_t>(arc_id(back, w))])
          continue;
        seq_.push_back(w);
        in_seq_[static_cast<std::size_t>(w)] = 1;
        bool found = extend(len, 0);
        seq_.pop_back();
        in_seq_[static_cast<std::size_t>(w)] = 0;
        if (found) return true;
        if (truncated_) return false;
      }
      return false;
    }
    return place_and_recurse(len);
  }

  bool place_and_recurse(int len) {
    const bool balance_cuts = require_balanced_ && prune_;
    if (balance_cuts)
      for (int v : seq_)
        if (cnt_[static_cast<std::size_t>(v)] + 1 > k_) return false;

    for (std::size_t i = 0; i + 1 < seq_.size(); ++i) {
      covered_[static_cast<std::size_t>(arc_id(seq_[i], seq_[i + 1]))] = 1;
      --out_unc_[static_cast<std::size_t>(seq_[i])];
      --in_unc_[static_cast<std::size_t>(seq_[i + 1])];
    }
    uncovered_left_ -= len;
    --quota_[static_cast<std::size_t>(len)];
    --remaining_parts_;
    for (int v : seq_) ++cnt_[static_cast<std::size_t>(v)];
    parts_.push_back(seq_);

    bool found = false;
    if (!balance_cuts || feasible()) {
      std::vector<int> saved_seq = std::move(seq_);
      std::vector<char> saved_in_seq = in_seq_;
      std::fill(in_seq_.begin(), in_seq_.end(), 0);
      found = dfs();
      seq_ = std::move(saved_seq);
      in_seq_ = std::move(saved_in_seq);
    }

    parts_.pop_back();
    for (int v : seq_) --cnt_[static_cast<std::size_t>(v)];
    ++remaining_parts_;
    ++quota_[static_cast<std::size_t>(len)];
    uncovered_left_ += len;
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i) {
      covered_[static_cast<std::size_t>(arc_id(seq_[i], seq_[i + 1]))] = 0;
      ++out_unc_[static_cast<std::size_t>(seq_[i])];
      ++in_unc_[static_cast<std::size_t>(seq_[i + 1])];
    }
    return found;
  }

  // Monotone balance bounds: every future part covers at most one incoming
  // and one outgoing arc at a vertex, and every part containing a vertex
  // covers at least one arc incident to it.
  bool feasible() const {
    for (int v = 1; v <= n_; ++v) {
      auto sv = static_cast<std::size_t>(v);
      std::int64_t need = k_ - cnt_[sv];
      if (need < std::max(in_unc_[sv], out_unc_[sv])) return false;
      if (need > in_unc_[sv] + out_unc_[sv]) return false;
      if (need > remaining_parts_) return false;
    }
    return true;
  }

  int n_;
  std::vector<Arc> arcs_;
  bool require_balanced_;
  bool prune_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool truncated_ = false;
  std::int64_t k_ = 0;
  std::vector<std::int64_t> quota_;
  std::int64_t remaining_parts_ = 0;
  std::int64_t uncovered_left_ = 0;
  std::vector<char> covered_;
  std::vector<std::int64_t> cnt_;
  std::vector<std::int64_t> in_unc_;
  std::vector<std::int64_t> out_unc_;
  std::vector<int> seq_;
  std::vector<char> in_seq_;
  std::vector<std::vector<int>> parts_;
  std::vector<std::vector<int>> witness_;
};

}  // namespace

SearchOutcome search(int n, const LengthProfile& profile, bool require_balanced,
                     std::int64_t budget_nodes, bool prune) {
  if (profile.n() != n)
    throw std::invalid_argument("profile is for n=" + std::to_string(profile.n()) +
                                ", requested n=" + std::to_string(n));
  if (!arc_count_ok(profile))
    throw std::domain_error("search requires a profile covering all n(n-1) arcs");
  if (budget_nodes <= 0) throw std::invalid_argument("budget must be positive");
  Searcher s(n, profile, require_balanced, budget_nodes, prune);
  return s.run(profile);
}

}  // namespace chaindeck
