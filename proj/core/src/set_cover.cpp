#include "covgroup/set_cover.hpp"

#include <algorithm>
#include <limits>

namespace covgroup {

std::vector<std::size_t> greedy_set_cover(const ElementSet& universe, std::span<const ElementSet> candidates) {
  std::vector<std::size_t> chosen;
  ElementSet uncovered = universe;
  while (!uncovered.empty()) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::size_t gain = (candidates[i] & uncovered).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == candidates.size()) return {};
    chosen.push_back(best);
    uncovered -= candidates[best];
  }
  return chosen;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(std::span<const ElementSet> candidates, std::vector<std::size_t> incumbent)
      : candidates_(candidates), best_(std::move(incumbent)) {}

  void search(const ElementSet& uncovered) {
    if (uncovered.empty()) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + 1 >= best_.size()) return;

    std::size_t max_gain = 0;
    for (const auto& c : candidates_) max_gain = std::max(max_gain, (c & uncovered).size());
    if (max_gain == 0) return;
    const std::size_t needed = (uncovered.size() + max_gain - 1) / max_gain;
    if (current_.size() + needed >= best_.size()) return;

    Element pivot = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](Element e) {
      std::size_t count = 0;
      for (const auto& c : candidates_)
        if (c.contains(e)) ++count;
      if (count < fewest) {
        fewest = count;
        pivot = e;
      }
    });
    if (fewest == 0) return;

    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!candidates_[i].contains(pivot)) continue;
      current_.push_back(i);
      search(uncovered - candidates_[i]);
      current_.pop_back();
    }
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  std::span<const ElementSet> candidates_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> minimum_set_cover(const ElementSet& universe, std::span<const ElementSet> candidates) {
  if (universe.empty()) return {};
  auto greedy = greedy_set_cover(universe, candidates);
  if (greedy.empty()) return {};
  BranchAndBound solver(candidates, std::move(greedy));
  solver.search(universe);
  auto best = solver.best();
  std::sort(best.begin(), best.end());
  return best;
}

bool covers_universe(const ElementSet& universe, std::span<const ElementSet> candidates,
                     std::span<const std::size_t> chosen) {
  ElementSet u;
  for (auto i : chosen) u |= candidates[i];
  return universe.is_subset_of(u);
}

}  // namespace covgroup
