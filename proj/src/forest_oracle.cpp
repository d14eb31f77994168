#include "combcert/circles.hpp"

#include <algorithm>
#include <stdexcept>

namespace combcert::circles {

namespace {

// Walks every multiset of trees with the given total node count, exactly
// once. Choices are (size, index) pairs taken in nonincreasing order, which
// makes each multiset canonical by construction. `visit(size, index)` /
// `leave()` bracket each chosen tree; `emit()` fires once per complete
// multiset.
template <typename Visit, typename Leave, typename Emit>
void walk_forests(const std::vector<std::vector<std::string>>& trees, int remaining,
                  int size_cap, int index_cap, const Visit& visit,
                  const Leave& leave, const Emit& emit) {
  if (remaining == 0) {
    emit();
    return;
  }
  for (int s = std::min(size_cap, remaining); s >= 1; --s) {
    int i_max = (s == size_cap) ? index_cap
                                : static_cast<int>(trees[static_cast<size_t>(s)].size()) - 1;
    for (int i = i_max; i >= 0; --i) {
      visit(s, i);
      walk_forests(trees, remaining - s, s, i, visit, leave, emit);
      leave();
    }
  }
}

unsigned long long count_forests_impl(const std::vector<std::vector<std::string>>& trees,
                                      int remaining, int size_cap, int index_cap) {
  unsigned long long count = 0;
  walk_forests(
      trees, remaining, size_cap, index_cap, [](int, int) {}, []() {},
      [&count]() { ++count; });
  return count;
}

}  // namespace

ForestCatalog::ForestCatalog(int max_nodes) : max_nodes_(max_nodes) {
  if (max_nodes < 0 || max_nodes > kMaxNodes)
    throw std::invalid_argument("ForestCatalog: max_nodes out of range (0.."
                                + std::to_string(kMaxNodes) + ")");
  trees_.resize(static_cast<size_t>(std::max(max_nodes, 1)) + 1);
  for (int size = 1; size <= max_nodes; ++size) {
    // A tree with `size` nodes is a root over a forest of size-1 nodes.
    std::vector<std::pair<int, int>> chosen;
    auto& level = trees_[static_cast<size_t>(size)];
    walk_forests(
        trees_, size - 1, size - 1,
        size - 1 >= 1 ? static_cast<int>(trees_[static_cast<size_t>(size) - 1].size()) - 1
                      : -1,
        [&chosen](int s, int i) { chosen.emplace_back(s, i); },
        [&chosen]() { chosen.pop_back(); },
        [&]() {
          std::string key = "(";
          for (auto [s, i] : chosen) key += trees_[static_cast<size_t>(s)][static_cast<size_t>(i)];
          key += ")";
          level.push_back(std::move(key));
        });
    // Index order must agree with key order so that (size, index) choices
    // realize the (size, key) canonical ordering.
    std::sort(level.begin(), level.end());
  }
}

unsigned long long ForestCatalog::count_forests(int total) const {
  if (total < 0 || total > max_nodes_)
    throw std::invalid_argument("count_forests: total out of range");
  if (total == 0) return 1;
  return count_forests_impl(trees_, total, total,
                            static_cast<int>(trees_[static_cast<size_t>(total)].size()) - 1);
}

std::vector<std::pair<int, int>> ForestCatalog::first_choices(int total) const {
  std::vector<std::pair<int, int>> choices;
  for (int s = std::min(total, max_nodes_); s >= 1; --s)
    for (int i = static_cast<int>(trees_[static_cast<size_t>(s)].size()) - 1; i >= 0; --i)
      choices.emplace_back(s, i);
  return choices;
}

unsigned long long ForestCatalog::count_forests_with_first(int total, int size,
                                                           int index) const {
  return count_forests_impl(trees_, total - size, size, index);
}

std::vector<std::string> ForestCatalog::forest_keys(int total) const {
  std::vector<std::string> keys;
  std::vector<std::pair<int, int>> chosen;
  walk_forests(
      trees_, total, total,
      total >= 1 ? static_cast<int>(trees_[static_cast<size_t>(total)].size()) - 1 : -1,
      [&chosen](int s, int i) { chosen.emplace_back(s, i); },
      [&chosen]() { chosen.pop_back(); },
      [&]() {
        std::string key;
        for (auto [s, i] : chosen) key += trees_[static_cast<size_t>(s)][static_cast<size_t>(i)];
        keys.push_back(std::move(key));
      });
  return keys;
}

BigInt forest_oracle(int n) {
  if (n < 0 || n > ForestCatalog::kMaxNodes)
    throw std::invalid_argument("forest_oracle: n must be in 0.."
                                + std::to_string(ForestCatalog::kMaxNodes));
  ForestCatalog catalog(n);
  return BigInt(catalog.count_forests(n));
}

std::vector<BigInt> forest_counts(int n_max) {
  if (n_max < 0 || n_max > ForestCatalog::kMaxNodes)
    throw std::invalid_argument("forest_counts: n_max out of range");
  ForestCatalog catalog(n_max);
  std::vector<BigInt> counts;
  counts.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    counts.push_back(BigInt(catalog.count_forests(n)));
  return counts;
}

}  // namespace combcert::circles
