#include "ewe/enumeration.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "ewe/detail/matcher.hpp"
#include "ewe/errors.hpp"

namespace ewe {

namespace {

struct Node {
  std::vector<int> prefix;
  int parity = 0;
};

void tally(std::vector<CountTriple>& counts, int len, int parity) {
  auto& slot = counts[len];
  ++slot.total;
  if (parity) ++slot.odd;
  else ++slot.even;
}

// Runs `work(node, local_counts)` over the frontier on `jobs` threads and sums
// the per-thread counts. Summation order does not affect the result.
template <typename Work>
void run_frontier(const std::vector<Node>& frontier, int jobs, std::vector<CountTriple>& counts, Work work) {
  if (frontier.empty()) return;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(frontier.size())));
  if (jobs == 1) {
    for (const auto& node : frontier) work(node, counts);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      std::vector<CountTriple> local(counts.size());
      for (std::size_t i = next++; i < frontier.size(); i = next++) work(frontier[i], local);
      std::lock_guard lock(merge);
      for (std::size_t n = 0; n < counts.size(); ++n) counts[n] += local[n];
    });
  }
}

// Depth-first growth of avoiders in standardized form: a child of a prefix of
// length m appends a new relative value v in 1..m+1, shifting entries >= v up.
// The m+1-v shifted entries are exactly the new inversions.
class PermutationSearch {
 public:
  PermutationSearch(const Permutation& pattern, int horizon)
      : matcher_(pattern), k_(pattern.size()), horizon_(horizon) {}

  std::vector<Node> children(const Node& node, std::vector<CountTriple>& counts) const {
    std::vector<Node> out;
    const int len = static_cast<int>(node.prefix.size());
    for (int v = 1; v <= len + 1; ++v) {
      Node child;
      child.prefix.resize(len + 1);
      for (int i = 0; i < len; ++i) child.prefix[i] = node.prefix[i] + (node.prefix[i] >= v ? 1 : 0);
      child.prefix[len] = v;
      child.parity = node.parity ^ ((len + 1 - v) & 1);
      if (len + 1 >= k_ && matcher_.ends_at(child.prefix.data(), len, len + 1)) continue;
      tally(counts, len + 1, child.parity);
      out.push_back(std::move(child));
    }
    return out;
  }

  void descend(const Node& node, std::vector<CountTriple>& counts) const {
    std::vector<int> stack(static_cast<std::size_t>(horizon_ + 1) * (horizon_ + 1));
    const int len = static_cast<int>(node.prefix.size());
    std::copy(node.prefix.begin(), node.prefix.end(), stack.begin() + static_cast<std::ptrdiff_t>(len) * (horizon_ + 1));
    dfs(stack.data(), len, node.parity, counts);
  }

 private:
  void dfs(int* stack, int len, int parity, std::vector<CountTriple>& counts) const {
    if (len >= horizon_) return;
    const int stride = horizon_ + 1;
    const int* prefix = stack + len * stride;
    int* child = stack + (len + 1) * stride;
    for (int v = 1; v <= len + 1; ++v) {
      for (int i = 0; i < len; ++i) child[i] = prefix[i] + (prefix[i] >= v ? 1 : 0);
      child[len] = v;
      if (len + 1 >= k_ && matcher_.ends_at(child, len, len + 1)) continue;
      const int child_parity = parity ^ ((len + 1 - v) & 1);
      tally(counts, len + 1, child_parity);
      dfs(stack, len + 1, child_parity, counts);
    }
  }

  detail::PatternMatcher matcher_;
  int k_;
  int horizon_;
};

// Column-by-column placement of actual row values; an occurrence ending in
// column c only counts when its values stay within that column's height.
class ShapeSearch {
 public:
  ShapeSearch(const FerrersShape& shape, const Permutation& pattern) : matcher_(pattern), k_(pattern.size()) {
    n_ = shape.rows();
    heights_.resize(n_ + 1);
    for (int c = 1; c <= n_; ++c) heights_[c] = shape.column_height(c);
  }

  int n() const { return n_; }

  std::vector<Node> children(const Node& node, std::vector<CountTriple>& counts) const {
    std::vector<Node> out;
    const int len = static_cast<int>(node.prefix.size());
    const int col = len + 1;
    for (int r = 1; r <= heights_[col]; ++r) {
      if (std::find(node.prefix.begin(), node.prefix.end(), r) != node.prefix.end()) continue;
      Node child{node.prefix, node.parity};
      int above = 0;
      for (int v : node.prefix) above += v > r;
      child.prefix.push_back(r);
      child.parity ^= above & 1;
      if (col >= k_ && matcher_.ends_at(child.prefix.data(), len, heights_[col])) continue;
      if (col == n_) tally(counts, 0, child.parity);
      else out.push_back(std::move(child));
    }
    return out;
  }

  void descend(const Node& node, std::vector<CountTriple>& counts) const {
    std::vector<int> word(n_ + 1, 0);
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < node.prefix.size(); ++i) {
      word[i] = node.prefix[i];
      used |= std::uint64_t{1} << node.prefix[i];
    }
    dfs(word.data(), static_cast<int>(node.prefix.size()), used, node.parity, counts);
  }

 private:
  void dfs(int* word, int len, std::uint64_t used, int parity, std::vector<CountTriple>& counts) const {
    const int col = len + 1;
    for (int r = 1; r <= heights_[col]; ++r) {
      const std::uint64_t bit = std::uint64_t{1} << r;
      if (used & bit) continue;
      word[len] = r;
      if (col >= k_ && matcher_.ends_at(word, len, heights_[col])) continue;
      const int child_parity = parity ^ (std::popcount(used >> (r + 1)) & 1);
      if (col == n_) tally(counts, 0, child_parity);
      else dfs(word, len + 1, used | bit, child_parity, counts);
    }
  }

  detail::PatternMatcher matcher_;
  int k_;
  int n_ = 0;
  std::vector<int> heights_;
};

void require_pattern(const Permutation& pattern) {
  if (pattern.empty()) throw usage_error("pattern must be nonempty");
}

}  // namespace

int resolve_jobs(const EnumerationOptions& opts) {
  if (opts.jobs > 0) return opts.jobs;
  if (const char* env = std::getenv("EWE_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

AvoidanceVector avoidance_vector(const Permutation& pattern, int max_n, const EnumerationOptions& opts) {
  require_pattern(pattern);
  if (max_n < 0) throw usage_error("n must be >= 0");
  if (max_n > opts.max_n)
    throw budget_error("n = " + std::to_string(max_n) + " exceeds the enumeration limit " + std::to_string(opts.max_n));

  std::vector<CountTriple> counts(max_n + 1);
  tally(counts, 0, 0);

  const PermutationSearch search(pattern, max_n);
  const int jobs = resolve_jobs(opts);
  // Expand breadth-first until there is enough independent work to share.
  std::vector<Node> frontier{Node{}};
  int depth = 0;
  while (depth < max_n && frontier.size() < static_cast<std::size_t>(jobs) * 16 && !frontier.empty()) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      auto kids = search.children(node, counts);
      std::move(kids.begin(), kids.end(), std::back_inserter(next));
    }
    frontier = std::move(next);
    ++depth;
  }
  if (depth < max_n)
    run_frontier(frontier, jobs, counts, [&](const Node& node, std::vector<CountTriple>& local) {
      search.descend(node, local);
    });
  return AvoidanceVector{pattern, std::move(counts)};
}

CountTriple count_avoiders(int n, const Permutation& pattern, const EnumerationOptions& opts) {
  return avoidance_vector(pattern, n, opts).entries.back();
}

CountTriple count_avoiders_shape(const FerrersShape& shape, const Permutation& pattern, const EnumerationOptions& opts) {
  require_pattern(pattern);
  if (shape.rows() > opts.max_shape_rows)
    throw budget_error("shape with " + std::to_string(shape.rows()) + " rows exceeds the limit " +
                       std::to_string(opts.max_shape_rows));
  if (shape.rows() > 62) throw budget_error("shape too large");
  std::vector<CountTriple> counts(1);
  if (shape.empty()) {
    tally(counts, 0, 0);
    return counts[0];
  }
  if (!shape.admits_transversal()) return {};

  const ShapeSearch search(shape, pattern);
  const int jobs = resolve_jobs(opts);
  std::vector<Node> frontier{Node{}};
  int depth = 0;
  while (depth < search.n() && frontier.size() < static_cast<std::size_t>(jobs) * 16 && !frontier.empty()) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      auto kids = search.children(node, counts);
      std::move(kids.begin(), kids.end(), std::back_inserter(next));
    }
    frontier = std::move(next);
    ++depth;
  }
  if (depth < search.n())
    run_frontier(frontier, jobs, counts, [&](const Node& node, std::vector<CountTriple>& local) {
      search.descend(node, local);
    });
  return counts[0];
}

CountTriple count_avoiders_naive(int n, const Permutation& pattern) {
  require_pattern(pattern);
  CountTriple out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (pattern.size() <= n && contains(p, pattern)) return;
    ++out.total;
    if (sign(p) == Parity::even) ++out.even;
    else ++out.odd;
  });
  return out;
}

}  // namespace ewe
