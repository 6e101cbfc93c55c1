#include "permldpc/girth_oracle.hpp"

#include <algorithm>
#include <deque>

#include "permldpc/error.hpp"

namespace permldpc {

std::string to_string(Girth g) { return g.is_infinite() ? "inf" : std::to_string(g.length()); }

TannerGraph::TannerGraph(const BinaryMatrix& h) : var_adj_(h.cols()), check_adj_(h.rows()) {
  for (std::size_t r = 0; r < h.rows(); ++r) {
    check_adj_[r] = h.row_support(r);
    for (std::size_t c : check_adj_[r]) var_adj_[c].push_back(r);
  }
}

namespace oracle {

namespace {

constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

// Nodes 0..V-1 are variables, V..V+C-1 are checks.
class Graph {
 public:
  explicit Graph(const TannerGraph& g) : vars_(g.variable_count()), adj_(vars_ + g.check_count()) {
    for (std::size_t v = 0; v < vars_; ++v)
      for (std::size_t c : g.checks_of(v)) {
        adj_[v].push_back(vars_ + c);
        adj_[vars_ + c].push_back(v);
      }
  }

  std::size_t vars() const { return vars_; }
  std::size_t size() const { return adj_.size(); }
  const std::vector<std::size_t>& adj(std::size_t u) const { return adj_[u]; }
  bool is_var(std::size_t u) const { return u < vars_; }

 private:
  std::size_t vars_;
  std::vector<std::vector<std::size_t>> adj_;
};

class ExactLengthSearch {
 public:
  ExactLengthSearch(const Graph& g, std::size_t length)
      : g_(g), length_(length), on_path_(g.size(), false), dist_(g.size(), kUnseen) {}

  bool run() {
    for (std::size_t v = 0; v < g_.vars(); ++v) {
      start_ = v;
      distances_from(v);
      on_path_[v] = true;
      const bool found = extend(v, 0, kUnseen);
      on_path_[v] = false;
      if (found) return true;
    }
    return false;
  }

 private:
  // BFS distances to the start within the subgraph allowed for this start
  // (variables not below the start), used as a lower bound for closing.
  void distances_from(std::size_t s) {
    std::fill(dist_.begin(), dist_.end(), kUnseen);
    std::deque<std::size_t> queue{s};
    dist_[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (dist_[u] >= length_) continue;
      for (std::size_t w : g_.adj(u)) {
        if (dist_[w] != kUnseen || !allowed(w)) continue;
        dist_[w] = dist_[u] + 1;
        queue.push_back(w);
      }
    }
  }

  bool allowed(std::size_t u) const { return !g_.is_var(u) || u >= start_; }

  bool extend(std::size_t u, std::size_t depth, std::size_t prev) {
    for (std::size_t w : g_.adj(u)) {
      if (w == prev) continue;
      if (w == start_) {
        if (depth + 1 == length_) return true;
        continue;
      }
      if (on_path_[w] || !allowed(w)) continue;
      if (dist_[w] == kUnseen || depth + 1 + dist_[w] > length_) continue;
      on_path_[w] = true;
      const bool found = extend(w, depth + 1, u);
      on_path_[w] = false;
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t length_;
  std::size_t start_ = 0;
  std::vector<bool> on_path_;
  std::vector<std::size_t> dist_;
};

}  // namespace

Girth girth(const TannerGraph& tanner) {
  const Graph g(tanner);
  std::size_t best = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.size(), kUnseen);
  std::vector<std::size_t> parent(g.size(), kUnseen);
  std::vector<std::size_t> touched;
  std::deque<std::size_t> queue;

  for (std::size_t s = 0; s < g.vars(); ++s) {
    for (std::size_t u : touched) {
      dist[u] = kUnseen;
      parent[u] = kUnseen;
    }
    touched.clear();
    queue.clear();
    dist[s] = 0;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      // No cycle through s shorter than the current best can start here.
      if (2 * dist[u] + 1 >= best) break;
      for (std::size_t w : g.adj(u)) {
        if (w == parent[u]) continue;
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == static_cast<std::size_t>(-1) ? Girth::infinite() : Girth(best);
}

Girth girth(const BinaryMatrix& h) { return girth(TannerGraph(h)); }

bool has_cycle_of_length(const TannerGraph& tanner, std::size_t length) {
  if (length < 4 || length > 12 || length % 2 != 0)
    throw ArgumentError("cycle length must be one of 4, 6, 8, 10, 12; got " +
                        std::to_string(length));
  const Graph g(tanner);
  return ExactLengthSearch(g, length).run();
}

bool has_cycle_of_length(const BinaryMatrix& h, std::size_t length) {
  return has_cycle_of_length(TannerGraph(h), length);
}

}  // namespace oracle

}  // namespace permldpc
