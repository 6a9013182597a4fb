#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace sheafdist::detail {

// Maximum bipartite matching, O(E sqrt(V)). Left vertices 0..n_left-1,
// right vertices 0..n_right-1. Adjacency lists are visited in order, so the
// result is a deterministic function of the input graph.
class HopcroftKarp {
 public:
  static constexpr int kFree = -1;

  HopcroftKarp(std::size_t n_left, std::size_t n_right)
      : adj_(n_left), match_left_(n_left, kFree), match_right_(n_right, kFree), dist_(n_left) {}

  void add_edge(int u, int v) { adj_[u].push_back(v); }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && dfs(static_cast<int>(u))) ++size;
      }
    }
    return size;
  }

  int mate_of_left(int u) const { return match_left_[u]; }
  int mate_of_right(int v) const { return match_right_[v]; }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist_[u] = kUnreached;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int v : adj_[u]) {
        const int w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kUnreached) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (const int v : adj_[u]) {
      const int w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kUnreached;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace sheafdist::detail
