#pragma once

// Successive shortest paths with Bellman-Ford, so arc costs may be negative as
// long as the initial residual graph has no negative cycle. Small graphs only.

#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace wdlab::detail {

class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
    graph_[static_cast<std::size_t>(from)].push_back({to, static_cast<int>(graph_[static_cast<std::size_t>(to)].size()), cap, cost});
    graph_[static_cast<std::size_t>(to)].push_back({from, static_cast<int>(graph_[static_cast<std::size_t>(from)].size()) - 1, 0, -cost});
  }

  struct Result {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  /// Pushes up to `limit` units along cheapest augmenting paths.
  Result run(int source, int sink, std::int64_t limit) {
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max() / 4;
    const auto n = graph_.size();
    Result result;
    while (result.flow < limit) {
      std::vector<std::int64_t> dist(n, kInf);
      std::vector<int> prev_node(n, -1), prev_arc(n, -1);
      std::vector<bool> queued(n, false);
      std::deque<int> queue{source};
      dist[static_cast<std::size_t>(source)] = 0;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(u)] = false;
        const auto& arcs = graph_[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i < arcs.size(); ++i) {
          const auto& e = arcs[i];
          const auto v = static_cast<std::size_t>(e.to);
          if (e.cap > 0 && dist[static_cast<std::size_t>(u)] + e.cost < dist[v]) {
            dist[v] = dist[static_cast<std::size_t>(u)] + e.cost;
            prev_node[v] = u;
            prev_arc[v] = static_cast<int>(i);
            if (!queued[v]) {
              queued[v] = true;
              queue.push_back(e.to);
            }
          }
        }
      }
      if (dist[static_cast<std::size_t>(sink)] >= kInf) break;
      std::int64_t push = limit - result.flow;
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        const auto& e = graph_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                              [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
        push = std::min(push, e.cap);
      }
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        auto& e = graph_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                        [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
        e.cap -= push;
        graph_[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.rev)].cap += push;
      }
      result.flow += push;
      result.cost += push * dist[static_cast<std::size_t>(sink)];
    }
    return result;
  }

 private:
  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<std::vector<Arc>> graph_;
};

}  // namespace wdlab::detail
