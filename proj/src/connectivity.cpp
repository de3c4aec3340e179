#include "diagnoscope/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "diagnoscope/error.hpp"

namespace diagnoscope {

namespace {

constexpr int kUnbounded = 1 << 20;

/// Split-vertex flow network: vertex w becomes w_in = 2w and w_out = 2w+1.
class VertexFlow {
public:
  VertexFlow(const Graph& g, Vertex source, Vertex sink)
      : nodes_(2 * g.order()), cap_(nodes_ * nodes_, 0), flow_(nodes_ * nodes_, 0) {
    for (Vertex w = 0; w < g.order(); ++w) {
      const bool terminal = w == source || w == sink;
      cap_[at(in(w), out(w))] = terminal ? kUnbounded : 1;
    }
    for (const Edge& e : g.edges()) {
      cap_[at(out(e.u), in(e.v))] = kUnbounded;
      cap_[at(out(e.v), in(e.u))] = kUnbounded;
    }
    if (g.adjacent(source, sink)) cap_[at(out(source), in(sink))] = 1;
    source_ = out(source);
    sink_ = in(sink);
  }

  int run() {
    int total = 0;
    std::vector<int> parent(nodes_);
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source_] = source_;
      std::deque<int> queue{source_};
      while (!queue.empty() && parent[sink_] < 0) {
        const int a = queue.front();
        queue.pop_front();
        for (int b = 0; b < nodes_; ++b) {
          if (parent[b] < 0 && residual(a, b) > 0) {
            parent[b] = a;
            queue.push_back(b);
          }
        }
      }
      if (parent[sink_] < 0) return total;
      for (int b = sink_; b != source_; b = parent[b]) {
        const int a = parent[b];
        flow_[at(a, b)] += 1;
        flow_[at(b, a)] -= 1;
      }
      ++total;
    }
  }

  /// Vertices whose in-copy is reachable from the source in the residual network but whose out-copy is not.
  VertexSet source_side_cut() const {
    std::vector<char> seen(nodes_, 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes_; ++b) {
        if (!seen[b] && residual(a, b) > 0) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
    VertexSet cut;
    for (Vertex w = 0; w < nodes_ / 2; ++w) {
      if (seen[in(w)] && !seen[out(w)]) cut.insert(w);
    }
    return cut;
  }

  /// Decomposes the unit flow into source-to-sink vertex paths.
  std::vector<Path> paths(Vertex source, Vertex sink) {
    std::vector<Path> out_paths;
    const int n = nodes_ / 2;
    while (true) {
      Path path{source};
      Vertex w = source;
      bool extended = true;
      while (w != sink && extended) {
        extended = false;
        for (Vertex x = 0; x < n; ++x) {
          if (flow_[at(out(w), in(x))] > 0) {
            flow_[at(out(w), in(x))] -= 1;
            path.push_back(x);
            w = x;
            extended = true;
            break;
          }
        }
      }
      if (path.size() == 1) return out_paths;
      out_paths.push_back(std::move(path));
    }
  }

private:
  static int in(Vertex w) { return 2 * w; }
  static int out(Vertex w) { return 2 * w + 1; }
  std::size_t at(int a, int b) const { return static_cast<std::size_t>(a) * nodes_ + b; }
  int residual(int a, int b) const { return cap_[at(a, b)] - flow_[at(a, b)]; }

  int nodes_;
  std::vector<int> cap_;
  std::vector<int> flow_;
  int source_ = 0;
  int sink_ = 0;
};

void check_nonempty(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("connectivity of the null graph");
}

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw InvalidArgument("vertex out of range in pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) throw InvalidArgument("disjoint paths need two distinct vertices");
}

}  // namespace

int local_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (g.adjacent(u, v)) throw InvalidArgument("local connectivity is defined for non-adjacent vertices");
  return VertexFlow(g, u, v).run();
}

ConnectivityReport vertex_connectivity(const Graph& g) {
  check_nonempty(g);
  const int n = g.order();
  ConnectivityReport report;
  report.delta = min_degree(g);
  report.kappa = n - 1;
  for (Vertex i = 0; i < n && i <= report.kappa; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      VertexFlow flow(g, i, j);
      const int value = flow.run();
      if (value < report.kappa) {
        report.kappa = value;
        report.witness_cut = flow.source_side_cut();
      }
    }
  }
  report.maximally_connected = report.kappa == report.delta;
  return report;
}

DisjointPaths internally_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  VertexFlow flow(g, u, v);
  DisjointPaths out;
  out.count = flow.run();
  out.paths = flow.paths(u, v);
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

bool is_maximally_connected(const Graph& g) { return vertex_connectivity(g).maximally_connected; }

CommonNeighbors max_common_neighbors(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("common neighbors need at least two vertices");
  CommonNeighbors best{-1, 0, 1};
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int common = (g.neighbors(u) & g.neighbors(v)).size();
      if (common > best.value) best = {common, u, v};
    }
  }
  return best;
}

}  // namespace diagnoscope
