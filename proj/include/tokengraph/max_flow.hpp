#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

namespace tokengraph {

// Dinic max-flow over an explicit arc list with paired reverse arcs
// (arc i and arc i^1 are mates). Deterministic: arcs are scanned in
// insertion order everywhere, so repeated runs produce identical flows.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : out_(n), level_(n), ptr_(n) {}

    // Adds the arc from -> to and its mate to -> from; returns the forward
    // arc id (mate is id + 1, equivalently id ^ 1).
    int add_arc(int from, int to, int capacity, int reverse_capacity = 0) {
        const int id = int(arcs_.size());
        arcs_.push_back({to, capacity, capacity});
        arcs_.push_back({from, reverse_capacity, reverse_capacity});
        out_[from].push_back(id);
        out_[to].push_back(id + 1);
        return id;
    }

    int vertex_count() const { return int(out_.size()); }
    int arc_count() const { return int(arcs_.size()); }
    int head(int arc) const { return arcs_[arc].to; }

    // Net units pushed along an arc so far (negative if its mate carried flow).
    int flow(int arc) const { return arcs_[arc].initial - arcs_[arc].capacity; }

    int max_flow(int source, int sink) {
        if (source == sink) throw std::invalid_argument("max flow needs distinct source and sink");
        int total = 0;
        while (bfs(source, sink)) {
            std::fill(ptr_.begin(), ptr_.end(), 0);
            while (int pushed = dfs(source, sink, std::numeric_limits<int>::max())) total += pushed;
        }
        return total;
    }

    // Vertices reachable from start through arcs with residual capacity;
    // call after max_flow to read off a minimum cut.
    std::vector<char> residual_reachable(int start) const {
        std::vector<char> seen(out_.size(), 0);
        std::vector<int> queue{start};
        seen[start] = 1;
        for (std::size_t head_idx = 0; head_idx < queue.size(); ++head_idx) {
            int v = queue[head_idx];
            for (int arc : out_[v]) {
                if (arcs_[arc].capacity > 0 && !seen[arcs_[arc].to]) {
                    seen[arcs_[arc].to] = 1;
                    queue.push_back(arcs_[arc].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int capacity;
        int initial;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{source};
        level_[source] = 0;
        for (std::size_t head_idx = 0; head_idx < queue.size(); ++head_idx) {
            int v = queue[head_idx];
            for (int arc : out_[v]) {
                if (arcs_[arc].capacity > 0 && level_[arcs_[arc].to] < 0) {
                    level_[arcs_[arc].to] = level_[v] + 1;
                    queue.push_back(arcs_[arc].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    int dfs(int v, int sink, int limit) {
        if (v == sink) return limit;
        for (int& i = ptr_[v]; i < int(out_[v].size()); ++i) {
            int arc = out_[v][i];
            const Arc& a = arcs_[arc];
            if (a.capacity <= 0 || level_[a.to] != level_[v] + 1) continue;
            int pushed = dfs(a.to, sink, std::min(limit, a.capacity));
            if (pushed > 0) {
                arcs_[arc].capacity -= pushed;
                arcs_[arc ^ 1].capacity += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<int> ptr_;
};

}  // namespace tokengraph
