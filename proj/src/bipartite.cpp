#include "prodobs/bipartite.hpp"

#include <algorithm>
#include <queue>

namespace prodobs {

namespace {

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
public:
    HopcroftKarp(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t right_count)
        : adj_(adjacency), dist_(adjacency.size(), kInfinity), next_(adjacency.size(), 0)
    {
        m_.left_mate.assign(adjacency.size(), kUnmatched);
        m_.right_mate.assign(right_count, kUnmatched);
    }

    BipartiteMatching run()
    {
        while (layer()) {
            std::fill(next_.begin(), next_.end(), 0);
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (m_.left_mate[u] == kUnmatched && augment(u))
                    ++m_.size;
        }
        return std::move(m_);
    }

private:
    // BFS layering from all free left vertices; true if some free right
    // vertex is reachable.
    bool layer()
    {
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (m_.left_mate[u] == kUnmatched) {
                dist_[u] = 0;
                q.push(u);
            } else {
                dist_[u] = kInfinity;
            }
        }
        bool found = false;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj_[u]) {
                auto w = m_.right_mate[v];
                if (w == kUnmatched) {
                    found = true;
                } else if (dist_[w] == kInfinity) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    // Iterative layered DFS for one shortest augmenting path from root.
    bool augment(std::size_t root)
    {
        std::vector<std::size_t> path{root};
        std::vector<std::size_t> via;  // right vertex used to descend from path[i]
        while (!path.empty()) {
            auto u = path.back();
            if (next_[u] >= adj_[u].size()) {
                dist_[u] = kInfinity;  // dead end for this phase
                path.pop_back();
                if (!via.empty())
                    via.pop_back();
                continue;
            }
            auto v = adj_[u][next_[u]++];
            auto w = m_.right_mate[v];
            if (w == kUnmatched) {
                via.push_back(v);
                for (std::size_t i = 0; i < path.size(); ++i) {
                    m_.left_mate[path[i]] = via[i];
                    m_.right_mate[via[i]] = path[i];
                }
                return true;
            }
            if (dist_[w] == dist_[u] + 1) {
                via.push_back(v);
                path.push_back(w);
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> dist_;
    std::vector<std::size_t> next_;
    BipartiteMatching m_;
};

} // namespace

BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t right_count)
{
    return HopcroftKarp(adjacency, right_count).run();
}

AlternatingReach alternating_reach(const std::vector<std::vector<std::size_t>>& adjacency,
                                   const BipartiteMatching& matching,
                                   const std::vector<std::size_t>& left_roots)
{
    AlternatingReach reach{std::vector<bool>(adjacency.size(), false),
                           std::vector<bool>(matching.right_mate.size(), false)};
    std::queue<std::size_t> q;
    for (auto u : left_roots) {
        if (!reach.left[u]) {
            reach.left[u] = true;
            q.push(u);
        }
    }
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto v : adjacency[u]) {
            if (reach.right[v] || matching.left_mate[u] == v)
                continue;
            reach.right[v] = true;
            auto w = matching.right_mate[v];
            if (w != kUnmatched && !reach.left[w]) {
                reach.left[w] = true;
                q.push(w);
            }
        }
    }
    return reach;
}

} // namespace prodobs
