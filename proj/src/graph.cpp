#include "graph.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

namespace mz {

const char* to_string(VertexKind kind) {
    switch (kind) {
    case VertexKind::Result: return "result";
    case VertexKind::Floor: return "floor";
    case VertexKind::Fraction: return "fraction";
    }
    return "?";
}

DgbtGraph DgbtGraph::build(const DigitString& x, unsigned k) {
    DgbtGraph g;
    g.k_ = k;
    g.d_ = x.size();

    g.rows_.reserve(k + 1);
    g.rows_.push_back(x);
    g.steps_.reserve(k);
    for (unsigned r = 1; r <= k; ++r) {
        HalvingTrace t = halve(g.rows_.back());
        g.steps_.push_back(std::move(t.steps));
        g.rows_.push_back(std::move(t.result));
    }

    // Vertex ids in construction order: row-0 results, then per step its
    // floors, fractions, and the new result row.
    g.result_base_.assign(k + 1, 0);
    g.floor_base_.assign(k + 1, 0);
    g.fraction_base_.assign(k + 1, 0);
    std::size_t next = 0;
    g.result_base_[0] = next;
    next += g.d_;
    for (unsigned r = 1; r <= k; ++r) {
        const std::size_t m = g.d_ + r - 1;
        g.floor_base_[r] = next;
        next += m;
        g.fraction_base_[r] = next;
        next += m;
        g.result_base_[r] = next;
        next += m + 1;
    }

    g.vertices_.resize(next);
    g.labels_.resize(next);
    for (unsigned r = 0; r <= k; ++r) {
        const std::size_t w = g.d_ + r;
        for (std::size_t i = 0; i < w; ++i) {
            const std::size_t id = g.result_base_[r] + i;
            g.vertices_[id] = {r, VertexKind::Result, static_cast<std::uint32_t>(i)};
            g.labels_[id] = g.rows_[r].at_position(i);
        }
    }
    for (unsigned r = 1; r <= k; ++r) {
        const std::size_t m = g.d_ + r - 1;
        const auto& steps = g.steps_[r - 1]; // most significant first
        for (std::size_t i = 0; i < m; ++i) {
            const HalvingStep& s = steps[m - 1 - i];
            const std::size_t fid = g.floor_base_[r] + i;
            const std::size_t tid = g.fraction_base_[r] + i;
            g.vertices_[fid] = {r, VertexKind::Floor, static_cast<std::uint32_t>(i)};
            g.labels_[fid] = s.floor_half;
            g.vertices_[tid] = {r, VertexKind::Fraction, static_cast<std::uint32_t>(i)};
            g.labels_[tid] = s.fraction;
        }
    }

    g.adj_.resize(next);
    for (unsigned r = 1; r <= k; ++r) {
        const std::size_t m = g.d_ + r - 1;
        for (std::uint32_t j = 0; j < m; ++j) {
            const std::size_t a = g.result_base_[r - 1] + j;
            const std::size_t b = g.floor_base_[r] + j;
            const std::size_t t = g.fraction_base_[r] + j;
            g.add_edge(a, b);
            g.add_edge(a, t);
            g.add_edge(b, g.result_base_[r] + j + 1);
            g.add_edge(t, g.result_base_[r] + j);
        }
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

void DgbtGraph::add_edge(std::size_t u, std::size_t v) {
    if (u > v)
        std::swap(u, v);
    edges_.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    adj_[u].push_back(static_cast<std::uint32_t>(v));
    adj_[v].push_back(static_cast<std::uint32_t>(u));
}

std::vector<std::size_t> DgbtGraph::degrees() const {
    std::vector<std::size_t> deg(order());
    for (std::size_t id = 0; id < order(); ++id)
        deg[id] = adj_[id].size();
    return deg;
}

std::size_t DgbtGraph::leaf_count() const {
    std::size_t n = 0;
    for (const auto& nbrs : adj_)
        n += nbrs.size() == 1;
    return n;
}

bool DgbtGraph::is_connected() const {
    if (order() == 0)
        return false;
    std::vector<char> seen(order(), 0);
    std::queue<std::uint32_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == order();
}

bool DgbtGraph::is_path() const {
    if (order() < 2 || !is_connected())
        return false;
    std::size_t ones = 0;
    for (const auto& nbrs : adj_) {
        if (nbrs.size() == 1)
            ++ones;
        else if (nbrs.size() != 2)
            return false;
    }
    return ones == 2;
}

std::uint64_t DgbtGraph::c8_site_count() const {
    // One 8-cycle per digit position of the row shared by steps r and r+1.
    std::uint64_t sites = 0;
    for (unsigned r = 1; r < k_; ++r)
        sites += d_ + r - 1;
    return sites;
}

std::uint64_t DgbtGraph::c8_count_bruteforce() const {
    if (order() > 200)
        throw GuardError("cycle enumeration limited to graphs of order <= 200");

    // DFS over simple paths whose minimum vertex is the start; every cycle
    // is met once per direction, so halve at the end.
    const std::size_t target = 8;
    std::uint64_t found = 0;
    std::vector<char> on_path(order(), 0);

    auto adjacent = [&](std::uint32_t u, std::uint32_t v) {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    };

    struct Frame {
        std::uint32_t vertex;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    for (std::uint32_t s = 0; s < order(); ++s) {
        stack.clear();
        stack.push_back({s});
        on_path[s] = 1;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (stack.size() == target) {
                if (adjacent(f.vertex, s))
                    ++found;
                on_path[f.vertex] = 0;
                stack.pop_back();
                continue;
            }
            const auto& nbrs = adj_[f.vertex];
            bool descended = false;
            while (f.next < nbrs.size()) {
                const std::uint32_t w = nbrs[f.next++];
                if (w <= s || on_path[w])
                    continue;
                on_path[w] = 1;
                stack.push_back({w});
                descended = true;
                break;
            }
            if (!descended && stack.size() < target) {
                on_path[f.vertex] = 0;
                stack.pop_back();
            }
        }
        on_path[s] = 0;
    }
    return found / 2;
}

const DigitString& DgbtGraph::row(unsigned r) const {
    if (r > k_)
        throw std::out_of_range("row " + std::to_string(r) + " of a depth-" +
                                std::to_string(k_) + " graph");
    return rows_[r];
}

std::size_t DgbtGraph::index_of(const VertexId& v) const {
    switch (v.kind) {
    case VertexKind::Result:
        if (v.row > k_ || v.index >= d_ + v.row)
            break;
        return result_base_[v.row] + v.index;
    case VertexKind::Floor:
        if (v.row == 0 || v.row > k_ || v.index >= d_ + v.row - 1)
            break;
        return floor_base_[v.row] + v.index;
    case VertexKind::Fraction:
        if (v.row == 0 || v.row > k_ || v.index >= d_ + v.row - 1)
            break;
        return fraction_base_[v.row] + v.index;
    }
    throw std::out_of_range("no such vertex");
}

void DgbtGraph::write_description(std::ostream& os) const {
    for (std::size_t id = 0; id < order(); ++id) {
        const VertexId& v = vertices_[id];
        os << v.row << ' ' << to_string(v.kind) << ' ' << v.index << ' '
           << static_cast<int>(labels_[id]) << '\n';
    }
    for (const auto& [u, w] : edges_) {
        const VertexId& a = vertices_[u];
        const VertexId& b = vertices_[w];
        os << a.row << ' ' << to_string(a.kind) << ' ' << a.index << ' '
           << b.row << ' ' << to_string(b.kind) << ' ' << b.index << '\n';
    }
}

void DgbtGraph::write_adjacency(std::ostream& os) const {
    os << order() << ' ' << edge_count() << '\n';
    for (std::size_t id = 0; id < order(); ++id) {
        os << id << ' ' << static_cast<int>(labels_[id]);
        for (std::uint32_t w : adj_[id])
            os << ' ' << w;
        os << '\n';
    }
}

BinaryGraph::BinaryGraph(DgbtGraph g) : graph_(std::move(g)) {}

std::vector<std::uint8_t> BinaryGraph::row_bits(unsigned r) const {
    const DigitString& row = graph_.row(r);
    std::vector<std::uint8_t> bits(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        bits[i] = row.msd(i) % 2;
    return bits;
}

} // namespace mz
