// The division graph of k recursive halvings.  Every digit that appears
// while halving is a vertex: the input row, each step's floor/fraction
// pairs, and each result row.  Edges follow the data flow of the step:
// an input digit feeds its pair, the floor half feeds the result digit one
// place up, the fraction feeds the result digit at its own place.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "digits.hpp"

namespace mz {

enum class VertexKind : std::uint8_t { Result, Floor, Fraction };

const char* to_string(VertexKind kind);

// Structural identity of a vertex; labels play no part in it.  Result
// vertices live on row r (width d+r).  Floor/Fraction vertices belong to
// the step from row r-1 to row r and use the input row's positions.
// index 0 is the least significant position.
struct VertexId {
    std::uint32_t row = 0;
    VertexKind kind = VertexKind::Result;
    std::uint32_t index = 0;

    auto operator<=>(const VertexId&) const = default;
};

class DgbtGraph {
public:
    static DgbtGraph build(const DigitString& x, unsigned k);

    unsigned k() const { return k_; }
    std::size_t input_width() const { return d_; }

    std::size_t order() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t leaf_count() const; // degree-1 vertices; 0 when k = 0
    bool is_connected() const;
    // Connected with exactly two degree-1 vertices and the rest degree 2.
    // A single isolated vertex (k = 0, d = 1) does not count as a path.
    bool is_path() const;

    // 8-cycle count from the structural cycle sites: one site per digit
    // position of the shared row of each consecutive step pair.
    std::uint64_t c8_site_count() const;
    // Exhaustive simple-cycle enumeration; GuardError when order() > 200.
    std::uint64_t c8_count_bruteforce() const;

    // Result row r, width d+r; its value is 5^r times the input's.
    const DigitString& row(unsigned r) const;

    std::size_t index_of(const VertexId& v) const; // dense id, throws oob
    const VertexId& vertex(std::size_t id) const { return vertices_.at(id); }
    Digit label(std::size_t id) const { return labels_.at(id); }
    const std::vector<std::uint32_t>& neighbors(std::size_t id) const {
        return adj_.at(id);
    }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
        return edges_;
    }

    // "row kind index label" per vertex, then one edge per line as the two
    // endpoint triples; single-space separated, id order.
    void write_description(std::ostream& os) const;
    // "order edge_count", then per vertex: "id label neighbor-ids...".
    void write_adjacency(std::ostream& os) const;

private:
    DgbtGraph() = default;

    void add_edge(std::size_t u, std::size_t v);
    std::vector<std::size_t> degrees() const;

    unsigned k_ = 0;
    std::size_t d_ = 0;
    std::vector<DigitString> rows_;               // k+1 result rows
    std::vector<std::vector<HalvingStep>> steps_; // k step rows
    std::vector<VertexId> vertices_;              // id -> descriptor
    std::vector<Digit> labels_;                   // id -> digit
    std::vector<std::vector<std::uint32_t>> adj_; // sorted neighbor ids
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_; // u < v, sorted
    std::vector<std::size_t> result_base_;   // per row
    std::vector<std::size_t> floor_base_;    // per step row (index 1..k)
    std::vector<std::size_t> fraction_base_; // per step row (index 1..k)
};

// The same structure with every label reduced to its parity.
class BinaryGraph {
public:
    explicit BinaryGraph(DgbtGraph g);

    const DgbtGraph& structure() const { return graph_; }
    int bit(std::size_t id) const { return graph_.label(id) % 2; }

    // Parities of result row r, most significant first.
    std::vector<std::uint8_t> row_bits(unsigned r) const;

private:
    DgbtGraph graph_;
};

} // namespace mz
