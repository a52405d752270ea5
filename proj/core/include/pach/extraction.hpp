#pragma once

#include "pach/bitvector.hpp"
#include "pach/join_complex.hpp"
#include "pach/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pach {

/// Graph on V_0 + V_1 + V_2 with edges only between different parts.
class TripartiteGraph {
public:
    explicit TripartiteGraph(std::array<int, 3> sizes);

    const std::array<int, 3>& sizes() const { return sizes_; }

    void add_edge(const Vertex& a, const Vertex& b);
    bool has_edge(const Vertex& a, const Vertex& b) const;

    /// Neighbors of `index` (in `part`) inside `other_part`, as a bit row.
    const BitVector& neighbors(int part, int index, int other_part) const {
        return adjacency_[part][other_part][static_cast<std::size_t>(index)];
    }

    std::size_t edge_count() const;

private:
    void check(const Vertex& a, const Vertex& b) const;

    std::array<int, 3> sizes_;
    // adjacency_[i][j][v]: neighbors in part j of vertex v of part i (i != j).
    std::array<std::array<std::vector<BitVector>, 3>, 3> adjacency_;
};

using TripartiteParts = std::array<std::vector<int>, 3>;

/// Transversal triangles, via row intersections.
std::uint64_t count_triangles(const TripartiteGraph& g);

bool is_complete_tripartite(const TripartiteGraph& g, const TripartiteParts& parts);

/// Greedy dependent choice for K(t,t,t). A returned triple has been verified
/// complete; std::nullopt is not a proof that none exists.
std::optional<TripartiteParts> extract_tripartite(const TripartiteGraph& g, int t);

struct TripartiteExtraction {
    int t = 0;
    TripartiteParts parts;
};

/// Largest t at which extract_tripartite succeeds (0 if none).
TripartiteExtraction extract_largest_tripartite(const TripartiteGraph& g);

/// Exact maximum t admitting K(t,t,t), by subset enumeration. Throws
/// BudgetExceededError when a part exceeds `part_limit`.
TripartiteExtraction brute_max_complete_tripartite(const TripartiteGraph& g, int part_limit = 8);

/// (r)-partite r-uniform hypergraph with parts of size n, stored as a bit per
/// transversal tuple. Tuples are ranked with part 0 most significant, which
/// matches the ranking of top faces of JoinComplex(r - 1, n).
class PartiteHypergraph {
public:
    PartiteHypergraph(int parts, int n);

    int part_count() const { return parts_; }
    int part_size() const { return n_; }
    std::uint64_t tuple_count() const { return bits_.size(); }

    std::uint64_t rank(std::span<const int> tuple) const;
    std::vector<int> unrank(std::uint64_t r) const;

    bool contains(std::span<const int> tuple) const { return bits_.test(rank(tuple)); }
    void insert(std::span<const int> tuple) { bits_.set(rank(tuple)); }
    void erase(std::span<const int> tuple) { bits_.set(rank(tuple), false); }

    const BitVector& bits() const { return bits_; }
    BitVector& bits() { return bits_; }

    Rational density() const;

private:
    int parts_;
    int n_;
    BitVector bits_;
};

using BoxParts = std::vector<std::vector<int>>;

bool is_complete_box(const PartiteHypergraph& h, const BoxParts& parts);

/// Greedy dependent choice for a complete sub-hypergraph with all parts of
/// size t. Verified when returned; std::nullopt is not a non-existence proof.
std::optional<BoxParts> extract_box(const PartiteHypergraph& h, int t);

struct BoxExtraction {
    int t = 0;
    BoxParts parts;
};

/// Exact maximum box by exhaustive subset enumeration (oracle).
BoxExtraction brute_max_box(const PartiteHypergraph& h, int part_limit = 8);

}  // namespace pach
