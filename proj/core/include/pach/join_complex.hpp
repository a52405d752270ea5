#pragma once

#include "pach/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace pach {

/// A vertex of the join: part index in [0, d] and index within the part.
struct Vertex {
    int part = 0;
    int index = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// A face of the join complex: at most one vertex per part, stored sorted by
/// part index.
class Face {
public:
    Face() = default;
    /// Sorts by part. Throws std::invalid_argument if two vertices share a part.
    explicit Face(std::vector<Vertex> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::optional<int> index_in_part(int part) const;
    bool contains(const Vertex& v) const;

    friend auto operator<=>(const Face&, const Face&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// X = V_0 * ... * V_d with |V_i| = n. Faces of each dimension are ranked
/// lexicographically by (part set, within-part indices); the first vertex is
/// the most significant digit.
class JoinComplex {
public:
    JoinComplex(int d, int n);

    int dimension() const { return d_; }
    int part_size() const { return n_; }
    int part_count() const { return d_ + 1; }

    /// C(d+1, k+1) * n^(k+1). Throws std::out_of_range unless 0 <= k <= d.
    std::uint64_t face_count(int k) const;

    bool is_valid(const Face& face) const;
    std::uint64_t rank(const Face& face) const;
    Face unrank(int k, std::uint64_t r) const;

    /// All k-faces in rank order.
    std::vector<Face> faces(int k) const;

    /// Ranks of the k facets of the k-face with rank r, in the order of the
    /// removed vertex's part (ascending).
    std::vector<std::uint64_t> facet_ranks(int k, std::uint64_t r) const;

    /// Lexicographically ordered part sets of size k+1.
    const std::vector<std::vector<int>>& part_sets(int k) const;

private:
    void check_dimension(int k) const;

    int d_;
    int n_;
    std::vector<std::vector<std::vector<int>>> part_sets_;
    std::vector<std::vector<int>> mask_to_set_index_;
    std::vector<std::uint64_t> pow_n_;
};

/// The (d-1)-face of the d-face `top` that misses exactly the vertex in
/// `part`. Throws std::invalid_argument when `top` is not top-dimensional.
Face opposite_face(const JoinComplex& complex, const Face& top, int part);

/// Max over faces tau and dimensions k of the fraction of k-faces sharing a
/// vertex with tau, computed in closed form.
Rational sparsity(const JoinComplex& complex);

std::uint64_t binomial(int n, int k);

}  // namespace pach
