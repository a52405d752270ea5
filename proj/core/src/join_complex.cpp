#include "pach/join_complex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace pach {

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i].part == vertices_[i - 1].part)
            throw std::invalid_argument("face has two vertices in part " + std::to_string(vertices_[i].part));
}

std::optional<int> Face::index_in_part(int part) const {
    for (const auto& v : vertices_)
        if (v.part == part) return v.index;
    return std::nullopt;
}

bool Face::contains(const Vertex& v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

JoinComplex::JoinComplex(int d, int n) : d_(d), n_(n) {
    if (d < 1 || d > 16) throw std::invalid_argument("JoinComplex: d must be in [1, 16]");
    if (n < 1) throw std::invalid_argument("JoinComplex: n must be >= 1");

    pow_n_.assign(static_cast<std::size_t>(d + 2), 1);
    for (int i = 1; i <= d + 1; ++i) {
        if (pow_n_[i - 1] > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
            throw std::overflow_error("JoinComplex: n^(d+1) overflows 64 bits");
        pow_n_[i] = pow_n_[i - 1] * static_cast<std::uint64_t>(n);
    }

    const int parts = d + 1;
    part_sets_.resize(static_cast<std::size_t>(parts));
    mask_to_set_index_.assign(static_cast<std::size_t>(parts), std::vector<int>(std::size_t{1} << parts, -1));
    for (int k = 0; k <= d; ++k) {
        std::vector<int> combo(static_cast<std::size_t>(k + 1));
        for (int i = 0; i <= k; ++i) combo[i] = i;
        while (true) {
            unsigned mask = 0;
            for (int p : combo) mask |= 1u << p;
            mask_to_set_index_[k][mask] = static_cast<int>(part_sets_[k].size());
            part_sets_[k].push_back(combo);
            int i = k;
            while (i >= 0 && combo[i] == parts - (k + 1) + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j <= k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    // Overflow guard for the largest face count.
    for (int k = 0; k <= d; ++k) {
        const auto sets = static_cast<std::uint64_t>(part_sets_[k].size());
        if (pow_n_[k + 1] > std::numeric_limits<std::uint64_t>::max() / sets)
            throw std::overflow_error("JoinComplex: face count overflows 64 bits");
    }
}

void JoinComplex::check_dimension(int k) const {
    if (k < 0 || k > d_)
        throw std::out_of_range("face dimension " + std::to_string(k) + " outside [0, " + std::to_string(d_) + "]");
}

std::uint64_t JoinComplex::face_count(int k) const {
    check_dimension(k);
    return static_cast<std::uint64_t>(part_sets_[k].size()) * pow_n_[k + 1];
}

const std::vector<std::vector<int>>& JoinComplex::part_sets(int k) const {
    check_dimension(k);
    return part_sets_[k];
}

bool JoinComplex::is_valid(const Face& face) const {
    const int k = face.dimension();
    if (k < 0 || k > d_) return false;
    int last = -1;
    for (const auto& v : face.vertices()) {
        if (v.part <= last || v.part > d_ || v.index < 0 || v.index >= n_) return false;
        last = v.part;
    }
    return true;
}

std::uint64_t JoinComplex::rank(const Face& face) const {
    if (!is_valid(face)) throw std::invalid_argument("rank: face is not a face of this complex");
    const int k = face.dimension();
    unsigned mask = 0;
    std::uint64_t digits = 0;
    for (const auto& v : face.vertices()) {
        mask |= 1u << v.part;
        digits = digits * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v.index);
    }
    const auto set_index = static_cast<std::uint64_t>(mask_to_set_index_[k][mask]);
    return set_index * pow_n_[k + 1] + digits;
}

Face JoinComplex::unrank(int k, std::uint64_t r) const {
    check_dimension(k);
    if (r >= face_count(k))
        throw std::out_of_range("rank " + std::to_string(r) + " out of range for dimension " + std::to_string(k));
    const auto& set = part_sets_[k][r / pow_n_[k + 1]];
    std::uint64_t digits = r % pow_n_[k + 1];
    std::vector<Vertex> vs(static_cast<std::size_t>(k + 1));
    for (int i = k; i >= 0; --i) {
        vs[i] = Vertex{set[i], static_cast<int>(digits % static_cast<std::uint64_t>(n_))};
        digits /= static_cast<std::uint64_t>(n_);
    }
    return Face(std::move(vs));
}

std::vector<Face> JoinComplex::faces(int k) const {
    const std::uint64_t count = face_count(k);
    std::vector<Face> out;
    out.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) out.push_back(unrank(k, r));
    return out;
}

std::vector<std::uint64_t> JoinComplex::facet_ranks(int k, std::uint64_t r) const {
    if (k < 1) throw std::out_of_range("facet_ranks: k must be >= 1");
    const Face face = unrank(k, r);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(k + 1));
    const auto& vs = face.vertices();
    for (std::size_t skip = 0; skip < vs.size(); ++skip) {
        std::vector<Vertex> sub;
        sub.reserve(vs.size() - 1);
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (i != skip) sub.push_back(vs[i]);
        out.push_back(rank(Face(std::move(sub))));
    }
    return out;
}

Face opposite_face(const JoinComplex& complex, const Face& top, int part) {
    if (!complex.is_valid(top) || top.dimension() != complex.dimension())
        throw std::invalid_argument("opposite_face: face is not top-dimensional");
    if (part < 0 || part > complex.dimension()) throw std::out_of_range("opposite_face: part index out of range");
    std::vector<Vertex> sub;
    for (const auto& v : top.vertices())
        if (v.part != part) sub.push_back(v);
    return Face(std::move(sub));
}

Rational sparsity(const JoinComplex& complex) {
    // The fraction depends only on the dimension j of tau: a k-face on part
    // set S avoids tau iff it differs from tau on every part of S that tau
    // occupies, giving n^{|S \ T|} (n-1)^{|S cap T|} avoiding faces.
    const int d = complex.dimension();
    const int n = complex.part_size();
    const int parts = d + 1;
    Rational best = 0;
    for (int j = 0; j <= d; ++j) {
        for (int k = 0; k <= d; ++k) {
            mpz_class total = 0;
            mpz_class avoiding = 0;
            // Tau occupies parts 0..j; count part sets by overlap size.
            for (int overlap = 0; overlap <= std::min(j + 1, k + 1); ++overlap) {
                const int outside = k + 1 - overlap;
                if (outside > parts - (j + 1)) continue;
                const mpz_class sets = mpz_class(std::to_string(binomial(j + 1, overlap))) *
                                       mpz_class(std::to_string(binomial(parts - (j + 1), outside)));
                mpz_class full, avoid_in, avoid_out;
                mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k + 1));
                mpz_ui_pow_ui(avoid_in.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(overlap));
                mpz_ui_pow_ui(avoid_out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(outside));
                total += sets * full;
                avoiding += sets * avoid_in * avoid_out;
            }
            Rational fraction(total - avoiding, total);
            fraction.canonicalize();
            if (fraction > best) best = fraction;
        }
    }
    return best;
}

}  // namespace pach
