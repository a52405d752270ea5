#include "pach/extraction.hpp"

#include "pach/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pach {

TripartiteGraph::TripartiteGraph(std::array<int, 3> sizes) : sizes_(sizes) {
    for (int i = 0; i < 3; ++i) {
        if (sizes[i] < 0) throw std::invalid_argument("TripartiteGraph: negative part size");
        for (int j = 0; j < 3; ++j)
            if (i != j) adjacency_[i][j].assign(static_cast<std::size_t>(sizes[i]), BitVector(static_cast<std::size_t>(sizes[j])));
    }
}

void TripartiteGraph::check(const Vertex& a, const Vertex& b) const {
    if (a.part == b.part) throw std::invalid_argument("TripartiteGraph: edge inside a part");
    for (const auto* v : {&a, &b})
        if (v->part < 0 || v->part > 2 || v->index < 0 || v->index >= sizes_[v->part])
            throw std::out_of_range("TripartiteGraph: vertex out of range");
}

void TripartiteGraph::add_edge(const Vertex& a, const Vertex& b) {
    check(a, b);
    adjacency_[a.part][b.part][static_cast<std::size_t>(a.index)].set(static_cast<std::size_t>(b.index));
    adjacency_[b.part][a.part][static_cast<std::size_t>(b.index)].set(static_cast<std::size_t>(a.index));
}

bool TripartiteGraph::has_edge(const Vertex& a, const Vertex& b) const {
    check(a, b);
    return adjacency_[a.part][b.part][static_cast<std::size_t>(a.index)].test(static_cast<std::size_t>(b.index));
}

std::size_t TripartiteGraph::edge_count() const {
    std::size_t e = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (const auto& row : adjacency_[i][j]) e += row.count();
    return e;
}

std::uint64_t count_triangles(const TripartiteGraph& g) {
    std::uint64_t total = 0;
    for (int a = 0; a < g.sizes()[0]; ++a) {
        const BitVector& to2 = g.neighbors(0, a, 2);
        const BitVector& to1 = g.neighbors(0, a, 1);
        for (std::size_t b = to1.find_first(); b != BitVector::npos; b = to1.find_next_from(b + 1))
            total += to2.and_count(g.neighbors(1, static_cast<int>(b), 2));
    }
    return total;
}

bool is_complete_tripartite(const TripartiteGraph& g, const TripartiteParts& parts) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int a : parts[i])
                for (int b : parts[j])
                    if (!g.has_edge({i, a}, {j, b})) return false;
    return true;
}

namespace {

BitVector all_of(int size) {
    BitVector v(static_cast<std::size_t>(size));
    v.set_all();
    return v;
}

std::vector<int> first_members(const BitVector& v, int t) {
    std::vector<int> out;
    for (std::size_t i = v.find_first(); i != BitVector::npos && static_cast<int>(out.size()) < t; i = v.find_next_from(i + 1))
        out.push_back(static_cast<int>(i));
    return out;
}

// Peels `third` first: each pick maximizes the number of (first, second)
// edges surviving inside its common neighborhood. Then a bipartite dependent
// choice on first x second.
std::optional<TripartiteParts> greedy_in_order(const TripartiteGraph& g, int t, std::array<int, 3> order) {
    const auto [first, second, third] = order;
    BitVector u1 = all_of(g.sizes()[first]);
    BitVector u2 = all_of(g.sizes()[second]);
    std::vector<int> chosen3;
    std::vector<bool> used3(static_cast<std::size_t>(g.sizes()[third]), false);
    for (int step = 0; step < t; ++step) {
        long best = -1;
        int best_c = -1;
        for (int c = 0; c < g.sizes()[third]; ++c) {
            if (used3[static_cast<std::size_t>(c)]) continue;
            const BitVector n1 = u1 & g.neighbors(third, c, first);
            const BitVector n2 = u2 & g.neighbors(third, c, second);
            if (static_cast<int>(n1.count()) < t || static_cast<int>(n2.count()) < t) continue;
            long score = 0;
            for (std::size_t a = n1.find_first(); a != BitVector::npos; a = n1.find_next_from(a + 1))
                score += static_cast<long>(n2.and_count(g.neighbors(first, static_cast<int>(a), second)));
            if (score > best) {
                best = score;
                best_c = c;
            }
        }
        if (best_c < 0 || best <= 0) return std::nullopt;
        used3[static_cast<std::size_t>(best_c)] = true;
        chosen3.push_back(best_c);
        u1 &= g.neighbors(third, best_c, first);
        u2 &= g.neighbors(third, best_c, second);
    }

    std::vector<int> chosen1;
    BitVector common2 = u2;
    BitVector remaining1 = u1;
    for (int step = 0; step < t; ++step) {
        long best = -1;
        int best_a = -1;
        for (std::size_t a = remaining1.find_first(); a != BitVector::npos; a = remaining1.find_next_from(a + 1)) {
            const long score = static_cast<long>(common2.and_count(g.neighbors(first, static_cast<int>(a), second)));
            if (score > best) {
                best = score;
                best_a = static_cast<int>(a);
            }
        }
        if (best_a < 0 || best < t) return std::nullopt;
        remaining1.set(static_cast<std::size_t>(best_a), false);
        chosen1.push_back(best_a);
        common2 &= g.neighbors(first, best_a, second);
    }
    TripartiteParts parts;
    parts[first] = chosen1;
    parts[second] = first_members(common2, t);
    parts[third] = chosen3;
    for (auto& p : parts) std::sort(p.begin(), p.end());
    return parts;
}

std::uint64_t max_triangle_degree(const TripartiteGraph& g, int part) {
    std::uint64_t best = 0;
    const int o1 = (part + 1) % 3;
    const int o2 = (part + 2) % 3;
    for (int v = 0; v < g.sizes()[part]; ++v) {
        const BitVector& n1 = g.neighbors(part, v, o1);
        const BitVector& n2 = g.neighbors(part, v, o2);
        std::uint64_t deg = 0;
        for (std::size_t a = n1.find_first(); a != BitVector::npos; a = n1.find_next_from(a + 1))
            deg += n2.and_count(g.neighbors(o1, static_cast<int>(a), o2));
        best = std::max(best, deg);
    }
    return best;
}

}  // namespace

std::optional<TripartiteParts> extract_tripartite(const TripartiteGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("extract_tripartite: t must be >= 1");
    for (int s : g.sizes())
        if (s < t) return std::nullopt;

    // Peeling order: descending part size, then triangle degree, then index.
    std::array<int, 3> rank_parts{0, 1, 2};
    std::array<std::uint64_t, 3> degree{};
    for (int p = 0; p < 3; ++p) degree[p] = max_triangle_degree(g, p);
    std::sort(rank_parts.begin(), rank_parts.end(), [&](int a, int b) {
        if (g.sizes()[a] != g.sizes()[b]) return g.sizes()[a] > g.sizes()[b];
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });
    std::array<int, 3> perm{0, 1, 2};
    do {
        // perm indexes into rank_parts; the preferred part is peeled first.
        const std::array<int, 3> order{rank_parts[perm[1]], rank_parts[perm[2]], rank_parts[perm[0]]};
        if (auto parts = greedy_in_order(g, t, order)) {
            if (!is_complete_tripartite(g, *parts)) throw std::logic_error("extract_tripartite: produced an incomplete triple");
            return parts;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

TripartiteExtraction extract_largest_tripartite(const TripartiteGraph& g) {
    TripartiteExtraction best;
    const int limit = *std::min_element(g.sizes().begin(), g.sizes().end());
    for (int t = 1; t <= limit; ++t)
        if (auto parts = extract_tripartite(g, t)) best = {t, std::move(*parts)};
    return best;
}

TripartiteExtraction brute_max_complete_tripartite(const TripartiteGraph& g, int part_limit) {
    for (int s : g.sizes())
        if (s > part_limit || s > 24)
            throw BudgetExceededError("brute_max_complete_tripartite: part of size " + std::to_string(s) + " exceeds the limit");
    const auto [n0, n1, n2] = g.sizes();
    auto mask_of = [](const BitVector& v) {
        std::uint32_t m = 0;
        for (std::size_t i = v.find_first(); i != BitVector::npos; i = v.find_next_from(i + 1)) m |= 1u << i;
        return m;
    };
    std::vector<std::uint32_t> n01(static_cast<std::size_t>(n0)), n02(static_cast<std::size_t>(n0)), n12(static_cast<std::size_t>(n1));
    for (int a = 0; a < n0; ++a) {
        n01[a] = mask_of(g.neighbors(0, a, 1));
        n02[a] = mask_of(g.neighbors(0, a, 2));
    }
    for (int b = 0; b < n1; ++b) n12[b] = mask_of(g.neighbors(1, b, 2));

    TripartiteExtraction best;
    std::uint32_t best_a = 0, best_b = 0, best_c = 0;
    const std::uint32_t full1 = n1 == 32 ? ~0u : (1u << n1) - 1;
    const std::uint32_t full2 = n2 == 32 ? ~0u : (1u << n2) - 1;
    for (std::uint32_t A = 1; A < (1u << n0); ++A) {
        const int size_a = std::popcount(A);
        if (size_a <= best.t) continue;
        std::uint32_t cb = full1, cc = full2;
        for (int a = 0; a < n0; ++a)
            if ((A >> a) & 1u) {
                cb &= n01[a];
                cc &= n02[a];
            }
        if (std::popcount(cb) <= best.t || std::popcount(cc) <= best.t) continue;
        // Enumerate nonempty subsets B of cb.
        for (std::uint32_t B = cb; B; B = (B - 1) & cb) {
            const int size_b = std::popcount(B);
            if (size_b <= best.t) continue;
            std::uint32_t C = cc;
            for (int b = 0; b < n1; ++b)
                if ((B >> b) & 1u) C &= n12[b];
            const int t = std::min({size_a, size_b, std::popcount(C)});
            if (t > best.t) {
                best.t = t;
                best_a = A;
                best_b = B;
                best_c = C;
            }
        }
    }
    auto take = [&](std::uint32_t m) {
        std::vector<int> out;
        for (int i = 0; i < 32 && static_cast<int>(out.size()) < best.t; ++i)
            if ((m >> i) & 1u) out.push_back(i);
        return out;
    };
    if (best.t > 0) best.parts = {take(best_a), take(best_b), take(best_c)};
    return best;
}

PartiteHypergraph::PartiteHypergraph(int parts, int n) : parts_(parts), n_(n) {
    if (parts < 1 || n < 1) throw std::invalid_argument("PartiteHypergraph: parts and n must be positive");
    std::uint64_t count = 1;
    for (int i = 0; i < parts; ++i) {
        if (count > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(n))
            throw std::invalid_argument("PartiteHypergraph: too many tuples for a dense representation");
        count *= static_cast<std::uint64_t>(n);
    }
    bits_ = BitVector(count);
}

std::uint64_t PartiteHypergraph::rank(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != parts_) throw std::invalid_argument("PartiteHypergraph: tuple arity mismatch");
    std::uint64_t r = 0;
    for (int x : tuple) {
        if (x < 0 || x >= n_) throw std::out_of_range("PartiteHypergraph: tuple entry out of range");
        r = r * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(x);
    }
    return r;
}

std::vector<int> PartiteHypergraph::unrank(std::uint64_t r) const {
    std::vector<int> tuple(static_cast<std::size_t>(parts_));
    for (int i = parts_ - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::uint64_t>(n_));
        r /= static_cast<std::uint64_t>(n_);
    }
    return tuple;
}

Rational PartiteHypergraph::density() const {
    Rational r(mpz_class(std::to_string(bits_.count())), mpz_class(std::to_string(bits_.size())));
    r.canonicalize();
    return r;
}

bool is_complete_box(const PartiteHypergraph& h, const BoxParts& parts) {
    if (static_cast<int>(parts.size()) != h.part_count()) return false;
    for (const auto& p : parts)
        if (p.empty()) return false;
    std::vector<std::size_t> idx(parts.size(), 0);
    std::vector<int> tuple(parts.size());
    while (true) {
        for (std::size_t i = 0; i < parts.size(); ++i) tuple[i] = parts[i][idx[i]];
        if (!h.contains(tuple)) return false;
        std::size_t i = parts.size();
        while (i > 0) {
            --i;
            if (++idx[i] < parts[i].size()) break;
            idx[i] = 0;
            if (i == 0) return true;
        }
    }
}

namespace {

// Tuples of an r-uniform bitset whose first coordinate is a: a contiguous block.
BitVector slice(const BitVector& tuples, int n, int a) {
    const std::size_t block = tuples.size() / static_cast<std::size_t>(n);
    BitVector out(block);
    const std::size_t base = block * static_cast<std::size_t>(a);
    for (std::size_t i = tuples.find_next_from(base); i != BitVector::npos && i < base + block; i = tuples.find_next_from(i + 1))
        out.set(i - base);
    return out;
}

std::optional<BoxParts> greedy_box(const BitVector& tuples, int parts, int n, int t) {
    if (parts == 1) {
        if (static_cast<int>(tuples.count()) < t) return std::nullopt;
        return BoxParts{first_members(tuples, t)};
    }
    std::vector<BitVector> slices;
    slices.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) slices.push_back(slice(tuples, n, a));
    BitVector link(tuples.size() / static_cast<std::size_t>(n));
    link.set_all();
    std::vector<int> chosen;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int step = 0; step < t; ++step) {
        long best = -1;
        int best_a = -1;
        for (int a = 0; a < n; ++a) {
            if (used[static_cast<std::size_t>(a)]) continue;
            const long score = static_cast<long>(link.and_count(slices[static_cast<std::size_t>(a)]));
            if (score > best) {
                best = score;
                best_a = a;
            }
        }
        if (best_a < 0 || best <= 0) return std::nullopt;
        used[static_cast<std::size_t>(best_a)] = true;
        chosen.push_back(best_a);
        link &= slices[static_cast<std::size_t>(best_a)];
    }
    auto rest = greedy_box(link, parts - 1, n, t);
    if (!rest) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    BoxParts out{chosen};
    out.insert(out.end(), rest->begin(), rest->end());
    return out;
}

// Reorders the parts of h so that new part i is old part order[i].
PartiteHypergraph permute_parts(const PartiteHypergraph& h, const std::vector<int>& order) {
    PartiteHypergraph out(h.part_count(), h.part_size());
    const BitVector& bits = h.bits();
    std::vector<int> permuted(order.size());
    for (std::size_t r = bits.find_first(); r != BitVector::npos; r = bits.find_next_from(r + 1)) {
        const auto tuple = h.unrank(r);
        for (std::size_t i = 0; i < order.size(); ++i) permuted[i] = tuple[static_cast<std::size_t>(order[i])];
        out.insert(permuted);
    }
    return out;
}

}  // namespace

std::optional<BoxParts> extract_box(const PartiteHypergraph& h, int t) {
    if (t < 1) throw std::invalid_argument("extract_box: t must be >= 1");
    if (t > h.part_size()) return std::nullopt;
    const int r = h.part_count();
    for (int shift = 0; shift < r; ++shift) {
        std::vector<int> order(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) order[static_cast<std::size_t>(i)] = (i + shift) % r;
        const PartiteHypergraph view = shift == 0 ? h : permute_parts(h, order);
        auto parts = greedy_box(view.bits(), r, h.part_size(), t);
        if (!parts) continue;
        BoxParts original(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) original[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = (*parts)[static_cast<std::size_t>(i)];
        if (!is_complete_box(h, original)) throw std::logic_error("extract_box: produced an incomplete box");
        return original;
    }
    return std::nullopt;
}

namespace {

// Exhaustive: for every subset A of the first part, recurse into the common
// link of A.
BoxExtraction brute_box(const BitVector& tuples, int parts, int n) {
    BoxExtraction best;
    if (parts == 1) {
        best.t = static_cast<int>(tuples.count());
        if (best.t > 0) best.parts = {first_members(tuples, best.t)};
        return best;
    }
    std::vector<BitVector> slices;
    for (int a = 0; a < n; ++a) slices.push_back(slice(tuples, n, a));
    for (std::uint32_t A = 1; A < (1u << n); ++A) {
        const int size_a = std::popcount(A);
        if (size_a <= best.t) continue;
        BitVector link(tuples.size() / static_cast<std::size_t>(n));
        link.set_all();
        for (int a = 0; a < n; ++a)
            if ((A >> a) & 1u) link &= slices[static_cast<std::size_t>(a)];
        if (link.none()) continue;
        BoxExtraction inner = brute_box(link, parts - 1, n);
        const int t = std::min(size_a, inner.t);
        if (t > best.t) {
            best.t = t;
            std::vector<int> chosen;
            for (int a = 0; a < n && static_cast<int>(chosen.size()) < t; ++a)
                if ((A >> a) & 1u) chosen.push_back(a);
            best.parts = {chosen};
            for (auto& p : inner.parts) {
                p.resize(static_cast<std::size_t>(t));
                best.parts.push_back(p);
            }
        }
    }
    return best;
}

}  // namespace

BoxExtraction brute_max_box(const PartiteHypergraph& h, int part_limit) {
    if (h.part_size() > part_limit || h.part_size() > 16)
        throw BudgetExceededError("brute_max_box: part size exceeds the limit");
    return brute_box(h.bits(), h.part_count(), h.part_size());
}

}  // namespace pach
