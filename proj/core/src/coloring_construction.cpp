#include "pach/coloring_construction.hpp"

#include "pach/errors.hpp"
#include "pach/extraction.hpp"
#include "pach/parallel.hpp"
#include "pach/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace pach {

TwoColoring random_coloring(const JoinComplex& complex, std::uint64_t seed) {
    if (complex.dimension() < 1) throw std::invalid_argument("random_coloring: d must be positive");
    Rng rng(derive_seed(seed, 0xc010));
    TwoColoring c{complex.dimension(), complex.part_size(), BitVector(complex.face_count(complex.dimension() - 1)), seed};
    for (std::size_t i = 0; i < c.negative.size(); ++i)
        if (rng.bit()) c.negative.set(i);
    return c;
}

TwoColoring constant_coloring(const JoinComplex& complex, int color) {
    if (color != 1 && color != -1) throw std::invalid_argument("constant_coloring: color must be +1 or -1");
    TwoColoring c{complex.dimension(), complex.part_size(), BitVector(complex.face_count(complex.dimension() - 1)), 0};
    if (color == -1) c.negative.set_all();
    return c;
}

int face_color(const JoinComplex& complex, const TwoColoring& coloring, const Face& top) {
    const int d = complex.dimension();
    const auto facets = complex.facet_ranks(d, complex.rank(top));
    const int first = coloring.color(facets.front());
    for (const auto r : facets)
        if (coloring.color(r) != first) return 0;
    return first;
}

namespace {

std::vector<std::vector<int>> all_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (m - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct MonoHypergraphs {
    PartiteHypergraph positive;
    PartiteHypergraph negative;
};

MonoHypergraphs mono_cliques(const JoinComplex& complex, const TwoColoring& coloring) {
    const int d = complex.dimension();
    MonoHypergraphs h{PartiteHypergraph(d + 1, complex.part_size()), PartiteHypergraph(d + 1, complex.part_size())};
    std::vector<int> tuple(static_cast<std::size_t>(d + 1));
    for (const auto& top : complex.faces(d)) {
        const int c = face_color(complex, coloring, top);
        if (c == 0) continue;
        for (const auto& v : top.vertices()) tuple[static_cast<std::size_t>(v.part)] = v.index;
        (c > 0 ? h.positive : h.negative).insert(tuple);
    }
    return h;
}

// Which colors have a monochromatic clique inside the selector: bit 0 for +1,
// bit 1 for -1.
int clique_colors(const MonoHypergraphs& h, const Selector& sel) {
    const std::size_t parts = sel.size();
    std::vector<std::size_t> idx(parts, 0);
    std::vector<int> tuple(parts);
    int found = 0;
    while (true) {
        for (std::size_t i = 0; i < parts; ++i) tuple[i] = sel[i][idx[i]];
        const auto r = h.positive.rank(tuple);
        if (h.positive.bits().test(r)) found |= 1;
        if (h.negative.bits().test(r)) found |= 2;
        if (found == 3) return found;
        std::size_t i = parts;
        while (i > 0) {
            --i;
            if (++idx[i] < sel[i].size()) break;
            idx[i] = 0;
            if (i == 0) return found;
        }
    }
}

Selector selector_at(const std::vector<std::vector<int>>& subsets, std::size_t parts, std::uint64_t index) {
    const std::uint64_t k = subsets.size();
    Selector sel(parts);
    for (std::size_t i = parts; i > 0; --i) {
        sel[i - 1] = subsets[index % k];
        index /= k;
    }
    return sel;
}

}  // namespace

ColoringVerification verify_coloring(const JoinComplex& complex, const TwoColoring& coloring, int m,
                                     const ColoringVerifyOptions& options) {
    const int n = complex.part_size();
    const int d = complex.dimension();
    if (m < 1 || m > n) throw std::invalid_argument("verify_coloring: m must lie in [1, n]");
    if (coloring.negative.size() != complex.face_count(d - 1))
        throw std::invalid_argument("verify_coloring: coloring does not match the complex");
    const MonoHypergraphs h = mono_cliques(complex, coloring);
    const auto subsets = all_subsets(n, m);
    const std::size_t parts = static_cast<std::size_t>(d + 1);

    std::uint64_t total = 1;
    bool over_budget = false;
    for (std::size_t i = 0; i < parts; ++i) {
        if (total > options.budget / subsets.size()) {
            over_budget = true;
            break;
        }
        total *= subsets.size();
    }
    over_budget = over_budget || total > options.budget;

    ColoringVerification out;
    std::uint64_t count = total;
    if (over_budget) {
        out.sampled_only = true;
        count = options.samples;
    }

    // Sampled selectors are regenerated per position from a per-position
    // seed, so chunks can run independently of each other.
    auto selector_for = [&](std::uint64_t pos) {
        if (!over_budget) return selector_at(subsets, parts, pos);
        Rng rng(derive_seed(options.seed, 0x5e1000 + pos));
        Selector sel(parts);
        for (std::size_t i = 0; i < parts; ++i) sel[i] = subsets[rng.below(subsets.size())];
        return sel;
    };

    std::atomic<std::uint64_t> first_failure{std::numeric_limits<std::uint64_t>::max()};
    parallel_chunks(count, options.jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::uint64_t pos = begin; pos < end; ++pos) {
            if (pos >= first_failure.load(std::memory_order_relaxed)) return;
            if (clique_colors(h, selector_for(pos)) != 3) {
                std::uint64_t cur = first_failure.load();
                while (pos < cur && !first_failure.compare_exchange_weak(cur, pos)) {
                }
                return;
            }
        }
    });
    const std::uint64_t fail = first_failure.load();
    if (fail == std::numeric_limits<std::uint64_t>::max()) {
        out.ok = true;
        out.selectors_checked = count;
    } else {
        out.selectors_checked = fail + 1;
        Selector sel = selector_for(fail);
        const int colors = clique_colors(h, sel);
        out.failure_lacks_positive = (colors & 1) == 0;
        out.failure_lacks_negative = (colors & 2) == 0;
        out.failure = std::move(sel);
    }
    return out;
}

ColoringSearchResult search_coloring(const JoinComplex& complex, int m_target, std::uint64_t seed, int max_retries,
                                     const ColoringVerifyOptions& options) {
    ColoringSearchResult result;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        TwoColoring c = random_coloring(complex, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        c.seed = seed;
        result.attempts = attempt + 1;
        result.verification = verify_coloring(complex, c, m_target, options);
        if (result.verification.ok) {
            result.coloring = std::move(c);
            break;
        }
    }
    return result;
}

CliqueProbabilityReport clique_probability_oracle(int m, int d, const CliqueProbabilityOptions& options) {
    if (m < 1 || d < 1) throw std::invalid_argument("clique_probability_oracle: m and d must be positive");
    const JoinComplex X(d, m);
    CliqueProbabilityReport rep;
    rep.m = m;
    rep.d = d;
    rep.edges = X.face_count(d - 1);
    rep.cliques = X.face_count(d);

    const std::uint64_t exponent = rep.edges / static_cast<std::uint64_t>(d + 1);  // m^d
    if (exponent > (1u << 20)) throw BudgetExceededError("clique_probability_oracle: bound exponent too large");
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), (1ul << (d + 1)) - 1, exponent);
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(d + 1) * exponent);
    rep.bound = mpq_class(num, den);
    rep.bound.canonicalize();

    std::vector<std::vector<std::uint64_t>> facets(rep.cliques);
    std::vector<std::uint64_t> per_edge(rep.edges, 0);
    for (std::uint64_t r = 0; r < rep.cliques; ++r) {
        facets[r] = X.facet_ranks(d, r);
        for (const auto e : facets[r]) ++per_edge[e];
    }
    rep.cliques_per_edge = per_edge.front();
    rep.regular = std::all_of(per_edge.begin(), per_edge.end(), [&](std::uint64_t c) { return c == rep.cliques_per_edge; });

    if (rep.edges <= options.max_exhaustive_edges && rep.edges < 64) {
        rep.exact = true;
        std::vector<std::uint64_t> masks;
        for (const auto& f : facets) {
            std::uint64_t mask = 0;
            for (const auto e : f) mask |= std::uint64_t{1} << e;
            masks.push_back(mask);
        }
        const std::uint64_t subsets = std::uint64_t{1} << rep.edges;
        std::uint64_t free = 0;
        for (std::uint64_t s = 0; s < subsets; ++s) {
            bool has = false;
            for (const auto mask : masks)
                if ((s & mask) == mask) {
                    has = true;
                    break;
                }
            if (!has) ++free;
        }
        rep.subsets = subsets;
        rep.fraction = mpq_class(mpz_class(static_cast<unsigned long>(free)), mpz_class(static_cast<unsigned long>(subsets)));
        rep.fraction.canonicalize();
        rep.estimate = rep.fraction.get_d();
        rep.ci_low = rep.ci_high = rep.estimate;
        rep.within_bound = rep.fraction <= rep.bound;
        return rep;
    }

    Rng rng(derive_seed(options.seed, 0xc11c));
    std::vector<char> present(rep.edges);
    std::uint64_t free = 0;
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        for (auto& e : present) e = rng.bit() ? 1 : 0;
        const bool has = std::any_of(facets.begin(), facets.end(), [&](const std::vector<std::uint64_t>& f) {
            return std::all_of(f.begin(), f.end(), [&](std::uint64_t e) { return present[e] != 0; });
        });
        if (!has) ++free;
    }
    rep.subsets = options.samples;
    const double nn = static_cast<double>(options.samples);
    rep.estimate = static_cast<double>(free) / nn;
    const double half = 1.96 * std::sqrt(rep.estimate * (1 - rep.estimate) / nn);
    rep.ci_low = std::max(0.0, rep.estimate - half);
    rep.ci_high = std::min(1.0, rep.estimate + half);
    return rep;
}

LogBound coloring_union_bound(std::uint64_t n, int d, std::uint64_t m) {
    if (d < 1) throw std::invalid_argument("coloring_union_bound: d must be positive");
    if (m > n) throw std::invalid_argument("coloring_union_bound: m must not exceed n");
    mpz_class md;
    mpz_ui_pow_ui(md.get_mpz_t(), m, static_cast<unsigned long>(d));
    LogLinearForm form;
    form.add(mpz_class(d + 1), binomial_mpz(n, m));
    form.add(mpz_class(1), mpz_class(2));
    form.add(md, mpz_class(static_cast<unsigned long>((1ul << (d + 1)) - 1)));
    form.add(-md * (d + 1), mpz_class(2));
    return form.evaluate();
}

std::int64_t pach_threshold_coloring(std::uint64_t n, int d) {
    if (d < 2) throw std::invalid_argument("pach_threshold_coloring: d must be at least 2");
    if (n < 2) throw std::invalid_argument("pach_threshold_coloring: n must be at least 2");
    return certified_ceil_scaled_log_root(25, n, static_cast<unsigned long>(d - 1));
}

double coloring_construction_cap(std::uint64_t n, int d) {
    if (d < 2) throw std::invalid_argument("coloring_construction_cap: d must be at least 2");
    return scaled_log_root(30, n, static_cast<unsigned long>(d - 1));
}

namespace {

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t c = 2; primes.size() < count; ++c) {
        bool prime = true;
        for (const auto p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(c);
    }
    return primes;
}

void require_pushed_shape(const JoinComplex& complex, const TwoColoring& coloring) {
    if (complex.dimension() != 2) throw std::invalid_argument("pushed map: only d = 2 is supported");
    if (coloring.negative.size() != complex.face_count(1)) throw std::invalid_argument("pushed map: coloring does not match the complex");
}

}  // namespace

PushedLayout default_pushed_layout(const JoinComplex& complex, const TwoColoring& coloring, std::uint64_t seed) {
    require_pushed_shape(complex, coloring);
    Rng rng(derive_seed(seed, 0x9054));
    PushedLayout layout;
    const std::size_t vertices = complex.face_count(0);
    std::set<Rational> used, sums;
    while (layout.positions.size() < vertices) {
        const Rational x = rng.bounded_rational(1000, 64);
        if (used.count(x)) continue;
        bool clash = false;
        std::vector<Rational> fresh;
        for (const auto& y : layout.positions) {
            Rational s = x + y;
            if (sums.count(s) || std::find(fresh.begin(), fresh.end(), s) != fresh.end()) {
                clash = true;
                break;
            }
            fresh.push_back(std::move(s));
        }
        if (clash) continue;
        used.insert(x);
        sums.insert(fresh.begin(), fresh.end());
        layout.positions.push_back(x);
    }

    const std::size_t edges = complex.face_count(1);
    auto primes = first_primes(edges);
    for (std::size_t i = primes.size(); i > 1; --i) std::swap(primes[i - 1], primes[rng.below(i)]);
    Rational top = 0;
    for (const auto p : primes) {
        layout.heights.emplace_back(static_cast<unsigned long>(p));
        top = std::max(top, layout.heights.back());
    }

    std::set<Rational> apex_ys;
    for (const auto& f : complex.faces(2)) {
        const int c = face_color(complex, coloring, f);
        Rational cx = 0;
        for (const auto& v : f.vertices()) cx += layout.positions[static_cast<std::size_t>(v.part * complex.part_size() + v.index)];
        cx /= 3;
        Rational y;
        do {
            y = rng.grid(Rational(1), 2 * top, 1u << 20);
            if (c < 0 || (c == 0 && rng.bit())) y = -y;
        } while (apex_ys.count(y));
        apex_ys.insert(y);
        layout.apexes.push_back({cx + rng.bounded_rational(100, 64), y});
    }
    return layout;
}

PLMap build_pushed_map(const JoinComplex& complex, const TwoColoring& coloring, const PushedLayout& layout) {
    require_pushed_shape(complex, coloring);
    const int n = complex.part_size();
    if (layout.positions.size() != complex.face_count(0) || layout.heights.size() != complex.face_count(1) ||
        layout.apexes.size() != complex.face_count(2))
        throw std::invalid_argument("pushed map: layout sizes do not match the complex");

    std::string problems;
    auto note = [&](const std::string& s) { problems += (problems.empty() ? "" : "; ") + s; };
    for (std::size_t i = 0; i < layout.positions.size(); ++i)
        for (std::size_t j = i + 1; j < layout.positions.size(); ++j)
            if (layout.positions[i] == layout.positions[j])
                note("vertices " + std::to_string(i) + " and " + std::to_string(j) + " share a position");
    for (std::size_t i = 0; i < layout.heights.size(); ++i) {
        if (layout.heights[i] <= 0) note("edge " + std::to_string(i) + " has a non-positive height");
        for (std::size_t j = i + 1; j < layout.heights.size(); ++j)
            if (layout.heights[i] == layout.heights[j]) note("edges " + std::to_string(i) + " and " + std::to_string(j) + " share a height");
    }
    const auto faces = complex.faces(2);
    for (std::size_t r = 0; r < faces.size(); ++r) {
        const int c = face_color(complex, coloring, faces[r]);
        const int s = sgn(layout.apexes[r].y);
        if (s == 0 || (c != 0 && s != c)) note("apex of face " + std::to_string(r) + " breaks the sign rule");
    }
    if (!problems.empty()) throw std::invalid_argument("pushed map: " + problems);

    std::vector<Point> points;
    for (const auto& x : layout.positions) points.push_back({x, 0});
    PLMap map;
    map.complex = complex;
    map.vertices = PointConfiguration(3, n, points);
    std::uint64_t r = 0;
    for (const auto& e : complex.faces(1)) {
        const Point& u = map.vertices.at(e.vertices()[0]);
        const Point& v = map.vertices.at(e.vertices()[1]);
        const Point peak{(u.x + v.x) / 2, coloring.color(r) * layout.heights[r]};
        map.edges.push_back(Polyline{{u, peak, v}});
        ++r;
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        std::vector<Triangle> cone;
        for (int part = 0; part < 3; ++part) {
            const Polyline& tent = map.edges[complex.rank(opposite_face(complex, faces[f], part))];
            for (std::size_t i = 0; i + 1 < tent.points.size(); ++i)
                cone.push_back(Triangle{{layout.apexes[f], tent.points[i], tent.points[i + 1]}});
        }
        map.faces.push_back(std::move(cone));
    }
    const MapValidationReport report = validate_map(map, 8);
    if (!report.valid()) {
        std::string msg = "pushed map failed validation (" + std::to_string(report.violation_count) + " violations)";
        for (const auto& v : report.violations) msg += "; " + v.kind + ": " + v.detail;
        throw DegeneracyError(msg);
    }
    return map;
}

PLMap build_pushed_map(const JoinComplex& complex, const TwoColoring& coloring, std::uint64_t seed, int max_tries) {
    std::string last;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        try {
            return build_pushed_map(complex, coloring, default_pushed_layout(complex, coloring, derive_seed(seed, static_cast<std::uint64_t>(attempt))));
        } catch (const DegeneracyError& e) {
            last = e.what();
        }
    }
    throw DegeneracyError("no generic pushed layout within " + std::to_string(max_tries) + " tries; last: " + last);
}

std::vector<Vertex> q_set(const PointConfiguration& config, const Point& p) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < config.size(); ++i)
        if (config.points()[i] == p) out.push_back(config.vertex_at(i));
    return out;
}

}  // namespace pach
