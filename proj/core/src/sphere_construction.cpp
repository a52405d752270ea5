#include "pach/sphere_construction.hpp"

#include "pach/errors.hpp"
#include "pach/parallel.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pach {

namespace {

Triangle image_of(const PointConfiguration& config, const Face& sigma) {
    const auto& vs = sigma.vertices();
    return Triangle{{config.at(vs[0]), config.at(vs[1]), config.at(vs[2])}};
}

void require_planar(const JoinComplex& complex, const PointConfiguration& config) {
    if (complex.dimension() != 2) throw std::invalid_argument("sphere model: only d = 2 is realized geometrically");
    if (config.part_count() != 3 || config.part_size() != complex.part_size())
        throw std::invalid_argument("sphere model: configuration does not match the complex");
}

BitVector slice(const BitVector& bits, std::size_t offset, std::size_t length) {
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i)
        if (bits.test(offset + i)) out.set(i);
    return out;
}

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Searches for a complete box with t vertices per part. Parts are fixed in
// order; within a part, subsets are tried in lexicographic order.
class BoxSearcher {
public:
    BoxSearcher(const PartiteHypergraph& h, int t, std::uint64_t& nodes, std::uint64_t budget)
        : h_(h), r_(h.part_count()), n_(h.part_size()), t_(t), nodes_(nodes), budget_(budget), chosen_(r_) {}

    bool run() { return level(0, h_.bits()); }
    const BoxParts& parts() const { return chosen_; }

private:
    bool level(int lv, const BitVector& good) {
        const int rem = r_ - lv - 1;
        if (rem == 0) {
            if (good.count() < static_cast<std::size_t>(t_)) return false;
            chosen_[lv].clear();
            for (std::size_t v = good.find_first(); chosen_[lv].size() < static_cast<std::size_t>(t_); v = good.find_next_from(v + 1))
                chosen_[lv].push_back(static_cast<int>(v));
            return true;
        }
        const std::size_t block = ipow(static_cast<std::size_t>(n_), rem);
        const std::size_t need = ipow(static_cast<std::size_t>(t_), rem);
        std::vector<int> cand;
        std::vector<BitVector> slices;
        for (int a = 0; a < n_; ++a) {
            BitVector s = slice(good, static_cast<std::size_t>(a) * block, block);
            if (s.count() >= need) {
                cand.push_back(a);
                slices.push_back(std::move(s));
            }
        }
        if (cand.size() < static_cast<std::size_t>(t_)) return false;
        chosen_[lv].clear();
        return choose(lv, cand, slices, 0, BitVector(), need);
    }

    bool choose(int lv, const std::vector<int>& cand, const std::vector<BitVector>& slices, std::size_t start,
                const BitVector& acc, std::size_t need) {
        if (++nodes_ > budget_) throw BudgetExceededError("box search node budget exhausted");
        auto& picked = chosen_[lv];
        if (picked.size() == static_cast<std::size_t>(t_)) return level(lv + 1, acc);
        const std::size_t missing = static_cast<std::size_t>(t_) - picked.size();
        for (std::size_t i = start; i + missing <= cand.size(); ++i) {
            BitVector next = picked.empty() ? slices[i] : (acc & slices[i]);
            if (next.count() < need) continue;
            picked.push_back(cand[i]);
            if (choose(lv, cand, slices, i + 1, next, need)) return true;
            picked.pop_back();
        }
        return false;
    }

    const PartiteHypergraph& h_;
    int r_;
    int n_;
    int t_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    BoxParts chosen_;
};

}  // namespace

Filling random_filling(const JoinComplex& complex, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x5f11));
    Filling f{BitVector(complex.face_count(complex.dimension())), seed};
    for (std::size_t i = 0; i < f.bits.size(); ++i)
        if (rng.bit()) f.bits.set(i);
    return f;
}

Filling standard_filling(const JoinComplex& complex) { return Filling{BitVector(complex.face_count(complex.dimension())), 0}; }

bool covers(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config, const Face& sigma,
            const Point& p) {
    require_planar(complex, config);
    const Location loc = point_in_triangle(p, image_of(config, sigma));
    if (loc == Location::boundary) throw DegeneracyError("covers: point lies on the boundary of a face image");
    return (loc == Location::inside) != filling.bits.test(complex.rank(sigma));
}

PartiteHypergraph coverage_hypergraph(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config,
                                      const Point& p) {
    require_planar(complex, config);
    PartiteHypergraph h(complex.part_count(), complex.part_size());
    const std::uint64_t count = complex.face_count(complex.dimension());
    std::vector<int> tuple(static_cast<std::size_t>(complex.part_count()));
    for (std::uint64_t r = 0; r < count; ++r) {
        const Face sigma = complex.unrank(complex.dimension(), r);
        if (!covers(complex, filling, config, sigma, p)) continue;
        for (const auto& v : sigma.vertices()) tuple[static_cast<std::size_t>(v.part)] = v.index;
        h.insert(tuple);
    }
    return h;
}

BoxSearchResult max_complete_box(const PartiteHypergraph& h, std::uint64_t node_budget) {
    BoxSearchResult result;
    result.parts.assign(static_cast<std::size_t>(h.part_count()), {});
    for (int t = 1; t <= h.part_size(); ++t) {
        BoxSearcher searcher(h, t, result.nodes, node_budget);
        try {
            if (!searcher.run()) break;
        } catch (const BudgetExceededError&) {
            result.exhausted_budget = true;
            break;
        }
        result.size = t;
        result.parts = searcher.parts();
    }
    return result;
}

PachWitness max_pach_family_at(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config,
                               const Point& p, std::uint64_t node_budget) {
    const PartiteHypergraph h = coverage_hypergraph(complex, filling, config, p);
    const BoxSearchResult box = max_complete_box(h, node_budget);
    PachWitness w;
    w.parts = box.parts;
    w.p = p;
    w.size = box.size;
    w.lower_bound_only = box.exhausted_budget;
    w.log.push_back("covering faces: " + std::to_string(h.bits().count()));
    w.log.push_back("search nodes: " + std::to_string(box.nodes));
    if (box.exhausted_budget) w.log.push_back("node budget exhausted; size is a lower bound");
    return w;
}

bool verify_witness(const JoinComplex& complex, const Filling& filling, const PointConfiguration& config,
                    const PachWitness& witness) {
    if (witness.parts.size() != 3) return false;
    for (const auto& part : witness.parts)
        if (part.size() != static_cast<std::size_t>(witness.size)) return false;
    for (int a : witness.parts[0])
        for (int b : witness.parts[1])
            for (int c : witness.parts[2]) {
                const Face sigma({Vertex{0, a}, Vertex{1, b}, Vertex{2, c}});
                if (!covers(complex, filling, config, sigma, witness.p)) return false;
            }
    return true;
}

std::vector<Segment> configuration_edges(const JoinComplex& complex, const PointConfiguration& config) {
    std::vector<Segment> out;
    for (const auto& e : complex.faces(1)) {
        const auto& vs = e.vertices();
        out.push_back({config.at(vs[0]), config.at(vs[1])});
    }
    return out;
}

SphereExperimentReport sphere_upper_experiment(const SphereExperimentConfig& config) {
    if (config.d != 2) throw std::invalid_argument("sphere_upper_experiment: only d = 2 is supported");
    if (config.n < 1) throw std::invalid_argument("sphere_upper_experiment: n must be positive");
    SphereExperimentReport report;
    report.config = config;
    if (config.n >= 2) {
        report.threshold = pach_threshold_sphere(static_cast<std::uint64_t>(config.n), config.d);
        report.threshold_real = scaled_log_root(2, static_cast<std::uint64_t>(config.n), static_cast<unsigned long>(config.d));
    }
    const JoinComplex X(config.d, config.n);
    std::size_t dominated = 0;

    for (const std::uint64_t seed : config.seeds) {
        Rng rng(derive_seed(seed, 1));
        const PointConfiguration points = random_configuration(3, config.n, rng);
        const auto segments = configuration_edges(X, points);
        const CandidateSet cs = candidate_points(segments, {});
        std::vector<Point> candidates;
        candidates.push_back(cs.far_point);
        candidates.insert(candidates.end(), cs.points.begin(), cs.points.end());
        if (config.max_candidates > 0 && candidates.size() > config.max_candidates) candidates.resize(config.max_candidates);

        std::vector<std::pair<std::string, Filling>> fillings;
        fillings.emplace_back("random", random_filling(X, seed));
        if (config.control) fillings.emplace_back("control", standard_filling(X));

        int random_max = 0;
        for (const auto& [label, filling] : fillings) {
            const auto start = std::chrono::steady_clock::now();
            // Equal coverage sets give equal answers; search each once.
            std::map<std::string, std::size_t> first_index;
            std::vector<std::size_t> unique;
            std::vector<PartiteHypergraph> coverage;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                PartiteHypergraph h = coverage_hypergraph(X, filling, points, candidates[i]);
                if (first_index.emplace(h.bits().to_hex(), i).second) {
                    unique.push_back(i);
                    coverage.push_back(std::move(h));
                }
            }
            std::vector<BoxSearchResult> results(unique.size());
            parallel_chunks(unique.size(), config.jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
                for (std::size_t u = begin; u < end; ++u) results[u] = max_complete_box(coverage[u], config.node_budget);
            });
            SphereExperimentRow row;
            row.seed = seed;
            row.filling = label;
            row.candidates_tested = candidates.size();
            row.far_point_tested = true;
            bool have = false;
            for (std::size_t u = 0; u < unique.size(); ++u) {
                row.lower_bound_only = row.lower_bound_only || results[u].exhausted_budget;
                if (!have || results[u].size > row.max_m) {
                    have = true;
                    row.max_m = results[u].size;
                    row.candidate_index = unique[u];
                }
            }
            row.p = candidates[row.candidate_index];
            if (config.timing)
                row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (label == "random")
                random_max = row.max_m;
            else if (row.max_m >= random_max)
                ++dominated;
            report.rows.push_back(std::move(row));
        }
    }
    if (config.control && !config.seeds.empty())
        report.control_dominance = static_cast<double>(dominated) / static_cast<double>(config.seeds.size());
    return report;
}

std::string to_csv(const SphereExperimentReport& report) {
    std::ostringstream out;
    out << "seed,filling,candidate_index,candidates_tested,p_x,p_y,max_m,lower_bound_only";
    if (report.config.timing) out << ",wall_seconds";
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.seed << ',' << row.filling << ',' << row.candidate_index << ',' << row.candidates_tested << ','
            << to_string(row.p.x) << ',' << to_string(row.p.y) << ',' << row.max_m << ',' << (row.lower_bound_only ? 1 : 0);
        if (report.config.timing) out << ',' << row.wall_seconds;
        out << '\n';
    }
    return out.str();
}

LogBound sphere_union_bound(std::uint64_t n, int d, std::uint64_t m) {
    if (d < 1) throw std::invalid_argument("sphere_union_bound: d must be positive");
    if (m > n) throw std::invalid_argument("sphere_union_bound: m must not exceed n");
    mpz_class tuples;
    mpz_ui_pow_ui(tuples.get_mpz_t(), m, static_cast<unsigned long>(d + 1));
    LogLinearForm form;
    form.add(mpz_class(d + 1), binomial_mpz(n, m));
    form.add(mpz_class(d * d), mpz_class(static_cast<unsigned long>(n)));
    form.add(-tuples, mpz_class(2));
    return form.evaluate();
}

std::int64_t pach_threshold_sphere(std::uint64_t n, int d) {
    if (n < 2) throw std::invalid_argument("pach_threshold_sphere: n must be at least 2");
    if (d < 1) throw std::invalid_argument("pach_threshold_sphere: d must be positive");
    return certified_ceil_scaled_log_root(2, n, static_cast<unsigned long>(d));
}

}  // namespace pach
