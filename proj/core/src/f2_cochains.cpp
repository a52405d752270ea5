#include "pach/f2_cochains.hpp"

#include "pach/errors.hpp"
#include "pach/parallel.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace pach {

F2Chain boundary(const JoinComplex& complex, const F2Chain& chain) {
    const int k = chain.dimension();
    if (k == 0) return F2Chain(-1, BitVector(0));
    if (chain.bits().size() != complex.face_count(k)) throw std::invalid_argument("boundary: chain length mismatch");
    F2Chain out = F2Chain::zero(complex, k - 1);
    for (std::size_t r : chain.bits().support())
        for (auto f : complex.facet_ranks(k, r)) out.bits().flip(f);
    return out;
}

F2Cochain coboundary(const JoinComplex& complex, const F2Cochain& cochain) {
    const int k = cochain.dimension();
    if (k < 0 || k >= complex.dimension())
        throw std::out_of_range("coboundary: dimension " + std::to_string(k) + " has no coboundary");
    if (cochain.bits().size() != complex.face_count(k)) throw std::invalid_argument("coboundary: cochain length mismatch");
    F2Cochain out = F2Cochain::zero(complex, k + 1);
    const std::uint64_t count = complex.face_count(k + 1);
    for (std::uint64_t r = 0; r < count; ++r) {
        bool value = false;
        for (auto f : complex.facet_ranks(k + 1, r)) value ^= cochain.bits().test(f);
        if (value) out.bits().set(r);
    }
    return out;
}

bool pairing(const F2Cochain& a, const F2Chain& c) {
    if (a.dimension() != c.dimension()) throw std::invalid_argument("pairing: dimension mismatch");
    return a.bits().dot(c.bits());
}

Rational norm(const JoinComplex& complex, const F2Cochain& a) {
    Rational r(mpz_class(std::to_string(a.bits().count())), mpz_class(std::to_string(complex.face_count(a.dimension()))));
    r.canonicalize();
    return r;
}

BitMatrix coboundary_matrix(const JoinComplex& complex, int k) {
    if (k < 0 || k >= complex.dimension()) throw std::out_of_range("coboundary_matrix: no coboundary in this dimension");
    BitMatrix m;
    m.cols = complex.face_count(k);
    const std::uint64_t rows = complex.face_count(k + 1);
    m.rows.reserve(rows);
    for (std::uint64_t r = 0; r < rows; ++r) {
        BitVector row(m.cols);
        for (auto f : complex.facet_ranks(k + 1, r)) row.flip(f);
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::size_t f2_rank(BitMatrix matrix) {
    std::size_t rank = 0;
    auto& rows = matrix.rows;
    for (std::size_t col = 0; col < matrix.cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
            if (rows[r].test(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

F2Solution solve_f2(const BitMatrix& matrix, const BitVector& rhs) {
    if (rhs.size() != matrix.rows.size()) throw std::invalid_argument("solve_f2: rhs length mismatch");
    const std::size_t cols = matrix.cols;
    // Augmented rows: column `cols` carries the right-hand side.
    std::vector<BitVector> rows;
    rows.reserve(matrix.rows.size());
    for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
        BitVector row(cols + 1);
        for (std::size_t c : matrix.rows[r].support()) row.set(c);
        if (rhs.test(r)) row.set(cols);
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
        pivot_cols.push_back(col);
        ++rank;
    }

    F2Solution out;
    out.rank = rank;
    bool consistent = true;
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].test(cols)) consistent = false;
    if (consistent) {
        BitVector x(cols);
        for (std::size_t i = 0; i < rank; ++i)
            if (rows[i].test(cols)) x.set(pivot_cols[i]);
        out.particular = std::move(x);
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f);
        for (std::size_t i = 0; i < rank; ++i)
            if (rows[i].test(f)) v.set(pivot_cols[i]);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::uint64_t cohomology_rank(const JoinComplex& complex, int k, std::uint64_t max_matrix_bits) {
    const int d = complex.dimension();
    if (k < 0 || k > d) throw std::out_of_range("cohomology_rank: dimension out of range");
    auto checked_rank = [&](int j) -> std::uint64_t {
        if (j < 0 || j >= d) return 0;
        const auto bits = static_cast<long double>(complex.face_count(j)) * static_cast<long double>(complex.face_count(j + 1));
        if (bits > static_cast<long double>(max_matrix_bits))
            throw BudgetExceededError("cohomology_rank: coboundary matrix in dimension " + std::to_string(j) +
                                      " exceeds the configured size limit");
        return f2_rank(coboundary_matrix(complex, j));
    };
    // Reduced cohomology: the augmentation C^{-1} = F2 -> C^0 has rank 1.
    const std::uint64_t incoming = k == 0 ? 1 : checked_rank(k - 1);
    const std::uint64_t outgoing = checked_rank(k);
    return complex.face_count(k) - outgoing - incoming;
}

namespace {

struct CosetBest {
    std::size_t weight = static_cast<std::size_t>(-1);
    BitVector vector;
};

bool better(const BitVector& candidate, std::size_t weight, const CosetBest& best) {
    if (weight != best.weight) return weight < best.weight;
    return support_less(candidate, best.vector);
}

// Moves that preserve delta a: coboundaries of single (k-2)-faces, or the
// all-ones vector when a is a 0-cochain.
std::vector<BitVector> local_moves(const JoinComplex& complex, int cochain_dim) {
    std::vector<BitVector> moves;
    const std::uint64_t size = complex.face_count(cochain_dim);
    if (cochain_dim == 0) {
        BitVector ones(size);
        ones.set_all();
        moves.push_back(std::move(ones));
        return moves;
    }
    const std::uint64_t sources = complex.face_count(cochain_dim - 1);
    for (std::uint64_t s = 0; s < sources; ++s) {
        F2Cochain e = F2Cochain::zero(complex, cochain_dim - 1);
        e.bits().set(s);
        moves.push_back(coboundary(complex, e).bits());
    }
    return moves;
}

}  // namespace

CofillingReport minimal_cofilling(const JoinComplex& complex, const F2Cochain& b, const CofillingOptions& options) {
    const int k = b.dimension();
    if (k < 1 || k > complex.dimension()) throw std::out_of_range("minimal_cofilling: k must lie in [1, d]");
    if (b.bits().size() != complex.face_count(k)) throw std::invalid_argument("minimal_cofilling: cochain length mismatch");

    const F2Solution solution = solve_f2(coboundary_matrix(complex, k - 1), b.bits());
    if (!solution.particular) throw NotACoboundaryError("minimal_cofilling: b is not a coboundary");

    CofillingReport report;
    report.b = b;
    report.coset_dimension = solution.kernel_basis.size();

    BitVector best_vector;
    if (options.mode == CofillingMode::exact) {
        const std::size_t dim = solution.kernel_basis.size();
        if (dim > options.max_coset_bits || dim >= 63)
            throw BudgetExceededError("minimal_cofilling: coset dimension " + std::to_string(dim) + " exceeds budget of " +
                                      std::to_string(options.max_coset_bits) + " bits");
        const std::uint64_t total = std::uint64_t{1} << dim;
        const std::size_t chunks = chunk_count(total, options.jobs);
        std::vector<CosetBest> per_chunk(chunks);
        parallel_chunks(total, options.jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
            // Gray-code walk: consecutive coset elements differ by one basis vector.
            BitVector current = *solution.particular;
            const std::uint64_t start_gray = begin ^ (begin >> 1);
            for (std::size_t i = 0; i < dim; ++i)
                if ((start_gray >> i) & 1u) current ^= solution.kernel_basis[i];
            CosetBest local;
            for (std::uint64_t i = begin; i < end; ++i) {
                if (i != begin) current ^= solution.kernel_basis[static_cast<std::size_t>(std::countr_zero(i))];
                const std::size_t w = current.count();
                if (w < local.weight || (w == local.weight && support_less(current, local.vector))) {
                    local.weight = w;
                    local.vector = current;
                }
            }
            per_chunk[chunk] = std::move(local);
        });
        CosetBest best;
        for (auto& c : per_chunk)
            if (c.weight != static_cast<std::size_t>(-1) && better(c.vector, c.weight, best)) best = std::move(c);
        best_vector = std::move(best.vector);
        report.exact = true;
    } else {
        best_vector = *solution.particular;
        std::vector<BitVector> moves = local_moves(complex, k - 1);
        for (const auto& v : solution.kernel_basis) moves.push_back(v);
        bool improved = true;
        while (improved) {
            improved = false;
            for (const auto& move : moves) {
                BitVector trial = best_vector ^ move;
                if (trial.count() < best_vector.count()) {
                    best_vector = std::move(trial);
                    improved = true;
                }
            }
        }
        report.exact = false;
    }

    report.a = F2Cochain(k - 1, std::move(best_vector));
    if (b.bits().none())
        report.ratio = 0;
    else
        report.ratio = norm(complex, report.a) / norm(complex, b);
    return report;
}

Rational cofilling_constant(int d, int n, int k) {
    if (k < 1 || k > d) throw std::out_of_range("cofilling_constant: k must lie in [1, d]");
    const JoinComplex complex(d, n);
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    Rational ratio(mpz_class(std::to_string(complex.face_count(k))), mpz_class(std::to_string(complex.face_count(k - 1))));
    ratio.canonicalize();
    Rational factor(two_k - 1, n);
    factor.canonicalize();
    return ratio * factor;
}

Rational gromov_bound(int d) {
    if (d < 1) throw std::out_of_range("gromov_bound: d must be >= 1");
    mpz_class factorial = 1;
    for (int i = 2; i <= d + 1; ++i) factorial *= i;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(d * d + 1));
    Rational r(mpz_class(1), factorial * power);
    r.canonicalize();
    return r;
}

}  // namespace pach
