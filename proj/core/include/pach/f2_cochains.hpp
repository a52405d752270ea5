#pragma once

#include "pach/bitvector.hpp"
#include "pach/join_complex.hpp"
#include "pach/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pach {

namespace detail {
struct ChainTag {};
struct CochainTag {};
}  // namespace detail

/// A vector over F2 indexed by ranked k-faces. The tag keeps chains and
/// cochains from being mixed up; both are identified with their supports.
template <typename Tag>
class F2Vector {
public:
    F2Vector() = default;
    F2Vector(int k, BitVector bits) : k_(k), bits_(std::move(bits)) {}

    static F2Vector zero(const JoinComplex& complex, int k) { return F2Vector(k, BitVector(complex.face_count(k))); }

    int dimension() const { return k_; }
    const BitVector& bits() const { return bits_; }
    BitVector& bits() { return bits_; }

    F2Vector& operator+=(const F2Vector& other) {
        bits_ ^= other.bits_;
        return *this;
    }
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;

private:
    int k_ = 0;
    BitVector bits_;
};

using F2Chain = F2Vector<detail::ChainTag>;
using F2Cochain = F2Vector<detail::CochainTag>;

/// Boundary of a k-chain. For k = 0 the result is the empty (-1)-chain.
F2Chain boundary(const JoinComplex& complex, const F2Chain& chain);

/// (delta a)(sigma) = a(boundary sigma). Throws std::out_of_range for k = d.
F2Cochain coboundary(const JoinComplex& complex, const F2Cochain& cochain);

/// Evaluation <a, c> of a k-cochain on a k-chain.
bool pairing(const F2Cochain& a, const F2Chain& c);

/// |supp a| / |X^{=k}|.
Rational norm(const JoinComplex& complex, const F2Cochain& a);

/// Dense F2 matrix as bit rows.
struct BitMatrix {
    std::size_t cols = 0;
    std::vector<BitVector> rows;
};

/// Matrix of delta^k : C^k -> C^{k+1}; rows are (k+1)-faces, columns k-faces.
BitMatrix coboundary_matrix(const JoinComplex& complex, int k);

std::size_t f2_rank(BitMatrix matrix);

/// Solution set of M x = rhs over F2.
struct F2Solution {
    std::optional<BitVector> particular;  // free variables set to zero
    std::vector<BitVector> kernel_basis;
    std::size_t rank = 0;
};

F2Solution solve_f2(const BitMatrix& matrix, const BitVector& rhs);

/// Reduced k-th cohomology over F2, by rank-nullity on the coboundary
/// matrices. Throws BudgetExceededError when a matrix exceeds max_matrix_bits.
std::uint64_t cohomology_rank(const JoinComplex& complex, int k, std::uint64_t max_matrix_bits = std::uint64_t{1} << 32);

enum class CofillingMode { exact, greedy };

struct CofillingOptions {
    CofillingMode mode = CofillingMode::exact;
    /// Exhaustive search refuses cosets of dimension above this.
    unsigned max_coset_bits = 24;
    unsigned jobs = 1;
};

struct CofillingReport {
    F2Cochain b;
    F2Cochain a;
    Rational ratio;  // ||a|| / ||b||, 0 when b = 0
    bool exact = false;
    std::size_t coset_dimension = 0;
};

/// Finds a cofilling a of the k-coboundary b (delta a = b). Exact mode
/// returns the minimum-weight cofilling, ties broken by support_less. Throws
/// NotACoboundaryError if b is not a coboundary and BudgetExceededError if
/// the exact coset search is over budget.
CofillingReport minimal_cofilling(const JoinComplex& complex, const F2Cochain& b, const CofillingOptions& options = {});

/// |X^{=k}| / |X^{=(k-1)}| * (2^k - 1) / n.
Rational cofilling_constant(int d, int n, int k);

/// 1 / ((d+1)! * 2^(d^2+1)).
Rational gromov_bound(int d);

}  // namespace pach
