#pragma once

#include <optional>
#include <vector>

#include "jring/matrix.hpp"

namespace jring {

/// Vector of fixed-subfield scalars: every coordinate satisfies star(v) = v.
struct FixedFieldVector {
    RingId ring;
    std::vector<RingValue> coords;

    std::size_t size() const { return coords.size(); }
};

FixedFieldVector zero_vector(const RingId& ring, std::size_t size);

/// Affine solution set: particular solution (free variables zeroed) plus a
/// row-reduced kernel basis.
struct SolutionSpace {
    FixedFieldVector particular;
    std::vector<FixedFieldVector> kernel_basis;

    /// particular + sum_k coeffs[k] * kernel_basis[k].
    FixedFieldVector sample(const std::vector<RingValue>& coeffs) const;
};

/// Exact row reduction of A x = b over the fixed subfield of a field-kind
/// ring. Rows of A are given as fixed-field vectors. Returns nothing when the
/// system is inconsistent.
std::optional<SolutionSpace> solve(const std::vector<FixedFieldVector>& rows,
                                   const FixedFieldVector& rhs);

/// Coordinates of a skew-adjoint matrix in the deterministic
/// skew_spanning_set order.
FixedFieldVector flatten_skew(const SquareMatrix& c);
SquareMatrix unflatten_skew(const FixedFieldVector& v, int n, const RingId& ring);

struct WitnessConstraint {
    HermitianMatrix x;
    HermitianMatrix y;  // required value of cx - xc
};

/// The affine space of skew-adjoint c with [c, x_i] = y_i for every
/// constraint, in flatten_skew coordinates; nullopt when no inner witness
/// exists.
std::optional<SolutionSpace> find_witness(const std::vector<WitnessConstraint>& constraints, int n,
                                          const RingId& ring);

/// The deterministic witness matrix of a solution space (free variables
/// zeroed).
SquareMatrix witness_matrix(const SolutionSpace& space, int n, const RingId& ring);

/// True iff v lies in the span of the basis vectors (exact rank test).
bool in_span(const FixedFieldVector& v, const std::vector<FixedFieldVector>& basis);

struct PairWitnessReport {
    int first_index = 0;
    int second_index = 0;
    bool witnessed = false;
    std::optional<SquareMatrix> witness;
};

struct TwoLocalCheckReport {
    std::vector<PairWitnessReport> pairs;
    bool all_witnessed = true;
};

struct PointWitnessReport {
    int index = 0;
    bool witnessed = false;
    std::optional<SquareMatrix> witness;
};

struct LocalCheckReport {
    std::vector<PointWitnessReport> points;
    bool all_witnessed = true;
    bool additivity_checked = false;
    bool additivity_ok = true;
};

/// For every unordered pair {x, y} of table points (including the degenerate
/// pair {x, x}), searches for one skew witness matching the table at both.
TwoLocalCheckReport check_two_local(const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table,
                                    int n, const RingId& ring);

/// Pointwise witness search; additionally verifies additivity on the sums
/// that happen to lie in the table.
LocalCheckReport check_local(const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table,
                             int n, const RingId& ring);

}  // namespace jring
