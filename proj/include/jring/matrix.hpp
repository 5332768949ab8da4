#pragma once

#include <vector>

#include "jring/ring.hpp"

namespace jring {

/// Dense n x n matrix over one ring. Indices on the public surface are
/// 1-based throughout.
class SquareMatrix {
public:
    SquareMatrix(RingId ring, int n);  // zero matrix
    static SquareMatrix identity(const RingId& ring, int n);

    int n() const { return n_; }
    const RingId& ring() const { return ring_; }

    const RingValue& at(int i, int j) const;
    void set(int i, int j, RingValue v);

    SquareMatrix adjoint() const;

    bool operator==(const SquareMatrix& other) const;
    bool operator!=(const SquareMatrix& other) const { return !(*this == other); }
    bool is_zero() const;

private:
    void check_index(int i, int j) const;
    RingId ring_;
    int n_;
    std::vector<RingValue> entries_;  // row-major
};

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a);
SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);  // associative product
SquareMatrix operator*(const RingValue& s, const SquareMatrix& a);

/// half(ab + ba).
SquareMatrix jordan_product(const SquareMatrix& a, const SquareMatrix& b);
/// ab - ba.
SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b);

bool is_self_adjoint(const SquareMatrix& a);
bool is_skew_adjoint(const SquareMatrix& a);

/// Validated wrapper: membership in H_n is checked at construction.
class HermitianMatrix {
public:
    explicit HermitianMatrix(SquareMatrix m);
    const SquareMatrix& matrix() const { return m_; }
    operator const SquareMatrix&() const { return m_; }
    int n() const { return m_.n(); }
    const RingId& ring() const { return m_.ring(); }
    bool operator==(const HermitianMatrix& o) const { return m_ == o.m_; }

private:
    SquareMatrix m_;
};

SquareMatrix matrix_unit(const RingId& ring, int n, int i, int j);
/// e_ij + e_ji for i != j; self-adjoint by construction.
HermitianMatrix sym_unit(const RingId& ring, int n, int i, int j);

/// e_ii a e_jj: the single-entry matrix carrying a's (i,j) component.
SquareMatrix peirce(const SquareMatrix& a, int i, int j);
/// The (i,j) entry as a ring value.
RingValue component(const SquareMatrix& a, int i, int j);

/// Spanning set of H_n over the fixed subfield: the diagonal units, the
/// symmetrized off-diagonal units, and (nontrivial involution) g*(e_ij - e_ji)
/// with g the skew generator of the ring.
std::vector<HermitianMatrix> hermitian_spanning_set(const RingId& ring, int n);
/// Spanning set of the skew-adjoint matrices: e_ij - e_ji, plus (nontrivial
/// involution) g*sym_unit(i,j) and g*e_kk.
std::vector<SquareMatrix> skew_spanning_set(const RingId& ring, int n);

/// Submatrix on the given strictly increasing 1-based index subset.
SquareMatrix corner_compress(const SquareMatrix& a, const std::vector<int>& idx);
/// Inverse embedding: places a |idx| x |idx| matrix on the idx-corner of an
/// n x n zero matrix.
SquareMatrix corner_embed(const SquareMatrix& a, const std::vector<int>& idx, int n);
/// True when all entries outside idx x idx vanish.
bool is_corner_supported(const SquareMatrix& a, const std::vector<int>& idx);

}  // namespace jring
