#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jring/matrix.hpp"

namespace jring {

/// x -> cx - xc for a fixed implementing element c.
class InnerDerivation {
public:
    explicit InnerDerivation(SquareMatrix c);
    const SquareMatrix& implementer() const { return c_; }
    /// True iff c is skew-adjoint, in which case H_n is preserved.
    bool preserves_hermitian() const { return preserves_hermitian_; }
    SquareMatrix apply(const SquareMatrix& x) const;

private:
    SquareMatrix c_;
    bool preserves_hermitian_;
};

SquareMatrix apply_inner(const InnerDerivation& d, const SquareMatrix& x);

/// x -> sum_k a_k.(b_k.x) - b_k.(a_k.x), Jordan products throughout.
class JordanPairDerivation {
public:
    explicit JordanPairDerivation(std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs);
    const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& pairs() const { return pairs_; }
    int n() const;
    const RingId& ring() const;
    HermitianMatrix apply(const HermitianMatrix& x) const;
    SquareMatrix apply_raw(const SquareMatrix& x) const;

private:
    std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs_;
};

HermitianMatrix apply_jordan_pairs(const JordanPairDerivation& d, const HermitianMatrix& x);

/// quarter * sum_k [a_k, b_k]; the commutator element acting identically to
/// the pair list on every probe.
InnerDerivation reduce_to_commutator(const JordanPairDerivation& d);

/// Pair decomposition of the action of a skew implementer z: the returned
/// derivation applies as x -> zx - xz, and its reduction differs from z by a
/// central element only (exactly z when the involution is trivial). Field
/// kinds only.
JordanPairDerivation jordan_pairs_from_skew(const SquareMatrix& z);

/// Finite value table with an optional generator supplying requested points.
class ValueTable {
public:
    ValueTable() = default;
    explicit ValueTable(std::vector<std::pair<SquareMatrix, SquareMatrix>> entries);
    explicit ValueTable(std::function<SquareMatrix(const SquareMatrix&)> generator);

    void insert(SquareMatrix x, SquareMatrix fx);
    /// Value at x; consults the generator for unknown points, caching the
    /// result. Throws MissingValue when the table cannot supply the point.
    const SquareMatrix& at(const SquareMatrix& x);
    const std::vector<std::pair<SquareMatrix, SquareMatrix>>& entries() const { return entries_; }

private:
    std::vector<std::pair<SquareMatrix, SquareMatrix>> entries_;
    std::function<SquareMatrix(const SquareMatrix&)> generator_;
};

enum class ProductKind { jordan, associative };

struct DerivationFailure {
    std::string law;  // "additivity" or "leibniz"
    SquareMatrix x;
    SquareMatrix y;
    SquareMatrix lhs;
    SquareMatrix rhs;
};

struct DerivationReport {
    bool additive_ok = true;
    bool leibniz_ok = true;
    std::vector<DerivationFailure> failures;
    bool ok() const { return additive_ok && leibniz_ok; }
};

/// Verifies additivity and the Leibniz law of f over all probe pairs, with
/// the product chosen by the caller. Every violation is recorded.
DerivationReport check_derivation(ValueTable& f, const std::vector<SquareMatrix>& probes,
                                  ProductKind product);

}  // namespace jring
