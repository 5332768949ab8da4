#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "jring/derivation.hpp"
#include "jring/solver.hpp"

namespace jring {

/// Queryable 2-local map: a value function plus, for every pair of points, a
/// witness derivation agreeing with the map at both.
struct TwoLocalOracle {
    int n = 0;
    RingId ring = RingId::rational();
    std::function<HermitianMatrix(const HermitianMatrix&)> value;
    std::function<JordanPairDerivation(const HermitianMatrix&, const HermitianMatrix&)> witness;
};

struct ProbeMismatch {
    SquareMatrix probe;
    SquareMatrix expected;  // oracle value
    SquareMatrix actual;    // commutator with the reconstructed element
};

struct VerificationReport {
    bool ok = true;
    int probes_checked = 0;
    std::vector<ProbeMismatch> failures;
};

/// Raised when the reconstructed element fails to reproduce the oracle on a
/// probe; carries the first violated equality.
class VerificationFailed : public Error {
public:
    VerificationFailed(ProbeMismatch mismatch, const std::string& msg)
        : Error(msg), mismatch_(std::move(mismatch)) {}
    const ProbeMismatch& mismatch() const { return mismatch_; }

private:
    ProbeMismatch mismatch_;
};

struct ReconstructionResult {
    SquareMatrix abar;
    std::pair<int, int> anchor;  // (i_o, j_o)
    RingValue gauge_offset;      // diagonal scalar subtracted to canonicalize
    VerificationReport verification;
};

/// The ordered probe family {e_ii} + {sym_unit(i,j) : i<j} + {chain}, where
/// chain = sum_k sym_unit(k, k+1) links every diagonal cell. Requires n >= 2.
std::vector<HermitianMatrix> test_family(const RingId& ring, int n);
/// The tridiagonal chain element alone.
HermitianMatrix tridiagonal_chain(const RingId& ring, int n);

/// Recovers the implementing element of a 2-local inner derivation: queries
/// one witness per off-diagonal cell (paired with the chain element), takes
/// diagonal entries from the anchor witness, assembles the candidate, fixes
/// the gauge by zeroing its (n, n) component, and verifies the oracle on the
/// whole test family plus the supplied probes. Throws InconsistentOracle or
/// VerificationFailed instead of returning a wrong element.
ReconstructionResult reconstruct_two_local(const TwoLocalOracle& oracle,
                                           const std::vector<HermitianMatrix>& probes = {});

/// Oracle of the inner derivation by a skew element; every witness is the
/// pair decomposition of z.
TwoLocalOracle oracle_from_inner(const SquareMatrix& z);

struct OracleTable {
    int n = 0;
    RingId ring = RingId::rational();
    std::vector<std::pair<HermitianMatrix, HermitianMatrix>> values;
    struct WitnessEntry {
        HermitianMatrix x;
        HermitianMatrix y;
        JordanPairDerivation derivation;
    };
    std::vector<WitnessEntry> witnesses;
};

/// Replays stored values and witnesses; unknown points raise MissingValue,
/// witnesses violating the consistency contract surface as
/// InconsistentOracle inside reconstruct_two_local.
TwoLocalOracle oracle_from_table(const OracleTable& table);

/// Off-diagonal well-definedness: with c = reduce(w1), d = reduce(w2), true
/// iff the (i,j) and (j,i) components agree.
bool check_offdiag_welldefined(const JordanPairDerivation& w1, const JordanPairDerivation& w2,
                               int i, int j);

/// Diagonal-difference well-definedness: both witnesses must agree at
/// sym_unit(k,l) and at the chain element (else AnchorMismatch); true iff
/// c^kk - c^ll equals b^kk - b^ll.
bool check_diag_difference(const JordanPairDerivation& w1, const JordanPairDerivation& w2, int k,
                           int l, const HermitianMatrix& chain);

/// Expansion of the image of a symmetrized unit: with c = reduce(w), true iff
/// [c, sym_unit(i,j)] = [offdiag, sym_unit(i,j)]
///                      + (c^ii - c^jj) e_ij + (c^jj - c^ii) e_ji.
bool expand_sym_unit_image(const JordanPairDerivation& w, int i, int j,
                           const SquareMatrix& offdiag);

/// Joint witness solve over the hermitian spanning set: returns the single
/// skew implementing element of a local inner map given as a table on the
/// spanning set. Throws NotJointlyInner when the joint system is
/// unsolvable.
SquareMatrix reconstruct_local(const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table,
                               int n, const RingId& ring);

}  // namespace jring
