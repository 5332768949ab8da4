#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jring/reconstruct.hpp"

namespace jring {

/// Element of the algebra of maps from a finite index set of size m into
/// M_n(R), stored as one matrix per point. Index t is 1-based.
class OmegaMap {
public:
    explicit OmegaMap(std::vector<SquareMatrix> points);

    int omega_size() const { return static_cast<int>(points_.size()); }
    int n() const { return points_[0].n(); }
    const RingId& ring() const { return points_[0].ring(); }

    const SquareMatrix& at(int t) const;
    void set(int t, SquareMatrix value);

    OmegaMap adjoint() const;
    bool is_hermitian() const;
    bool is_skew() const;
    bool is_zero() const;

    bool operator==(const OmegaMap& o) const { return points_ == o.points_; }
    bool operator!=(const OmegaMap& o) const { return !(*this == o); }

private:
    std::vector<SquareMatrix> points_;
};

OmegaMap operator+(const OmegaMap& a, const OmegaMap& b);
OmegaMap operator-(const OmegaMap& a, const OmegaMap& b);
OmegaMap operator-(const OmegaMap& a);
OmegaMap operator*(const OmegaMap& a, const OmegaMap& b);  // pointwise associative product
OmegaMap jordan_product(const OmegaMap& a, const OmegaMap& b);
OmegaMap commutator(const OmegaMap& a, const OmegaMap& b);

/// Evaluation homomorphism at point t.
SquareMatrix eval_at(const OmegaMap& x, int t);
/// Constant-function embedding; a section of every eval_at.
OmegaMap constant_embed(const SquareMatrix& a, int omega_size);
OmegaMap zero_map(const RingId& ring, int n, int omega_size);

/// Nonzero self-adjoint weights for the chain element.
struct WeightedChain {
    RingId ring;
    std::vector<RingValue> lambdas;  // n-1 entries
};

WeightedChain unit_chain(const RingId& ring, int n);
/// The constant map t -> sum_k lambda_k sym_unit(k, k+1).
OmegaMap weighted_xo(const WeightedChain& chain, int omega_size, int n);

/// Derivation acting pointwise by the commutator with a pointwise-skew
/// implementer from the ambient full matrix algebra.
class SpatialDerivation {
public:
    explicit SpatialDerivation(OmegaMap implementer);
    const OmegaMap& implementer() const { return implementer_; }
    OmegaMap apply(const OmegaMap& x) const;

private:
    OmegaMap implementer_;
};

/// Pair-list derivation with map-valued pairs; applies pointwise.
class OmegaPairDerivation {
public:
    explicit OmegaPairDerivation(std::vector<std::pair<OmegaMap, OmegaMap>> pairs);
    const std::vector<std::pair<OmegaMap, OmegaMap>>& pairs() const { return pairs_; }
    int omega_size() const;
    int n() const;
    OmegaMap apply(const OmegaMap& x) const;
    /// quarter * sum [a_k, b_k], pointwise.
    OmegaMap reduce() const;

private:
    std::vector<std::pair<OmegaMap, OmegaMap>> pairs_;
};

/// Pointwise pair decomposition of a pointwise-skew map.
OmegaPairDerivation omega_pairs_from_skew(const OmegaMap& z);

/// Compression of a value table onto a corner: inputs must be supported on
/// the corner (NotCornerSupported otherwise); outputs are compressed
/// unconditionally.
std::vector<std::pair<OmegaMap, OmegaMap>> corner_compress_derivation(
    const std::vector<std::pair<OmegaMap, OmegaMap>>& table, const std::vector<int>& idx);

OmegaMap corner_compress(const OmegaMap& a, const std::vector<int>& idx);
OmegaMap corner_embed(const OmegaMap& a, const std::vector<int>& idx, int n);
bool is_corner_supported(const OmegaMap& a, const std::vector<int>& idx);

struct OmegaTwoLocalOracle {
    int omega_size = 0;
    int n = 0;
    RingId ring = RingId::rational();
    std::function<OmegaMap(const OmegaMap&)> value;
    std::function<OmegaPairDerivation(const OmegaMap&, const OmegaMap&)> witness;
};

OmegaTwoLocalOracle omega_oracle_from_inner(const OmegaMap& z);

/// Raised when a probe disagrees at a specific point of the index set.
class PointwiseMismatch : public Error {
public:
    PointwiseMismatch(int point, ProbeMismatch mismatch, const std::string& msg)
        : Error(msg), point_(point), mismatch_(std::move(mismatch)) {}
    int point() const { return point_; }
    const ProbeMismatch& mismatch() const { return mismatch_; }

private:
    int point_;
    ProbeMismatch mismatch_;
};

struct OmegaReconstructionResult {
    OmegaMap abar;
    int probes_checked = 0;
};

/// Pointwise image of the single-matrix reconstruction: one witness query per
/// off-diagonal cell anchored at the weighted chain, Peirce extraction and
/// diagonal differences computed point by point, per-point gauge, exact
/// verification on the family and probes.
OmegaReconstructionResult reconstruct_two_local_spatial(const OmegaTwoLocalOracle& oracle,
                                                        const WeightedChain& chain,
                                                        const std::vector<OmegaMap>& probes = {});

struct LocalSpatialOracle {
    int omega_size = 0;
    int n = 0;
    RingId ring = RingId::rational();
    std::function<OmegaMap(const OmegaMap&)> value;
};

/// Per-point joint solve against the constant embeddings of the hermitian
/// spanning set: recovers a_t at every t, assembles abar(t) = a_t, and
/// verifies the map on the supplied probes (including non-constant ones).
OmegaReconstructionResult reconstruct_local_spatial(const LocalSpatialOracle& oracle,
                                                    const std::vector<OmegaMap>& probes = {});

}  // namespace jring
