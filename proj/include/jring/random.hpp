#pragma once

#include <cstdint>

#include "jring/derivation.hpp"
#include "jring/mapalg.hpp"

namespace jring {

/// Deterministic, platform-independent random stream (splitmix64). Each
/// (seed, trial) pair yields an independent stream, so trials can be
/// replayed in isolation.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed, std::uint64_t trial = 0);
    std::uint64_t next_u64();
    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next_u64() & 1) != 0; }

private:
    std::uint64_t state_;
};

// Random draws follow one convention: rational numerators uniform in [-9, 9],
// denominators in [1, 9]; gaussian parts component-wise; prime-field residues
// uniform; polynomial coefficients random base values of degree <= 2.
RingValue random_value(TrialRng& rng, const RingId& ring);
/// Random value fixed by the involution (used for solver coefficients).
RingValue random_fixed_value(TrialRng& rng, const RingId& ring);
RingValue random_nonzero_fixed_value(TrialRng& rng, const RingId& ring);

SquareMatrix random_matrix(TrialRng& rng, const RingId& ring, int n);
HermitianMatrix random_hermitian(TrialRng& rng, const RingId& ring, int n);
SquareMatrix random_skew(TrialRng& rng, const RingId& ring, int n);

JordanPairDerivation random_pair_derivation(TrialRng& rng, const RingId& ring, int n,
                                            int max_pairs = 4);

OmegaMap random_omega_hermitian(TrialRng& rng, const RingId& ring, int n, int omega_size);
OmegaMap random_omega_skew(TrialRng& rng, const RingId& ring, int n, int omega_size);

}  // namespace jring
