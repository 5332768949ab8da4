#include "jring/random.hpp"

namespace jring {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    // decorrelate the per-trial streams before use
    state_ = seed;
    std::uint64_t mix = splitmix64(state_);
    state_ = mix ^ (trial * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    splitmix64(state_);
}

std::uint64_t TrialRng::next_u64() { return splitmix64(state_); }

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling keeps the draw exactly uniform
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return lo + static_cast<std::int64_t>(v % span);
}

namespace {

mpq_class random_mpq(TrialRng& rng) {
    long num = static_cast<long>(rng.uniform(-9, 9));
    long den = static_cast<long>(rng.uniform(1, 9));
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

RingValue random_value(TrialRng& rng, const RingId& ring) {
    switch (ring.kind()) {
        case RingKind::rational:
            return make_rational(random_mpq(rng));
        case RingKind::gaussian_rational:
            return make_gaussian(random_mpq(rng), random_mpq(rng));
        case RingKind::prime_field:
            return make_residue(ring, static_cast<std::uint64_t>(rng.uniform(
                                          0, static_cast<std::int64_t>(ring.modulus()) - 1)));
        case RingKind::polynomial: {
            std::vector<RingValue> coeffs;
            int degree = static_cast<int>(rng.uniform(0, 2));
            for (int k = 0; k <= degree; ++k) coeffs.push_back(random_value(rng, ring.base()));
            return make_polynomial(ring, std::move(coeffs));
        }
    }
    throw InvalidRing("random_value: unknown ring kind");
}

RingValue random_fixed_value(TrialRng& rng, const RingId& ring) {
    return fixed_part(random_value(rng, ring));
}

RingValue random_nonzero_fixed_value(TrialRng& rng, const RingId& ring) {
    for (;;) {
        RingValue v = random_fixed_value(rng, ring);
        if (!v.is_zero()) return v;
    }
}

SquareMatrix random_matrix(TrialRng& rng, const RingId& ring, int n) {
    SquareMatrix m(ring, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) m.set(i, j, random_value(rng, ring));
    }
    return m;
}

HermitianMatrix random_hermitian(TrialRng& rng, const RingId& ring, int n) {
    SquareMatrix m = random_matrix(rng, ring, n);
    return HermitianMatrix(half(ring) * (m + m.adjoint()));
}

SquareMatrix random_skew(TrialRng& rng, const RingId& ring, int n) {
    SquareMatrix m = random_matrix(rng, ring, n);
    return half(ring) * (m - m.adjoint());
}

JordanPairDerivation random_pair_derivation(TrialRng& rng, const RingId& ring, int n,
                                            int max_pairs) {
    int count = static_cast<int>(rng.uniform(1, max_pairs));
    std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        pairs.emplace_back(random_hermitian(rng, ring, n), random_hermitian(rng, ring, n));
    }
    return JordanPairDerivation(std::move(pairs));
}

OmegaMap random_omega_hermitian(TrialRng& rng, const RingId& ring, int n, int omega_size) {
    std::vector<SquareMatrix> points;
    points.reserve(static_cast<std::size_t>(omega_size));
    for (int t = 0; t < omega_size; ++t) points.push_back(random_hermitian(rng, ring, n).matrix());
    return OmegaMap(std::move(points));
}

OmegaMap random_omega_skew(TrialRng& rng, const RingId& ring, int n, int omega_size) {
    std::vector<SquareMatrix> points;
    points.reserve(static_cast<std::size_t>(omega_size));
    for (int t = 0; t < omega_size; ++t) points.push_back(random_skew(rng, ring, n));
    return OmegaMap(std::move(points));
}

}  // namespace jring
