#include "jring/mapalg.hpp"

#include <memory>
#include <string>

namespace jring {

namespace {

void require_same_frame(const OmegaMap& a, const OmegaMap& b) {
    if (a.ring() != b.ring()) throw RingMismatch("maps over different rings");
    if (a.n() != b.n()) throw ShapeMismatch("maps with different matrix sizes");
    if (a.omega_size() != b.omega_size()) throw ShapeMismatch("maps over different index sets");
}

template <typename F>
OmegaMap pointwise(const OmegaMap& a, F&& f) {
    std::vector<SquareMatrix> out;
    out.reserve(static_cast<std::size_t>(a.omega_size()));
    for (int t = 1; t <= a.omega_size(); ++t) out.push_back(f(a.at(t)));
    return OmegaMap(std::move(out));
}

template <typename F>
OmegaMap pointwise2(const OmegaMap& a, const OmegaMap& b, F&& f) {
    require_same_frame(a, b);
    std::vector<SquareMatrix> out;
    out.reserve(static_cast<std::size_t>(a.omega_size()));
    for (int t = 1; t <= a.omega_size(); ++t) out.push_back(f(a.at(t), b.at(t)));
    return OmegaMap(std::move(out));
}

}  // namespace

OmegaMap::OmegaMap(std::vector<SquareMatrix> points) : points_(std::move(points)) {
    if (points_.empty()) throw SizeTooSmall("the index set must be nonempty");
    for (const auto& p : points_) {
        if (p.ring() != points_[0].ring() || p.n() != points_[0].n()) {
            throw ShapeMismatch("points do not share ring and size");
        }
    }
}

const SquareMatrix& OmegaMap::at(int t) const {
    if (t < 1 || t > omega_size()) {
        throw PointOutOfRange("point index " + std::to_string(t) + " out of range for m=" +
                              std::to_string(omega_size()));
    }
    return points_[static_cast<std::size_t>(t - 1)];
}

void OmegaMap::set(int t, SquareMatrix value) {
    if (t < 1 || t > omega_size()) throw PointOutOfRange("point index out of range");
    if (value.ring() != ring() || value.n() != n()) throw ShapeMismatch("point value has a wrong shape");
    points_[static_cast<std::size_t>(t - 1)] = std::move(value);
}

OmegaMap OmegaMap::adjoint() const {
    return pointwise(*this, [](const SquareMatrix& p) { return p.adjoint(); });
}

bool OmegaMap::is_hermitian() const {
    for (const auto& p : points_) {
        if (!is_self_adjoint(p)) return false;
    }
    return true;
}

bool OmegaMap::is_skew() const {
    for (const auto& p : points_) {
        if (!is_skew_adjoint(p)) return false;
    }
    return true;
}

bool OmegaMap::is_zero() const {
    for (const auto& p : points_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

OmegaMap operator+(const OmegaMap& a, const OmegaMap& b) {
    return pointwise2(a, b, [](const SquareMatrix& x, const SquareMatrix& y) { return x + y; });
}
OmegaMap operator-(const OmegaMap& a, const OmegaMap& b) {
    return pointwise2(a, b, [](const SquareMatrix& x, const SquareMatrix& y) { return x - y; });
}
OmegaMap operator-(const OmegaMap& a) {
    return pointwise(a, [](const SquareMatrix& x) { return -x; });
}
OmegaMap operator*(const OmegaMap& a, const OmegaMap& b) {
    return pointwise2(a, b, [](const SquareMatrix& x, const SquareMatrix& y) { return x * y; });
}
OmegaMap jordan_product(const OmegaMap& a, const OmegaMap& b) {
    return pointwise2(a, b,
                      [](const SquareMatrix& x, const SquareMatrix& y) { return jordan_product(x, y); });
}
OmegaMap commutator(const OmegaMap& a, const OmegaMap& b) {
    return pointwise2(a, b,
                      [](const SquareMatrix& x, const SquareMatrix& y) { return commutator(x, y); });
}

SquareMatrix eval_at(const OmegaMap& x, int t) { return x.at(t); }

OmegaMap constant_embed(const SquareMatrix& a, int omega_size) {
    if (omega_size < 1) throw SizeTooSmall("the index set must be nonempty");
    return OmegaMap(std::vector<SquareMatrix>(static_cast<std::size_t>(omega_size), a));
}

OmegaMap zero_map(const RingId& ring, int n, int omega_size) {
    return constant_embed(SquareMatrix(ring, n), omega_size);
}

WeightedChain unit_chain(const RingId& ring, int n) {
    if (n < 2) throw SizeTooSmall("the chain needs n >= 2");
    return WeightedChain{ring, std::vector<RingValue>(static_cast<std::size_t>(n - 1), one(ring))};
}

OmegaMap weighted_xo(const WeightedChain& chain, int omega_size, int n) {
    if (n < 2) throw SizeTooSmall("the chain needs n >= 2");
    if (static_cast<int>(chain.lambdas.size()) != n - 1) {
        throw ShapeMismatch("a chain for size n needs n-1 weights");
    }
    SquareMatrix x(chain.ring, n);
    for (int k = 1; k < n; ++k) {
        const RingValue& lambda = chain.lambdas[static_cast<std::size_t>(k - 1)];
        if (lambda.is_zero()) throw ZeroWeight("chain weights must be nonzero");
        if (!is_fixed(lambda)) throw NotSelfAdjoint("chain weights must be self-adjoint");
        x = x + lambda * sym_unit(chain.ring, n, k, k + 1).matrix();
    }
    return constant_embed(x, omega_size);
}

SpatialDerivation::SpatialDerivation(OmegaMap implementer) : implementer_(std::move(implementer)) {
    if (!implementer_.is_skew()) throw NotSkew("spatial implementer must be pointwise skew-adjoint");
}

OmegaMap SpatialDerivation::apply(const OmegaMap& x) const { return commutator(implementer_, x); }

OmegaPairDerivation::OmegaPairDerivation(std::vector<std::pair<OmegaMap, OmegaMap>> pairs)
    : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw Error("pair list must be nonempty");
    for (const auto& [a, b] : pairs_) {
        require_same_frame(a, pairs_[0].first);
        require_same_frame(b, pairs_[0].first);
        if (!a.is_hermitian() || !b.is_hermitian()) {
            throw NotSelfAdjoint("pair entries must be pointwise self-adjoint");
        }
    }
}

int OmegaPairDerivation::omega_size() const { return pairs_[0].first.omega_size(); }
int OmegaPairDerivation::n() const { return pairs_[0].first.n(); }

OmegaMap OmegaPairDerivation::apply(const OmegaMap& x) const {
    OmegaMap acc = zero_map(x.ring(), x.n(), x.omega_size());
    for (const auto& [a, b] : pairs_) {
        acc = acc + jordan_product(a, jordan_product(b, x)) - jordan_product(b, jordan_product(a, x));
    }
    return acc;
}

OmegaMap OmegaPairDerivation::reduce() const {
    const RingId& ring = pairs_[0].first.ring();
    OmegaMap acc = zero_map(ring, n(), omega_size());
    for (const auto& [a, b] : pairs_) acc = acc + commutator(a, b);
    RingValue quarter = half(ring) * half(ring);
    return pointwise(acc, [&quarter](const SquareMatrix& p) { return quarter * p; });
}

OmegaPairDerivation omega_pairs_from_skew(const OmegaMap& z) {
    if (!z.is_skew()) throw NotSkew("implementer is not pointwise skew-adjoint");
    const int m = z.omega_size();
    // the per-point decomposition emits a uniform pair template, so the
    // per-point pair lists can be zipped into map-valued pairs
    std::vector<std::vector<std::pair<HermitianMatrix, HermitianMatrix>>> per_point;
    per_point.reserve(static_cast<std::size_t>(m));
    std::size_t count = 0;
    for (int t = 1; t <= m; ++t) {
        per_point.push_back(jordan_pairs_from_skew(z.at(t)).pairs());
        if (t == 1) count = per_point.back().size();
        if (per_point.back().size() != count) {
            throw Error("pair decomposition is not uniform across points");
        }
    }
    std::vector<std::pair<OmegaMap, OmegaMap>> pairs;
    pairs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<SquareMatrix> first, second;
        first.reserve(static_cast<std::size_t>(m));
        second.reserve(static_cast<std::size_t>(m));
        for (int t = 1; t <= m; ++t) {
            first.push_back(per_point[static_cast<std::size_t>(t - 1)][k].first.matrix());
            second.push_back(per_point[static_cast<std::size_t>(t - 1)][k].second.matrix());
        }
        pairs.emplace_back(OmegaMap(std::move(first)), OmegaMap(std::move(second)));
    }
    return OmegaPairDerivation(std::move(pairs));
}

OmegaMap corner_compress(const OmegaMap& a, const std::vector<int>& idx) {
    return pointwise(a, [&idx](const SquareMatrix& p) { return corner_compress(p, idx); });
}

OmegaMap corner_embed(const OmegaMap& a, const std::vector<int>& idx, int n) {
    return pointwise(a, [&idx, n](const SquareMatrix& p) { return corner_embed(p, idx, n); });
}

bool is_corner_supported(const OmegaMap& a, const std::vector<int>& idx) {
    for (int t = 1; t <= a.omega_size(); ++t) {
        if (!is_corner_supported(a.at(t), idx)) return false;
    }
    return true;
}

std::vector<std::pair<OmegaMap, OmegaMap>> corner_compress_derivation(
    const std::vector<std::pair<OmegaMap, OmegaMap>>& table, const std::vector<int>& idx) {
    std::vector<std::pair<OmegaMap, OmegaMap>> out;
    out.reserve(table.size());
    for (const auto& [x, dx] : table) {
        if (!is_corner_supported(x, idx)) {
            throw NotCornerSupported("table input has mass outside the corner");
        }
        out.emplace_back(corner_compress(x, idx), corner_compress(dx, idx));
    }
    return out;
}

OmegaTwoLocalOracle omega_oracle_from_inner(const OmegaMap& z) {
    if (!z.is_skew()) throw NotSkew("oracle implementer must be pointwise skew-adjoint");
    auto zz = std::make_shared<OmegaMap>(z);
    auto pairs = std::make_shared<OmegaPairDerivation>(omega_pairs_from_skew(z));
    OmegaTwoLocalOracle oracle;
    oracle.omega_size = z.omega_size();
    oracle.n = z.n();
    oracle.ring = z.ring();
    oracle.value = [zz](const OmegaMap& x) { return commutator(*zz, x); };
    oracle.witness = [pairs](const OmegaMap&, const OmegaMap&) { return *pairs; };
    return oracle;
}

namespace {

void verify_omega_probe(const OmegaMap& abar, const OmegaMap& probe, const OmegaMap& expected,
                        int& probes_checked) {
    OmegaMap actual = commutator(abar, probe);
    ++probes_checked;
    if (actual != expected) {
        for (int t = 1; t <= probe.omega_size(); ++t) {
            if (actual.at(t) != expected.at(t)) {
                throw PointwiseMismatch(t, ProbeMismatch{probe.at(t), expected.at(t), actual.at(t)},
                                        "map value disagrees with the reconstructed element at point " +
                                            std::to_string(t));
            }
        }
    }
}

}  // namespace

OmegaReconstructionResult reconstruct_two_local_spatial(const OmegaTwoLocalOracle& oracle,
                                                        const WeightedChain& chain,
                                                        const std::vector<OmegaMap>& probes) {
    const RingId& ring = oracle.ring;
    const int n = oracle.n;
    const int m = oracle.omega_size;
    if (n < 1 || m < 1) throw SizeTooSmall("oracle shape must be positive");

    if (n == 1) {
        OmegaMap abar = zero_map(ring, 1, m);
        int checked = 0;
        std::vector<OmegaMap> points{constant_embed(matrix_unit(ring, 1, 1, 1), m)};
        points.insert(points.end(), probes.begin(), probes.end());
        for (const auto& p : points) verify_omega_probe(abar, p, oracle.value(p), checked);
        return OmegaReconstructionResult{abar, checked};
    }

    OmegaMap chain_map = weighted_xo(chain, m, n);
    std::vector<OmegaMap> family;
    for (int i = 1; i <= n; ++i) family.push_back(constant_embed(matrix_unit(ring, n, i, i), m));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            family.push_back(constant_embed(sym_unit(ring, n, i, j).matrix(), m));
        }
    }
    family.push_back(chain_map);
    OmegaMap chain_value = oracle.value(chain_map);

    OmegaMap abar = zero_map(ring, n, m);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            OmegaMap anchor = constant_embed(sym_unit(ring, n, i, j).matrix(), m);
            OmegaPairDerivation w = oracle.witness(anchor, chain_map);
            OmegaMap c = w.reduce();
            if (commutator(c, anchor) != oracle.value(anchor) ||
                commutator(c, chain_map) != chain_value) {
                throw InconsistentOracle("witness disagrees with the oracle at its anchor pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            }
            for (int t = 1; t <= m; ++t) {
                SquareMatrix slice = abar.at(t);
                slice.set(i, j, c.at(t).at(i, j));
                slice.set(j, i, c.at(t).at(j, i));
                if (i == 1 && j == 2) {
                    for (int k = 1; k <= n; ++k) slice.set(k, k, c.at(t).at(k, k));
                }
                abar.set(t, std::move(slice));
            }
        }
    }

    // per-point gauge: zero the (n,n) cell of every slice
    for (int t = 1; t <= m; ++t) {
        SquareMatrix slice = abar.at(t);
        RingValue offset = slice.at(n, n);
        abar.set(t, slice - offset * SquareMatrix::identity(ring, n));
    }

    int checked = 0;
    for (const auto& p : family) verify_omega_probe(abar, p, oracle.value(p), checked);
    for (const auto& p : probes) verify_omega_probe(abar, p, oracle.value(p), checked);
    return OmegaReconstructionResult{std::move(abar), checked};
}

OmegaReconstructionResult reconstruct_local_spatial(const LocalSpatialOracle& oracle,
                                                    const std::vector<OmegaMap>& probes) {
    const RingId& ring = oracle.ring;
    const int n = oracle.n;
    const int m = oracle.omega_size;
    if (n < 1 || m < 1) throw SizeTooSmall("oracle shape must be positive");

    std::vector<HermitianMatrix> basis = hermitian_spanning_set(ring, n);
    std::vector<OmegaMap> basis_values;
    basis_values.reserve(basis.size());
    for (const auto& b : basis) basis_values.push_back(oracle.value(constant_embed(b.matrix(), m)));

    std::vector<SquareMatrix> slices;
    slices.reserve(static_cast<std::size_t>(m));
    for (int t = 1; t <= m; ++t) {
        std::vector<WitnessConstraint> constraints;
        constraints.reserve(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            constraints.push_back(
                {basis[k], HermitianMatrix(basis_values[k].at(t))});
        }
        auto space = find_witness(constraints, n, ring);
        if (!space) {
            throw PointNotInner(t, "no inner derivation matches the compressed map at point " +
                                       std::to_string(t));
        }
        slices.push_back(witness_matrix(*space, n, ring));
    }
    OmegaMap abar{std::move(slices)};

    int checked = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        verify_omega_probe(abar, constant_embed(basis[k].matrix(), m), basis_values[k], checked);
    }
    for (const auto& p : probes) verify_omega_probe(abar, p, oracle.value(p), checked);
    return OmegaReconstructionResult{std::move(abar), checked};
}

}  // namespace jring
