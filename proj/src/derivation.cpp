#include "jring/derivation.hpp"

namespace jring {

InnerDerivation::InnerDerivation(SquareMatrix c)
    : c_(std::move(c)), preserves_hermitian_(is_skew_adjoint(c_)) {}

SquareMatrix InnerDerivation::apply(const SquareMatrix& x) const {
    if (x.ring() != c_.ring() || x.n() != c_.n()) {
        throw ShapeMismatch("inner derivation applied to a mismatched matrix");
    }
    return c_ * x - x * c_;
}

SquareMatrix apply_inner(const InnerDerivation& d, const SquareMatrix& x) { return d.apply(x); }

JordanPairDerivation::JordanPairDerivation(
    std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs)
    : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw Error("pair list must be nonempty");
    for (const auto& [a, b] : pairs_) {
        if (a.ring() != pairs_[0].first.ring() || a.n() != pairs_[0].first.n() ||
            b.ring() != a.ring() || b.n() != a.n()) {
            throw ShapeMismatch("pairs do not share ring and size");
        }
    }
}

int JordanPairDerivation::n() const { return pairs_[0].first.n(); }
const RingId& JordanPairDerivation::ring() const { return pairs_[0].first.ring(); }

SquareMatrix JordanPairDerivation::apply_raw(const SquareMatrix& x) const {
    if (x.ring() != ring() || x.n() != n()) {
        throw ShapeMismatch("pair derivation applied to a mismatched matrix");
    }
    SquareMatrix acc(ring(), n());
    for (const auto& [a, b] : pairs_) {
        acc = acc + jordan_product(a.matrix(), jordan_product(b.matrix(), x)) -
              jordan_product(b.matrix(), jordan_product(a.matrix(), x));
    }
    return acc;
}

HermitianMatrix JordanPairDerivation::apply(const HermitianMatrix& x) const {
    return HermitianMatrix(apply_raw(x.matrix()));
}

HermitianMatrix apply_jordan_pairs(const JordanPairDerivation& d, const HermitianMatrix& x) {
    return d.apply(x);
}

InnerDerivation reduce_to_commutator(const JordanPairDerivation& d) {
    const RingId& ring = d.ring();
    SquareMatrix acc(ring, d.n());
    for (const auto& [a, b] : d.pairs()) {
        acc = acc + commutator(a.matrix(), b.matrix());
    }
    RingValue quarter = half(ring) * half(ring);
    return InnerDerivation(quarter * acc);
}

JordanPairDerivation jordan_pairs_from_skew(const SquareMatrix& z) {
    if (!is_skew_adjoint(z)) throw NotSkew("implementer is not skew-adjoint");
    const RingId& ring = z.ring();
    const int n = z.n();
    const bool trivial = ring.trivial_involution();
    if (!trivial && ring.kind() != RingKind::gaussian_rational) {
        throw SkewGeneratorUnavailable("pair decomposition unsupported for " + ring.to_string());
    }

    RingValue four = from_int(ring, 4);
    std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            auto [f, s] = fixed_decompose(z.at(i, j));
            // quarter * [4f e_ii, sym_unit(i,j)] = f (e_ij - e_ji)
            pairs.emplace_back(HermitianMatrix((four * f) * matrix_unit(ring, n, i, i)),
                               sym_unit(ring, n, i, j));
            if (!trivial) {
                Ring ops(ring);
                RingValue g = ops.skew_generator();
                RingValue beta = ops.skew_coefficient(s);
                // quarter * [4b e_ii, g(e_ij - e_ji)] = b g sym_unit(i,j)
                pairs.emplace_back(
                    HermitianMatrix((four * beta) * matrix_unit(ring, n, i, i)),
                    HermitianMatrix(g * (matrix_unit(ring, n, i, j) - matrix_unit(ring, n, j, i))));
            }
        }
    }
    if (!trivial && n >= 2) {
        Ring ops(ring);
        RingValue g = ops.skew_generator();
        // diagonal entries are skew scalars g*gamma_k; only the traceless part
        // of the diagonal is reachable by commutators
        RingValue gamma_sum = zero(ring);
        std::vector<RingValue> gammas;
        for (int k = 1; k <= n; ++k) {
            gammas.push_back(ops.skew_coefficient(z.at(k, k)));
            gamma_sum = gamma_sum + gammas.back();
        }
        RingValue mean = gamma_sum * inverse(from_int(ring, n));
        RingValue two = from_int(ring, 2);
        for (int k = 1; k < n; ++k) {
            RingValue delta = gammas[static_cast<std::size_t>(k - 1)] - mean;
            // quarter * [2d g(e_kn - e_nk), sym_unit(k,n)] = d g (e_kk - e_nn)
            pairs.emplace_back(
                HermitianMatrix((two * delta * g) *
                                (matrix_unit(ring, n, k, n) - matrix_unit(ring, n, n, k))),
                sym_unit(ring, n, k, n));
        }
    }
    if (pairs.empty()) {
        HermitianMatrix u(matrix_unit(ring, n, 1, 1));
        pairs.emplace_back(u, u);
    }
    return JordanPairDerivation(std::move(pairs));
}

ValueTable::ValueTable(std::vector<std::pair<SquareMatrix, SquareMatrix>> entries)
    : entries_(std::move(entries)) {}

ValueTable::ValueTable(std::function<SquareMatrix(const SquareMatrix&)> generator)
    : generator_(std::move(generator)) {}

void ValueTable::insert(SquareMatrix x, SquareMatrix fx) {
    entries_.emplace_back(std::move(x), std::move(fx));
}

const SquareMatrix& ValueTable::at(const SquareMatrix& x) {
    for (const auto& [k, v] : entries_) {
        if (k == x) return v;
    }
    if (generator_) {
        entries_.emplace_back(x, generator_(x));
        return entries_.back().second;
    }
    throw MissingValue("value table has no entry for the requested point");
}

DerivationReport check_derivation(ValueTable& f, const std::vector<SquareMatrix>& probes,
                                  ProductKind product) {
    DerivationReport report;
    auto mul = [&](const SquareMatrix& a, const SquareMatrix& b) {
        return product == ProductKind::jordan ? jordan_product(a, b) : a * b;
    };
    for (const SquareMatrix& x : probes) {
        for (const SquareMatrix& y : probes) {
            SquareMatrix fx = f.at(x);
            SquareMatrix fy = f.at(y);
            SquareMatrix sum_lhs = f.at(x + y);
            SquareMatrix sum_rhs = fx + fy;
            if (sum_lhs != sum_rhs) {
                report.additive_ok = false;
                report.failures.push_back({"additivity", x, y, sum_lhs, sum_rhs});
            }
            SquareMatrix prod_lhs = f.at(mul(x, y));
            SquareMatrix prod_rhs = mul(fx, y) + mul(x, fy);
            if (prod_lhs != prod_rhs) {
                report.leibniz_ok = false;
                report.failures.push_back({"leibniz", x, y, prod_lhs, prod_rhs});
            }
        }
    }
    return report;
}

}  // namespace jring
