#include "jring/reconstruct.hpp"

#include <memory>
#include <string>

namespace jring {

std::vector<HermitianMatrix> test_family(const RingId& ring, int n) {
    if (n < 2) throw SizeTooSmall("the probe family needs n >= 2");
    std::vector<HermitianMatrix> family;
    for (int i = 1; i <= n; ++i) family.push_back(HermitianMatrix(matrix_unit(ring, n, i, i)));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) family.push_back(sym_unit(ring, n, i, j));
    }
    family.push_back(tridiagonal_chain(ring, n));
    return family;
}

HermitianMatrix tridiagonal_chain(const RingId& ring, int n) {
    if (n < 2) throw SizeTooSmall("the chain element needs n >= 2");
    SquareMatrix chain(ring, n);
    for (int k = 1; k < n; ++k) chain = chain + sym_unit(ring, n, k, k + 1).matrix();
    return HermitianMatrix(chain);
}

namespace {

void verify_probe(const SquareMatrix& abar, const HermitianMatrix& probe,
                  const SquareMatrix& expected, VerificationReport& report) {
    SquareMatrix actual = commutator(abar, probe.matrix());
    ++report.probes_checked;
    if (actual != expected) {
        report.ok = false;
        ProbeMismatch mismatch{probe.matrix(), expected, actual};
        report.failures.push_back(mismatch);
        throw VerificationFailed(std::move(mismatch),
                                 "oracle value disagrees with the reconstructed element");
    }
}

}  // namespace

ReconstructionResult reconstruct_two_local(const TwoLocalOracle& oracle,
                                           const std::vector<HermitianMatrix>& probes) {
    const RingId& ring = oracle.ring;
    const int n = oracle.n;
    if (n < 1) throw SizeTooSmall("oracle size must be at least 1");

    if (n == 1) {
        // H_1 is commutative: the only inner derivation is zero.
        SquareMatrix abar(ring, 1);
        VerificationReport report;
        std::vector<HermitianMatrix> points{HermitianMatrix(matrix_unit(ring, 1, 1, 1))};
        points.insert(points.end(), probes.begin(), probes.end());
        for (const auto& p : points) {
            verify_probe(abar, p, oracle.value(p).matrix(), report);
        }
        return ReconstructionResult{abar, {1, 2}, zero(ring), report};
    }

    std::vector<HermitianMatrix> family = test_family(ring, n);
    const HermitianMatrix& chain = family.back();
    SquareMatrix chain_value = oracle.value(chain).matrix();

    SquareMatrix abar(ring, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            HermitianMatrix anchor = sym_unit(ring, n, i, j);
            JordanPairDerivation w = oracle.witness(anchor, chain);
            if (w.ring() != ring || w.n() != n) throw ShapeMismatch("witness has a wrong shape");
            SquareMatrix c = reduce_to_commutator(w).implementer();
            if (commutator(c, anchor.matrix()) != oracle.value(anchor).matrix() ||
                commutator(c, chain.matrix()) != chain_value) {
                throw InconsistentOracle("witness disagrees with the oracle at its anchor pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            }
            abar.set(i, j, c.at(i, j));
            abar.set(j, i, c.at(j, i));
            if (i == 1 && j == 2) {
                for (int k = 1; k <= n; ++k) abar.set(k, k, c.at(k, k));
            }
        }
    }

    // gauge: central shifts act trivially, so zero the (n,n) cell
    RingValue gauge_offset = abar.at(n, n);
    abar = abar - gauge_offset * SquareMatrix::identity(ring, n);

    VerificationReport report;
    for (const auto& p : family) verify_probe(abar, p, oracle.value(p).matrix(), report);
    for (const auto& p : probes) verify_probe(abar, p, oracle.value(p).matrix(), report);
    return ReconstructionResult{std::move(abar), {1, 2}, std::move(gauge_offset), std::move(report)};
}

TwoLocalOracle oracle_from_inner(const SquareMatrix& z) {
    if (!is_skew_adjoint(z)) throw NotSkew("oracle implementer must be skew-adjoint");
    auto zz = std::make_shared<SquareMatrix>(z);
    auto pairs = std::make_shared<JordanPairDerivation>(jordan_pairs_from_skew(z));
    TwoLocalOracle oracle;
    oracle.n = z.n();
    oracle.ring = z.ring();
    oracle.value = [zz](const HermitianMatrix& x) {
        return HermitianMatrix(commutator(*zz, x.matrix()));
    };
    oracle.witness = [pairs](const HermitianMatrix&, const HermitianMatrix&) { return *pairs; };
    return oracle;
}

TwoLocalOracle oracle_from_table(const OracleTable& table) {
    auto data = std::make_shared<OracleTable>(table);
    TwoLocalOracle oracle;
    oracle.n = table.n;
    oracle.ring = table.ring;
    oracle.value = [data](const HermitianMatrix& x) -> HermitianMatrix {
        for (const auto& [k, v] : data->values) {
            if (k == x) return v;
        }
        throw MissingValue("oracle table has no value for the requested point");
    };
    oracle.witness = [data](const HermitianMatrix& x, const HermitianMatrix& y) -> JordanPairDerivation {
        for (const auto& entry : data->witnesses) {
            if ((entry.x == x && entry.y == y) || (entry.x == y && entry.y == x)) {
                return entry.derivation;
            }
        }
        throw MissingValue("oracle table has no witness for the requested pair");
    };
    return oracle;
}

bool check_offdiag_welldefined(const JordanPairDerivation& w1, const JordanPairDerivation& w2,
                               int i, int j) {
    if (w1.ring() != w2.ring() || w1.n() != w2.n()) {
        throw ShapeMismatch("witnesses have different shapes");
    }
    SquareMatrix c1 = reduce_to_commutator(w1).implementer();
    SquareMatrix c2 = reduce_to_commutator(w2).implementer();
    return peirce(c1, i, j) == peirce(c2, i, j) && peirce(c1, j, i) == peirce(c2, j, i);
}

bool check_diag_difference(const JordanPairDerivation& w1, const JordanPairDerivation& w2, int k,
                           int l, const HermitianMatrix& chain) {
    if (w1.ring() != w2.ring() || w1.n() != w2.n()) {
        throw ShapeMismatch("witnesses have different shapes");
    }
    SquareMatrix c = reduce_to_commutator(w1).implementer();
    SquareMatrix b = reduce_to_commutator(w2).implementer();
    SquareMatrix anchor = sym_unit(w1.ring(), w1.n(), k, l).matrix();
    if (commutator(c, anchor) != commutator(b, anchor) ||
        commutator(c, chain.matrix()) != commutator(b, chain.matrix())) {
        throw AnchorMismatch("witnesses disagree at their anchor points");
    }
    return c.at(k, k) - c.at(l, l) == b.at(k, k) - b.at(l, l);
}

bool expand_sym_unit_image(const JordanPairDerivation& w, int i, int j,
                           const SquareMatrix& offdiag) {
    SquareMatrix c = reduce_to_commutator(w).implementer();
    if (offdiag.ring() != c.ring() || offdiag.n() != c.n()) {
        throw ShapeMismatch("off-diagonal aggregate has a wrong shape");
    }
    const RingId& ring = c.ring();
    const int n = c.n();
    SquareMatrix unit = sym_unit(ring, n, i, j).matrix();
    SquareMatrix lhs = commutator(c, unit);
    RingValue d = c.at(i, i) - c.at(j, j);
    SquareMatrix rhs = commutator(offdiag, unit) + d * matrix_unit(ring, n, i, j) +
                       (-d) * matrix_unit(ring, n, j, i);
    return lhs == rhs;
}

SquareMatrix reconstruct_local(
    const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table, int n,
    const RingId& ring) {
    std::vector<WitnessConstraint> constraints;
    constraints.reserve(table.size());
    for (const auto& [x, dx] : table) constraints.push_back({x, dx});
    auto space = find_witness(constraints, n, ring);
    if (!space) {
        throw NotJointlyInner("no single skew element implements the map on the spanning set");
    }
    return witness_matrix(*space, n, ring);
}

}  // namespace jring
