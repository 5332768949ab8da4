#include <doctest.h>

#include "jring/random.hpp"
#include "jring/solver.hpp"

using namespace jring;

namespace {

const RingId Q = RingId::rational();
const RingId G = RingId::gaussian_rational();
const RingId F101 = RingId::prime_field(101);

FixedFieldVector vec(const RingId& ring, std::initializer_list<long long> values) {
    FixedFieldVector v{ring, {}};
    for (long long x : values) v.coords.push_back(from_int(ring, x));
    return v;
}

}  // namespace

TEST_CASE("flatten and unflatten skew matrices") {
    SquareMatrix c = matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1);
    FixedFieldVector flat = flatten_skew(c);
    REQUIRE(flat.coords.size() == 1);
    CHECK(flat.coords[0] == one(Q));
    CHECK(unflatten_skew(flat, 2, Q) == c);

    CHECK(flatten_skew(SquareMatrix(Q, 3)).coords == zero_vector(Q, 3).coords);

    for (const RingId& ring : {Q, G, F101}) {
        for (int t = 0; t < 100; ++t) {
            TrialRng rng(21, static_cast<std::uint64_t>(t));
            int n = 1 + t % 5;
            SquareMatrix z = random_skew(rng, ring, n);
            FixedFieldVector v = flatten_skew(z);
            for (const auto& coord : v.coords) CHECK(star(coord) == coord);
            CHECK(unflatten_skew(v, n, ring) == z);
        }
    }

    CHECK_THROWS_AS(flatten_skew(matrix_unit(Q, 2, 1, 2)), NotSkew);
    SquareMatrix poly_zero(RingId::polynomial(RingId::rational(), 1), 2);
    CHECK_THROWS_AS(flatten_skew(poly_zero), UnsupportedRing);
}

TEST_CASE("linear solve examples") {
    // x + y = 2, x - y = 0
    std::vector<FixedFieldVector> rows{vec(Q, {1, 1}), vec(Q, {1, -1})};
    auto space = solve(rows, vec(Q, {2, 0}));
    REQUIRE(space.has_value());
    CHECK(space->particular.coords == vec(Q, {1, 1}).coords);
    CHECK(space->kernel_basis.empty());

    // 0 x = 1
    CHECK_FALSE(solve({vec(Q, {0})}, vec(Q, {1})).has_value());

    // 0 x = 0, one unknown
    auto free_space = solve({vec(Q, {0})}, vec(Q, {0}));
    REQUIRE(free_space.has_value());
    CHECK(free_space->particular.coords == vec(Q, {0}).coords);
    REQUIRE(free_space->kernel_basis.size() == 1);
    CHECK(free_space->kernel_basis[0].coords == vec(Q, {1}).coords);
}

TEST_CASE("random systems: exactness of particular solutions and kernels") {
    for (const RingId& ring : {Q, G, F101}) {
        for (int t = 0; t < 170; ++t) {
            TrialRng rng(22, static_cast<std::uint64_t>(t));
            int cols = 1 + static_cast<int>(rng.uniform(0, 7));
            int rows_n = 1 + static_cast<int>(rng.uniform(0, 7));
            std::vector<FixedFieldVector> rows;
            for (int r = 0; r < rows_n; ++r) {
                FixedFieldVector row{ring, {}};
                for (int c = 0; c < cols; ++c) row.coords.push_back(random_fixed_value(rng, ring));
                rows.push_back(std::move(row));
            }
            FixedFieldVector rhs{ring, {}};
            for (int r = 0; r < rows_n; ++r) rhs.coords.push_back(random_fixed_value(rng, ring));

            auto apply = [&](const FixedFieldVector& x) {
                FixedFieldVector out = zero_vector(ring, static_cast<std::size_t>(rows_n));
                for (int r = 0; r < rows_n; ++r) {
                    for (int c = 0; c < cols; ++c) {
                        out.coords[static_cast<std::size_t>(r)] =
                            out.coords[static_cast<std::size_t>(r)] +
                            rows[static_cast<std::size_t>(r)].coords[static_cast<std::size_t>(c)] *
                                x.coords[static_cast<std::size_t>(c)];
                    }
                }
                return out;
            };

            auto space = solve(rows, rhs);
            if (!space) continue;
            CHECK(apply(space->particular).coords == rhs.coords);
            for (const auto& k : space->kernel_basis) {
                CHECK(apply(k).coords == zero_vector(ring, static_cast<std::size_t>(rows_n)).coords);
            }
            // membership of a random affine sample
            std::vector<RingValue> coeffs;
            for (std::size_t k = 0; k < space->kernel_basis.size(); ++k) {
                coeffs.push_back(random_fixed_value(rng, ring));
            }
            CHECK(apply(space->sample(coeffs)).coords == rhs.coords);
        }
    }
}

TEST_CASE("witness search examples") {
    HermitianMatrix s12 = sym_unit(Q, 2, 1, 2);
    SquareMatrix two_diag = from_int(Q, 2) * (matrix_unit(Q, 2, 1, 1) - matrix_unit(Q, 2, 2, 2));

    SUBCASE("contains the expected witness") {
        auto space = find_witness({{s12, HermitianMatrix(two_diag)}}, 2, Q);
        REQUIRE(space.has_value());
        SquareMatrix c = witness_matrix(*space, 2, Q);
        CHECK(is_skew_adjoint(c));
        CHECK(commutator(c, s12.matrix()) == two_diag);
        // the affine space contains e12 - e21
        SquareMatrix expected = matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1);
        FixedFieldVector delta = flatten_skew(expected - c);
        CHECK(in_span(delta, space->kernel_basis));
    }

    SUBCASE("zero image always witnessed, kernel nonempty for n >= 2 over the gaussians") {
        HermitianMatrix e11(matrix_unit(G, 2, 1, 1));
        auto space = find_witness({{e11, HermitianMatrix(SquareMatrix(G, 2))}}, 2, G);
        REQUIRE(space.has_value());
        CHECK(witness_matrix(*space, 2, G).is_zero());
        CHECK(space->kernel_basis.size() >= 1);
    }

    SUBCASE("the documented two-point counterexample has no witness") {
        HermitianMatrix e11(matrix_unit(Q, 2, 1, 1));
        auto space = find_witness(
            {{s12, HermitianMatrix(SquareMatrix(Q, 2))}, {e11, s12}}, 2, Q);
        CHECK_FALSE(space.has_value());
    }
}

TEST_CASE("witness soundness on random constraints") {
    for (const RingId& ring : {Q, G, F101}) {
        for (int t = 0; t < 60; ++t) {
            TrialRng rng(23, static_cast<std::uint64_t>(t));
            int n = 2 + t % 3;
            SquareMatrix z = random_skew(rng, ring, n);
            std::vector<WitnessConstraint> constraints;
            for (int k = 0; k < 2; ++k) {
                HermitianMatrix x = random_hermitian(rng, ring, n);
                constraints.push_back({x, HermitianMatrix(commutator(z, x.matrix()))});
            }
            auto space = find_witness(constraints, n, ring);
            REQUIRE(space.has_value());
            SquareMatrix c = witness_matrix(*space, n, ring);
            CHECK(is_skew_adjoint(c));
            for (const auto& constraint : constraints) {
                CHECK(commutator(c, constraint.x.matrix()) == constraint.y.matrix());
            }
        }
    }
}

TEST_CASE("completeness at n=2 over the rationals against a direct parameter scan") {
    // the skew space is one-dimensional: c = t (e12 - e21); compare the solver
    // against substitution of the single unknown
    SquareMatrix dir = matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1);
    for (int t = 0; t < 200; ++t) {
        TrialRng rng(24, static_cast<std::uint64_t>(t));
        HermitianMatrix x = random_hermitian(rng, Q, 2);
        SquareMatrix y = rng.coin() ? commutator(random_skew(rng, Q, 2), x.matrix())
                                    : random_hermitian(rng, Q, 2).matrix();
        SquareMatrix base = commutator(dir, x.matrix());

        bool scan_solvable = false;
        for (int numer = -5; numer <= 5 && !scan_solvable; ++numer) {
            if (make_rational(numer) * base == y) scan_solvable = true;
        }
        // direct one-variable solve: base * t = y entry-wise
        bool exact_solvable = true;
        bool any_nonzero = false;
        RingValue t_value = zero(Q);
        for (int i = 1; i <= 2 && exact_solvable; ++i) {
            for (int j = 1; j <= 2 && exact_solvable; ++j) {
                if (base.at(i, j).is_zero()) {
                    if (!y.at(i, j).is_zero()) exact_solvable = false;
                } else if (!any_nonzero) {
                    any_nonzero = true;
                    t_value = y.at(i, j) * inverse(base.at(i, j));
                }
            }
        }
        if (exact_solvable && any_nonzero && !(t_value * base == y)) exact_solvable = false;

        auto space = find_witness({{x, HermitianMatrix(y)}}, 2, Q);
        CHECK(space.has_value() == exact_solvable);
        if (scan_solvable) CHECK(space.has_value());
    }
}

TEST_CASE("two-local check") {
    SUBCASE("inner derivations witness every pair") {
        for (int t = 0; t < 30; ++t) {
            TrialRng rng(25, static_cast<std::uint64_t>(t));
            int n = 2 + t % 3;
            SquareMatrix z = random_skew(rng, Q, n);
            std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table;
            for (const auto& b : hermitian_spanning_set(Q, n)) {
                table.emplace_back(b, HermitianMatrix(commutator(z, b.matrix())));
            }
            TwoLocalCheckReport report = check_two_local(table, n, Q);
            CHECK(report.all_witnessed);
        }
    }

    SUBCASE("the counterexample table fails on the mixed pair") {
        HermitianMatrix s12 = sym_unit(Q, 2, 1, 2);
        HermitianMatrix e11(matrix_unit(Q, 2, 1, 1));
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table{
            {s12, HermitianMatrix(SquareMatrix(Q, 2))}, {e11, s12}};
        TwoLocalCheckReport report = check_two_local(table, 2, Q);
        CHECK_FALSE(report.all_witnessed);
        bool mixed_failed = false;
        for (const auto& p : report.pairs) {
            if (p.first_index == 0 && p.second_index == 1) mixed_failed = !p.witnessed;
        }
        CHECK(mixed_failed);
    }

    SUBCASE("singleton tables degenerate to the single-point condition") {
        HermitianMatrix x(matrix_unit(Q, 2, 1, 1));
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> witnessed{
            {x, HermitianMatrix(commutator(matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1),
                                           x.matrix()))}};
        CHECK(check_two_local(witnessed, 2, Q).all_witnessed);
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> unwitnessed{{x, x}};
        CHECK_FALSE(check_two_local(unwitnessed, 2, Q).all_witnessed);
    }
}

TEST_CASE("local check") {
    SUBCASE("inner derivations witness every point") {
        TrialRng rng(26);
        SquareMatrix z = random_skew(rng, Q, 3);
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table;
        for (const auto& b : hermitian_spanning_set(Q, 3)) {
            table.emplace_back(b, HermitianMatrix(commutator(z, b.matrix())));
        }
        LocalCheckReport report = check_local(table, 3, Q);
        CHECK(report.all_witnessed);
    }

    SUBCASE("the identity map is not pointwise witnessed at a diagonal unit") {
        HermitianMatrix e11(matrix_unit(Q, 2, 1, 1));
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table{{e11, e11}};
        CHECK_FALSE(check_local(table, 2, Q).all_witnessed);
    }

    SUBCASE("the zero map is witnessed by zero") {
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table;
        for (const auto& b : hermitian_spanning_set(Q, 2)) {
            table.emplace_back(b, HermitianMatrix(SquareMatrix(Q, 2)));
        }
        LocalCheckReport report = check_local(table, 2, Q);
        CHECK(report.all_witnessed);
        for (const auto& p : report.points) {
            REQUIRE(p.witness.has_value());
            CHECK(p.witness->is_zero());
        }
    }

    SUBCASE("additivity is verified on sums present in the table") {
        HermitianMatrix e11(matrix_unit(Q, 2, 1, 1));
        HermitianMatrix e22(matrix_unit(Q, 2, 2, 2));
        HermitianMatrix id(SquareMatrix::identity(Q, 2));
        SquareMatrix z = matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1);
        auto dz = [&](const HermitianMatrix& x) {
            return HermitianMatrix(commutator(z, x.matrix()));
        };
        std::vector<std::pair<HermitianMatrix, HermitianMatrix>> table{
            {e11, dz(e11)}, {e22, dz(e22)}, {id, dz(id)}};
        LocalCheckReport report = check_local(table, 2, Q);
        CHECK(report.additivity_checked);
        CHECK(report.additivity_ok);

        // corrupt the value at the sum point
        table[2].second = HermitianMatrix(sym_unit(Q, 2, 1, 2).matrix() + dz(id).matrix());
        LocalCheckReport broken = check_local(table, 2, Q);
        CHECK(broken.additivity_checked);
        CHECK_FALSE(broken.additivity_ok);
    }
}

TEST_CASE("solving rejects non-field rings") {
    RingId poly = RingId::polynomial(RingId::rational(), 1);
    CHECK_THROWS_AS(find_witness({}, 2, poly), UnsupportedRing);
}
