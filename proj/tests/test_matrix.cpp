#include <doctest.h>

#include "jring/matrix.hpp"
#include "jring/random.hpp"

using namespace jring;

namespace {

const RingId Q = RingId::rational();
const RingId G = RingId::gaussian_rational();

SquareMatrix from_ints(const RingId& ring, int n, std::initializer_list<long long> values) {
    SquareMatrix m(ring, n);
    auto it = values.begin();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) m.set(i, j, from_int(ring, *it++));
    }
    return m;
}

}  // namespace

TEST_CASE("matrix units") {
    CHECK(matrix_unit(Q, 2, 1, 2) == from_ints(Q, 2, {0, 1, 0, 0}));
    CHECK(matrix_unit(Q, 2, 2, 2) == from_ints(Q, 2, {0, 0, 0, 1}));
    CHECK(matrix_unit(Q, 1, 1, 1) == from_ints(Q, 1, {1}));
    CHECK_THROWS_AS(matrix_unit(Q, 2, 3, 1), IndexOutOfRange);

    // e_ii e_kl = delta_ik e_il, exhaustively for n <= 4
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int k = 1; k <= n; ++k) {
                for (int l = 1; l <= n; ++l) {
                    SquareMatrix lhs = matrix_unit(Q, n, i, i) * matrix_unit(Q, n, k, l);
                    SquareMatrix rhs = i == k ? matrix_unit(Q, n, i, l) : SquareMatrix(Q, n);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("symmetrized units") {
    CHECK(sym_unit(Q, 2, 1, 2).matrix() == from_ints(Q, 2, {0, 1, 1, 0}));
    SquareMatrix s13 = sym_unit(G, 3, 1, 3).matrix();
    CHECK(s13 == matrix_unit(G, 3, 1, 3) + matrix_unit(G, 3, 3, 1));
    CHECK(is_self_adjoint(s13));
    CHECK_THROWS_AS(sym_unit(Q, 2, 1, 1), EqualIndices);
}

TEST_CASE("adjoint") {
    SquareMatrix m(G, 1);
    m.set(1, 1, make_gaussian(0, 1));
    SquareMatrix conj(G, 1);
    conj.set(1, 1, make_gaussian(0, -1));
    CHECK(m.adjoint() == conj);

    CHECK(from_ints(Q, 2, {1, 2, 3, 4}).adjoint() == from_ints(Q, 2, {1, 3, 2, 4}));

    for (int t = 0; t < 100; ++t) {
        TrialRng rng(3, static_cast<std::uint64_t>(t));
        SquareMatrix a = random_matrix(rng, G, 3);
        CHECK(a.adjoint().adjoint() == a);
    }
}

TEST_CASE("jordan product") {
    SquareMatrix e11 = matrix_unit(Q, 2, 1, 1);
    SquareMatrix s12 = sym_unit(Q, 2, 1, 2).matrix();
    CHECK(jordan_product(e11, s12) == half(Q) * s12);
    CHECK(jordan_product(s12, s12) == SquareMatrix::identity(Q, 2));

    for (int t = 0; t < 50; ++t) {
        TrialRng rng(4, static_cast<std::uint64_t>(t));
        SquareMatrix a = random_matrix(rng, Q, 3);
        CHECK(jordan_product(a, SquareMatrix::identity(Q, 3)) == a);
    }
}

TEST_CASE("commutator") {
    SquareMatrix s12 = sym_unit(Q, 2, 1, 2).matrix();
    SquareMatrix e11 = matrix_unit(Q, 2, 1, 1);
    CHECK(commutator(s12, e11) == matrix_unit(Q, 2, 2, 1) - matrix_unit(Q, 2, 1, 2));

    SquareMatrix skew = matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1);
    CHECK(commutator(skew, s12) ==
          from_int(Q, 2) * (matrix_unit(Q, 2, 1, 1) - matrix_unit(Q, 2, 2, 2)));

    for (int t = 0; t < 50; ++t) {
        TrialRng rng(6, static_cast<std::uint64_t>(t));
        SquareMatrix a = random_matrix(rng, G, 3);
        CHECK(commutator(a, a).is_zero());
    }
}

TEST_CASE("peirce components") {
    SquareMatrix a = from_ints(Q, 2, {1, 2, 3, 4});
    CHECK(peirce(a, 1, 2) == from_ints(Q, 2, {0, 2, 0, 0}));
    CHECK(component(a, 2, 1) == from_int(Q, 3));
    CHECK(peirce(matrix_unit(Q, 2, 1, 1), 2, 2).is_zero());
    CHECK_THROWS_AS(peirce(a, 0, 1), IndexOutOfRange);

    for (int t = 0; t < 100; ++t) {
        TrialRng rng(8, static_cast<std::uint64_t>(t));
        int n = 2 + t % 4;
        SquareMatrix m = random_matrix(rng, G, n);
        SquareMatrix sum(G, n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) sum = sum + peirce(m, i, j);
        }
        CHECK(sum == m);
        // peirce really is e_ii m e_jj
        SquareMatrix e11 = matrix_unit(G, n, 1, 1);
        SquareMatrix e22 = matrix_unit(G, n, 2, 2);
        CHECK(peirce(m, 1, 2) == e11 * m * e22);
    }
}

TEST_CASE("self-adjoint and skew-adjoint tests") {
    CHECK(is_self_adjoint(sym_unit(Q, 2, 1, 2).matrix()));
    CHECK(is_skew_adjoint(matrix_unit(Q, 2, 1, 2) - matrix_unit(Q, 2, 2, 1)));
    SquareMatrix ie11 = make_gaussian(0, 1) * matrix_unit(G, 2, 1, 1);
    CHECK_FALSE(is_self_adjoint(ie11));
    CHECK(is_skew_adjoint(ie11));
    CHECK_THROWS_AS(HermitianMatrix{ie11}, NotSelfAdjoint);
}

TEST_CASE("hermitian closure under the jordan product") {
    for (const RingId& ring : {Q, G, RingId::prime_field(101),
                               RingId::polynomial(RingId::rational(), -1)}) {
        for (int n = 1; n <= 5; ++n) {
            for (int t = 0; t < 20; ++t) {
                TrialRng rng(10 + n, static_cast<std::uint64_t>(t));
                HermitianMatrix x = random_hermitian(rng, ring, n);
                HermitianMatrix y = random_hermitian(rng, ring, n);
                CHECK(is_self_adjoint(jordan_product(x.matrix(), y.matrix())));
            }
        }
    }
}

TEST_CASE("adjoint is an antihomomorphism and commutators of hermitians are skew") {
    for (int t = 0; t < 500; ++t) {
        TrialRng rng(12, static_cast<std::uint64_t>(t));
        int n = 2 + t % 3;
        SquareMatrix a = random_matrix(rng, G, n);
        SquareMatrix b = random_matrix(rng, G, n);
        CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());

        SquareMatrix x = random_hermitian(rng, G, n).matrix();
        SquareMatrix y = random_hermitian(rng, G, n).matrix();
        CHECK(is_skew_adjoint(commutator(x, y)));
    }
}

TEST_CASE("spanning sets") {
    CHECK(hermitian_spanning_set(Q, 2).size() == 3);
    CHECK(hermitian_spanning_set(G, 2).size() == 4);
    CHECK(hermitian_spanning_set(Q, 1).size() == 1);
    CHECK(hermitian_spanning_set(Q, 1)[0].matrix() == matrix_unit(Q, 1, 1, 1));

    CHECK(skew_spanning_set(Q, 2).size() == 1);
    CHECK(skew_spanning_set(G, 2).size() == 4);
    CHECK(skew_spanning_set(G, 3).size() == 9);

    for (const RingId& ring : {Q, G, RingId::prime_field(7)}) {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& h : hermitian_spanning_set(ring, n)) CHECK(is_self_adjoint(h.matrix()));
            for (const auto& s : skew_spanning_set(ring, n)) CHECK(is_skew_adjoint(s));
        }
    }

    CHECK_THROWS_AS(hermitian_spanning_set(RingId::polynomial(RingId::rational(), -1), 2),
                    SkewGeneratorUnavailable);
}

TEST_CASE("corner compression") {
    TrialRng rng(14);
    SquareMatrix a = random_matrix(rng, Q, 3);
    SquareMatrix top = corner_compress(a, {1, 2});
    CHECK(top.n() == 2);
    CHECK(top.at(1, 1) == a.at(1, 1));
    CHECK(top.at(2, 1) == a.at(2, 1));

    CHECK(corner_compress(SquareMatrix::identity(Q, 4), {2, 4}) == SquareMatrix::identity(Q, 2));
    CHECK(corner_compress(sym_unit(Q, 3, 1, 3).matrix(), {1, 2}).is_zero());

    CHECK_THROWS_AS(corner_compress(a, {}), EmptySubset);
    CHECK_THROWS_AS(corner_compress(a, {1, 5}), IndexOutOfRange);

    // multiplicativity on corner-supported arguments
    for (int t = 0; t < 100; ++t) {
        TrialRng r2(15, static_cast<std::uint64_t>(t));
        std::vector<int> idx{1, 3, 4};
        SquareMatrix x = corner_embed(random_matrix(r2, Q, 3), idx, 4);
        SquareMatrix y = corner_embed(random_matrix(r2, Q, 3), idx, 4);
        CHECK(corner_compress(x * y, idx) == corner_compress(x, idx) * corner_compress(y, idx));
    }

    // embedding inverts compression on supported matrices
    std::vector<int> idx{1, 3};
    SquareMatrix supported = corner_embed(random_matrix(rng, Q, 2), idx, 3);
    CHECK(is_corner_supported(supported, idx));
    CHECK(corner_embed(corner_compress(supported, idx), idx, 3) == supported);
    CHECK_FALSE(is_corner_supported(matrix_unit(Q, 3, 2, 2), idx));
}
