#include "jring/matrix.hpp"

#include <algorithm>
#include <string>

namespace jring {

namespace {

void require_same_shape(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.ring() != b.ring()) {
        throw RingMismatch("matrices over different rings: " + a.ring().to_string() + " vs " +
                           b.ring().to_string());
    }
    if (a.n() != b.n()) {
        throw ShapeMismatch("matrix sizes differ: " + std::to_string(a.n()) + " vs " +
                            std::to_string(b.n()));
    }
}

void check_subset(const std::vector<int>& idx, int n) {
    if (idx.empty()) throw EmptySubset("index subset is empty");
    int prev = 0;
    for (int i : idx) {
        if (i < 1 || i > n) throw IndexOutOfRange("corner index out of range: " + std::to_string(i));
        if (i <= prev) throw Error("corner indices must be strictly increasing");
        prev = i;
    }
}

}  // namespace

SquareMatrix::SquareMatrix(RingId ring, int n) : ring_(std::move(ring)), n_(n) {
    if (n < 1) throw SizeTooSmall("matrix size must be at least 1");
    entries_.assign(static_cast<std::size_t>(n) * n, zero(ring_));
}

SquareMatrix SquareMatrix::identity(const RingId& ring, int n) {
    SquareMatrix m(ring, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, one(ring));
    return m;
}

void SquareMatrix::check_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range for n=" + std::to_string(n_));
    }
}

const RingValue& SquareMatrix::at(int i, int j) const {
    check_index(i, j);
    return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void SquareMatrix::set(int i, int j, RingValue v) {
    check_index(i, j);
    if (v.ring() != ring_) throw RingMismatch("entry from a different ring");
    entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = std::move(v);
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix out(ring_, n_);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            out.set(i, j, star(at(j, i)));
        }
    }
    return out;
}

bool SquareMatrix::operator==(const SquareMatrix& other) const {
    if (ring_ != other.ring_ || n_ != other.n_) return false;
    return entries_ == other.entries_;
}

bool SquareMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RingValue& v) { return v.is_zero(); });
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_shape(a, b);
    SquareMatrix out(a.ring(), a.n());
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    }
    return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_shape(a, b);
    SquareMatrix out(a.ring(), a.n());
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
    }
    return out;
}

SquareMatrix operator-(const SquareMatrix& a) {
    SquareMatrix out(a.ring(), a.n());
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out.set(i, j, -a.at(i, j));
    }
    return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_shape(a, b);
    const int n = a.n();
    SquareMatrix out(a.ring(), n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            RingValue acc = zero(a.ring());
            for (int k = 1; k <= n; ++k) {
                const RingValue& x = a.at(i, k);
                const RingValue& y = b.at(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                acc = acc + x * y;
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

SquareMatrix operator*(const RingValue& s, const SquareMatrix& a) {
    if (s.ring() != a.ring()) throw RingMismatch("scalar from a different ring");
    SquareMatrix out(a.ring(), a.n());
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out.set(i, j, s * a.at(i, j));
    }
    return out;
}

SquareMatrix jordan_product(const SquareMatrix& a, const SquareMatrix& b) {
    return half(a.ring()) * (a * b + b * a);
}

SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b) { return a * b - b * a; }

bool is_self_adjoint(const SquareMatrix& a) { return a.adjoint() == a; }
bool is_skew_adjoint(const SquareMatrix& a) { return a.adjoint() == -a; }

HermitianMatrix::HermitianMatrix(SquareMatrix m) : m_(std::move(m)) {
    if (!is_self_adjoint(m_)) throw NotSelfAdjoint("matrix is not self-adjoint");
}

SquareMatrix matrix_unit(const RingId& ring, int n, int i, int j) {
    SquareMatrix m(ring, n);
    m.set(i, j, one(ring));
    return m;
}

HermitianMatrix sym_unit(const RingId& ring, int n, int i, int j) {
    if (i == j) throw EqualIndices("sym_unit needs distinct indices");
    return HermitianMatrix(matrix_unit(ring, n, i, j) + matrix_unit(ring, n, j, i));
}

SquareMatrix peirce(const SquareMatrix& a, int i, int j) {
    SquareMatrix out(a.ring(), a.n());
    out.set(i, j, a.at(i, j));
    return out;
}

RingValue component(const SquareMatrix& a, int i, int j) { return a.at(i, j); }

std::vector<HermitianMatrix> hermitian_spanning_set(const RingId& ring, int n) {
    std::vector<HermitianMatrix> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back(HermitianMatrix(matrix_unit(ring, n, i, i)));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(sym_unit(ring, n, i, j));
        }
    }
    if (!ring.trivial_involution()) {
        RingValue g = Ring(ring).skew_generator();
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                out.push_back(HermitianMatrix(g * (matrix_unit(ring, n, i, j) - matrix_unit(ring, n, j, i))));
            }
        }
    }
    return out;
}

std::vector<SquareMatrix> skew_spanning_set(const RingId& ring, int n) {
    std::vector<SquareMatrix> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(matrix_unit(ring, n, i, j) - matrix_unit(ring, n, j, i));
        }
    }
    if (!ring.trivial_involution()) {
        RingValue g = Ring(ring).skew_generator();
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                out.push_back(g * sym_unit(ring, n, i, j).matrix());
            }
        }
        for (int k = 1; k <= n; ++k) {
            out.push_back(g * matrix_unit(ring, n, k, k));
        }
    }
    return out;
}

SquareMatrix corner_compress(const SquareMatrix& a, const std::vector<int>& idx) {
    check_subset(idx, a.n());
    const int m = static_cast<int>(idx.size());
    SquareMatrix out(a.ring(), m);
    for (int r = 1; r <= m; ++r) {
        for (int c = 1; c <= m; ++c) {
            out.set(r, c, a.at(idx[r - 1], idx[c - 1]));
        }
    }
    return out;
}

SquareMatrix corner_embed(const SquareMatrix& a, const std::vector<int>& idx, int n) {
    check_subset(idx, n);
    if (a.n() != static_cast<int>(idx.size())) throw ShapeMismatch("corner size does not match subset");
    SquareMatrix out(a.ring(), n);
    for (int r = 1; r <= a.n(); ++r) {
        for (int c = 1; c <= a.n(); ++c) {
            out.set(idx[r - 1], idx[c - 1], a.at(r, c));
        }
    }
    return out;
}

bool is_corner_supported(const SquareMatrix& a, const std::vector<int>& idx) {
    check_subset(idx, a.n());
    std::vector<bool> in_idx(static_cast<std::size_t>(a.n()) + 1, false);
    for (int i : idx) in_idx[static_cast<std::size_t>(i)] = true;
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) {
            if (!(in_idx[static_cast<std::size_t>(i)] && in_idx[static_cast<std::size_t>(j)]) &&
                !a.at(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace jring
