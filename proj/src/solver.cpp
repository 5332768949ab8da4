#include "jring/solver.hpp"

#include <string>

namespace jring {

namespace {

void require_field(const RingId& ring) {
    if (!ring.is_field()) {
        throw UnsupportedRing("exact solving requires a field kind: " + ring.to_string());
    }
}

}  // namespace

FixedFieldVector zero_vector(const RingId& ring, std::size_t size) {
    return FixedFieldVector{ring, std::vector<RingValue>(size, zero(ring))};
}

FixedFieldVector SolutionSpace::sample(const std::vector<RingValue>& coeffs) const {
    if (coeffs.size() != kernel_basis.size()) throw Error("one coefficient per kernel vector required");
    FixedFieldVector out = particular;
    for (std::size_t k = 0; k < kernel_basis.size(); ++k) {
        for (std::size_t c = 0; c < out.coords.size(); ++c) {
            out.coords[c] = out.coords[c] + coeffs[k] * kernel_basis[k].coords[c];
        }
    }
    return out;
}

std::optional<SolutionSpace> solve(const std::vector<FixedFieldVector>& rows,
                                   const FixedFieldVector& rhs) {
    const RingId& ring = rhs.ring;
    require_field(ring);
    if (rows.size() != rhs.coords.size()) throw ShapeMismatch("one rhs entry per row required");
    const std::size_t m = rows.size();
    const std::size_t cols = m == 0 ? 0 : rows[0].coords.size();
    for (const auto& r : rows) {
        if (r.ring != ring) throw RingMismatch("system rows from different rings");
        if (r.coords.size() != cols) throw ShapeMismatch("ragged system rows");
    }

    // augmented matrix, Gauss-Jordan to reduced row echelon form
    std::vector<std::vector<RingValue>> aug(m);
    for (std::size_t r = 0; r < m; ++r) {
        aug[r] = rows[r].coords;
        aug[r].push_back(rhs.coords[r]);
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && aug[pivot][col].is_zero()) ++pivot;
        if (pivot == m) continue;
        std::swap(aug[row], aug[pivot]);
        RingValue inv = inverse(aug[row][col]);
        for (std::size_t c = col; c <= cols; ++c) aug[row][c] = inv * aug[row][c];
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || aug[r][col].is_zero()) continue;
            RingValue factor = aug[r][col];
            for (std::size_t c = col; c <= cols; ++c) {
                aug[r][c] = aug[r][c] - factor * aug[row][c];
            }
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r) {
        if (!aug[r][cols].is_zero()) return std::nullopt;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;

    SolutionSpace space{zero_vector(ring, cols), {}};
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        space.particular.coords[pivot_col_of_row[r]] = aug[r][cols];
    }
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        FixedFieldVector k = zero_vector(ring, cols);
        k.coords[free_col] = one(ring);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            k.coords[pivot_col_of_row[r]] = -aug[r][free_col];
        }
        space.kernel_basis.push_back(std::move(k));
    }
    return space;
}

FixedFieldVector flatten_skew(const SquareMatrix& c) {
    const RingId& ring = c.ring();
    require_field(ring);
    if (!is_skew_adjoint(c)) throw NotSkew("flatten_skew requires a skew-adjoint matrix");
    const int n = c.n();
    FixedFieldVector out{ring, {}};
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.coords.push_back(fixed_part(c.at(i, j)));
        }
    }
    if (!ring.trivial_involution()) {
        Ring ops(ring);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                out.coords.push_back(ops.skew_coefficient(skew_part(c.at(i, j))));
            }
        }
        for (int k = 1; k <= n; ++k) {
            out.coords.push_back(ops.skew_coefficient(c.at(k, k)));
        }
    }
    return out;
}

SquareMatrix unflatten_skew(const FixedFieldVector& v, int n, const RingId& ring) {
    require_field(ring);
    std::vector<SquareMatrix> basis = skew_spanning_set(ring, n);
    if (v.coords.size() != basis.size()) throw ShapeMismatch("coordinate count does not match basis");
    SquareMatrix out(ring, n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (v.coords[k].is_zero()) continue;
        out = out + v.coords[k] * basis[k];
    }
    return out;
}

std::optional<SolutionSpace> find_witness(const std::vector<WitnessConstraint>& constraints, int n,
                                          const RingId& ring) {
    require_field(ring);
    Ring ops(ring);
    std::vector<SquareMatrix> basis = skew_spanning_set(ring, n);
    const std::size_t dim = basis.size();
    const int rank = ops.fixed_rank();

    std::vector<FixedFieldVector> rows;
    FixedFieldVector rhs{ring, {}};
    for (const auto& constraint : constraints) {
        const SquareMatrix& x = constraint.x.matrix();
        const SquareMatrix& y = constraint.y.matrix();
        if (x.ring() != ring || x.n() != n || y.ring() != ring || y.n() != n) {
            throw ShapeMismatch("constraint matrices do not match the requested shape");
        }
        std::vector<SquareMatrix> images;
        images.reserve(dim);
        for (const auto& b : basis) images.push_back(commutator(b, x));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                std::vector<std::vector<RingValue>> entry_coords;
                entry_coords.reserve(dim);
                for (const auto& img : images) entry_coords.push_back(ops.fixed_coords(img.at(i, j)));
                std::vector<RingValue> rhs_coords = ops.fixed_coords(y.at(i, j));
                for (int comp = 0; comp < rank; ++comp) {
                    FixedFieldVector row{ring, {}};
                    row.coords.reserve(dim);
                    for (std::size_t b = 0; b < dim; ++b) {
                        row.coords.push_back(entry_coords[b][static_cast<std::size_t>(comp)]);
                    }
                    rows.push_back(std::move(row));
                    rhs.coords.push_back(rhs_coords[static_cast<std::size_t>(comp)]);
                }
            }
        }
    }
    return solve(rows, rhs);
}

SquareMatrix witness_matrix(const SolutionSpace& space, int n, const RingId& ring) {
    return unflatten_skew(space.particular, n, ring);
}

bool in_span(const FixedFieldVector& v, const std::vector<FixedFieldVector>& basis) {
    // consistent iff v is a combination of the basis vectors
    std::vector<FixedFieldVector> rows;
    for (std::size_t c = 0; c < v.coords.size(); ++c) {
        FixedFieldVector row{v.ring, {}};
        row.coords.reserve(basis.size());
        for (const auto& b : basis) row.coords.push_back(b.coords[c]);
        rows.push_back(std::move(row));
    }
    return solve(rows, v).has_value();
}

TwoLocalCheckReport check_two_local(
    const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table, int n,
    const RingId& ring) {
    TwoLocalCheckReport report;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i; j < table.size(); ++j) {
            std::vector<WitnessConstraint> constraints{{table[i].first, table[i].second},
                                                       {table[j].first, table[j].second}};
            auto space = find_witness(constraints, n, ring);
            PairWitnessReport entry;
            entry.first_index = static_cast<int>(i);
            entry.second_index = static_cast<int>(j);
            entry.witnessed = space.has_value();
            if (space) entry.witness = witness_matrix(*space, n, ring);
            if (!entry.witnessed) report.all_witnessed = false;
            report.pairs.push_back(std::move(entry));
        }
    }
    return report;
}

LocalCheckReport check_local(const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& table,
                             int n, const RingId& ring) {
    LocalCheckReport report;
    for (std::size_t i = 0; i < table.size(); ++i) {
        auto space = find_witness({{table[i].first, table[i].second}}, n, ring);
        PointWitnessReport entry;
        entry.index = static_cast<int>(i);
        entry.witnessed = space.has_value();
        if (space) entry.witness = witness_matrix(*space, n, ring);
        if (!entry.witnessed) report.all_witnessed = false;
        report.points.push_back(std::move(entry));
    }
    // additivity on sums the table happens to contain
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i; j < table.size(); ++j) {
            SquareMatrix s = table[i].first.matrix() + table[j].first.matrix();
            for (const auto& [x, dx] : table) {
                if (x.matrix() == s) {
                    report.additivity_checked = true;
                    if (dx.matrix() != table[i].second.matrix() + table[j].second.matrix()) {
                        report.additivity_ok = false;
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace jring
