#include "nulltree/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "nulltree/errors.hpp"

namespace nulltree {

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
    if (x.size() != cols_) {
        throw DimensionMismatch("matrix has " + std::to_string(cols_) + " columns, vector has " +
                                std::to_string(x.size()) + " entries");
    }
    RationalVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) {
                y[r] += (*this)(r, c) * x[c];
            }
        }
    }
    return y;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

Echelon reduced_row_echelon(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(lead_row, pivot);

        const Rational inv = 1 / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(lead_row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || sgn(m(r, col)) == 0) {
                continue;
            }
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (sgn(m(lead_row, c)) != 0) {
                    m(r, c) -= factor * m(lead_row, c);
                }
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

RationalMatrix adjacency_matrix(const Tree& t) {
    const auto n = static_cast<std::size_t>(t.order());
    RationalMatrix a(n, n);
    for (const Edge& e : t.edges()) {
        a(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1)) = 1;
        a(static_cast<std::size_t>(e.v - 1), static_cast<std::size_t>(e.u - 1)) = 1;
    }
    return a;
}

namespace {

std::vector<RationalVector> kernel_from_echelon(const Echelon& ech, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector x(cols);
        x[free] = 1;
        for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
            x[ech.pivots[k]] = -ech.reduced(k, free);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

RationalMatrix stack_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("vectors of unequal length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

// Non-zero rows of the reduced echelon form of span(rows).
std::vector<RationalVector> canonical_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    Echelon ech = reduced_row_echelon(stack_rows(rows, cols));
    std::vector<RationalVector> out;
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
        out.push_back(ech.reduced.row(k));
    }
    return out;
}

}  // namespace

std::vector<RationalVector> null_space_basis(const RationalMatrix& m) {
    Echelon ech = reduced_row_echelon(m);
    auto kernel = kernel_from_echelon(ech, m.cols());
    if (kernel.empty()) {
        return kernel;
    }
    return canonical_rows(kernel, m.cols());
}

RankNullity rank_nullity(const RationalMatrix& m) {
    const auto rank = static_cast<int>(reduced_row_echelon(m).pivots.size());
    return {rank, static_cast<int>(m.cols()) - rank};
}

std::vector<Vertex> support(const RationalVector& x) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) != 0) {
            out.push_back(static_cast<Vertex>(i) + 1);
        }
    }
    return out;
}

std::vector<Vertex> support(const std::vector<RationalVector>& vectors) {
    std::vector<bool> hit;
    for (const auto& x : vectors) {
        hit.resize(std::max(hit.size(), x.size()), false);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (sgn(x[i]) != 0) {
                hit[i] = true;
            }
        }
    }
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < hit.size(); ++i) {
        if (hit[i]) {
            out.push_back(static_cast<Vertex>(i) + 1);
        }
    }
    return out;
}

std::vector<Vertex> null_support(const Tree& t) {
    return support(null_space_basis(adjacency_matrix(t)));
}

RationalVector combine_full_support(const std::vector<RationalVector>& xs) {
    if (xs.empty()) {
        throw EmptyInput("combine_full_support needs at least one vector");
    }
    const std::size_t n = xs.front().size();
    for (const auto& x : xs) {
        if (x.size() != n) {
            throw DimensionMismatch("vectors of unequal length");
        }
    }

    RationalVector z = xs.front();
    for (std::size_t t = 1; t < xs.size(); ++t) {
        const RationalVector& x = xs[t];
        Rational alpha = 0;
        for (const auto& entry : z) {
            alpha = std::max(alpha, Rational(abs(entry)));
        }
        std::optional<Rational> min_abs;
        for (const auto& entry : x) {
            if (sgn(entry) != 0 && (!min_abs || abs(entry) < *min_abs)) {
                min_abs = abs(entry);
            }
        }
        // Degenerate inputs (a zero vector on either side) carry no support
        // to merge, so one side passes through unchanged.
        if (!min_abs) {
            continue;
        }
        const Rational beta = *min_abs / 2;
        RationalVector next(n);
        for (std::size_t k = 0; k < n; ++k) {
            next[k] = x[k] / beta;
            if (sgn(alpha) != 0) {
                next[k] += z[k] / alpha;
            }
        }
        z = std::move(next);
    }
    return z;
}

Rational weight(const Tree& t, const RationalVector& x, Vertex u) {
    t.require_vertex(u);
    if (x.size() != static_cast<std::size_t>(t.order())) {
        throw DimensionMismatch("vector length " + std::to_string(x.size()) + " vs tree order " +
                                std::to_string(t.order()));
    }
    Rational sum = 0;
    for (Vertex w : t.neighbors(u)) {
        sum += x[static_cast<std::size_t>(w - 1)];
    }
    return sum;
}

RationalVector restrict_to(const RationalVector& x, const std::vector<Vertex>& h) {
    RationalVector out;
    out.reserve(h.size());
    for (Vertex v : h) {
        if (v < 1 || static_cast<std::size_t>(v) > x.size()) {
            throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." + std::to_string(x.size()));
        }
        out.push_back(x[static_cast<std::size_t>(v - 1)]);
    }
    return out;
}

RationalVector lift(const RationalVector& x, int order, const std::vector<Vertex>& h) {
    if (x.size() != h.size()) {
        throw DimensionMismatch("vector has " + std::to_string(x.size()) + " entries for " +
                                std::to_string(h.size()) + " vertices");
    }
    RationalVector out(static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 1 || h[i] > order) {
            throw InvalidVertex("vertex " + std::to_string(h[i]) + " outside 1.." + std::to_string(order));
        }
        out[static_cast<std::size_t>(h[i] - 1)] = x[i];
    }
    return out;
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<RationalVector>& basis,
                                                       const RationalVector& target) {
    // Columns are the basis vectors, last column the target.
    const std::size_t n = target.size();
    const std::size_t k = basis.size();
    RationalMatrix aug(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j].size() != n) {
            throw DimensionMismatch("vectors of unequal length");
        }
        for (std::size_t i = 0; i < n; ++i) {
            aug(i, j) = basis[j][i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        aug(i, k) = target[i];
    }
    Echelon ech = reduced_row_echelon(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == k) {
        return std::nullopt;
    }
    std::vector<Rational> coeffs(k);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        coeffs[ech.pivots[r]] = ech.reduced(r, k);
    }
    return coeffs;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
    std::size_t n = 0;
    if (!a.empty()) {
        n = a.front().size();
    } else if (!b.empty()) {
        n = b.front().size();
    }
    return canonical_rows(a, n) == canonical_rows(b, n);
}

IntPolynomial characteristic_polynomial(const RationalMatrix& m) {
    if (!m.square()) {
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    }
    const std::size_t n = m.rows();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j).get_den() != 1) {
                throw DimensionMismatch("characteristic polynomial needs an integral matrix");
            }
            a[i][j] = m(i, j).get_num();
        }
    }
    if (n == 0) {
        return IntPolynomial{{Integer(1)}};
    }

    // Berkowitz: extend the polynomial of the leading r x r block to the
    // (r+1) x (r+1) block by a lower-triangular Toeplitz product.
    // Highest-degree coefficient first while building.
    std::vector<Integer> poly{Integer(1), Integer(-a[0][0])};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> toeplitz(r + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -a[r][r];
        std::vector<Integer> power_col(r);  // A_r^k * C, starting with k = 0
        for (std::size_t i = 0; i < r; ++i) {
            power_col[i] = a[i][r];
        }
        for (std::size_t k = 0; k < r; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < r; ++i) {
                dot += a[r][i] * power_col[i];
            }
            toeplitz[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<Integer> next(r);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) {
                        if (a[i][j] != 0) {
                            next[i] += a[i][j] * power_col[j];
                        }
                    }
                }
                power_col = std::move(next);
            }
        }
        std::vector<Integer> next_poly(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) {
                next_poly[i] += toeplitz[i - j] * poly[j];
            }
        }
        poly = std::move(next_poly);
    }
    std::reverse(poly.begin(), poly.end());
    return IntPolynomial{std::move(poly)};
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const RationalVector& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != 0) {
            os << ' ';
        }
        os << x[i].get_str();
    }
    return os.str();
}

}  // namespace nulltree
