#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nulltree/tree.hpp"

namespace nulltree {

using Rational = mpq_class;
using Integer = mpz_class;

/// Vertex-indexed vector: entry i holds the coordinate of vertex i+1.
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector operator*(const RationalVector& x) const;
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Monic characteristic polynomial det(xI - M); coefficients[i] multiplies x^i.
struct IntPolynomial {
    std::vector<Integer> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    const Integer& operator[](std::size_t i) const { return coefficients[i]; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Reduced row echelon form: pivots[k] is the pivot column of row k.
struct Echelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination, pivot = first non-zero entry in the column.
Echelon reduced_row_echelon(RationalMatrix m);

RationalMatrix adjacency_matrix(const Tree& t);

/// Canonical basis of ker(M): the rows of the reduced echelon form of the
/// null space, i.e. increasing leading coordinates, each leading entry 1
/// and zero in every other basis vector. Unique for a given subspace, so
/// two null spaces are equal iff their canonical bases are equal.
std::vector<RationalVector> null_space_basis(const RationalMatrix& m);

struct RankNullity {
    int rank = 0;
    int nullity = 0;
};
RankNullity rank_nullity(const RationalMatrix& m);

/// Union of the supports of the given vectors, as ascending 1-based labels.
std::vector<Vertex> support(const std::vector<RationalVector>& vectors);
std::vector<Vertex> support(const RationalVector& x);

/// Support of the adjacency null space of t.
std::vector<Vertex> null_support(const Tree& t);

/// Builds one vector of span(xs) whose support is the union of the inputs'
/// supports. Each step rescales the running vector by its largest absolute
/// entry and the next input by half its smallest non-zero absolute entry,
/// so the sum cannot cancel anywhere.
RationalVector combine_full_support(const std::vector<RationalVector>& xs);

/// Sum of x over the neighbors of u.
Rational weight(const Tree& t, const RationalVector& x, Vertex u);

/// Coordinates of x at the labels in h (ascending), in that order.
RationalVector restrict_to(const RationalVector& x, const std::vector<Vertex>& h);

/// Zero-padded lift of x (indexed by the ascending labels h) to `order`
/// coordinates.
RationalVector lift(const RationalVector& x, int order, const std::vector<Vertex>& h);

/// Coefficients c with sum_i c_i * basis[i] == target, if any.
std::optional<std::vector<Rational>> solve_combination(const std::vector<RationalVector>& basis,
                                                       const RationalVector& target);

/// True iff the two families span the same subspace.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

/// Division-free (Berkowitz) characteristic polynomial of an integral matrix.
IntPolynomial characteristic_polynomial(const RationalMatrix& m);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& q);
/// Space-separated rationals.
std::string to_string(const RationalVector& x);

}  // namespace nulltree
