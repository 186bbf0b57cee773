#pragma once

#include <optional>
#include <vector>

#include "rotabaxter/scalar.hpp"

namespace rb {

using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);

// Dense row-major matrix over an exact field. The field tag lets an empty
// matrix still mint correctly-typed zeros and ones.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, int rows, int cols);  // zero-filled

    static Matrix identity(const Field& f, int n);
    static Matrix zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, int cols);
    static Matrix from_columns(const Field& f, const std::vector<Vec>& cols, int rows);
    // Rank-one block e_i Q e_j bookkeeping and general outer products.
    static Matrix outer(const Vec& col, const Vec& row);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec column(int j) const;
    void set_row(int i, const Vec& v);
    void set_column(int j, const Vec& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    // Row-major flattening, used to treat linear maps as vectors.
    Vec flatten() const { return data_; }
    static Matrix unflatten(const Field& f, int rows, int cols, const Vec& data);

private:
    Field field_ = Field::rationals();
    int rows_ = 0, cols_ = 0;
    Vec data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;          // reduced row-echelon form, zero rows dropped
    std::vector<int> pivots; // pivot column per kept row, strictly increasing
    int rank = 0;
};

Rref rref(const Matrix& a);

int rank(const Matrix& a);

// Null space of a, as a subspace of k^cols.
class Subspace;
Subspace kernel(const Matrix& a);

// One solution of A x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// A subspace of k^ambient in canonical form: the basis matrix is the RREF of
// any spanning set, so equality of subspaces is equality of representations.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(const Field& f, int ambient);
    static Subspace full(const Field& f, int ambient);
    static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return field_; }
    Vec basis_vector(int i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    // Canonical representative of v modulo this subspace (pivot coordinates
    // eliminated).
    Vec reduce(const Vec& v) const;
    // Coordinates of a member vector in the canonical basis; ContractError if
    // v is not a member.
    Vec coordinates(const Vec& v) const;

private:
    Field field_ = Field::rationals();
    int ambient_ = 0;
    Matrix basis_;  // dim x ambient, RREF
};

// Quotient of k^n by a subspace: coordinates are the non-pivot positions of
// the canonical representative. projection * section = identity on the
// quotient, and v - section(projection(v)) always lies in the subspace.
struct QuotientSpace {
    Subspace subspace;
    Matrix projection;  // (n - dim W) x n
    Matrix section;     // n x (n - dim W)
    int dim = 0;

    // Induced matrix of t on the quotient; requires t(W) <= W (checked).
    Matrix induce(const Matrix& t) const;
    bool descends(const Matrix& t) const;
};

QuotientSpace quotient_space(const Subspace& w);

}  // namespace rb
