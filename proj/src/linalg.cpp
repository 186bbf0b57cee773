#include "rotabaxter/linalg.hpp"

#include <algorithm>

namespace rb {

Vec vec_zero(const Field& f, int n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ContractError("vector size mismatch");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ContractError("vector size mismatch");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vec>& cols, int rows) {
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.set_column(static_cast<int>(j), cols[j]);
    return m;
}

Matrix Matrix::outer(const Vec& col, const Vec& row) {
    if (col.empty() && row.empty()) return Matrix();
    const Field& f = col.empty() ? row.front().field() : col.front().field();
    Matrix m(f, static_cast<int>(col.size()), static_cast<int>(row.size()));
    for (size_t i = 0; i < col.size(); ++i)
        for (size_t j = 0; j < row.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = col[i] * row[j];
    return m;
}

Vec Matrix::row(int i) const {
    Vec r(data_.begin() + static_cast<size_t>(i) * cols_, data_.begin() + static_cast<size_t>(i + 1) * cols_);
    return r;
}

Vec Matrix::column(int j) const {
    Vec c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

void Matrix::set_row(int i, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_) throw ContractError("row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_column(int j, const Vec& v) {
    if (static_cast<int>(v.size()) != rows_) throw ContractError("column length mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch in +");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch in -");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ContractError("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(*this);
    for (auto& x : r.data_) x = c * x;
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ContractError("matrix/vector size mismatch");
    Vec r = vec_zero(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix Matrix::unflatten(const Field& f, int rows, int cols, const Vec& data) {
    if (static_cast<int>(data.size()) != rows * cols) throw ContractError("unflatten size mismatch");
    Matrix m(f, rows, cols);
    m.data_ = data;
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

Rref rref(const Matrix& a) {
    Matrix m(a);
    const Field& f = a.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(f, r, m.cols());
    for (int i = 0; i < r; ++i) reduced.set_row(i, m.row(i));
    return Rref{std::move(reduced), std::move(pivots), r};
}

int rank(const Matrix& a) { return rref(a).rank; }

Subspace kernel(const Matrix& a) {
    Rref r = rref(a);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(f, a.cols());
        v[c] = Scalar::one(f);
        for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, c);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, a.cols(), basis);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw ContractError("solve: rhs size mismatch");
    const Field& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref(aug);
    Vec x = vec_zero(f, a.cols());
    for (int i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
        x[r.pivots[i]] = r.reduced.at(i, a.cols());
    }
    return x;
}

Subspace Subspace::zero(const Field& f, int ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const Field& f, int ambient) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(f, ambient);
    return s;
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors)
        if (static_cast<int>(v.size()) != ambient) throw ContractError("span: vector has wrong ambient dimension");
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    s.basis_ = rref(Matrix::from_rows(f, vectors, ambient)).reduced;
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw ContractError("reduce: wrong ambient dimension");
    Vec r(v);
    // Pivot columns are recoverable from the canonical basis itself.
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        const Scalar c = r[p];
        if (c.is_zero()) continue;
        for (int j = p; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw ContractError("sum: ambient mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    for (int i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
    return span(field_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw ContractError("intersect: ambient mismatch");
    // x = A^T u = B^T v; null space of [A^T | -B^T] yields the coefficients.
    Matrix stacked(field_, ambient_, dim() + o.dim());
    for (int i = 0; i < ambient_; ++i) {
        for (int j = 0; j < dim(); ++j) stacked.at(i, j) = basis_.at(j, i);
        for (int j = 0; j < o.dim(); ++j) stacked.at(i, dim() + j) = -o.basis_.at(j, i);
    }
    Subspace null = kernel(stacked);
    std::vector<Vec> vectors;
    for (int i = 0; i < null.dim(); ++i) {
        Vec coeff = null.basis_vector(i);
        Vec x = vec_zero(field_, ambient_);
        for (int j = 0; j < dim(); ++j) x = vec_add(x, vec_scale(coeff[j], basis_.row(j)));
        vectors.push_back(std::move(x));
    }
    return span(field_, ambient_, vectors);
}

Vec Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) throw ContractError("coordinates: vector not in subspace");
    Vec coords = vec_zero(field_, dim());
    // With an RREF basis the coefficient of row i is just v at its pivot.
    for (int i = 0; i < dim(); ++i) {
        int p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        coords[i] = v[p];
    }
    return coords;
}

QuotientSpace quotient_space(const Subspace& w) {
    const Field& f = w.field();
    const int n = w.ambient();
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < w.dim(); ++i) {
        int p = 0;
        while (p < n && w.basis().at(i, p).is_zero()) ++p;
        is_pivot[p] = true;
    }
    const int q = n - w.dim();
    QuotientSpace qs;
    qs.subspace = w;
    qs.dim = q;
    qs.section = Matrix(f, n, q);
    int col = 0;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        free_cols.push_back(j);
        qs.section.at(j, col) = Scalar::one(f);
        ++col;
    }
    // projection = restrict-to-free-coordinates after canonical reduction.
    qs.projection = Matrix(f, q, n);
    for (int j = 0; j < n; ++j) {
        Vec e = vec_zero(f, n);
        e[j] = Scalar::one(f);
        Vec red = w.reduce(e);
        for (int i = 0; i < q; ++i) qs.projection.at(i, j) = red[free_cols[i]];
    }
    return qs;
}

bool QuotientSpace::descends(const Matrix& t) const {
    for (int i = 0; i < subspace.dim(); ++i)
        if (!subspace.contains(t.apply(subspace.basis_vector(i)))) return false;
    return true;
}

Matrix QuotientSpace::induce(const Matrix& t) const {
    if (!descends(t)) throw ContractError("operator does not preserve the subspace; no induced map");
    return projection * t * section;
}

}  // namespace rb
