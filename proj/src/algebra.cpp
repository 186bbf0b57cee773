#include "rotabaxter/algebra.hpp"

namespace rb {

AlgebraCore AlgebraCore::blank(const Field& f, int dim, std::vector<std::string> labels) {
    AlgebraCore core;
    core.field = f;
    core.dim = dim;
    core.labels = std::move(labels);
    core.structure_constants.assign(static_cast<size_t>(dim) * dim * dim, Scalar::zero(f));
    core.unit = vec_zero(f, dim);
    return core;
}

AlgebraCore core_field_k(const Field& f) {
    AlgebraCore core = AlgebraCore::blank(f, 1, {"1"});
    core.c(0, 0, 0) = Scalar::one(f);
    core.unit[0] = Scalar::one(f);
    return core;
}

AlgebraCore core_dual_numbers(const Field& f) {
    AlgebraCore core = AlgebraCore::blank(f, 2, {"1", "e"});
    core.c(0, 0, 0) = Scalar::one(f);
    core.c(0, 1, 1) = Scalar::one(f);
    core.c(1, 0, 1) = Scalar::one(f);
    // e^2 = 0
    core.unit[0] = Scalar::one(f);
    return core;
}

AlgebraCore core_truncated_poly(const Field& f, int degree) {
    if (degree < 0) throw ContractError("negative truncation degree");
    const int n = degree + 1;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    AlgebraCore core = AlgebraCore::blank(f, n, std::move(labels));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) core.c(i, j, i + j) = Scalar::one(f);
    core.unit[0] = Scalar::one(f);
    return core;
}

AlgebraCore core_two_dim_example(const Field& f, const Scalar& lambda) {
    AlgebraCore core = AlgebraCore::blank(f, 2, {"u0", "u1"});
    core.c(0, 0, 0) = Scalar::one(f);
    core.c(0, 1, 1) = Scalar::one(f);
    core.c(1, 0, 1) = Scalar::one(f);
    core.c(1, 1, 1) = -lambda;
    core.unit[0] = Scalar::one(f);
    return core;
}

Algebra::Algebra(AlgebraCore core, Scalar lambda, Matrix op)
    : core_(std::move(core)), lambda_(std::move(lambda)), op_(std::move(op)) {
    const Field& f = core_.field;
    const int n = core_.dim;
    if (static_cast<int>(core_.labels.size()) != n) throw ContractError("label count != dim");
    if (static_cast<int>(core_.structure_constants.size()) != n * n * n)
        throw ContractError("structure constant tensor has wrong size");
    if (static_cast<int>(core_.unit.size()) != n) throw ContractError("unit vector has wrong size");
    if (op_.rows() != n || op_.cols() != n) throw ContractError("operator matrix has wrong shape");
    if (lambda_.field() != f) throw ContractError("weight is over the wrong field");

    lmul_.reserve(n);
    rmul_.reserve(n);
    for (int i = 0; i < n; ++i) {
        Matrix l(f, n, n), r(f, n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                l.at(k, j) = core_.c(i, j, k);  // column j of lmul_[i] = e_i e_j
                r.at(k, j) = core_.c(j, i, k);  // column j of rmul_[i] = e_j e_i
            }
        lmul_.push_back(std::move(l));
        rmul_.push_back(std::move(r));
    }

    // Hard invariants: associativity and the unit laws.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec eij = mul(basis_vector(i), basis_vector(j));
            for (int k = 0; k < n; ++k) {
                Vec lhs = mul(eij, basis_vector(k));
                Vec rhs = mul(basis_vector(i), mul(basis_vector(j), basis_vector(k)));
                if (!vec_eq(lhs, rhs))
                    throw InvariantError("associativity fails on basis triple (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    for (int i = 0; i < n; ++i) {
        if (!vec_eq(mul(core_.unit, basis_vector(i)), basis_vector(i)) ||
            !vec_eq(mul(basis_vector(i), core_.unit), basis_vector(i)))
            throw InvariantError("unit law fails on basis vector " + std::to_string(i));
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec pi = op_.column(i), pj = op_.column(j);
            Vec lhs = mul(pi, pj);
            Vec rhs = vec_add(apply_op(mul(basis_vector(i), pj)),
                              vec_add(apply_op(mul(pi, basis_vector(j))),
                                      vec_scale(lambda_, apply_op(mul(basis_vector(i), basis_vector(j))))));
            if (!vec_eq(lhs, rhs))
                rb_report_.fail({{i, j}, lhs, rhs, "P(r)P(s) = P(rP(s)) + P(P(r)s) + lambda*P(rs)"});
        }
}

std::shared_ptr<const Algebra> Algebra::make(AlgebraCore core, Scalar lambda, Matrix op) {
    return std::shared_ptr<const Algebra>(new Algebra(std::move(core), std::move(lambda), std::move(op)));
}

Vec Algebra::basis_vector(int i) const {
    Vec v = vec_zero(core_.field, core_.dim);
    v[i] = Scalar::one(core_.field);
    return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    const int n = core_.dim;
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw ContractError("algebra multiply: dimension mismatch");
    Vec out = vec_zero(core_.field, n);
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar coeff = a[i] * b[j];
            for (int k = 0; k < n; ++k) {
                const Scalar& c = core_.c(i, j, k);
                if (!c.is_zero()) out[k] += coeff * c;
            }
        }
    }
    return out;
}

Matrix Algebra::left_mul_matrix(const Vec& a) const {
    Matrix m(core_.field, core_.dim, core_.dim);
    for (int i = 0; i < core_.dim; ++i)
        if (!a[i].is_zero()) m = m + lmul_[i].scaled(a[i]);
    return m;
}

Matrix Algebra::right_mul_matrix(const Vec& a) const {
    Matrix m(core_.field, core_.dim, core_.dim);
    for (int i = 0; i < core_.dim; ++i)
        if (!a[i].is_zero()) m = m + rmul_[i].scaled(a[i]);
    return m;
}

bool Algebra::same_presentation(const Algebra& o) const {
    if (this == &o) return true;
    if (core_.dim != o.core_.dim || core_.field != o.core_.field) return false;
    if (lambda_ != o.lambda_ || !(op_ == o.op_) || !vec_eq(core_.unit, o.core_.unit)) return false;
    for (size_t i = 0; i < core_.structure_constants.size(); ++i)
        if (core_.structure_constants[i] != o.core_.structure_constants[i]) return false;
    return true;
}

AxiomReport check_rota_baxter(const Algebra& a) { return a.rb_report_; }

AxiomReport check_right_self_module(const Algebra& a) {
    if (!a.is_rota_baxter())
        throw ContractError("right-self-module check requires a verified Rota-Baxter operator");
    AxiomReport report;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Vec r = a.basis_vector(i), s = a.basis_vector(j);
            Vec pr = a.apply_op(r);
            Vec lhs = vec_add(a.apply_op(a.mul(pr, s)), a.apply_op(a.mul(pr, s)));
            lhs = vec_add(lhs, vec_scale(a.lambda(), a.apply_op(a.mul(r, s))));
            lhs = vec_add(lhs, vec_scale(a.lambda(), a.mul(pr, s)));
            if (!vec_is_zero(lhs))
                report.fail({{i, j}, lhs, vec_zero(a.field(), a.dim()),
                             "2P(P(r)s) + lambda*P(rs) + lambda*P(r)s = 0"});
        }
    return report;
}

AxiomReport check_bimodule_self(const Algebra& a) {
    if (!a.is_rota_baxter())
        throw ContractError("bimodule-self check requires a verified Rota-Baxter operator");
    AxiomReport report;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Vec r = a.basis_vector(i), s = a.basis_vector(j);
            Vec prs = a.apply_op(a.mul(r, s));
            Vec r_ps = a.mul(r, a.apply_op(s));
            Vec pr_s = a.mul(a.apply_op(r), s);
            if (!vec_eq(prs, r_ps)) report.fail({{i, j}, prs, r_ps, "P(rs) = rP(s)"});
            if (!vec_eq(prs, pr_s)) report.fail({{i, j}, prs, pr_s, "P(rs) = P(r)s"});
        }
    Vec p1 = a.apply_op(a.unit());
    Vec minus_lambda_one = vec_scale(-a.lambda(), a.unit());
    if (!vec_is_zero(p1) && !vec_eq(p1, minus_lambda_one))
        report.fail({{}, p1, minus_lambda_one, "P(1) = 0 or P(1) = -lambda*1"});
    return report;
}

AlgebraPtr make_example_E(const Field& f, const Scalar& lambda) {
    Matrix op(f, 2, 2);
    op.at(1, 0) = Scalar::one(f);  // P(u0) = u1
    op.at(1, 1) = -lambda;         // P(u1) = -lambda u1
    return Algebra::make(core_two_dim_example(f, lambda), lambda, std::move(op));
}

AlgebraPtr make_scalar_operator(AlgebraCore core, const Scalar& lambda) {
    Matrix op = Matrix::identity(core.field, core.dim).scaled(-lambda);
    return Algebra::make(std::move(core), lambda, std::move(op));
}

AlgebraPtr make_poly_extension(const AlgebraPtr& a, int degree) {
    if (!a->is_rota_baxter()) throw ContractError("polynomial extension requires a Rota-Baxter base");
    if (degree < 0) throw ContractError("negative truncation degree");
    const Field& f = a->field();
    const int n = a->dim(), blocks = degree + 1;
    std::vector<std::string> labels;
    for (int d = 0; d < blocks; ++d)
        for (int i = 0; i < n; ++i) {
            std::string suffix = d == 0 ? "" : (d == 1 ? "*x" : "*x^" + std::to_string(d));
            labels.push_back(a->labels()[i] + suffix);
        }
    AlgebraCore core = AlgebraCore::blank(f, n * blocks, std::move(labels));
    auto idx = [n](int d, int i) { return d * n + i; };
    for (int d1 = 0; d1 < blocks; ++d1)
        for (int d2 = 0; d2 < blocks; ++d2) {
            if (d1 + d2 >= blocks) continue;  // truncated away
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        core.c(idx(d1, i), idx(d2, j), idx(d1 + d2, k)) = a->core().c(i, j, k);
        }
    for (int i = 0; i < n; ++i) core.unit[idx(0, i)] = a->unit()[i];
    Matrix op(f, n * blocks, n * blocks);
    for (int d = 0; d < blocks; ++d)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) op.at(idx(d, i), idx(d, j)) = a->op().at(i, j);
    return Algebra::make(std::move(core), a->lambda(), std::move(op));
}

AlgebraPtr make_truncated_integration(const Field& f, int degree) {
    AlgebraCore core = core_truncated_poly(f, degree);
    const int n = degree + 1;
    Matrix op(f, n, n);
    for (int j = 0; j + 1 < n; ++j)
        op.at(j + 1, j) = Scalar::from_int(f, j + 1).inverse();
    return Algebra::make(std::move(core), Scalar::zero(f), std::move(op));
}

}  // namespace rb
