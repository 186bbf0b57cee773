#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rotabaxter/report.hpp"

namespace rb {

// Multiplication table of a finite-dimensional unital associative algebra,
// before any operator is attached. c[i][j][k] is the coefficient of e_k in
// e_i * e_j, stored flat as c[(i*dim + j)*dim + k].
struct AlgebraCore {
    Field field;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Scalar> structure_constants;
    Vec unit;

    const Scalar& c(int i, int j, int k) const {
        return structure_constants[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    Scalar& c(int i, int j, int k) {
        return structure_constants[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    static AlgebraCore blank(const Field& f, int dim, std::vector<std::string> labels);
};

AlgebraCore core_field_k(const Field& f);
// k[e]/(e^2) with basis {1, e}.
AlgebraCore core_dual_numbers(const Field& f);
// k[x]/(x^{d+1}) with basis {1, x, ..., x^d}.
AlgebraCore core_truncated_poly(const Field& f, int degree);
// Basis {u0, u1} with u0 the identity and u1^2 = -lambda * u1.
AlgebraCore core_two_dim_example(const Field& f, const Scalar& lambda);

// A finite-dimensional algebra R carrying a weight and a linear operator P
// (columns of `op` are the images of the basis vectors). Associativity and
// the unit laws are hard construction errors; whether P satisfies the
// Rota-Baxter identity is a checked verdict, not an invariant, so corrupted
// operators can be loaded and reported on.
class Algebra {
public:
    static std::shared_ptr<const Algebra> make(AlgebraCore core, Scalar lambda, Matrix op);

    const Field& field() const { return core_.field; }
    int dim() const { return core_.dim; }
    const std::vector<std::string>& labels() const { return core_.labels; }
    const AlgebraCore& core() const { return core_; }
    const Vec& unit() const { return core_.unit; }
    const Scalar& lambda() const { return lambda_; }
    const Matrix& op() const { return op_; }

    Vec mul(const Vec& a, const Vec& b) const;
    Vec apply_op(const Vec& v) const { return op_.apply(v); }
    Vec basis_vector(int i) const;

    // Matrix of x -> a*x resp. x -> x*a in the chosen basis.
    Matrix left_mul_matrix(const Vec& a) const;
    Matrix right_mul_matrix(const Vec& a) const;
    const Matrix& basis_left_mul(int i) const { return lmul_[i]; }
    const Matrix& basis_right_mul(int i) const { return rmul_[i]; }

    bool is_rota_baxter() const { return rb_report_.verdict; }
    bool same_presentation(const Algebra& o) const;

    friend AxiomReport check_rota_baxter(const Algebra& a);

private:
    Algebra(AlgebraCore core, Scalar lambda, Matrix op);

    AlgebraCore core_;
    Scalar lambda_;
    Matrix op_;
    std::vector<Matrix> lmul_, rmul_;
    AxiomReport rb_report_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// P(r)P(s) = P(rP(s)) + P(P(r)s) + lambda P(rs) on all basis pairs.
AxiomReport check_rota_baxter(const Algebra& a);

// 2P(P(r)s) + lambda P(rs) + lambda P(r)s = 0 on all basis pairs; this is
// equivalent to (R,P) being a right module over itself.
AxiomReport check_right_self_module(const Algebra& a);

// P(rs) = rP(s) = P(r)s on basis pairs and P(1) in {0, -lambda*1}; the
// sufficient criterion for (R,P) to be a bimodule over itself.
AxiomReport check_bimodule_self(const Algebra& a);

// The 2-dimensional example: u0 identity, u1^2 = -lambda u1, P(u0) = u1,
// P(u1) = -lambda u1.
AlgebraPtr make_example_E(const Field& f, const Scalar& lambda);

// Attach the scalar operator r -> -lambda r to a bare multiplication table.
AlgebraPtr make_scalar_operator(AlgebraCore core, const Scalar& lambda);

// R[x]/(x^{d+1}) with the coefficientwise operator; the truncation ideal is
// stable because the operator preserves x-degree.
AlgebraPtr make_poly_extension(const AlgebraPtr& a, int degree);

// k[x]/(x^{d+1}) of weight 0 with P(x^n) = x^{n+1}/(n+1) (and P(x^d) = 0).
// Rota-Baxter of weight 0, but fails the right-self-module identity.
AlgebraPtr make_truncated_integration(const Field& f, int degree);

}  // namespace rb
