#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rotabaxter/algebra.hpp"

namespace rb {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

class RBModule;
using ModulePtr = std::shared_ptr<const RBModule>;

// A finite-dimensional one-sided module (M, p) over (R, P). action[i] is the
// matrix of v -> e_i v (left) or v -> v e_i (right). The plain module axioms
// are construction invariants; the Rota-Baxter axiom for the module's side is
// evaluated at construction and cached as the `verified` bit, which
// downstream operations require.
class RBModule {
public:
    static ModulePtr make(AlgebraPtr algebra, Side side, std::vector<Matrix> action, Matrix op);
    static ModulePtr zero(AlgebraPtr algebra, Side side);
    static ModulePtr self_module(const AlgebraPtr& algebra, Side side);

    const AlgebraPtr& algebra() const { return algebra_; }
    Side side() const { return side_; }
    int dim() const { return dim_; }
    const Matrix& op() const { return op_; }
    const std::vector<Matrix>& action_matrices() const { return action_; }
    const Matrix& action_matrix(int i) const { return action_[i]; }

    Vec act_basis(int i, const Vec& v) const { return action_[i].apply(v); }
    Vec act(const Vec& r, const Vec& v) const;
    // Matrix of the action of an arbitrary algebra element.
    Matrix action_of(const Vec& r) const;

    bool verified() const { return axiom_report_.verdict; }
    const AxiomReport& axiom_report() const { return axiom_report_; }

private:
    RBModule(AlgebraPtr algebra, Side side, std::vector<Matrix> action, Matrix op);

    AlgebraPtr algebra_;
    Side side_;
    int dim_;
    std::vector<Matrix> action_;
    Matrix op_;
    AxiomReport axiom_report_;
};

// P(r)p(m) = p(P(r)m) + p(rp(m)) + lambda p(rm) on basis pairs.
AxiomReport check_left_rb(const RBModule& m);
// p(mP(r)) = p(m)P(r) + p(p(m)r) + lambda p(m)r on basis pairs.
AxiomReport check_right_rb(const RBModule& m);

void require_verified(const RBModule& m, const std::string& what);

// A homomorphism of Rota-Baxter modules; linearity over R and compatibility
// with the operators are checked at construction.
struct ModuleMap {
    ModulePtr source, target;
    Matrix mat;  // dim(target) x dim(source)

    static ModuleMap make(ModulePtr source, ModulePtr target, Matrix mat);
    Vec apply(const Vec& v) const { return mat.apply(v); }
};

bool is_module_map(const RBModule& source, const RBModule& target, const Matrix& mat);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f after g
ModuleMap identity_map(const ModulePtr& m);

// M with a left (R,P)-structure and a right (S,alpha)-structure: op_left
// belongs to the left algebra, op_right to the right one. The two operators
// must commute and each must be linear over the other side's algebra.
class Bimodule {
public:
    static std::shared_ptr<const Bimodule> make(AlgebraPtr left_alg, AlgebraPtr right_alg,
                                                std::vector<Matrix> left_action,
                                                std::vector<Matrix> right_action, Matrix op_left,
                                                Matrix op_right);

    const AlgebraPtr& left_algebra() const { return left_alg_; }
    const AlgebraPtr& right_algebra() const { return right_alg_; }
    int dim() const { return dim_; }
    const std::vector<Matrix>& left_action() const { return left_action_; }
    const std::vector<Matrix>& right_action() const { return right_action_; }
    const Matrix& op_left() const { return op_left_; }
    const Matrix& op_right() const { return op_right_; }

    ModulePtr as_left_module() const;   // (M, op_left) over the left algebra
    ModulePtr as_right_module() const;  // (M, op_right) over the right algebra

    bool verified() const { return report_.verdict; }
    const AxiomReport& report() const { return report_; }

private:
    Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::vector<Matrix> left_action,
             std::vector<Matrix> right_action, Matrix op_left, Matrix op_right);

    AlgebraPtr left_alg_, right_alg_;
    int dim_;
    std::vector<Matrix> left_action_, right_action_;
    Matrix op_left_, op_right_;
    AxiomReport report_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

// Both one-sided axioms plus the three compatibilities.
AxiomReport check_bimodule(const Bimodule& b);

// The self-bimodule candidate (R acting on both sides, both operators P).
BimodulePtr self_bimodule(const AlgebraPtr& a);

bool subspace_is_stable(const RBModule& m, const Subspace& s);
// Smallest action- and operator-stable subspace containing the generators.
Subspace submodule_closure(const RBModule& m, const std::vector<Vec>& generators);

struct SubmoduleResult {
    ModulePtr module;
    ModuleMap inclusion;
};
// Restriction of M to a stable subspace, in coordinates of its canonical
// basis. Refused (with the violating generator) when S is not stable.
SubmoduleResult submodule(const ModulePtr& m, const Subspace& s);

struct QuotientResult {
    ModulePtr module;
    ModuleMap projection;
    Matrix section;  // right inverse of the projection matrix
};
QuotientResult quotient(const ModulePtr& m, const Subspace& s);

struct DirectSumResult {
    ModulePtr module;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};
DirectSumResult direct_sum(const AlgebraPtr& a, Side side, const std::vector<ModulePtr>& parts);

// Solution space of { f R-linear, f p_M = p_N f } inside dim(N) x dim(M)
// matrices, flattened row-major.
Subspace hom_space(const RBModule& m, const RBModule& n);
std::vector<Matrix> hom_basis(const RBModule& m, const RBModule& n);

// The four induced structures on Hom spaces. Each returns the Hom space as a
// verified module over the third algebra; constructing one re-proves the
// corresponding closure law on the chosen fixtures.
//
//   case 1: M right (R,P), N a (T,g)-(R,P)-bimodule -> left (T,g)-module,
//           (t f)(m) = t f(m), q(f) = p_N^T o f
//   case 2: M left (R,P), N an (R,P)-(T,g)-bimodule -> right (T,g)-module,
//           (f t)(m) = f(m) t, q(f) = p_N^T o f
//   case 3: M an (R,P)-(S,a)-bimodule, N left (R,P) -> left (S,a)-module,
//           (s f)(m) = f(m s), q(f) = f o p_M^S
//   case 4: M an (S,a)-(R,P)-bimodule, N right (R,P) -> right (S,a)-module,
//           (f s)(m) = f(s m), q(f) = f o p_M^S
struct HomModuleResult {
    ModulePtr module;
    std::vector<Matrix> basis;  // hom-space basis the coordinates refer to
};
HomModuleResult hom_module_case1(const ModulePtr& m, const BimodulePtr& n);
HomModuleResult hom_module_case2(const ModulePtr& m, const BimodulePtr& n);
HomModuleResult hom_module_case3(const BimodulePtr& m, const ModulePtr& n);
HomModuleResult hom_module_case4(const BimodulePtr& m, const ModulePtr& n);

// MC(M) = { m : p(r m) = P(r) m for all r }.
Subspace module_constants(const RBModule& m);

// Requires MC(R) = R on the self-module; verifies P(r) = P(1)r and the
// factored identity P(1)(P(1) + lambda 1) = 0, and reports which branch of
// "P(1) = 0 or P(1) = -lambda" holds, or that the disjunction is not forced
// when neither factor vanishes.
AxiomReport check_mc_full_consequence(const AlgebraPtr& a);

}  // namespace rb
