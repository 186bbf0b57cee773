#include "rotabaxter/rbmod.hpp"

#include <algorithm>

namespace rb {
namespace {

void check_same_algebra(const AlgebraPtr& x, const AlgebraPtr& y, const char* what) {
    if (x.get() == y.get()) return;
    if (!x || !y || !x->same_presentation(*y)) throw ContractError(std::string(what) + ": algebra mismatch");
}

// Rows of the linear map f -> f * a - b * f on row-major flattened matrices
// of shape (rows_f x cols_f).
Matrix intertwine_rows(const Matrix& a, const Matrix& b, int rows_f, int cols_f) {
    const Field& fld = a.field();
    return kron(Matrix::identity(fld, rows_f), a.transpose()) - kron(b, Matrix::identity(fld, cols_f));
}

}  // namespace

RBModule::RBModule(AlgebraPtr algebra, Side side, std::vector<Matrix> action, Matrix op)
    : algebra_(std::move(algebra)), side_(side), action_(std::move(action)), op_(std::move(op)) {
    const AlgebraPtr& a = algebra_;
    if (static_cast<int>(action_.size()) != a->dim())
        throw ContractError("module needs one action matrix per algebra basis vector");
    dim_ = op_.rows();
    if (op_.cols() != dim_) throw ContractError("module operator must be square");
    for (const Matrix& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_) throw ContractError("action matrix shape mismatch");

    const Field& f = a->field();
    // Plain module axioms are hard invariants.
    Matrix unit_action(f, dim_, dim_);
    for (int i = 0; i < a->dim(); ++i)
        if (!a->unit()[i].is_zero()) unit_action = unit_action + action_[i].scaled(a->unit()[i]);
    if (!(unit_action == Matrix::identity(f, dim_)))
        throw InvariantError("module unit law fails");
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < a->dim(); ++j) {
            Vec eij = a->mul(a->basis_vector(i), a->basis_vector(j));
            Matrix lhs(f, dim_, dim_);
            for (int k = 0; k < a->dim(); ++k)
                if (!eij[k].is_zero()) lhs = lhs + action_[k].scaled(eij[k]);
            Matrix rhs = side_ == Side::Left ? action_[i] * action_[j] : action_[j] * action_[i];
            if (!(lhs == rhs))
                throw InvariantError(std::string("module associativity fails on basis pair (") +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // The Rota-Baxter axiom for this side: a verdict, not an invariant.
    for (int i = 0; i < a->dim(); ++i) {
        const Vec p_ei = a->apply_op(a->basis_vector(i));
        const Matrix act_pei = action_of(p_ei);
        for (int j = 0; j < dim_; ++j) {
            Vec v = vec_zero(f, dim_);
            v[j] = Scalar::one(f);
            Vec lhs, rhs;
            if (side_ == Side::Left) {
                lhs = act_pei.apply(op_.apply(v));
                rhs = vec_add(op_.apply(act_pei.apply(v)),
                              vec_add(op_.apply(action_[i].apply(op_.apply(v))),
                                      vec_scale(a->lambda(), op_.apply(action_[i].apply(v)))));
            } else {
                lhs = op_.apply(act_pei.apply(v));
                rhs = vec_add(act_pei.apply(op_.apply(v)),
                              vec_add(op_.apply(action_[i].apply(op_.apply(v))),
                                      vec_scale(a->lambda(), action_[i].apply(op_.apply(v)))));
            }
            if (!vec_eq(lhs, rhs))
                axiom_report_.fail({{i, j},
                                    lhs,
                                    rhs,
                                    side_ == Side::Left
                                        ? "P(r)p(m) = p(P(r)m) + p(rp(m)) + lambda*p(rm)"
                                        : "p(mP(r)) = p(m)P(r) + p(p(m)r) + lambda*p(m)r"});
        }
    }
}

ModulePtr RBModule::make(AlgebraPtr algebra, Side side, std::vector<Matrix> action, Matrix op) {
    return ModulePtr(new RBModule(std::move(algebra), side, std::move(action), std::move(op)));
}

ModulePtr RBModule::zero(AlgebraPtr algebra, Side side) {
    const Field& f = algebra->field();
    std::vector<Matrix> action(algebra->dim(), Matrix(f, 0, 0));
    return make(std::move(algebra), side, std::move(action), Matrix(f, 0, 0));
}

ModulePtr RBModule::self_module(const AlgebraPtr& a, Side side) {
    std::vector<Matrix> action;
    for (int i = 0; i < a->dim(); ++i)
        action.push_back(side == Side::Left ? a->basis_left_mul(i) : a->basis_right_mul(i));
    return make(a, side, std::move(action), a->op());
}

Vec RBModule::act(const Vec& r, const Vec& v) const {
    if (static_cast<int>(r.size()) != algebra_->dim()) throw ContractError("act: scalar vector dimension mismatch");
    Vec out = vec_zero(algebra_->field(), dim_);
    for (int i = 0; i < algebra_->dim(); ++i)
        if (!r[i].is_zero()) out = vec_add(out, vec_scale(r[i], action_[i].apply(v)));
    return out;
}

Matrix RBModule::action_of(const Vec& r) const {
    Matrix m(algebra_->field(), dim_, dim_);
    for (int i = 0; i < algebra_->dim(); ++i)
        if (!r[i].is_zero()) m = m + action_[i].scaled(r[i]);
    return m;
}

AxiomReport check_left_rb(const RBModule& m) {
    if (m.side() != Side::Left) throw ContractError("check_left_rb on a right module");
    return m.axiom_report();
}

AxiomReport check_right_rb(const RBModule& m) {
    if (m.side() != Side::Right) throw ContractError("check_right_rb on a left module");
    return m.axiom_report();
}

void require_verified(const RBModule& m, const std::string& what) {
    if (!m.verified())
        throw ContractError(what + ": module failed its Rota-Baxter axiom and is quarantined");
}

bool is_module_map(const RBModule& source, const RBModule& target, const Matrix& mat) {
    if (source.side() != target.side()) return false;
    if (mat.rows() != target.dim() || mat.cols() != source.dim()) return false;
    for (int i = 0; i < source.algebra()->dim(); ++i)
        if (!(mat * source.action_matrix(i) == target.action_matrix(i) * mat)) return false;
    return mat * source.op() == target.op() * mat;
}

ModuleMap ModuleMap::make(ModulePtr source, ModulePtr target, Matrix mat) {
    check_same_algebra(source->algebra(), target->algebra(), "module map");
    if (source->side() != target->side()) throw ContractError("module map: side mismatch");
    if (mat.rows() != target->dim() || mat.cols() != source->dim())
        throw ContractError("module map: matrix shape mismatch");
    for (int i = 0; i < source->algebra()->dim(); ++i)
        if (!(mat * source->action_matrix(i) == target->action_matrix(i) * mat))
            throw InvariantError("claimed module map is not linear over basis vector " + std::to_string(i));
    if (!(mat * source->op() == target->op() * mat))
        throw InvariantError("claimed module map does not intertwine the operators");
    return ModuleMap{std::move(source), std::move(target), std::move(mat)};
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    if (f.source.get() != g.target.get()) throw ContractError("compose: maps do not chain");
    return ModuleMap{g.source, f.target, f.mat * g.mat};
}

ModuleMap identity_map(const ModulePtr& m) {
    return ModuleMap{m, m, Matrix::identity(m->algebra()->field(), m->dim())};
}

Bimodule::Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::vector<Matrix> left_action,
                   std::vector<Matrix> right_action, Matrix op_left, Matrix op_right)
    : left_alg_(std::move(left_alg)),
      right_alg_(std::move(right_alg)),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)),
      op_left_(std::move(op_left)),
      op_right_(std::move(op_right)) {
    if (left_alg_->field() != right_alg_->field()) throw ContractError("bimodule: field mismatch");
    if (left_alg_->lambda() != right_alg_->lambda())
        throw ContractError("bimodule: mixed weights are rejected");
    dim_ = op_left_.rows();

    // One-sided module axioms are enforced by the module constructors.
    ModulePtr l = as_left_module();
    ModulePtr r = as_right_module();
    report_.merge(l->axiom_report());
    report_.merge(r->axiom_report());

    // (r m) s = r (m s)
    for (int i = 0; i < left_alg_->dim(); ++i)
        for (int j = 0; j < right_alg_->dim(); ++j)
            if (!(right_action_[j] * left_action_[i] == left_action_[i] * right_action_[j]))
                throw InvariantError("bimodule associativity (rm)s = r(ms) fails on (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");

    // p^S(r m) = r p^S(m)
    for (int i = 0; i < left_alg_->dim(); ++i)
        if (!(op_right_ * left_action_[i] == left_action_[i] * op_right_)) {
            Matrix lhs = op_right_ * left_action_[i];
            Matrix rhs = left_action_[i] * op_right_;
            report_.fail({{i}, lhs.flatten(), rhs.flatten(), "p^S(rm) = r p^S(m)"});
        }
    // p^R(m s) = p^R(m) s
    for (int j = 0; j < right_alg_->dim(); ++j)
        if (!(op_left_ * right_action_[j] == right_action_[j] * op_left_)) {
            Matrix lhs = op_left_ * right_action_[j];
            Matrix rhs = right_action_[j] * op_left_;
            report_.fail({{j}, lhs.flatten(), rhs.flatten(), "p^R(ms) = p^R(m) s"});
        }
    // p^S p^R = p^R p^S
    if (!(op_right_ * op_left_ == op_left_ * op_right_))
        report_.fail({{},
                      (op_right_ * op_left_).flatten(),
                      (op_left_ * op_right_).flatten(),
                      "p^S(p^R(m)) = p^R(p^S(m))"});
}

BimodulePtr Bimodule::make(AlgebraPtr left_alg, AlgebraPtr right_alg, std::vector<Matrix> left_action,
                           std::vector<Matrix> right_action, Matrix op_left, Matrix op_right) {
    return BimodulePtr(new Bimodule(std::move(left_alg), std::move(right_alg), std::move(left_action),
                                    std::move(right_action), std::move(op_left), std::move(op_right)));
}

ModulePtr Bimodule::as_left_module() const {
    return RBModule::make(left_alg_, Side::Left, left_action_, op_left_);
}

ModulePtr Bimodule::as_right_module() const {
    return RBModule::make(right_alg_, Side::Right, right_action_, op_right_);
}

AxiomReport check_bimodule(const Bimodule& b) { return b.report(); }

BimodulePtr self_bimodule(const AlgebraPtr& a) {
    std::vector<Matrix> left, right;
    for (int i = 0; i < a->dim(); ++i) {
        left.push_back(a->basis_left_mul(i));
        right.push_back(a->basis_right_mul(i));
    }
    return Bimodule::make(a, a, std::move(left), std::move(right), a->op(), a->op());
}

bool subspace_is_stable(const RBModule& m, const Subspace& s) {
    for (int b = 0; b < s.dim(); ++b) {
        Vec v = s.basis_vector(b);
        if (!s.contains(m.op().apply(v))) return false;
        for (int i = 0; i < m.algebra()->dim(); ++i)
            if (!s.contains(m.act_basis(i, v))) return false;
    }
    return true;
}

Subspace submodule_closure(const RBModule& m, const std::vector<Vec>& generators) {
    Subspace s = Subspace::span(m.algebra()->field(), m.dim(), generators);
    for (;;) {
        std::vector<Vec> grown;
        for (int b = 0; b < s.dim(); ++b) {
            Vec v = s.basis_vector(b);
            grown.push_back(v);
            grown.push_back(m.op().apply(v));
            for (int i = 0; i < m.algebra()->dim(); ++i) grown.push_back(m.act_basis(i, v));
        }
        Subspace next = Subspace::span(m.algebra()->field(), m.dim(), grown);
        if (next.dim() == s.dim()) return next;
        s = next;
    }
}

SubmoduleResult submodule(const ModulePtr& m, const Subspace& s) {
    if (s.ambient() != m->dim()) throw ContractError("submodule: ambient mismatch");
    for (int b = 0; b < s.dim(); ++b) {
        Vec v = s.basis_vector(b);
        if (!s.contains(m->op().apply(v)))
            throw ContractError("submodule: not operator-stable on basis vector " + std::to_string(b));
        for (int i = 0; i < m->algebra()->dim(); ++i)
            if (!s.contains(m->act_basis(i, v)))
                throw ContractError("submodule: not action-stable under basis vector " + std::to_string(i) +
                                    " at generator " + std::to_string(b));
    }
    const Field& f = m->algebra()->field();
    std::vector<Matrix> action;
    for (int i = 0; i < m->algebra()->dim(); ++i) {
        Matrix a(f, s.dim(), s.dim());
        for (int b = 0; b < s.dim(); ++b) a.set_column(b, s.coordinates(m->act_basis(i, s.basis_vector(b))));
        action.push_back(std::move(a));
    }
    Matrix op(f, s.dim(), s.dim());
    for (int b = 0; b < s.dim(); ++b) op.set_column(b, s.coordinates(m->op().apply(s.basis_vector(b))));
    ModulePtr sub = RBModule::make(m->algebra(), m->side(), std::move(action), std::move(op));
    Matrix incl = s.basis().transpose();
    return SubmoduleResult{sub, ModuleMap::make(sub, m, std::move(incl))};
}

QuotientResult quotient(const ModulePtr& m, const Subspace& s) {
    require_verified(*m, "quotient");
    if (s.ambient() != m->dim()) throw ContractError("quotient: ambient mismatch");
    for (int b = 0; b < s.dim(); ++b) {
        Vec v = s.basis_vector(b);
        if (!s.contains(m->op().apply(v)))
            throw ContractError("quotient: subspace not operator-stable at generator " + std::to_string(b));
        for (int i = 0; i < m->algebra()->dim(); ++i)
            if (!s.contains(m->act_basis(i, v)))
                throw ContractError("quotient: subspace not stable under algebra basis vector " +
                                    std::to_string(i) + " at generator " + std::to_string(b));
    }
    QuotientSpace qs = quotient_space(s);
    std::vector<Matrix> action;
    for (int i = 0; i < m->algebra()->dim(); ++i) action.push_back(qs.induce(m->action_matrix(i)));
    Matrix op = qs.induce(m->op());
    ModulePtr quot = RBModule::make(m->algebra(), m->side(), std::move(action), std::move(op));
    ModuleMap proj = ModuleMap::make(m, quot, qs.projection);
    return QuotientResult{quot, std::move(proj), qs.section};
}

DirectSumResult direct_sum(const AlgebraPtr& a, Side side, const std::vector<ModulePtr>& parts) {
    const Field& f = a->field();
    int total = 0;
    for (const ModulePtr& p : parts) {
        check_same_algebra(a, p->algebra(), "direct sum");
        if (p->side() != side) throw ContractError("direct sum: side mismatch");
        total += p->dim();
    }
    std::vector<Matrix> action(a->dim(), Matrix(f, total, total));
    Matrix op(f, total, total);
    int offset = 0;
    for (const ModulePtr& p : parts) {
        for (int i = 0; i < a->dim(); ++i)
            for (int r = 0; r < p->dim(); ++r)
                for (int c = 0; c < p->dim(); ++c)
                    action[i].at(offset + r, offset + c) = p->action_matrix(i).at(r, c);
        for (int r = 0; r < p->dim(); ++r)
            for (int c = 0; c < p->dim(); ++c) op.at(offset + r, offset + c) = p->op().at(r, c);
        offset += p->dim();
    }
    ModulePtr sum = RBModule::make(a, side, std::move(action), std::move(op));
    DirectSumResult result{sum, {}, {}};
    offset = 0;
    for (const ModulePtr& p : parts) {
        Matrix incl(f, total, p->dim());
        Matrix proj(f, p->dim(), total);
        for (int r = 0; r < p->dim(); ++r) {
            incl.at(offset + r, r) = Scalar::one(f);
            proj.at(r, offset + r) = Scalar::one(f);
        }
        result.injections.push_back(ModuleMap::make(p, sum, std::move(incl)));
        result.projections.push_back(ModuleMap::make(sum, p, std::move(proj)));
        offset += p->dim();
    }
    return result;
}

Subspace hom_space(const RBModule& m, const RBModule& n) {
    check_same_algebra(m.algebra(), n.algebra(), "hom space");
    if (m.side() != n.side()) throw ContractError("hom space: side mismatch");
    require_verified(m, "hom space");
    require_verified(n, "hom space");
    const Field& f = m.algebra()->field();
    const int rows_f = n.dim(), cols_f = m.dim();
    std::vector<Matrix> blocks;
    for (int i = 0; i < m.algebra()->dim(); ++i)
        blocks.push_back(intertwine_rows(m.action_matrix(i), n.action_matrix(i), rows_f, cols_f));
    blocks.push_back(intertwine_rows(m.op(), n.op(), rows_f, cols_f));
    const int cols = rows_f * cols_f;
    Matrix stacked(f, static_cast<int>(blocks.size()) * cols, cols);
    int r0 = 0;
    for (const Matrix& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) stacked.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows();
    }
    return kernel(stacked);
}

std::vector<Matrix> hom_basis(const RBModule& m, const RBModule& n) {
    Subspace hs = hom_space(m, n);
    std::vector<Matrix> basis;
    for (int i = 0; i < hs.dim(); ++i)
        basis.push_back(Matrix::unflatten(m.algebra()->field(), n.dim(), m.dim(), hs.basis_vector(i)));
    return basis;
}

namespace {

// Assembles the module structure on a Hom space from two linear recipes:
// `act_of(t, f)` the action of the third algebra's basis vector t on f, and
// `q_of(f)` the induced operator.
template <typename ActFn, typename QFn>
HomModuleResult hom_module_from(const Subspace& hs, const AlgebraPtr& third, Side side, int rows_f,
                                int cols_f, ActFn act_of, QFn q_of) {
    const Field& f = third->field();
    const int h = hs.dim();
    std::vector<Matrix> basis;
    for (int i = 0; i < h; ++i) basis.push_back(Matrix::unflatten(f, rows_f, cols_f, hs.basis_vector(i)));

    auto coords_of = [&](const Matrix& img) {
        Vec flat = img.flatten();
        if (!hs.contains(flat))
            throw InvariantError("induced structure leaves the Hom space; case hypotheses violated");
        return hs.coordinates(flat);
    };

    std::vector<Matrix> action;
    for (int t = 0; t < third->dim(); ++t) {
        Matrix a(f, h, h);
        for (int i = 0; i < h; ++i) a.set_column(i, coords_of(act_of(t, basis[i])));
        action.push_back(std::move(a));
    }
    Matrix q(f, h, h);
    for (int i = 0; i < h; ++i) q.set_column(i, coords_of(q_of(basis[i])));
    return HomModuleResult{RBModule::make(third, side, std::move(action), std::move(q)), std::move(basis)};
}

}  // namespace

HomModuleResult hom_module_case1(const ModulePtr& m, const BimodulePtr& n) {
    if (m->side() != Side::Right) throw ContractError("case 1 needs a right module");
    require_verified(*m, "hom module case 1");
    if (!n->verified()) throw ContractError("hom module case 1: bimodule hypothesis not verified");
    check_same_algebra(m->algebra(), n->right_algebra(), "hom module case 1");
    ModulePtr n_right = n->as_right_module();
    Subspace hs = hom_space(*m, *n_right);
    return hom_module_from(
        hs, n->left_algebra(), Side::Left, n->dim(), m->dim(),
        [&](int t, const Matrix& f) { return n->left_action()[t] * f; },
        [&](const Matrix& f) { return n->op_left() * f; });
}

HomModuleResult hom_module_case2(const ModulePtr& m, const BimodulePtr& n) {
    if (m->side() != Side::Left) throw ContractError("case 2 needs a left module");
    require_verified(*m, "hom module case 2");
    if (!n->verified()) throw ContractError("hom module case 2: bimodule hypothesis not verified");
    check_same_algebra(m->algebra(), n->left_algebra(), "hom module case 2");
    ModulePtr n_left = n->as_left_module();
    Subspace hs = hom_space(*m, *n_left);
    return hom_module_from(
        hs, n->right_algebra(), Side::Right, n->dim(), m->dim(),
        [&](int t, const Matrix& f) { return n->right_action()[t] * f; },
        [&](const Matrix& f) { return n->op_right() * f; });
}

HomModuleResult hom_module_case3(const BimodulePtr& m, const ModulePtr& n) {
    if (n->side() != Side::Left) throw ContractError("case 3 needs a left module target");
    require_verified(*n, "hom module case 3");
    if (!m->verified()) throw ContractError("hom module case 3: bimodule hypothesis not verified");
    check_same_algebra(n->algebra(), m->left_algebra(), "hom module case 3");
    ModulePtr m_left = m->as_left_module();
    Subspace hs = hom_space(*m_left, *n);
    return hom_module_from(
        hs, m->right_algebra(), Side::Left, n->dim(), m->dim(),
        [&](int s, const Matrix& f) { return f * m->right_action()[s]; },
        [&](const Matrix& f) { return f * m->op_right(); });
}

HomModuleResult hom_module_case4(const BimodulePtr& m, const ModulePtr& n) {
    if (n->side() != Side::Right) throw ContractError("case 4 needs a right module target");
    require_verified(*n, "hom module case 4");
    if (!m->verified()) throw ContractError("hom module case 4: bimodule hypothesis not verified");
    check_same_algebra(n->algebra(), m->right_algebra(), "hom module case 4");
    ModulePtr m_right = m->as_right_module();
    Subspace hs = hom_space(*m_right, *n);
    return hom_module_from(
        hs, m->left_algebra(), Side::Right, n->dim(), m->dim(),
        [&](int s, const Matrix& f) { return f * m->left_action()[s]; },
        [&](const Matrix& f) { return f * m->op_left(); });
}

Subspace module_constants(const RBModule& m) {
    if (m.side() != Side::Left) throw ContractError("module constants are defined for left modules");
    require_verified(m, "module constants");
    const AlgebraPtr& a = m.algebra();
    const Field& f = a->field();
    const int n = a->dim();
    Matrix stacked(f, n * m.dim(), m.dim());
    for (int i = 0; i < n; ++i) {
        Matrix row_block = m.op() * m.action_matrix(i) - m.action_of(a->apply_op(a->basis_vector(i)));
        for (int r = 0; r < m.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c) stacked.at(i * m.dim() + r, c) = row_block.at(r, c);
    }
    return kernel(stacked);
}

AxiomReport check_mc_full_consequence(const AlgebraPtr& a) {
    ModulePtr self = RBModule::self_module(a, Side::Left);
    Subspace mc = module_constants(*self);
    if (mc.dim() != a->dim())
        throw ContractError("check_mc_full_consequence: MC(R) != R (dim " + std::to_string(mc.dim()) + ")");
    AxiomReport report;
    const Vec p1 = a->apply_op(a->unit());
    for (int i = 0; i < a->dim(); ++i) {
        Vec lhs = a->apply_op(a->basis_vector(i));
        Vec rhs = a->mul(p1, a->basis_vector(i));
        if (!vec_eq(lhs, rhs)) report.fail({{i}, lhs, rhs, "P(r) = P(1)r"});
    }
    Vec factor2 = vec_add(p1, vec_scale(a->lambda(), a->unit()));
    Vec product = a->mul(p1, factor2);
    if (!vec_is_zero(product))
        report.fail({{}, product, vec_zero(a->field(), a->dim()), "P(1)(P(1) + lambda*1) = 0"});

    if (vec_is_zero(p1))
        report.notes.push_back("P(1) = 0 branch confirmed");
    else if (vec_eq(p1, vec_scale(-a->lambda(), a->unit())))
        report.notes.push_back("P(1) = -lambda branch confirmed");
    else
        report.notes.push_back(
            "disjunction not forced: P(1) and P(1)+lambda*1 are both nonzero, so they are zero divisors");
    return report;
}

}  // namespace rb
