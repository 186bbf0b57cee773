#include "rotabaxter/tensor.hpp"

namespace rb {
namespace {

void check_same_algebra(const AlgebraPtr& x, const AlgebraPtr& y, const char* what) {
    if (x.get() == y.get()) return;
    if (!x || !y || !x->same_presentation(*y)) throw ContractError(std::string(what) + ": algebra mismatch");
}

// Row blocks of the linear system "x is a module homomorphism source ->
// target", on row-major flattened matrices.
std::vector<Matrix> hom_constraint_blocks(const RBModule& source, const RBModule& target) {
    const Field& f = source.algebra()->field();
    const int rows_f = target.dim(), cols_f = source.dim();
    auto block = [&](const Matrix& a, const Matrix& b) {
        return kron(Matrix::identity(f, rows_f), a.transpose()) - kron(b, Matrix::identity(f, cols_f));
    };
    std::vector<Matrix> blocks;
    for (int i = 0; i < source.algebra()->dim(); ++i)
        blocks.push_back(block(source.action_matrix(i), target.action_matrix(i)));
    blocks.push_back(block(source.op(), target.op()));
    return blocks;
}

Matrix stack(const Field& f, const std::vector<Matrix>& blocks, int cols) {
    int total = 0;
    for (const Matrix& b : blocks) total += b.rows();
    Matrix out(f, total, cols);
    int r0 = 0;
    for (const Matrix& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) out.at(r0 + r, c) = b.at(r, c);
        r0 += b.rows();
    }
    return out;
}

}  // namespace

Vec TensorProduct::ambient_pure(const Vec& m, const Vec& n) const {
    const Field& f = left->algebra()->field();
    Vec out = vec_zero(f, ambient_dim());
    for (int a = 0; a < left->dim(); ++a) {
        if (m[a].is_zero()) continue;
        for (int b = 0; b < right->dim(); ++b)
            if (!n[b].is_zero()) out[ambient_index(a, b)] += m[a] * n[b];
    }
    return out;
}

Vec TensorProduct::pure_tensor(const Vec& m, const Vec& n) const {
    return quotient.projection.apply(ambient_pure(m, n));
}

TensorProduct tensor_product(const ModulePtr& m_right, const ModulePtr& n_left) {
    if (m_right->side() != Side::Right) throw ContractError("tensor product: first factor must be a right module");
    if (n_left->side() != Side::Left) throw ContractError("tensor product: second factor must be a left module");
    check_same_algebra(m_right->algebra(), n_left->algebra(), "tensor product");
    require_verified(*m_right, "tensor product");
    require_verified(*n_left, "tensor product");

    const AlgebraPtr& alg = m_right->algebra();
    const Field& f = alg->field();
    const int dm = m_right->dim(), dn = n_left->dim();
    TensorProduct t;
    t.left = m_right;
    t.right = n_left;

    std::vector<Vec> rels;
    Vec va = vec_zero(f, dm), wb = vec_zero(f, dn);
    for (int a = 0; a < dm; ++a) {
        va[a] = Scalar::one(f);
        for (int b = 0; b < dn; ++b) {
            wb[b] = Scalar::one(f);
            for (int i = 0; i < alg->dim(); ++i) {
                // (v_a e_i) (x) w_b - v_a (x) (e_i w_b)
                Vec rel = vec_sub(t.ambient_pure(m_right->act_basis(i, va), wb),
                                  t.ambient_pure(va, n_left->act_basis(i, wb)));
                rels.push_back(std::move(rel));
            }
            // p(v_a) (x) w_b - v_a (x) p(w_b)
            rels.push_back(vec_sub(t.ambient_pure(m_right->op().apply(va), wb),
                                   t.ambient_pure(va, n_left->op().apply(wb))));
            wb[b] = Scalar::zero(f);
        }
        va[a] = Scalar::zero(f);
    }
    t.relations = Subspace::span(f, dm * dn, rels);
    t.quotient = quotient_space(t.relations);
    t.dim = t.quotient.dim;
    return t;
}

AxiomReport check_tensor_bilinearity(const TensorProduct& t) {
    AxiomReport report;
    const AlgebraPtr& alg = t.left->algebra();
    const Field& f = alg->field();
    const int dm = t.left->dim(), dn = t.right->dim();
    Vec va = vec_zero(f, dm), wb = vec_zero(f, dn);
    for (int a = 0; a < dm; ++a) {
        va[a] = Scalar::one(f);
        for (int b = 0; b < dn; ++b) {
            wb[b] = Scalar::one(f);
            for (int i = 0; i < alg->dim(); ++i) {
                Vec lhs = t.pure_tensor(t.left->act_basis(i, va), wb);
                Vec rhs = t.pure_tensor(va, t.right->act_basis(i, wb));
                if (!vec_eq(lhs, rhs)) report.fail({{a, b, i}, lhs, rhs, "iota(mr, n) = iota(m, rn)"});
            }
            Vec lhs = t.pure_tensor(t.left->op().apply(va), wb);
            Vec rhs = t.pure_tensor(va, t.right->op().apply(wb));
            if (!vec_eq(lhs, rhs)) report.fail({{a, b}, lhs, rhs, "iota(p(m), n) = iota(m, p(n))"});
            wb[b] = Scalar::zero(f);
        }
        va[a] = Scalar::zero(f);
    }
    // Biadditivity holds by construction (iota is linear in each slot); the
    // balanced conditions above are the contentful ones.
    return report;
}

Matrix induced_tensor_map(const TensorProduct& src, const TensorProduct& dst, const ModuleMap& g) {
    if (src.left.get() != dst.left.get()) throw ContractError("induced map: tensors must share M");
    if (g.source.get() != src.right.get() || g.target.get() != dst.right.get())
        throw ContractError("induced map: g must map src.right to dst.right");
    Matrix amb = kron(Matrix::identity(g.mat.field(), src.left->dim()), g.mat);
    for (int i = 0; i < src.relations.dim(); ++i)
        if (!dst.relations.contains(amb.apply(src.relations.basis_vector(i))))
            throw InvariantError("id (x) g does not preserve the relation space");
    return dst.quotient.projection * amb * src.quotient.section;
}

Matrix induced_tensor_map_left(const TensorProduct& src, const TensorProduct& dst, const ModuleMap& g) {
    if (src.right.get() != dst.right.get()) throw ContractError("induced map: tensors must share N");
    if (g.source.get() != src.left.get() || g.target.get() != dst.left.get())
        throw ContractError("induced map: g must map src.left to dst.left");
    Matrix amb = kron(g.mat, Matrix::identity(g.mat.field(), src.right->dim()));
    for (int i = 0; i < src.relations.dim(); ++i)
        if (!dst.relations.contains(amb.apply(src.relations.basis_vector(i))))
            throw InvariantError("g (x) id does not preserve the relation space");
    return dst.quotient.projection * amb * src.quotient.section;
}

ScalarExtensionResult scalar_extension(const BimodulePtr& b, const ModulePtr& n_left) {
    if (!b->verified()) throw ContractError("scalar extension: bimodule not verified");
    ModulePtr b_right = b->as_right_module();
    require_verified(*b_right, "scalar extension");
    TensorProduct t = tensor_product(b_right, n_left);
    const AlgebraPtr& s = b->left_algebra();
    const Field& f = s->field();
    Matrix id_n = Matrix::identity(f, n_left->dim());
    std::vector<Matrix> action;
    for (int i = 0; i < s->dim(); ++i) action.push_back(t.quotient.induce(kron(b->left_action()[i], id_n)));
    Matrix op = t.quotient.induce(kron(b->op_left(), id_n));
    ModulePtr module = RBModule::make(s, Side::Left, std::move(action), std::move(op));
    return ScalarExtensionResult{std::move(t), std::move(module)};
}

ScalarExtensionResult scalar_extension_right(const ModulePtr& m_right, const BimodulePtr& b) {
    if (!b->verified()) throw ContractError("scalar extension: bimodule not verified");
    ModulePtr b_left = b->as_left_module();
    require_verified(*b_left, "scalar extension");
    TensorProduct t = tensor_product(m_right, b_left);
    const AlgebraPtr& s = b->right_algebra();
    const Field& f = s->field();
    Matrix id_m = Matrix::identity(f, m_right->dim());
    std::vector<Matrix> action;
    for (int i = 0; i < s->dim(); ++i) action.push_back(t.quotient.induce(kron(id_m, b->right_action()[i])));
    Matrix op = t.quotient.induce(kron(id_m, b->op_right()));
    ModulePtr module = RBModule::make(s, Side::Right, std::move(action), std::move(op));
    return ScalarExtensionResult{std::move(t), std::move(module)};
}

AxiomReport adjunction_check(const ModulePtr& m_right, const BimodulePtr& n, const ModulePtr& l_right) {
    AxiomReport report;
    check_same_algebra(m_right->algebra(), n->left_algebra(), "adjunction");
    check_same_algebra(l_right->algebra(), n->right_algebra(), "adjunction");
    require_verified(*m_right, "adjunction");
    require_verified(*l_right, "adjunction");
    if (!n->verified()) throw ContractError("adjunction: bimodule not verified");

    // Left side: M (x) N as a right (S,a)-module.
    ScalarExtensionResult mt = scalar_extension_right(m_right, n);
    Subspace hom_left = hom_space(*mt.module, *l_right);

    // Right side: H = Hom_{(S,a)}(N, L) as a right (R,P)-module, then
    // Hom_{(R,P)}(M, H).
    HomModuleResult h = hom_module_case4(n, l_right);
    Subspace hom_right = hom_space(*m_right, *h.module);

    report.notes.push_back("dim Hom(M(x)N, L) = " + std::to_string(hom_left.dim()));
    report.notes.push_back("dim Hom(M, Hom(N, L)) = " + std::to_string(hom_right.dim()));
    if (hom_left.dim() != hom_right.dim()) {
        report.fail({{}, {}, {}, "adjunction: Hom dimensions differ"});
        return report;
    }

    // tau(f)(m) = (n -> f(iota(m, n))) in coordinates.
    const Field& fld = m_right->algebra()->field();
    Subspace hom_nl = hom_space(*n->as_right_module(), *l_right);
    Matrix tau(fld, hom_right.dim(), hom_left.dim());
    for (int a = 0; a < hom_left.dim(); ++a) {
        Matrix f_mat = Matrix::unflatten(fld, l_right->dim(), mt.tensor.dim, hom_left.basis_vector(a));
        Matrix tf(fld, h.module->dim(), m_right->dim());
        for (int col = 0; col < m_right->dim(); ++col) {
            Vec vm = vec_zero(fld, m_right->dim());
            vm[col] = Scalar::one(fld);
            // the map n -> f(m (x) n), as a matrix dim L x dim N
            Matrix g(fld, l_right->dim(), n->dim());
            for (int bn = 0; bn < n->dim(); ++bn) {
                Vec vn = vec_zero(fld, n->dim());
                vn[bn] = Scalar::one(fld);
                g.set_column(bn, f_mat.apply(mt.tensor.pure_tensor(vm, vn)));
            }
            Vec flat = g.flatten();
            if (!hom_nl.contains(flat)) {
                report.fail({{a, col}, flat, {}, "tau(f)(m) lies in Hom_{(S,a)}(N, L)"});
                return report;
            }
            tf.set_column(col, hom_nl.coordinates(flat));
        }
        Vec tf_flat = tf.flatten();
        if (!hom_right.contains(tf_flat)) {
            report.fail({{a}, tf_flat, {}, "tau(f) is a module homomorphism M -> Hom(N, L)"});
            return report;
        }
        tau.set_column(a, hom_right.coordinates(tf_flat));
    }
    if (rank(tau) != hom_left.dim())
        report.fail({{}, {}, {}, "adjunction: tau is not invertible"});
    else
        report.notes.push_back("tau is a bijection");
    return report;
}

ExactnessReport flatness_evidence(const ModulePtr& m, const std::vector<ModuleMap>& monos) {
    ExactnessReport report;
    report.notes.push_back("evidence relative to the supplied monomorphism catalog; not a proof of flatness");
    int idx = 0;
    for (const ModuleMap& mono : monos) {
        if (kernel(mono.mat).dim() != 0)
            throw ContractError("flatness evidence: catalog map " + std::to_string(idx) +
                                " is not injective");
        TensorProduct src, dst;
        Matrix induced;
        if (m->side() == Side::Right) {
            src = tensor_product(m, mono.source);
            dst = tensor_product(m, mono.target);
            induced = induced_tensor_map(src, dst, mono);
        } else {
            src = tensor_product(mono.source, m);
            dst = tensor_product(mono.target, m);
            induced = induced_tensor_map_left(src, dst, mono);
        }
        ExactnessEntry entry;
        entry.label = "mono " + std::to_string(idx);
        entry.source_dim = src.dim;
        entry.target_dim = dst.dim;
        entry.rank = rank(induced);
        entry.injective = entry.rank == src.dim;
        entry.induced = induced;
        if (!entry.injective) report.verdict = false;
        report.entries.push_back(std::move(entry));
        ++idx;
    }
    return report;
}

std::optional<ModuleMap> projective_lift(const ModulePtr& v, const ModuleMap& f, const ModuleMap& g) {
    require_verified(*v, "projective lift");
    if (g.source.get() != v.get()) throw ContractError("projective lift: g must start at V");
    if (g.target.get() != f.target.get()) throw ContractError("projective lift: f and g must share a target");
    if (rank(f.mat) != f.target->dim()) throw ContractError("projective lift: f is not surjective");

    const ModulePtr& n = f.source;
    const Field& fld = v->algebra()->field();
    const int rows_f = n->dim(), cols_f = v->dim();
    const int unknowns = rows_f * cols_f;

    std::vector<Matrix> blocks = hom_constraint_blocks(*v, *n);
    // f o g-bar = g: vec(f * X) = (f (x) I) vec(X)
    Matrix affine = kron(f.mat, Matrix::identity(fld, cols_f));
    blocks.push_back(affine);
    Matrix big = stack(fld, blocks, unknowns);
    Vec rhs = vec_zero(fld, big.rows());
    const Vec g_flat = g.mat.flatten();
    const int affine_offset = big.rows() - affine.rows();
    for (size_t i = 0; i < g_flat.size(); ++i) rhs[affine_offset + static_cast<int>(i)] = g_flat[i];

    std::optional<Vec> sol = solve(big, rhs);
    if (!sol) return std::nullopt;
    return ModuleMap::make(v, n, Matrix::unflatten(fld, rows_f, cols_f, *sol));
}

SplittingResult projective_summand_split(const ModulePtr& v) {
    require_verified(*v, "summand split");
    if (v->side() != Side::Left) throw ContractError("summand split targets left modules");
    std::vector<std::string> gens;
    for (int i = 0; i < v->dim(); ++i) gens.push_back("b" + std::to_string(i));
    SplittingResult result{false, free_rb_module(v->algebra(), gens), identity_map(v), std::nullopt,
                           Subspace(), Subspace(), false};
    const Field& fld = v->algebra()->field();

    std::vector<Vec> images;
    for (int i = 0; i < v->dim(); ++i) {
        Vec e = vec_zero(fld, v->dim());
        e[i] = Scalar::one(fld);
        images.push_back(std::move(e));
    }
    result.epi = free_rb_universal_map(result.free_module, images, v);
    if (rank(result.epi.mat) != v->dim())
        throw ContractError("summand split: canonical evaluation map is not surjective");

    result.section = projective_lift(v, result.epi, identity_map(v));
    if (!result.section) return result;  // not projective against this presentation
    result.projective = true;

    const ModulePtr& fm = result.free_module.module;
    std::vector<Vec> image_cols;
    for (int j = 0; j < result.section->mat.cols(); ++j) image_cols.push_back(result.section->mat.column(j));
    result.image = Subspace::span(fld, fm->dim(), image_cols);
    result.kern = kernel(result.epi.mat);

    const bool spans = result.image.sum(result.kern).dim() == fm->dim();
    const bool disjoint = result.image.intersect(result.kern).dim() == 0;
    const bool stable = subspace_is_stable(*fm, result.image) && subspace_is_stable(*fm, result.kern);
    result.decomposition_verified = spans && disjoint && stable;
    return result;
}

AxiomReport flat_iso_check(const ModulePtr& m_right, bool eta_injectivity_hypothesis) {
    if (!eta_injectivity_hypothesis)
        throw ContractError(
            "flat iso check refused: the injectivity of R -> R_RB<Q> is a hypothesis the caller must "
            "assert; it is not decidable from the normal-form coordinates");
    AxiomReport report;
    const AlgebraPtr& a = m_right->algebra();
    const Field& f = a->field();
    ModulePtr r_self = RBModule::self_module(a, Side::Left);
    require_verified(*r_self, "flat iso check");
    TensorProduct t = tensor_product(m_right, r_self);

    // multiplication M (x) R -> M on the ambient space
    Matrix mult(f, m_right->dim(), t.ambient_dim());
    for (int x = 0; x < m_right->dim(); ++x) {
        Vec vm = vec_zero(f, m_right->dim());
        vm[x] = Scalar::one(f);
        for (int b = 0; b < a->dim(); ++b)
            mult.set_column(t.ambient_index(x, b), m_right->act_basis(b, vm));
    }
    for (int i = 0; i < t.relations.dim(); ++i) {
        Vec img = mult.apply(t.relations.basis_vector(i));
        if (!vec_is_zero(img)) {
            report.fail({{i}, img, vec_zero(f, m_right->dim()),
                         "m (x) r -> mr is well-defined on the quotient"});
            return report;
        }
    }
    Matrix alpha = mult * t.quotient.section;            // T -> M
    Matrix beta(f, t.dim, m_right->dim());               // M -> T, m -> m (x) 1
    for (int x = 0; x < m_right->dim(); ++x) {
        Vec vm = vec_zero(f, m_right->dim());
        vm[x] = Scalar::one(f);
        beta.set_column(x, t.pure_tensor(vm, a->unit()));
    }
    if (!(alpha * beta == Matrix::identity(f, m_right->dim())))
        report.fail({{}, (alpha * beta).flatten(), Matrix::identity(f, m_right->dim()).flatten(),
                     "(m -> m (x) 1 -> m) = id_M"});
    if (!(beta * alpha == Matrix::identity(f, t.dim)))
        report.fail({{}, (beta * alpha).flatten(), Matrix::identity(f, t.dim).flatten(),
                     "(m (x) r -> mr -> mr (x) 1) = id on the tensor quotient"});

    // Both maps are maps of right R-modules: (m (x) r) s = m (x) rs.
    for (int s = 0; s < a->dim(); ++s) {
        Matrix amb = kron(Matrix::identity(f, m_right->dim()), a->basis_right_mul(s));
        if (!t.quotient.descends(amb)) {
            report.fail({{s}, {}, {}, "right action descends to the tensor quotient"});
            return report;
        }
        Matrix ts = t.quotient.induce(amb);
        if (!(alpha * ts == m_right->action_matrix(s) * alpha))
            report.fail({{s}, (alpha * ts).flatten(), (m_right->action_matrix(s) * alpha).flatten(),
                         "m (x) r -> mr is right R-linear"});
        if (!(beta * m_right->action_matrix(s) == ts * beta))
            report.fail({{s}, (beta * m_right->action_matrix(s)).flatten(), (ts * beta).flatten(),
                         "m -> m (x) 1 is right R-linear"});
    }
    if (report.verdict)
        report.notes.push_back("M (x) R = M verified: mutually inverse right R-module maps, dim " +
                               std::to_string(t.dim));
    return report;
}

AxiomReport direct_sum_flatness_check(const AlgebraPtr& a, const std::vector<ModulePtr>& parts,
                                      const std::vector<ModuleMap>& monos) {
    AxiomReport report;
    Side side = parts.empty() ? Side::Right : parts.front()->side();
    DirectSumResult sum = direct_sum(a, side, parts);
    ExactnessReport whole = flatness_evidence(sum.module, monos);
    bool all_parts = true;
    for (const ModulePtr& p : parts) all_parts = all_parts && flatness_evidence(p, monos).verdict;
    report.notes.push_back(std::string("direct sum evidence: ") + (whole.verdict ? "pass" : "fail") +
                           ", all summands: " + (all_parts ? "pass" : "fail"));
    if (whole.verdict != all_parts)
        report.fail({{}, {}, {}, "sum is flat-evidence-positive iff every summand is"});
    return report;
}

Subspace opring_left_ideal(const AlgebraPtr& a, const std::vector<OpRingElement>& generators) {
    ModulePtr reg = opring_regular_module(a);
    std::vector<Vec> gens;
    for (const OpRingElement& g : generators) gens.push_back(opring_coords(g));
    return submodule_closure(*reg, gens);
}

ExactnessReport baer_extension_test(const ModulePtr& e, const std::vector<NamedIdeal>& ideals) {
    require_verified(*e, "baer extension test");
    if (e->side() != Side::Left) throw ContractError("baer extension test targets left modules");
    const AlgebraPtr& a = e->algebra();
    const Field& f = a->field();
    ModulePtr reg = opring_regular_module(a);
    ExactnessReport report;
    report.notes.push_back("extension evidence relative to the supplied ideal catalog");
    for (const NamedIdeal& ideal : ideals) {
        SubmoduleResult sub = submodule(reg, ideal.subspace);
        std::vector<Matrix> homs = hom_basis(*sub.module, *e);
        if (homs.empty()) {
            ExactnessEntry entry;
            entry.label = ideal.name + ": no nonzero homomorphisms";
            entry.injective = true;
            report.entries.push_back(std::move(entry));
            continue;
        }
        int idx = 0;
        for (const Matrix& h : homs) {
            // extension unknown X: reg -> E with X o incl = h;
            // vec(X * incl) = (I (x) incl^T) vec(X)
            std::vector<Matrix> blocks = hom_constraint_blocks(*reg, *e);
            Matrix restrict_rows = kron(Matrix::identity(f, e->dim()), sub.inclusion.mat.transpose());
            blocks.push_back(restrict_rows);
            Matrix big = stack(f, blocks, e->dim() * reg->dim());
            Vec rhs = vec_zero(f, big.rows());
            Vec h_flat = h.flatten();
            int offset = big.rows() - restrict_rows.rows();
            for (size_t i = 0; i < h_flat.size(); ++i) rhs[offset + static_cast<int>(i)] = h_flat[i];
            std::optional<Vec> sol = solve(big, rhs);
            ExactnessEntry entry;
            entry.label = ideal.name + ": hom " + std::to_string(idx);
            entry.source_dim = sub.module->dim();
            entry.target_dim = reg->dim();
            entry.injective = sol.has_value();
            entry.rank = entry.injective ? 1 : 0;
            if (sol) entry.induced = Matrix::unflatten(f, e->dim(), reg->dim(), *sol);
            if (!entry.injective) report.verdict = false;
            report.entries.push_back(std::move(entry));
            ++idx;
        }
    }
    return report;
}

}  // namespace rb
