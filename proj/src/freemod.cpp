#include "rotabaxter/freemod.hpp"

namespace rb {

Vec opring_coords(const OpRingElement& e) {
    const int n = e.algebra->dim();
    Vec out = e.scalar_part;
    out.reserve(n + n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(e.q_part.at(i, j));
    return out;
}

OpRingElement opring_from_coords(const AlgebraPtr& a, const Vec& coords) {
    const int n = a->dim();
    if (static_cast<int>(coords.size()) != n + n * n) throw ContractError("opring coords: wrong length");
    OpRingElement e = OpRingElement::zero(a);
    for (int i = 0; i < n; ++i) e.scalar_part[i] = coords[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.q_part.at(i, j) = coords[n + i * n + j];
    return e;
}

ModulePtr opring_regular_module(const AlgebraPtr& a) {
    const int n = a->dim();
    const int d = n + n * n;
    const Field& f = a->field();
    auto basis_element = [&](int k) {
        Vec coords = vec_zero(f, d);
        coords[k] = Scalar::one(f);
        return opring_from_coords(a, coords);
    };
    std::vector<Matrix> action;
    for (int i = 0; i < n; ++i) {
        OpRingElement gen = eta(a, a->basis_vector(i));
        Matrix m(f, d, d);
        for (int k = 0; k < d; ++k) m.set_column(k, opring_coords(multiply(gen, basis_element(k))));
        action.push_back(std::move(m));
    }
    OpRingElement q = OpRingElement::q_generator(a);
    Matrix op(f, d, d);
    for (int k = 0; k < d; ++k) op.set_column(k, opring_coords(multiply(q, basis_element(k))));
    return RBModule::make(a, Side::Left, std::move(action), std::move(op));
}

FreeOperatedElement::FreeOperatedElement(AlgebraPtr algebra, std::vector<std::string> generators, int n_max)
    : algebra_(std::move(algebra)), generators_(std::move(generators)), n_max_(n_max) {
    if (n_max_ < 1) throw ContractError("n_max must be at least 1");
}

FreeOperatedElement FreeOperatedElement::generator(const AlgebraPtr& a, std::vector<std::string> generators,
                                                   int gen_index, int n_max) {
    FreeOperatedElement e(a, std::move(generators), n_max);
    // j_X(x) = 1_R x, expanded over the basis
    for (int i = 0; i < a->dim(); ++i)
        if (!a->unit()[i].is_zero()) e.add_term({i}, gen_index, a->unit()[i]);
    return e;
}

FreeOperatedElement FreeOperatedElement::pure_term(const AlgebraPtr& a, std::vector<std::string> generators,
                                                   const std::vector<int>& word, int gen_index, int n_max) {
    FreeOperatedElement e(a, std::move(generators), n_max);
    if (word.empty()) throw ContractError("pure term needs a tensor word of length >= 1");
    if (static_cast<int>(word.size()) > n_max) throw TruncationError("pure term exceeds the truncation bound");
    if (gen_index < 0 || gen_index >= static_cast<int>(e.generators_.size()))
        throw ContractError("generator index out of range");
    e.add_term(word, gen_index, Scalar::one(a->field()));
    return e;
}

void FreeOperatedElement::add_term(const std::vector<int>& word, int gen, const Scalar& c) {
    if (c.is_zero()) return;
    TermKey key{word, gen};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeOperatedElement FreeOperatedElement::operator+(const FreeOperatedElement& o) const {
    FreeOperatedElement r(*this);
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, c);
    return r;
}

FreeOperatedElement FreeOperatedElement::scaled(const Scalar& c) const {
    FreeOperatedElement r(algebra_, generators_, n_max_);
    for (const auto& [key, coeff] : terms_) r.add_term(key.first, key.second, c * coeff);
    return r;
}

FreeOperatedElement FreeOperatedElement::act_left(const Vec& r) const {
    FreeOperatedElement out(algebra_, generators_, n_max_);
    for (const auto& [key, coeff] : terms_) {
        // r acts on the leftmost tensor factor
        Vec head = vec_zero(algebra_->field(), algebra_->dim());
        head[key.first.front()] = Scalar::one(algebra_->field());
        Vec product = algebra_->mul(r, head);
        for (int k = 0; k < algebra_->dim(); ++k) {
            if (product[k].is_zero()) continue;
            std::vector<int> word = key.first;
            word.front() = k;
            out.add_term(word, key.second, coeff * product[k]);
        }
    }
    return out;
}

bool FreeOperatedElement::operator==(const FreeOperatedElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [key, c] : terms_) {
        if (it->first != key || it->second != c) return false;
        ++it;
    }
    return true;
}

FreeOperatedElement operated_shift(const FreeOperatedElement& e) {
    FreeOperatedElement out(e.algebra_, e.generators_, e.n_max_);
    for (const auto& [key, coeff] : e.terms_) {
        if (static_cast<int>(key.first.size()) + 1 > e.n_max_)
            throw TruncationError("operated shift would exceed the truncation bound n_max = " +
                                  std::to_string(e.n_max_));
        for (int k = 0; k < e.algebra_->dim(); ++k) {
            const Scalar& u = e.algebra_->unit()[k];
            if (u.is_zero()) continue;
            std::vector<int> word;
            word.reserve(key.first.size() + 1);
            word.push_back(k);
            word.insert(word.end(), key.first.begin(), key.first.end());
            out.add_term(word, key.second, coeff * u);
        }
    }
    return out;
}

Vec operated_universal_map(const FreeOperatedElement& e, const std::vector<Vec>& images,
                           const RBModule& target) {
    if (images.size() != e.generators().size())
        throw ContractError("universal map needs one image per generator");
    const AlgebraPtr& a = e.algebra();
    Vec out = vec_zero(a->field(), target.dim());
    for (const auto& [key, coeff] : e.terms()) {
        const std::vector<int>& word = key.first;
        Vec value = target.act_basis(word.back(), images[key.second]);
        for (int k = static_cast<int>(word.size()) - 2; k >= 0; --k) {
            value = target.op().apply(value);
            value = target.act_basis(word[k], value);
        }
        out = vec_add(out, vec_scale(coeff, value));
    }
    return out;
}

FreeRBModule free_rb_module(const AlgebraPtr& a, std::vector<std::string> generators) {
    if (!a->is_rota_baxter()) throw ContractError("free module requires a Rota-Baxter algebra");
    ModulePtr block = opring_regular_module(a);
    std::vector<ModulePtr> parts(generators.size(), block);
    DirectSumResult sum = direct_sum(a, Side::Left, parts);
    return FreeRBModule{a, std::move(generators), sum.module, std::move(sum.injections),
                        std::move(sum.projections)};
}

Vec FreeRBModule::j(int gen_index) const {
    return embed(OpRingElement::one(algebra), gen_index);
}

Vec FreeRBModule::embed(const OpRingElement& e, int gen_index) const {
    if (gen_index < 0 || gen_index >= static_cast<int>(generators.size()))
        throw ContractError("generator index out of range");
    return block_injections[gen_index].apply(opring_coords(e));
}

Vec quotient_map_pi(const FreeOperatedElement& e, const FreeRBModule& f) {
    if (e.generators() != f.generators) throw ContractError("pi: generator sets differ");
    if (!e.algebra()->same_presentation(*f.algebra)) throw ContractError("pi: algebra mismatch");
    const AlgebraPtr& a = f.algebra;
    Vec out = vec_zero(a->field(), f.module->dim());
    for (const auto& [key, coeff] : e.terms()) {
        std::vector<Vec> factors;
        for (int i : key.first) factors.push_back(a->basis_vector(i));
        OpRingElement nf = reduce(a, make_word(a, coeff, std::move(factors)));
        out = vec_add(out, f.embed(nf, key.second));
    }
    return out;
}

ModuleMap free_rb_universal_map(const FreeRBModule& f, const std::vector<Vec>& images,
                                const ModulePtr& target) {
    require_verified(*target, "free module universal map");
    if (target->side() != Side::Left) throw ContractError("universal map targets a left module");
    if (images.size() != f.generators.size())
        throw ContractError("universal map needs one image per generator");
    const AlgebraPtr& a = f.algebra;
    const int n = a->dim();
    Matrix mat(a->field(), target->dim(), f.module->dim());
    for (size_t g = 0; g < f.generators.size(); ++g) {
        const Vec& fx = images[g];
        if (static_cast<int>(fx.size()) != target->dim())
            throw ContractError("generator image has wrong dimension");
        const int offset = static_cast<int>(g) * f.block_dim();
        for (int i = 0; i < n; ++i) mat.set_column(offset + i, target->act_basis(i, fx));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec v = target->op().apply(target->act_basis(j, fx));
                mat.set_column(offset + n + i * n + j, target->act_basis(i, v));
            }
    }
    return ModuleMap::make(f.module, target, std::move(mat));
}

RestrictedFreeModule restricted_free(const AlgebraPtr& a, std::vector<std::string> generators) {
    if (!a->is_rota_baxter()) throw ContractError("restricted free module requires a Rota-Baxter algebra");
    std::vector<ModulePtr> parts(generators.size(), RBModule::self_module(a, Side::Left));
    DirectSumResult sum = direct_sum(a, Side::Left, parts);
    return RestrictedFreeModule{a, std::move(generators), sum.module};
}

Vec RestrictedFreeModule::iota(int gen_index) const {
    if (gen_index < 0 || gen_index >= static_cast<int>(generators.size()))
        throw ContractError("generator index out of range");
    Vec v = vec_zero(algebra->field(), module->dim());
    for (int i = 0; i < algebra->dim(); ++i) v[gen_index * algebra->dim() + i] = algebra->unit()[i];
    return v;
}

ModuleMap restricted_universal_map(const RestrictedFreeModule& f, const std::vector<Vec>& images,
                                   const ModulePtr& target) {
    require_verified(*target, "restricted universal map");
    if (target->side() != Side::Left) throw ContractError("universal map targets a left module");
    if (images.size() != f.generators.size())
        throw ContractError("universal map needs one image per generator");
    const AlgebraPtr& a = f.algebra;
    Subspace mc = module_constants(*target);
    for (size_t g = 0; g < images.size(); ++g) {
        if (mc.contains(images[g])) continue;
        // Name the violated equation for the refusal message.
        for (int i = 0; i < a->dim(); ++i) {
            Vec lhs = target->op().apply(target->act_basis(i, images[g]));
            Vec rhs = target->act(a->apply_op(a->basis_vector(i)), images[g]);
            if (!vec_eq(lhs, rhs))
                throw ContractError("image of generator '" + f.generators[g] +
                                    "' is not a module constant: p(" + a->labels()[i] +
                                    "*f(x)) != P(" + a->labels()[i] + ")*f(x)");
        }
        throw ContractError("image of generator '" + f.generators[g] + "' is not a module constant");
    }
    Matrix mat(a->field(), target->dim(), f.module->dim());
    for (size_t g = 0; g < images.size(); ++g)
        for (int i = 0; i < a->dim(); ++i)
            mat.set_column(static_cast<int>(g) * a->dim() + i, target->act_basis(i, images[g]));
    return ModuleMap::make(f.module, target, std::move(mat));
}

}  // namespace rb
