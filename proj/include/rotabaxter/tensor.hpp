#pragma once

#include <optional>

#include "rotabaxter/freemod.hpp"
#include "rotabaxter/rbmod.hpp"

namespace rb {

// Quotient-space model of M (x)_{(R,P)} N for a right module M and a left
// module N: the ambient space is M (x)_k N (index (a,b) -> a*dim(N)+b), the
// relation space W is spanned by the action-balancing and operator-balancing
// vectors, and iota is the induced bilinear map.
struct TensorProduct {
    ModulePtr left;   // right (R,P)-module M
    ModulePtr right;  // left (R,P)-module N
    Subspace relations;
    QuotientSpace quotient;
    int dim = 0;

    int ambient_dim() const { return left->dim() * right->dim(); }
    int ambient_index(int a, int b) const { return a * right->dim() + b; }
    Vec ambient_pure(const Vec& m, const Vec& n) const;
    Vec pure_tensor(const Vec& m, const Vec& n) const;  // iota(m, n)
};

TensorProduct tensor_product(const ModulePtr& m_right, const ModulePtr& n_left);

// All four bilinearity conditions of iota on basis pairs.
AxiomReport check_tensor_bilinearity(const TensorProduct& t);

// id_M (x) g for a left-module map g; source and target share the same M.
Matrix induced_tensor_map(const TensorProduct& src, const TensorProduct& dst, const ModuleMap& g);
// g (x) id_N for a right-module map g; source and target share the same N.
Matrix induced_tensor_map_left(const TensorProduct& src, const TensorProduct& dst, const ModuleMap& g);

// Extension of scalars along an (S,a)-(R,P)-bimodule B: B (x)_{(R,P)} N with
// s(m (x) n) = (sm) (x) n and q = p_B^S (x) id. The result is a verified left
// (S,a)-module on the tensor coordinates.
struct ScalarExtensionResult {
    TensorProduct tensor;
    ModulePtr module;
};
ScalarExtensionResult scalar_extension(const BimodulePtr& b, const ModulePtr& n_left);
// Mirrored: M (x)_{(R,P)} B for an (R,P)-(S,a)-bimodule B, a right
// (S,a)-module via (m (x) n)s = m (x) (ns), q = id (x) p_B^S.
ScalarExtensionResult scalar_extension_right(const ModulePtr& m_right, const BimodulePtr& b);

// Hom_{(S,a)}(M (x) N, L) = Hom_{(R,P)}(M, Hom_{(S,a)}(N, L)) via
// tau(f)(m) = (n -> f(m (x) n)); checks that tau is a bijection.
AxiomReport adjunction_check(const ModulePtr& m_right, const BimodulePtr& n, const ModulePtr& l_right);

struct ExactnessEntry {
    std::string label;
    int source_dim = 0;   // tensor dimension before the induced map
    int target_dim = 0;
    int rank = 0;
    bool injective = false;
    Matrix induced;  // kept so the verdict can be recomputed from the report
};

struct ExactnessReport {
    bool verdict = true;
    std::vector<ExactnessEntry> entries;
    std::vector<std::string> notes;
};

// Tensors M against every monomorphism in the catalog and reports whether
// injectivity survives. Evidence relative to the catalog, never a proof of
// flatness; the report says so. Monos must be between modules of the side
// opposite to M and must be injective (checked).
ExactnessReport flatness_evidence(const ModulePtr& m, const std::vector<ModuleMap>& monos);

// Lift of g through a surjection f: solves { f o g-bar = g, g-bar a module
// homomorphism }; nullopt when the affine system is inconsistent.
std::optional<ModuleMap> projective_lift(const ModulePtr& v, const ModuleMap& f, const ModuleMap& g);

// Canonical-presentation splitting test: builds the free module on V's basis
// index set, the evaluation epi f, lifts the identity to a section beta and
// verifies F = im(beta) (+) ker(f) as stable subspaces.
struct SplittingResult {
    bool projective = false;   // against the canonical presentation
    FreeRBModule free_module;
    ModuleMap epi;
    std::optional<ModuleMap> section;
    Subspace image;
    Subspace kern;
    bool decomposition_verified = false;
};
SplittingResult projective_summand_split(const ModulePtr& v);

// Builds m (x) r -> m r and m -> m (x) 1 on M (x) R and verifies they are
// mutually inverse maps of right R-modules. The eta-injectivity hypothesis is
// a caller-supplied flag; without it the check is refused.
AxiomReport flat_iso_check(const ModulePtr& m_right, bool eta_injectivity_hypothesis);

// Direct sums are flat-evidence-equivalent to all their summands holding,
// both directions checked on the same catalog.
AxiomReport direct_sum_flatness_check(const AlgebraPtr& a, const std::vector<ModulePtr>& parts,
                                      const std::vector<ModuleMap>& monos);

struct NamedIdeal {
    std::string name;
    Subspace subspace;  // inside the operator-ring module coordinates
};

// For each left ideal S of the operator ring (as a stable subspace of its
// regular module) and each basis homomorphism S -> E, attempt to extend to
// the whole ring. Evidence for or against injectivity relative to the ideal
// catalog only.
ExactnessReport baer_extension_test(const ModulePtr& e, const std::vector<NamedIdeal>& ideals);

// Left ideal of the operator ring generated by the given normal forms.
Subspace opring_left_ideal(const AlgebraPtr& a, const std::vector<OpRingElement>& generators);

}  // namespace rb
