#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotabaxter/opring.hpp"
#include "rotabaxter/rbmod.hpp"

namespace rb {

// The operator ring as a left module over R in normal-form coordinates
// {e_i} u {e_i Q e_j}: R acts by left multiplication through eta, the
// operator is left multiplication by Q.
ModulePtr opring_regular_module(const AlgebraPtr& a);

// Coordinates of a normal form in that module (scalar part first, then the
// q-part row-major), and back.
Vec opring_coords(const OpRingElement& e);
OpRingElement opring_from_coords(const AlgebraPtr& a, const Vec& coords);

// Element of the free operated module on X: a linear combination of pure
// terms (e_{i1} (x) ... (x) e_{in}) x with 1 <= n <= n_max. The shift
// operator prepends the unit; overflowing the bound is a loud error.
class FreeOperatedElement {
public:
    FreeOperatedElement(AlgebraPtr algebra, std::vector<std::string> generators, int n_max = 6);

    static FreeOperatedElement generator(const AlgebraPtr& a, std::vector<std::string> generators,
                                         int gen_index, int n_max = 6);
    static FreeOperatedElement pure_term(const AlgebraPtr& a, std::vector<std::string> generators,
                                         const std::vector<int>& word, int gen_index, int n_max = 6);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<std::string>& generators() const { return generators_; }
    int n_max() const { return n_max_; }
    bool is_zero() const { return terms_.empty(); }

    using TermKey = std::pair<std::vector<int>, int>;  // (basis word, generator)
    const std::map<TermKey, Scalar>& terms() const { return terms_; }

    FreeOperatedElement operator+(const FreeOperatedElement& o) const;
    FreeOperatedElement scaled(const Scalar& c) const;
    FreeOperatedElement act_left(const Vec& r) const;
    bool operator==(const FreeOperatedElement& o) const;

private:
    AlgebraPtr algebra_;
    std::vector<std::string> generators_;
    int n_max_;
    std::map<TermKey, Scalar> terms_;

    void add_term(const std::vector<int>& word, int gen, const Scalar& c);
    friend FreeOperatedElement operated_shift(const FreeOperatedElement& e);
};

// p_X: (r1 (x) ... (x) rn) x -> (1 (x) r1 (x) ... (x) rn) x.
FreeOperatedElement operated_shift(const FreeOperatedElement& e);

// The recursion f~((r1 (x) ... (x) rn)x) = r1 q(f~((r2 (x) ... (x) rn)x)),
// base f~(r1 x) = r1 f(x); target only needs to be an operated module, so the
// verified bit of `target` is not consulted.
Vec operated_universal_map(const FreeOperatedElement& e, const std::vector<Vec>& images,
                           const RBModule& target);

// Free Rota-Baxter module on X, realized on |X| copies of the operator-ring
// module. j sends the generator x to 1*x.
struct FreeRBModule {
    AlgebraPtr algebra;
    std::vector<std::string> generators;
    ModulePtr module;  // dimension (dim R + dim R^2) * |X|
    std::vector<ModuleMap> block_injections;
    std::vector<ModuleMap> block_projections;

    int block_dim() const { return algebra->dim() * (1 + algebra->dim()); }
    Vec j(int gen_index) const;
    Vec embed(const OpRingElement& e, int gen_index) const;
};

FreeRBModule free_rb_module(const AlgebraPtr& a, std::vector<std::string> generators);

// pi: (r1 (x) ... (x) rn) x -> (r1 Q r2 ... Q rn reduced) x.
Vec quotient_map_pi(const FreeOperatedElement& e, const FreeRBModule& f);

// Unique homomorphism with f-bar o j = f: (e_i) x -> e_i f(x) and
// (e_i Q e_j) x -> e_i p(e_j f(x)).
ModuleMap free_rb_universal_map(const FreeRBModule& f, const std::vector<Vec>& images,
                                const ModulePtr& target);

// Free R-module on X with the coefficientwise operator p~(sum r_x x) =
// sum P(r_x) x.
struct RestrictedFreeModule {
    AlgebraPtr algebra;
    std::vector<std::string> generators;
    ModulePtr module;  // dimension dim R * |X|

    Vec iota(int gen_index) const;
};

RestrictedFreeModule restricted_free(const AlgebraPtr& a, std::vector<std::string> generators);

// Universal map of the restricted free module; every image must be a module
// constant of the target, otherwise the construction is refused naming the
// offending generator and violated equation.
ModuleMap restricted_universal_map(const RestrictedFreeModule& f, const std::vector<Vec>& images,
                                   const ModulePtr& target);

}  // namespace rb
