#pragma once

#include <string>
#include <vector>

#include "rotabaxter/algebra.hpp"

namespace rb {

class RBModule;

// A scaled monomial r0 Q r1 Q ... Q rn in the ring generated by R and the
// operator symbol Q; factors are coordinate vectors over R's basis.
struct Word {
    Scalar coeff;
    std::vector<Vec> factors;  // size = q_count() + 1

    int q_count() const { return static_cast<int>(factors.size()) - 1; }
};

Word make_word(const AlgebraPtr& a, Scalar coeff, std::vector<Vec> factors);

// Normal-form element a + sum t_ij e_i Q e_j over the spanning set
// {e_i} u {e_i Q e_j}. Equal coordinates prove equality of ring elements;
// distinct coordinates are only "distinct as normal forms" because the
// spanning set is not known to be a basis.
struct OpRingElement {
    AlgebraPtr algebra;
    Vec scalar_part;  // component in R
    Matrix q_part;    // t[i][j] = coefficient of e_i Q e_j

    static OpRingElement zero(const AlgebraPtr& a);
    static OpRingElement one(const AlgebraPtr& a);
    static OpRingElement q_generator(const AlgebraPtr& a);  // the element Q = 1 Q 1

    OpRingElement operator+(const OpRingElement& o) const;
    OpRingElement operator-(const OpRingElement& o) const;
    OpRingElement scaled(const Scalar& c) const;
    bool operator==(const OpRingElement& o) const;
    bool is_zero() const;

    // Decomposition back into words, for the rewrite-based cross-checks.
    std::vector<Word> to_words() const;
};

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

// Repeatedly rewrites Q r Q -> P(r)Q - QP(r) - lambda Qr at the chosen
// position until every term has at most one Q. Each rewrite strictly lowers
// the Q-count of the term it replaces, so this terminates.
OpRingElement reduce(const AlgebraPtr& a, const Word& w,
                     RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);
OpRingElement reduce(const AlgebraPtr& a, const std::vector<Word>& words,
                     RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

// r -> r + 0, the inclusion of R.
OpRingElement eta(const AlgebraPtr& a, const Vec& r);

// Closed-form product on normal forms; agrees with reduce-of-concatenation.
OpRingElement multiply(const OpRingElement& x, const OpRingElement& y);

// Concatenation of words (boundary factors fuse by algebra multiplication).
Word concat(const AlgebraPtr& a, const Word& w1, const Word& w2);

// The rewrite oracle route: decompose into words, concatenate pairwise,
// reduce. Used to cross-check `multiply`.
OpRingElement multiply_via_words(const OpRingElement& x, const OpRingElement& y);

// Action of a normal form on a verified left module: (a + sum t_ij e_i Q e_j)
// m = a m + sum t_ij e_i p(e_j m).
Vec act(const OpRingElement& x, const RBModule& m, const Vec& v);

// Direct recursive action of a word: (r0 Q r1 Q ... Q rn) m =
// r0 p(r1 p(... p(rn m)...)).
Vec act_word(const Word& w, const RBModule& m, const Vec& v);

// For `trials` seeded random words, the normal-form action must equal the
// direct word action.
AxiomReport check_action_consistency(const AlgebraPtr& a, const RBModule& m, int trials,
                                     std::uint64_t seed);

struct ConfluenceDiscrepancy {
    std::string word;
    OpRingElement leftmost_result;
    OpRingElement rightmost_result;
};

struct ConfluenceReport {
    bool verdict = true;
    std::vector<ConfluenceDiscrepancy> discrepancies;
};

// Reduces every overlap word Q e_{i1} Q ... e_{it} Q (t up to
// max_overlap_len) by the leftmost-first and rightmost-first strategies and
// compares the results.
ConfluenceReport check_local_confluence(const AlgebraPtr& a, int max_overlap_len);

enum class NfComparison { Equal, DistinctNormalForms };

NfComparison nf_compare(const OpRingElement& x, const OpRingElement& y);

// Compares Q * eta(r) with eta(P(r)) on every basis vector. Distinct normal
// forms make the comparison inconclusive rather than a refutation, and the
// report says so.
AxiomReport check_eta_operator_compat(const AlgebraPtr& a);

}  // namespace rb
