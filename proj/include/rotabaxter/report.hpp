#pragma once

#include <string>
#include <vector>

#include "rotabaxter/linalg.hpp"

namespace rb {

// One failing instance of a checked law: which basis tuple failed and the two
// sides as evaluated.
struct Witness {
    std::vector<int> indices;
    Vec lhs;
    Vec rhs;
    std::string law;  // the identity that failed, written out
};

struct AxiomReport {
    bool verdict = true;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    void fail(Witness w) {
        verdict = false;
        witnesses.push_back(std::move(w));
    }
    void merge(const AxiomReport& o) {
        verdict = verdict && o.verdict;
        witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

}  // namespace rb
