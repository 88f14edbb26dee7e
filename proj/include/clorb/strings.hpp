#ifndef CLORB_STRINGS_HPP
#define CLORB_STRINGS_HPP

#include "clorb/mutation.hpp"

namespace clorb {

/// Combinatorial string or band word: alternating walk letters through the
/// quiver (loops included). A '+' letter maps position t-1 to position t by
/// its arrow, a '-' letter maps position t to position t-1.
struct StringWord {
    struct Letter {
        std::string arrow;
        bool direct = true;  // '+'
    };
    std::vector<Letter> letters;
    bool band = false;
    mpq_class lambda = 1;  // scalar on the closing letter of a band
    /// Vertex of the one-position string when there are no letters; the
    /// empty word with no vertex is the zero module.
    long trivial_vertex = -1;
};

LFRep string_module(AlgebraPtr a, const StringWord& w);

/// One case of the mutation tables: a parametrized module before the flip,
/// and the expected mutated module after it.
struct CaseReport {
    std::string case_id;
    bool passed = false;
    std::string detail;
};

/// Replay one of the 18 documented mutation cases at the given parameter;
/// throws CaseMismatch on an unknown id.
CaseReport replay_case_table(const std::string& case_id, const mpq_class& lambda,
                             unsigned long seed = 0);

std::vector<std::string> all_case_ids();

}  // namespace clorb

#endif
