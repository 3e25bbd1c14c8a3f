#pragma once

#include "ds/arith.hpp"
#include "ds/rational.hpp"

#include <string>
#include <vector>

namespace ds {

// The integer sequences the solver families are indexed by, identified by
// their OEIS A-numbers.  Terms are generated from the defining property, not
// from stored data, so they can be checked against the b-file snapshots.
struct SequenceInfo {
    std::string id;          // "A058529" etc.
    int offset = 1;          // index of the first term
    std::string description;
};

const std::vector<SequenceInfo>& known_sequences();

// first `count` terms starting at the sequence offset; throws for unknown
// ids; terms are big integers since the Pell recurrences outgrow 64 bits
// long before the snapshot length
std::vector<Int> generate_sequence(const std::string& id, int count);

struct SequenceCheck {
    std::string id;
    int compared = 0;         // number of terms compared
    int first_mismatch = -1;  // b-file index of the first mismatch, -1 if none
    bool ok = false;
};

// compares generated terms against data/bfiles/b<digits>.txt (all terms in
// the snapshot, at least 200)
SequenceCheck verify_sequence(const std::string& id);

}  // namespace ds
