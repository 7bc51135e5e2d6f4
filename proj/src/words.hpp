#pragma once

#include <string>
#include <vector>

namespace mouldcalc {

using IndexWord = std::vector<int>;

// All interleavings of two index words, as a multiset.
std::vector<IndexWord> shuffle_set(const IndexWord &u, const IndexWord &v);

// One term of a stuffle product: ordered slots, each either a single source
// index or a contracted pair with one index from each input sequence. The
// relative order of each source sequence is preserved.
struct StuffleSlot {
    int first = 0;  // index from the first sequence, or the single index
    int second = 0; // index from the second sequence; 0 marks a single slot
    bool contracted() const { return second != 0; }
};

struct StuffleWord {
    std::vector<StuffleSlot> slots;
    int contractions() const;
    std::string to_string() const;
};

// Stuffle product with contraction provenance. Indices of the two input
// sequences must be distinct (callers use positions 1..r and r+1..r+s).
std::vector<StuffleWord> stuffle_set(const IndexWord &y1, const IndexWord &y2);

// |st(r,s)| without enumerating, by the three-way recursion.
long stuffle_count(int r, int s);

} // namespace mouldcalc
