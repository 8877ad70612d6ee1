#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "excseq/catalog.hpp"

namespace excseq {

// Ordered tuple of catalog modules (E_start, ..., E_n). Sequences shorter
// than the rank are right-justified: the missing terms go on the left, so
// start = n - terms.size() + 1.
struct ExcSequence {
    int start = 1;
    std::vector<int> terms;

    int last_index() const { return start + static_cast<int>(terms.size()) - 1; }
    int term_at(int k) const { return terms.at(static_cast<std::size_t>(k - start)); }
    bool operator==(const ExcSequence& o) const { return start == o.start && terms == o.terms; }
    bool operator<(const ExcSequence& o) const { return terms < o.terms; }
};

// Right-justified sequence over the catalog's quiver.
ExcSequence make_sequence(const Catalog& cat, std::vector<int> term_ids);

struct ValidationResult {
    bool ok = true;
    int i = 0, j = 0;        // first violating pair, absolute indices i < j
    bool hom_nonzero = false; // which space witnessed the violation
    std::string message() const;
};

// Checks Hom(E_j, E_i) = 0 = Ext(E_j, E_i) for all present i < j; for
// complete sequences also checks that the dimension vectors form a
// determinant +-1 matrix.
ValidationResult validate(const Catalog& cat, const ExcSequence& seq);
void require_valid(const Catalog& cat, const ExcSequence& seq); // ValidationError if invalid

// Perpendicular subcategories as catalog masks, relative to an ambient
// context (wide subcategory) mask. A_k kills from the left of every later
// term; B_k = ^perp(A_{k-1}).
std::uint64_t perp_a_mask(const Catalog& cat, const ExcSequence& seq, int k, std::uint64_t ctx);
std::uint64_t perp_b_mask(const Catalog& cat, const ExcSequence& seq, int k, std::uint64_t ctx);
std::vector<int> mask_to_ids(const Catalog& cat, std::uint64_t mask);

struct TermClass {
    bool rel_proj = false;
    bool rel_inj = false;
    bool root() const { return rel_proj && rel_inj; }
    bool operator==(const TermClass& o) const { return rel_proj == o.rel_proj && rel_inj == o.rel_inj; }
};

// Relative projectivity/injectivity of every present term via Ext-vanishing
// scans over A_k and B_k. Verifies on output that every term has at least
// one of the two properties and that the last term is relatively injective.
std::vector<TermClass> classify(const Catalog& cat, const ExcSequence& seq);
std::vector<TermClass> classify(const Catalog& cat, const ExcSequence& seq, std::uint64_t ctx);

enum class Side { left, right };

// Support of E_k contained in the union of supports of the chosen terms.
bool covered_by(const Catalog& cat, const ExcSequence& seq, int k, Side side);
bool covered_by(const Catalog& cat, const ExcSequence& seq, int k, const std::vector<int>& indices);

enum class BraidDirection { right, left };

// Pair-level braid mutations. The unique positive-root candidate compatible
// with the case analysis is selected; failure to find exactly one signals a
// bug. mutate_right: (X,T) -> (T,Y), returns Y. mutate_left: (T,Y) -> (X,T),
// returns X.
int mutate_right(const Catalog& cat, int x, int t);
int mutate_left(const Catalog& cat, int t, int y);

// Braid move on the adjacent pair (E_k, E_{k+1}); the result is revalidated.
ExcSequence braid_sigma(const Catalog& cat, const ExcSequence& seq, int k, BraidDirection dir);

// Moves E_k to the front through k-1 adjacent left mutations.
ExcSequence delta_k(const Catalog& cat, const ExcSequence& seq, int k);

// Garside action: delta_n ... delta_3 delta_2, applied in that composition
// order (delta_2 first). Output position p corresponds to input index n+1-p.
ExcSequence garside(const Catalog& cat, const ExcSequence& seq);

// All complete exceptional sequences, sorted lexicographically by the term
// ids read left to right.
std::vector<ExcSequence> enumerate_ces(const Catalog& cat);

// All valid right-justified sequences (E_{n-t+1}, ..., E_n) of length t.
std::vector<ExcSequence> enumerate_partial(const Catalog& cat, int t);

// Hasse diagram of the terms ordered by strict support inclusion.
struct SupportHasse {
    std::vector<int> term_ids;                 // per node, in sequence order
    std::vector<std::string> keys;             // node labels
    std::vector<std::pair<int, int>> edges;    // covering pairs (smaller, larger), node indices
    std::vector<bool> maximal;
};
SupportHasse support_hasse(const Catalog& cat, const ExcSequence& seq);

} // namespace excseq
