#pragma once

#include <optional>

#include "vknots/gauss_diagram.hpp"
#include "vknots/invariants.hpp"
#include "vknots/moves.hpp"

namespace vknots {

// Core of lower_bound_2k, usable when the writhe vectors are already known.
std::optional<long long> writhe_lower_bound(const WritheVector& from,
                                            const WritheVector& to, long long k);

// Lower bound on the 2k-distance between g and h (minimum number of
// 2k-moves in a Reidemeister + 2k script from g to h). Returns nullopt when
// the writhe congruences already forbid any such script: some J_n (n != 0)
// differs mod k, the odd writhes differ mod 2k, or the positive-index and
// negative-index writhe changes are unbalanced. Otherwise the bound is
//   (sum over n > 0 of |J_n(h) - J_n(g)|) / k,
// using that one 2k-move shifts exactly one pair (J_n, J_-n) by +-k.
std::optional<long long> lower_bound_2k(const GaussDiagram& g,
                                        const GaussDiagram& h, long long k);

// lower_bound_2k against the empty diagram.
std::optional<long long> unknotting_lower_bound(const GaussDiagram& g, long long k);

// A diagram equal to `base` as a knot whose 2k-unknotting distance is
// exactly a (for k >= 2, a >= 1): appends a blocks of 2k positive chords
// plus one pivot chord arranged so the blocks are detectable and removable
// one 2k-move each, while the writhe bound also equals a.
GaussDiagram witness_construction(const GaussDiagram& base, long long a, long long k);

struct SearchBudget {
    long long max_moves = 8;     // most 2k-moves allowed in a found script
    long long max_chords = -1;   // diagram size cap; -1 = max(|g|,|h|) + 2k + 2
    long long max_states = 100000;
};

struct SearchOptions {
    bool parallel = true;  // expand search batches with OpenMP when available
    bool allow_xi = false; // include xi swaps as free moves
    int batch_size = 16;   // states expanded per synchronized round
};

struct SearchResult {
    long long twok_moves = 0;
    MoveScript script; // replays on g (as given, not canonicalized) to a
                       // diagram canonically equal to h
};

// Best-first search for a cheapest Reidemeister + 2k script from g to h,
// counting only 2k-moves. States are canonical diagrams; free moves cost 0.
// Returns nullopt when no script within the budget was found (including
// when lower_bound_2k says none can exist). A returned result is optimal
// whenever its cost equals lower_bound_2k(g, h, k); with enough budget
// that is the common case.
std::optional<SearchResult> search_upper_bound(const GaussDiagram& g,
                                               const GaussDiagram& h,
                                               long long k,
                                               const SearchBudget& budget,
                                               const SearchOptions& options = {});

// The 2k-distance when it can be certified within the budget: returns a
// value only when search found a script whose cost equals the lower bound.
std::optional<long long> exact_distance(const GaussDiagram& g,
                                        const GaussDiagram& h, long long k,
                                        const SearchBudget& budget,
                                        const SearchOptions& options = {});

} // namespace vknots
