#pragma once

#include <string>
#include <vector>

#include "vknots/gauss_diagram.hpp"

namespace vknots {

// Diagram moves. Two site vocabularies are used:
//  - gaps: insertion slots between circle positions; gap g means "insert
//    just before current position g". Gaps are taken mod 2n; the empty
//    diagram has the single gap 0.
//  - window starts: position p names the window of consecutive positions
//    p, p+1, ... of the length the move requires.
enum class MoveKind : unsigned char {
    R1Add,      // insert an isolated kink chord at a gap
    R1Remove,   // delete a chord whose endpoints are cyclically adjacent
    R2Add,      // insert two parallel-or-crossed opposite-sign chords at two gaps
    R2Remove,   // delete such a pair given its two 2-windows
    R3,         // slide: swap the contents of three 2-windows of a triangle site
    XiSwap,     // swap the endpoints at positions p and p+2 (p+1 fixed)
    TwoKInsert, // insert a block of 2k like-signed chords spanning two gaps
    TwoKRemove, // delete such a block given its two 2k-windows
};

std::string move_kind_name(MoveKind k);

struct Move {
    MoveKind kind = MoveKind::R1Add;
    int pos_a = -1; // first gap / window start / xi position
    int pos_b = -1; // second gap / window start; -1 on R2Remove/TwoKRemove means
                    // "resolve to the least matching partner window at apply time"
    int pos_c = -1; // third window start (R3 only)
    int chord = -1; // R1Remove target chord id
    int k = 0;      // TwoKInsert / TwoKRemove block half-width
    int sign = +1;  // R1Add / R2Add / TwoKInsert chord sign
    Role orient = Role::Initial; // role of the first endpoint inserted at pos_a
    bool crossed = false;        // R2Add: terminal window reversed
    bool parallel = false;       // TwoKInsert: parallel matching instead of antiparallel

    bool operator==(const Move&) const = default;
};

using MoveScript = std::vector<Move>;

// Applies one move, validating its site pattern. Throws MoveError if the
// pattern does not hold and std::invalid_argument for out-of-range fields.
GaussDiagram apply_move(const GaussDiagram& g, const Move& m);

// All Reidemeister moves applicable to g (R1/R2 removals, R3 slides, R1/R2
// insertions at every gap), in a fixed deterministic order. Xi swaps and 2k
// moves are not included; enumerate those separately.
std::vector<Move> enumerate_reidemeister(const GaussDiagram& g);

// A move undoing m, valid on apply_move(g, m). Round-tripping recovers g up
// to canonical equality (the basepoint can shift when a removed site
// wrapped around it).
Move inverse_move(const GaussDiagram& g, const Move& m);

// --- flat-move primitives -------------------------------------------------

// Swap the endpoints at positions p and p+2, keeping p+1 fixed. Requires at
// least 4 endpoints. Preserves the odd writhe but, in general, not the
// individual n-writhes.
GaussDiagram apply_xi(const GaussDiagram& g, int position);

// Insert 2k new chords of sign `sign` forming a removable block: one
// 2k-window at gap site_a, the partner window at gap site_b, matched
// antiparallel. Equal gaps put the two windows adjacent (site_a's first);
// on the empty diagram both gaps must be 0. Every inserted chord has index
// +s or -s where s is the assigned-sign sum of the arc between the windows.
GaussDiagram apply_2k_insert(const GaussDiagram& g, int site_a, int site_b,
                             int k, int sign);

// All TwoKRemove moves applicable to g for the given k: ordered pairs of
// disjoint 2k-windows of like-signed chords matched antiparallel or
// parallel with alternating roles. Sorted by (pos_a, pos_b).
std::vector<Move> detect_2k_removals(const GaussDiagram& g, int k);

// --- shells and shell-pair macros ------------------------------------------

// A shell: a chord whose endpoints sit two apart, embracing one endpoint of
// another chord (the center).
struct Shell {
    int chord = 0;
    Endpoint center;

    bool operator==(const Shell&) const = default;
};

// Two interleaved like-signed shells occupying four consecutive positions
// start .. start+3 (chord a at start and start+2, chord b between/after).
struct ShellPair {
    int start = 0;
    int chord_a = 0;
    int chord_b = 0;
    int sign = +1;

    bool operator==(const ShellPair&) const = default;
};

std::vector<Shell> find_shells(const GaussDiagram& g);
std::vector<ShellPair> find_shell_pairs(const GaussDiagram& g);

// Result of a macro move: the final diagram together with the elementary
// move script that produced it; replaying the script on the input diagram
// yields `diagram` exactly.
struct ScriptResult {
    GaussDiagram diagram;
    MoveScript script;
};

enum class Side : unsigned char { Left, Right };

// Slide a shell pair block past the adjacent endpoint on the given side
// using two xi swaps. The block pattern is preserved (the two shells trade
// labels); everything else is untouched.
ScriptResult shellpair_transport(const GaussDiagram& g, const ShellPair& sp,
                                 Side side);

// Cancel two adjacent shell pairs of opposite signs (blocks at p and p+4)
// with two xi swaps followed by two R2 removals.
ScriptResult shellpair_cancel(const GaussDiagram& g, const ShellPair& first,
                              const ShellPair& second);

// Insert k adjacent shell pairs of sign `sign` at a gap using exactly one
// TwoKInsert plus Reidemeister and xi moves: adds a kink, threads the 2k
// block through it, combs the block into k shell-pair blocks, removes the
// kink. Shifts J_1 and J_-1 by sign*k and changes nothing else.
ScriptResult add_k_shellpairs(const GaussDiagram& g, int gap, int k, int sign);

} // namespace vknots
