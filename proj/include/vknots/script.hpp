#pragma once

#include <string>

#include "vknots/moves.hpp"

namespace vknots {

// One-line text form of a move. Grammar (sites in the diagram the move is
// applied to; s is + or -):
//   R1+ a=<gap> s=<s> o=<I|T>
//   R1- c=<chord id>
//   R2+ a=<gap> b=<gap> s=<s> m=<p|x> [o=<I|T>]      p parallel, x crossed
//   R2- at=<window> [b=<window>]
//   R3 p=<window> q=<window> r=<window>
//   XI <position>
//   2K+ k=<k> a=<gap> b=<gap> s=<s> [m=<a|p>] [o=<I|T>]   a antiparallel, p parallel
//   2K- k=<k> at=<window> [b=<window>]
// o is the role opening the window at site a and defaults to I. Other
// omitted optional fields mean: matching defaults to antiparallel, and a
// missing partner window resolves to the least one that completes the
// pattern at apply time.
std::string format_move(const Move& m);
Move parse_move_line(const std::string& line);

// Scripts are move lines separated by newlines. Blank lines and lines
// starting with '#' are skipped.
std::string format_script(const MoveScript& script);
MoveScript parse_script(const std::string& text);

// Applies the script in order. Throws MoveError on the first invalid step.
GaussDiagram replay_script(const GaussDiagram& start, const MoveScript& script);

// Number of TwoKInsert / TwoKRemove steps; Reidemeister and xi steps are free.
int twok_count(const MoveScript& script);

} // namespace vknots
