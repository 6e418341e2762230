#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vknots {

// A chord endpoint is either the initial point of its chord (the arrow tail,
// written "O" in codes) or the terminal point (the arrow head, written "U").
enum class Role : unsigned char { Initial, Terminal };

char role_char(Role r);

struct Endpoint {
    int chord = 0;
    Role role = Role::Initial;

    bool operator==(const Endpoint&) const = default;
    auto operator<=>(const Endpoint&) const = default;
};

// Gauss diagram of a virtual knot: an oriented circle carrying 2n endpoints,
// paired into n signed chords. Positions are indices into the circle walk,
// 0 .. 2n-1, taken modulo 2n everywhere. The empty diagram (n = 0) is valid
// and represents the unknot.
class GaussDiagram {
public:
    GaussDiagram() = default;

    // Validates that every chord id occurs exactly once with each role and
    // that `signs` assigns +1 or -1 to exactly the chords present.
    // Throws std::invalid_argument on violation.
    GaussDiagram(std::vector<Endpoint> circle, std::map<int, int> signs);

    int chord_count() const { return static_cast<int>(signs_.size()); }
    int endpoint_count() const { return static_cast<int>(circle_.size()); }
    bool empty() const { return circle_.empty(); }

    const std::vector<Endpoint>& circle() const { return circle_; }
    const std::map<int, int>& signs() const { return signs_; }

    const Endpoint& at(int position) const;

    bool has_chord(int chord) const { return signs_.count(chord) != 0; }
    int sign(int chord) const; // throws std::invalid_argument if absent
    int max_chord_id() const;  // 0 when empty

    // Positions of the two endpoints of a chord: (initial, terminal).
    std::pair<int, int> chord_span(int chord) const;
    int position_of(int chord, Role role) const;

    bool operator==(const GaussDiagram&) const = default;

private:
    std::vector<Endpoint> circle_;
    std::map<int, int> signs_;
};

// Text form. Tokens look like O3+ or U12-: role letter, positive integer
// chord id, sign. Tokens are separated by whitespace and/or commas; the
// token sequence is the circle walk from the basepoint. The empty string
// parses to the empty diagram. Throws ParseError on malformed input.
GaussDiagram parse_gauss_code(const std::string& text);

// Inverse of parse_gauss_code: single-space-separated tokens.
std::string serialize(const GaussDiagram& g);

// Circle walk started `offset` positions later (basepoint moved forward).
GaussDiagram rotated(const GaussDiagram& g, int offset);

// Renames chords to 1, 2, ... in order of first appearance on the circle.
GaussDiagram relabel_by_first_appearance(const GaussDiagram& g);

// Canonical representative of the diagram up to rotation and relabeling:
// the rotation whose first-appearance relabeling has the lexicographically
// least endpoint sequence, comparing (role, id, sign) tuples with
// Initial < Terminal and + < -. Idempotent.
struct CanonicalForm {
    GaussDiagram diagram;
    int rotation = 0;             // canonical position p sits at (p + rotation) mod 2n in the input
    std::map<int, int> relabel;   // input chord id -> canonical chord id
};

CanonicalForm canonical_form(const GaussDiagram& g);
GaussDiagram canonicalize(const GaussDiagram& g);
std::string canonical_code(const GaussDiagram& g);

// Uniform-ish random diagram with n chords: random pairing of 2n positions
// into chords with random roles and signs, relabeled by first appearance.
// Fully determined by (n, seed) on any platform.
GaussDiagram random_diagram(int n, std::uint64_t seed);

} // namespace vknots
