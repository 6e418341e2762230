#pragma once

#include <optional>
#include <vector>

#include "vknots/gauss_diagram.hpp"

namespace vknots {

// Standard diagrams G(a): |a| adjacent shell-pair blocks of sign sgn(a);
// G(0) is the empty diagram. odd_writhe(G(a)) == 2a, and the G(a) with
// a in 0..k-1 represent the classes of knots modulo 2k-moves and xi-moves.
GaussDiagram normal_form_diagram(long long a);

struct NormalForm {
    long long a = 0;
    GaussDiagram diagram; // the representative G(a)
};

// Class of g modulo 2k-moves and xi-moves: a = (J/2) mod k normalized to
// 0..k-1, where J is the odd writhe. Requires k >= 1.
NormalForm classify_2k_xi(const GaussDiagram& g, long long k);

bool same_class_2k_xi(const GaussDiagram& g, const GaussDiagram& h, long long k);

// Whether g and h are related by Reidemeister and xi moves alone, as decided
// by the complete invariant for that relation: equality of odd writhes.
bool xi_equivalent(const GaussDiagram& g, const GaussDiagram& h);

// Least k >= 1 whose 2k-class separates g from h, i.e. with
// odd_writhe(g) - odd_writhe(h) not divisible by 2k. Returns nullopt when
// the odd writhes are equal (no k separates).
std::optional<long long> separating_k(const GaussDiagram& g, const GaussDiagram& h);

// G(0), G(1), ..., G(k-1): pairwise inequivalent modulo 2k-moves + xi, and
// every diagram is equivalent to exactly one of them.
std::vector<GaussDiagram> representative_system(long long k);

} // namespace vknots
