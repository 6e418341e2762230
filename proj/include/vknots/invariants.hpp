#pragma once

#include <map>

#include "vknots/gauss_diagram.hpp"
#include "vknots/laurent.hpp"

namespace vknots {

// The writhe vector of a diagram: for each integer n, the n-writhe J_n is
// the signed count of chords whose index equals n. Entries with value zero
// are omitted. J_n for n != 0 is invariant under all Reidemeister moves;
// the n = 0 count is NOT an invariant (a positive or negative kink changes
// it), so it is kept out of `entries` and quarantined in `j0`.
struct WritheVector {
    std::map<long long, long long> entries; // n -> J_n, n != 0, no zero values
    long long j0 = 0;                       // signed count of index-0 chords; not invariant

    bool operator==(const WritheVector&) const = default;
};

// Sign the endpoints of a chord with sign e: the terminal endpoint gets e,
// the initial endpoint gets -e.
int endpoint_sign(const GaussDiagram& g, const Endpoint& e);
int endpoint_sign_at(const GaussDiagram& g, int position);

// Index of a chord: sum of the signs assigned to the endpoints passed when
// walking the circle from the chord's initial point to its terminal point,
// both excluded.
long long chord_index(const GaussDiagram& g, int chord);

WritheVector writhe_vector(const GaussDiagram& g);

// J_n for n != 0. Throws std::invalid_argument for n == 0 because that
// count is not an invariant; read WritheVector::j0 if you really want it.
long long n_writhe(const GaussDiagram& g, long long n);

// Odd writhe J: sum of J_n over odd n. Always even.
long long odd_writhe(const GaussDiagram& g);

// Affine index polynomial: sum over chords of sign(c) * (t^index(c) - 1).
// Index-0 chords contribute nothing, so this is a Reidemeister invariant.
LaurentPolynomial affine_index_polynomial(const GaussDiagram& g);

} // namespace vknots
