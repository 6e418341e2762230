#include "doctest.h"

#include <stdexcept>

#include "oracles.hpp"
#include "vknots/gauss_diagram.hpp"
#include "vknots/invariants.hpp"

using namespace vknots;

namespace {

WritheVector from_oracle(const std::string& code) {
    oracle::Summary s = oracle::summarize(code);
    WritheVector w;
    w.entries = s.entries;
    w.j0 = s.j0;
    return w;
}

} // namespace

TEST_CASE("virtual trefoil invariants") {
    GaussDiagram g = parse_gauss_code("O1+ O2+ U1+ U2+");
    WritheVector w = writhe_vector(g);
    CHECK(w.entries == std::map<long long, long long>{{1, 1}, {-1, 1}});
    CHECK(w.j0 == 0);
    CHECK(n_writhe(g, 1) == 1);
    CHECK(n_writhe(g, -1) == 1);
    CHECK(n_writhe(g, 2) == 0);
    CHECK(odd_writhe(g) == 2);
    LaurentPolynomial p = affine_index_polynomial(g);
    CHECK(p.coefficient(1) == 1);
    CHECK(p.coefficient(-1) == 1);
    CHECK(p.coefficient(0) == -2);
    CHECK(p.evaluate_at_one() == 0);
    CHECK(p.to_string() == "t - 2 + t^-1");
}

TEST_CASE("classical diagrams have zero writhe vector") {
    GaussDiagram tref = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
    WritheVector w = writhe_vector(tref);
    CHECK(w.entries.empty());
    CHECK(w.j0 == 3);
    CHECK(odd_writhe(tref) == 0);
    CHECK(affine_index_polynomial(tref).is_zero());

    GaussDiagram fig8 = parse_gauss_code("O1+ U2+ O3- U4- O2+ U1+ O4- U3-");
    CHECK(writhe_vector(fig8).entries.empty());
    CHECK(writhe_vector(fig8).j0 == 0);
    CHECK(affine_index_polynomial(fig8).is_zero());
}

TEST_CASE("endpoint signs and chord index") {
    GaussDiagram g = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK(endpoint_sign_at(g, 0) == -1); // Initial of a positive chord
    CHECK(endpoint_sign_at(g, 2) == 1);  // Terminal of a positive chord
    CHECK(endpoint_sign(g, g.at(0)) == -1);
    CHECK(chord_index(g, 1) == -1);      // passes the Initial endpoint of chord 2
    CHECK(chord_index(g, 2) == 1);       // passes the Terminal endpoint of chord 1
}

TEST_CASE("chord index sums assigned endpoint signs strictly between the arrow") {
    // One negative chord flips both of its endpoint weights.
    GaussDiagram g = parse_gauss_code("O1+ O2- U1+ U2-");
    CHECK(chord_index(g, 1) == 1);  // between O1 and U1 sits O2 (weight +1 since sign -1)
    CHECK(chord_index(g, 2) == 1);  // between O2 and U2 sits U1 (weight +1)
}

TEST_CASE("n_writhe rejects n equal to zero") {
    GaussDiagram g = parse_gauss_code("O1+ U1+");
    CHECK_THROWS_AS(n_writhe(g, 0), std::invalid_argument);
}

TEST_CASE("odd writhe is the sum of odd n-writhes") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        GaussDiagram g = random_diagram(7, seed);
        WritheVector w = writhe_vector(g);
        long long total = 0;
        for (const auto& [n, jn] : w.entries)
            if (n % 2 != 0) total += jn;
        CHECK(odd_writhe(g) == total);
    }
}

TEST_CASE("invariants agree with the independent oracle on random diagrams") {
    for (unsigned seed = 0; seed < 200; ++seed) {
        GaussDiagram g = random_diagram(1 + seed % 9, seed);
        std::string code = serialize(g);
        oracle::Summary s = oracle::summarize(code);
        WritheVector w = writhe_vector(g);
        CHECK(w.entries == s.entries);
        CHECK(w.j0 == s.j0);
        CHECK(odd_writhe(g) == s.odd);
        LaurentPolynomial p = affine_index_polynomial(g);
        std::map<int, long long> coeffs;
        for (const auto& [e, c] : p.terms()) coeffs[e] = c;
        CHECK(coeffs == s.poly);
    }
}

TEST_CASE("writhe vector never stores zero entries") {
    for (unsigned seed = 0; seed < 50; ++seed) {
        WritheVector w = writhe_vector(random_diagram(6, seed));
        for (const auto& [n, jn] : w.entries) {
            CHECK(n != 0);
            CHECK(jn != 0);
        }
    }
}

TEST_CASE("oracle helper builds the same vector type") {
    WritheVector w = from_oracle("O1+ O2+ U1+ U2+");
    CHECK(w.entries == writhe_vector(parse_gauss_code("O1+ O2+ U1+ U2+")).entries);
}
