#include "doctest.h"

#include <stdexcept>
#include <map>

#include "vknots/errors.hpp"
#include "vknots/gauss_diagram.hpp"
#include "vknots/invariants.hpp"
#include "vknots/moves.hpp"

using namespace vknots;

namespace {

const char* kVTref = "O1+ O2+ U1+ U2+";

Move make(MoveKind kind) {
    Move m;
    m.kind = kind;
    return m;
}

} // namespace

TEST_CASE("kink insertion and removal") {
    GaussDiagram empty;
    Move add = make(MoveKind::R1Add);
    add.pos_a = 0;
    add.sign = 1;
    GaussDiagram kink = apply_move(empty, add);
    CHECK(serialize(kink) == "O1+ U1+");

    add.orient = Role::Terminal;
    CHECK(serialize(apply_move(empty, add)) == "U1+ O1+");

    Move rem = make(MoveKind::R1Remove);
    rem.chord = 1;
    CHECK(apply_move(kink, rem) == empty);

    // wrapped kink: endpoints adjacent across the basepoint
    GaussDiagram wrapped = parse_gauss_code("U1+ O2+ U2+ O1+");
    rem.chord = 1;
    CHECK(serialize(apply_move(wrapped, rem)) == "O2+ U2+");

    rem.chord = 2;
    CHECK_THROWS_AS(apply_move(parse_gauss_code(kVTref), rem), MoveError);
    rem.chord = 9;
    CHECK_THROWS_AS(apply_move(kink, rem), MoveError);
}

TEST_CASE("pair insertion and removal") {
    GaussDiagram vtref = parse_gauss_code(kVTref);
    Move add = make(MoveKind::R2Add);
    add.pos_a = 1;
    add.pos_b = 3;
    add.sign = 1;
    GaussDiagram bigger = apply_move(vtref, add);
    CHECK(serialize(bigger) == "O1+ O3+ O4- O2+ U1+ U3+ U4- U2+");

    Move rem = inverse_move(vtref, add);
    CHECK(rem.kind == MoveKind::R2Remove);
    CHECK(rem.pos_a == 1);
    CHECK(rem.pos_b == 5);
    CHECK(apply_move(bigger, rem) == vtref);

    // the standard two-chord pattern that a single pair move erases
    GaussDiagram pair = parse_gauss_code("O1+ U2- U1+ O2-");
    Move r2 = make(MoveKind::R2Remove);
    r2.pos_a = 1;
    r2.pos_b = 3;
    CHECK(apply_move(pair, r2).empty());
    r2.pos_b = -1; // partner resolved automatically
    CHECK(apply_move(pair, r2).empty());

    r2.pos_a = 0;
    r2.pos_b = -1;
    CHECK_THROWS_AS(apply_move(pair, r2), MoveError);

    // same-sign chords do not form a removable pair
    Move bad = make(MoveKind::R2Remove);
    bad.pos_a = 0;
    bad.pos_b = 2;
    CHECK_THROWS_AS(apply_move(vtref, bad), MoveError);
}

TEST_CASE("pair insertion flavours on the empty diagram") {
    GaussDiagram empty;
    Move add = make(MoveKind::R2Add);
    add.pos_a = 0;
    add.pos_b = 0;
    add.sign = 1;
    CHECK(serialize(apply_move(empty, add)) == "O1+ O2- U1+ U2-");
    add.crossed = true;
    CHECK(serialize(apply_move(empty, add)) == "O1+ O2- U2- U1+");
    add.crossed = false;
    add.orient = Role::Terminal;
    CHECK(serialize(apply_move(empty, add)) == "U1+ U2- O1+ O2-");
}

TEST_CASE("slide move at a valid triangle site") {
    GaussDiagram g = parse_gauss_code("O2+ O1+ O3+ U1+ U3+ U2+");
    Move r3 = make(MoveKind::R3);
    r3.pos_a = 0;
    r3.pos_b = 2;
    r3.pos_c = 4;
    GaussDiagram slid = apply_move(g, r3);
    CHECK(serialize(slid) == "O1+ O2+ U1+ O3+ U2+ U3+");
    CHECK(apply_move(slid, r3) == g); // self-inverse at the same windows
    CHECK(inverse_move(g, r3) == r3);

    // entries and polynomial are untouched
    CHECK(writhe_vector(slid) == writhe_vector(g));

    // flipping one chord sign breaks the compatibility condition
    GaussDiagram flipped = parse_gauss_code("O2+ O1+ O3- U1+ U3- U2+");
    CHECK_THROWS_AS(apply_move(flipped, r3), MoveError);

    Move tiny = make(MoveKind::R3);
    CHECK_THROWS_AS(apply_move(parse_gauss_code(kVTref), tiny), MoveError);
}

TEST_CASE("xi swap moves an endpoint past its next-but-one neighbour") {
    GaussDiagram g = parse_gauss_code("O1+ O2+ O3+ U1+ U2+ U3+");
    WritheVector before = writhe_vector(g);
    CHECK(before.entries == std::map<long long, long long>{{-2, 1}, {2, 1}});
    CHECK(before.j0 == 1);

    GaussDiagram swapped = apply_xi(g, 0);
    CHECK(serialize(swapped) == "O3+ O2+ O1+ U1+ U2+ U3+");
    WritheVector after = writhe_vector(swapped);
    CHECK(after.entries.empty()); // the n-writhes are NOT xi-invariants
    CHECK(after.j0 == 3);
    CHECK(odd_writhe(swapped) == odd_writhe(g)); // the odd writhe is

    CHECK(apply_xi(swapped, 0) == g);
    CHECK_THROWS_AS(apply_xi(parse_gauss_code("O1+ U1+"), 0), MoveError);

    Move via = make(MoveKind::XiSwap);
    via.pos_a = 4;
    CHECK(apply_move(g, via) == apply_xi(g, 4));
    CHECK(inverse_move(g, via) == via);
}

TEST_CASE("odd writhe survives long xi walks") {
    for (unsigned seed = 0; seed < 40; ++seed) {
        GaussDiagram g = random_diagram(2 + seed % 6, seed);
        long long j = odd_writhe(g);
        for (int step = 0; step < 25; ++step) {
            g = apply_xi(g, static_cast<int>((seed * 31 + step * 7) % g.endpoint_count()));
            CHECK(odd_writhe(g) == j);
        }
    }
}

TEST_CASE("move enumeration covers the expected sites") {
    auto on_empty = enumerate_reidemeister(GaussDiagram{});
    CHECK(on_empty.size() == 8); // 4 kink insertions + 4 pair insertions at gap 0

    GaussDiagram vtref = parse_gauss_code(kVTref);
    auto moves = enumerate_reidemeister(vtref);
    CHECK(moves.size() == 80); // 16 kink + 64 pair insertions, nothing removable
    for (const Move& m : moves) {
        CHECK((m.kind == MoveKind::R1Add || m.kind == MoveKind::R2Add));
        CHECK_NOTHROW(apply_move(vtref, m));
    }

    GaussDiagram kink = parse_gauss_code("O1+ U1+");
    auto on_kink = enumerate_reidemeister(kink);
    REQUIRE(!on_kink.empty());
    CHECK(on_kink[0].kind == MoveKind::R1Remove);
    CHECK(on_kink[0].chord == 1);
}

TEST_CASE("every enumerated or detected move round-trips through its inverse") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        GaussDiagram g = random_diagram(1 + seed % 5, seed * 977 + 5);
        std::string canon = canonical_code(g);
        auto moves = enumerate_reidemeister(g);
        for (std::size_t i = 0; i < moves.size(); i += (moves[i].kind == MoveKind::R2Add ? 9 : 1)) {
            const Move& m = moves[i];
            GaussDiagram h = apply_move(g, m);
            GaussDiagram back = apply_move(h, inverse_move(g, m));
            if (m.kind == MoveKind::R1Add || m.kind == MoveKind::R2Add ||
                m.kind == MoveKind::R3) {
                CHECK(back == g); // insertions and slides restore exactly
            } else {
                CHECK(canonical_code(back) == canon);
            }
        }
        for (int k : {1, 2})
            for (const Move& m : detect_2k_removals(g, k)) {
                GaussDiagram h = apply_move(g, m);
                GaussDiagram back = apply_move(h, inverse_move(g, m));
                CHECK(canonical_code(back) == canon);
            }
        int m_count = g.endpoint_count();
        Move ins = make(MoveKind::TwoKInsert);
        ins.k = 1 + seed % 2;
        ins.pos_a = static_cast<int>(seed % m_count);
        ins.pos_b = static_cast<int>((seed / 3) % m_count);
        ins.sign = seed % 2 ? 1 : -1;
        for (bool parallel : {false, true}) {
            ins.parallel = parallel;
            GaussDiagram h = apply_move(g, ins);
            CHECK(apply_move(h, inverse_move(g, ins)) == g);
        }
    }
}

TEST_CASE("reidemeister moves preserve entries, odd writhe, and the polynomial") {
    for (unsigned seed = 100; seed < 112; ++seed) {
        GaussDiagram g = random_diagram(2 + seed % 5, seed);
        WritheVector wv = writhe_vector(g);
        LaurentPolynomial poly = affine_index_polynomial(g);
        auto moves = enumerate_reidemeister(g);
        for (std::size_t i = 0; i < moves.size(); i += (moves[i].kind == MoveKind::R2Add ? 11 : 1)) {
            GaussDiagram h = apply_move(g, moves[i]);
            CHECK(writhe_vector(h).entries == wv.entries);
            CHECK(odd_writhe(h) == odd_writhe(g));
            CHECK(affine_index_polynomial(h) == poly);
        }
    }
}

TEST_CASE("moves reject malformed parameters") {
    GaussDiagram empty;
    Move add = make(MoveKind::R1Add);
    add.pos_a = 0;
    add.sign = 0;
    CHECK_THROWS_AS(apply_move(empty, add), std::invalid_argument);
    add.sign = 1;
    add.pos_a = 3; // the empty diagram only has gap 0
    CHECK_THROWS_AS(apply_move(empty, add), std::invalid_argument);

    Move rem = make(MoveKind::R2Remove);
    rem.pos_a = 0;
    CHECK_THROWS_AS(apply_move(empty, rem), MoveError);
}
