#include "doctest.h"

#include "vknots/errors.hpp"
#include "vknots/gauss_diagram.hpp"
#include "vknots/moves.hpp"
#include "vknots/script.hpp"

using namespace vknots;

namespace {

Move make(MoveKind kind) {
    Move m;
    m.kind = kind;
    return m;
}

} // namespace

TEST_CASE("moves format to stable one-line strings") {
    Move r1 = make(MoveKind::R1Add);
    r1.pos_a = 3;
    r1.sign = -1;
    r1.orient = Role::Terminal;
    CHECK(format_move(r1) == "R1+ a=3 s=- o=T");

    Move r1r = make(MoveKind::R1Remove);
    r1r.chord = 7;
    CHECK(format_move(r1r) == "R1- c=7");

    Move r2 = make(MoveKind::R2Add);
    r2.pos_a = 1;
    r2.pos_b = 3;
    r2.sign = 1;
    r2.crossed = true;
    CHECK(format_move(r2) == "R2+ a=1 b=3 s=+ m=x");
    r2.crossed = false;
    r2.orient = Role::Terminal;
    CHECK(format_move(r2) == "R2+ a=1 b=3 s=+ m=p o=T");

    Move r2r = make(MoveKind::R2Remove);
    r2r.pos_a = 2;
    CHECK(format_move(r2r) == "R2- at=2");
    r2r.pos_b = 5;
    CHECK(format_move(r2r) == "R2- at=2 b=5");

    Move r3 = make(MoveKind::R3);
    r3.pos_a = 0;
    r3.pos_b = 2;
    r3.pos_c = 4;
    CHECK(format_move(r3) == "R3 p=0 q=2 r=4");

    Move xi = make(MoveKind::XiSwap);
    xi.pos_a = 5;
    CHECK(format_move(xi) == "XI 5");

    Move ins = make(MoveKind::TwoKInsert);
    ins.k = 2;
    ins.pos_a = 0;
    ins.pos_b = 3;
    ins.sign = 1;
    CHECK(format_move(ins) == "2K+ k=2 a=0 b=3 s=+");
    ins.parallel = true;
    ins.orient = Role::Terminal;
    CHECK(format_move(ins) == "2K+ k=2 a=0 b=3 s=+ m=p o=T");

    Move rem = make(MoveKind::TwoKRemove);
    rem.k = 1;
    rem.pos_a = 1;
    CHECK(format_move(rem) == "2K- k=1 at=1");
    rem.pos_b = 3;
    CHECK(format_move(rem) == "2K- k=1 at=1 b=3");
}

TEST_CASE("formatting then parsing returns the identical move") {
    std::vector<Move> moves;
    {
        Move m = make(MoveKind::R1Add);
        m.pos_a = 0;
        m.sign = 1;
        moves.push_back(m);
        m.orient = Role::Terminal;
        m.sign = -1;
        moves.push_back(m);
    }
    {
        Move m = make(MoveKind::R1Remove);
        m.chord = 12;
        moves.push_back(m);
    }
    for (bool crossed : {false, true})
        for (Role orient : {Role::Initial, Role::Terminal}) {
            Move m = make(MoveKind::R2Add);
            m.pos_a = 4;
            m.pos_b = 9;
            m.sign = -1;
            m.crossed = crossed;
            m.orient = orient;
            moves.push_back(m);
        }
    {
        Move m = make(MoveKind::R2Remove);
        m.pos_a = 3;
        moves.push_back(m); // pos_b stays -1: partner left implicit
        m.pos_b = 8;
        moves.push_back(m);
    }
    {
        Move m = make(MoveKind::R3);
        m.pos_a = 1;
        m.pos_b = 4;
        m.pos_c = 7;
        moves.push_back(m);
        Move x = make(MoveKind::XiSwap);
        x.pos_a = 0;
        moves.push_back(x);
    }
    for (bool parallel : {false, true})
        for (Role orient : {Role::Initial, Role::Terminal}) {
            Move m = make(MoveKind::TwoKInsert);
            m.k = 3;
            m.pos_a = 2;
            m.pos_b = 2;
            m.sign = 1;
            m.parallel = parallel;
            m.orient = orient;
            moves.push_back(m);
        }
    {
        Move m = make(MoveKind::TwoKRemove);
        m.k = 2;
        m.pos_a = 5;
        moves.push_back(m);
        m.pos_b = 11;
        moves.push_back(m);
    }

    for (const Move& m : moves) CHECK(parse_move_line(format_move(m)) == m);

    // and through a whole script, including the trailing newline convention
    std::string text = format_script(moves);
    CHECK(parse_script(text) == moves);
}

TEST_CASE("script text tolerates comments, blank lines, and stray spacing") {
    std::string text =
        "# build a pair of kinks\n"
        "  R1+ a=0 s=+ o=I  \n"
        "\n"
        "\t\n"
        "R1+ a=1 s=- o=T\r\n"
        "# done\n";
    MoveScript script = parse_script(text);
    REQUIRE(script.size() == 2);
    CHECK(script[0].kind == MoveKind::R1Add);
    CHECK(script[1].orient == Role::Terminal);

    GaussDiagram out = replay_script(GaussDiagram{}, script);
    CHECK(serialize(out) == "O1+ U2- O2- U1+");
    CHECK(twok_count(script) == 0);
}

TEST_CASE("replay threads each move through the previous result") {
    GaussDiagram vtref = parse_gauss_code("O1+ O2+ U1+ U2+");
    MoveScript script = parse_script("2K- k=1 at=1 b=3\n"
                                     "R1+ a=0 s=+ o=I\n"
                                     "R1- c=1\n");
    CHECK(replay_script(vtref, script).empty());
    CHECK(twok_count(script) == 1);

    // a script that is valid line by line but not at replay time
    MoveScript bad = parse_script("R1- c=3");
    CHECK_THROWS_AS(replay_script(vtref, bad), MoveError);
}

TEST_CASE("move lines reject malformed fields") {
    CHECK_THROWS_AS(parse_move_line(""), ParseError);
    CHECK_THROWS_AS(parse_move_line("BOGUS x=1"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R1+ a=0"), ParseError);            // missing s
    CHECK_THROWS_AS(parse_move_line("R1+ a=0 s=+ z=1"), ParseError);    // unknown field
    CHECK_THROWS_AS(parse_move_line("R1+ a=0 a=1 s=+"), ParseError);    // duplicate
    CHECK_THROWS_AS(parse_move_line("R1+ a=-1 s=+"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R1+ a=0 s=0"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R1+ a=0 s=+ o=X"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R1- c=0"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R1-"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R2+ a=0 b=0 s=+ m=q"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R2- at=1 b=-1"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R3 p=1 q=2"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R3 p=x q=1 r=2"), ParseError);
    CHECK_THROWS_AS(parse_move_line("XI"), ParseError);
    CHECK_THROWS_AS(parse_move_line("XI 1 2"), ParseError);
    CHECK_THROWS_AS(parse_move_line("XI -1"), ParseError);
    CHECK_THROWS_AS(parse_move_line("XI x"), ParseError);
    CHECK_THROWS_AS(parse_move_line("2K+ k=0 a=0 b=0 s=+"), ParseError);
    CHECK_THROWS_AS(parse_move_line("2K+ a=0 b=0 s=+"), ParseError);
    CHECK_THROWS_AS(parse_move_line("2K+ k=1 a=0 b=0 s=+ m=z"), ParseError);
    CHECK_THROWS_AS(parse_move_line("2K- at=1"), ParseError); // missing k
    CHECK_THROWS_AS(parse_move_line("2K- k=1 at=99999999999"), ParseError);
    CHECK_THROWS_AS(parse_move_line("R2- at"), ParseError);   // not key=value
    CHECK_THROWS_AS(parse_move_line("R2- =3"), ParseError);
}

TEST_CASE("explicit antiparallel marker parses to the default flavour") {
    Move m = parse_move_line("2K+ k=1 a=0 b=0 s=+ m=a");
    CHECK_FALSE(m.parallel);
    Move p = parse_move_line("2K+ k=1 a=0 b=0 s=+ m=p");
    CHECK(p.parallel);
}
