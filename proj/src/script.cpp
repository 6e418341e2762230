#include "vknots/script.hpp"

#include <map>
#include <sstream>

#include "vknots/errors.hpp"

namespace vknots {

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

long long parse_int(const std::string& text, const std::string& line) {
    if (text.empty() || text.find_first_not_of("0123456789-") != std::string::npos ||
        text.find('-', 1) != std::string::npos)
        throw ParseError("bad number '" + text + "' in move '" + line + "'");
    try {
        return std::stoll(text);
    } catch (const std::exception&) {
        throw ParseError("bad number '" + text + "' in move '" + line + "'");
    }
}

int field_int(const std::map<std::string, std::string>& kv, const std::string& key,
              const std::string& line, bool required, int fallback = -1) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (required) throw ParseError("move '" + line + "' is missing " + key + "=");
        return fallback;
    }
    long long v = parse_int(it->second, line);
    if (v < 0 || v > 1000000000) throw ParseError("field " + key + " out of range in '" + line + "'");
    return static_cast<int>(v);
}

int field_sign(const std::map<std::string, std::string>& kv, const std::string& line) {
    auto it = kv.find("s");
    if (it == kv.end()) throw ParseError("move '" + line + "' is missing s=");
    if (it->second == "+") return 1;
    if (it->second == "-") return -1;
    throw ParseError("sign must be + or - in '" + line + "'");
}

} // namespace

std::string format_move(const Move& m) {
    std::ostringstream out;
    switch (m.kind) {
    case MoveKind::R1Add:
        out << "R1+ a=" << m.pos_a << " s=" << sign_char(m.sign) << " o="
            << (m.orient == Role::Initial ? 'I' : 'T');
        break;
    case MoveKind::R1Remove:
        out << "R1- c=" << m.chord;
        break;
    case MoveKind::R2Add:
        out << "R2+ a=" << m.pos_a << " b=" << m.pos_b << " s=" << sign_char(m.sign)
            << " m=" << (m.crossed ? 'x' : 'p');
        if (m.orient == Role::Terminal) out << " o=T";
        break;
    case MoveKind::R2Remove:
        out << "R2- at=" << m.pos_a;
        if (m.pos_b >= 0) out << " b=" << m.pos_b;
        break;
    case MoveKind::R3:
        out << "R3 p=" << m.pos_a << " q=" << m.pos_b << " r=" << m.pos_c;
        break;
    case MoveKind::XiSwap:
        out << "XI " << m.pos_a;
        break;
    case MoveKind::TwoKInsert:
        out << "2K+ k=" << m.k << " a=" << m.pos_a << " b=" << m.pos_b
            << " s=" << sign_char(m.sign);
        if (m.parallel) out << " m=p";
        if (m.orient == Role::Terminal) out << " o=T";
        break;
    case MoveKind::TwoKRemove:
        out << "2K- k=" << m.k << " at=" << m.pos_a;
        if (m.pos_b >= 0) out << " b=" << m.pos_b;
        break;
    }
    return out.str();
}

Move parse_move_line(const std::string& line) {
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head.empty()) throw ParseError("empty move line");

    std::vector<std::string> rest;
    for (std::string tok; in >> tok;) rest.push_back(tok);

    Move m;
    if (head == "XI") {
        m.kind = MoveKind::XiSwap;
        if (rest.size() != 1)
            throw ParseError("XI takes exactly one position in '" + line + "'");
        long long v = parse_int(rest[0], line);
        if (v < 0) throw ParseError("XI position must be nonnegative in '" + line + "'");
        m.pos_a = static_cast<int>(v);
        return m;
    }

    std::map<std::string, std::string> kv;
    for (const std::string& tok : rest) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
            throw ParseError("expected key=value, got '" + tok + "' in '" + line + "'");
        std::string key = tok.substr(0, eq);
        if (kv.count(key)) throw ParseError("duplicate field " + key + " in '" + line + "'");
        kv[key] = tok.substr(eq + 1);
    }
    auto role_field = [&](Role fallback) {
        auto it = kv.find("o");
        if (it == kv.end()) return fallback;
        if (it->second == "I") return Role::Initial;
        if (it->second == "T") return Role::Terminal;
        throw ParseError("o must be I or T in '" + line + "'");
    };
    auto expect_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : kv) {
            (void)value;
            bool ok = false;
            for (const char* a : allowed) ok = ok || key == a;
            if (!ok) throw ParseError("unknown field " + key + " in '" + line + "'");
        }
    };

    if (head == "R1+") {
        m.kind = MoveKind::R1Add;
        expect_keys({"a", "s", "o"});
        m.pos_a = field_int(kv, "a", line, true);
        m.sign = field_sign(kv, line);
        m.orient = role_field(Role::Initial);
    } else if (head == "R1-") {
        m.kind = MoveKind::R1Remove;
        expect_keys({"c"});
        m.chord = field_int(kv, "c", line, true);
        if (m.chord < 1) throw ParseError("chord id must be positive in '" + line + "'");
    } else if (head == "R2+") {
        m.kind = MoveKind::R2Add;
        expect_keys({"a", "b", "s", "m", "o"});
        m.pos_a = field_int(kv, "a", line, true);
        m.pos_b = field_int(kv, "b", line, true);
        m.sign = field_sign(kv, line);
        auto it = kv.find("m");
        if (it != kv.end()) {
            if (it->second == "x") m.crossed = true;
            else if (it->second != "p")
                throw ParseError("m must be p or x in '" + line + "'");
        }
        m.orient = role_field(Role::Initial);
    } else if (head == "R2-") {
        m.kind = MoveKind::R2Remove;
        expect_keys({"at", "b"});
        m.pos_a = field_int(kv, "at", line, true);
        m.pos_b = field_int(kv, "b", line, false);
    } else if (head == "R3") {
        m.kind = MoveKind::R3;
        expect_keys({"p", "q", "r"});
        m.pos_a = field_int(kv, "p", line, true);
        m.pos_b = field_int(kv, "q", line, true);
        m.pos_c = field_int(kv, "r", line, true);
    } else if (head == "2K+") {
        m.kind = MoveKind::TwoKInsert;
        expect_keys({"k", "a", "b", "s", "m", "o"});
        m.k = field_int(kv, "k", line, true);
        if (m.k < 1) throw ParseError("k must be at least 1 in '" + line + "'");
        m.pos_a = field_int(kv, "a", line, true);
        m.pos_b = field_int(kv, "b", line, true);
        m.sign = field_sign(kv, line);
        auto it = kv.find("m");
        if (it != kv.end()) {
            if (it->second == "p") m.parallel = true;
            else if (it->second != "a")
                throw ParseError("m must be a or p in '" + line + "'");
        }
        m.orient = role_field(Role::Initial);
    } else if (head == "2K-") {
        m.kind = MoveKind::TwoKRemove;
        expect_keys({"k", "at", "b"});
        m.k = field_int(kv, "k", line, true);
        if (m.k < 1) throw ParseError("k must be at least 1 in '" + line + "'");
        m.pos_a = field_int(kv, "at", line, true);
        m.pos_b = field_int(kv, "b", line, false);
    } else {
        throw ParseError("unknown move '" + head + "'");
    }
    return m;
}

std::string format_script(const MoveScript& script) {
    std::string out;
    for (const Move& m : script) {
        out += format_move(m);
        out += '\n';
    }
    return out;
}

MoveScript parse_script(const std::string& text) {
    MoveScript script;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        auto end = line.find_last_not_of(" \t\r");
        script.push_back(parse_move_line(line.substr(start, end - start + 1)));
    }
    return script;
}

GaussDiagram replay_script(const GaussDiagram& start, const MoveScript& script) {
    GaussDiagram d = start;
    for (const Move& m : script) d = apply_move(d, m);
    return d;
}

int twok_count(const MoveScript& script) {
    int n = 0;
    for (const Move& m : script)
        n += m.kind == MoveKind::TwoKInsert || m.kind == MoveKind::TwoKRemove;
    return n;
}

} // namespace vknots
