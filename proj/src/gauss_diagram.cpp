#include "vknots/gauss_diagram.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "vknots/errors.hpp"

namespace vknots {

char role_char(Role r) { return r == Role::Initial ? 'O' : 'U'; }

// === construction and validation ===

GaussDiagram::GaussDiagram(std::vector<Endpoint> circle, std::map<int, int> signs)
    : circle_(std::move(circle)), signs_(std::move(signs)) {
    std::map<int, int> initials, terminals;
    for (const Endpoint& e : circle_) {
        auto& n = e.role == Role::Initial ? initials[e.chord] : terminals[e.chord];
        ++n;
    }
    for (const auto& [chord, s] : signs_) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("chord " + std::to_string(chord) +
                                        " has sign " + std::to_string(s));
        if (initials[chord] != 1 || terminals[chord] != 1)
            throw std::invalid_argument("chord " + std::to_string(chord) +
                                        " does not have exactly one initial and one "
                                        "terminal endpoint");
    }
    for (const Endpoint& e : circle_)
        if (!signs_.count(e.chord))
            throw std::invalid_argument("chord " + std::to_string(e.chord) +
                                        " appears on the circle but has no sign");
}

const Endpoint& GaussDiagram::at(int position) const {
    if (circle_.empty())
        throw std::invalid_argument("empty diagram has no endpoints");
    int m = endpoint_count();
    return circle_[((position % m) + m) % m];
}

int GaussDiagram::sign(int chord) const {
    auto it = signs_.find(chord);
    if (it == signs_.end())
        throw std::invalid_argument("no chord " + std::to_string(chord));
    return it->second;
}

int GaussDiagram::max_chord_id() const {
    return signs_.empty() ? 0 : signs_.rbegin()->first;
}

std::pair<int, int> GaussDiagram::chord_span(int chord) const {
    return {position_of(chord, Role::Initial), position_of(chord, Role::Terminal)};
}

int GaussDiagram::position_of(int chord, Role role) const {
    for (int i = 0; i < endpoint_count(); ++i)
        if (circle_[i].chord == chord && circle_[i].role == role) return i;
    throw std::invalid_argument("no chord " + std::to_string(chord));
}

// === text form ===

GaussDiagram parse_gauss_code(const std::string& text) {
    std::vector<Endpoint> circle;
    std::map<int, int> signs;

    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (token.size() < 3)
            throw ParseError("malformed token '" + token + "'");
        Role role;
        if (token[0] == 'O') role = Role::Initial;
        else if (token[0] == 'U') role = Role::Terminal;
        else throw ParseError("malformed token '" + token + "': expected O or U");
        char sc = token.back();
        if (sc != '+' && sc != '-')
            throw ParseError("malformed token '" + token + "': expected trailing + or -");
        std::string digits = token.substr(1, token.size() - 2);
        if (digits.empty() || digits[0] == '0' ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed token '" + token + "': bad chord id");
        long long wide = 0;
        for (char c : digits) {
            wide = wide * 10 + (c - '0');
            if (wide > 1000000000) throw ParseError("chord id too large in '" + token + "'");
        }
        int id = static_cast<int>(wide);
        int sign = sc == '+' ? 1 : -1;

        for (const Endpoint& e : circle)
            if (e.chord == id && e.role == role)
                throw ParseError("chord " + std::to_string(id) + " has two " +
                                 role_char(role) + std::string(" endpoints"));
        auto it = signs.find(id);
        if (it != signs.end() && it->second != sign)
            throw ParseError("chord " + std::to_string(id) + " has conflicting signs");
        signs[id] = sign;
        circle.push_back({id, role});
        token.clear();
    };

    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') flush();
        else token.push_back(c);
    }
    flush();

    for (const auto& [id, s] : signs) {
        (void)s;
        int count = 0;
        for (const Endpoint& e : circle) count += e.chord == id;
        if (count != 2)
            throw ParseError("chord " + std::to_string(id) + " is missing an endpoint");
    }
    return GaussDiagram(std::move(circle), std::move(signs));
}

std::string serialize(const GaussDiagram& g) {
    std::ostringstream out;
    bool first = true;
    for (const Endpoint& e : g.circle()) {
        if (!first) out << ' ';
        first = false;
        out << role_char(e.role) << e.chord << (g.sign(e.chord) > 0 ? '+' : '-');
    }
    return out.str();
}

// === rotation, relabeling, canonical form ===

GaussDiagram rotated(const GaussDiagram& g, int offset) {
    if (g.empty()) return g;
    int m = g.endpoint_count();
    offset = ((offset % m) + m) % m;
    std::vector<Endpoint> circle;
    circle.reserve(m);
    for (int i = 0; i < m; ++i) circle.push_back(g.circle()[(i + offset) % m]);
    return GaussDiagram(std::move(circle), g.signs());
}

GaussDiagram relabel_by_first_appearance(const GaussDiagram& g) {
    std::map<int, int> rename;
    int next = 1;
    for (const Endpoint& e : g.circle())
        if (!rename.count(e.chord)) rename[e.chord] = next++;
    std::vector<Endpoint> circle;
    circle.reserve(g.circle().size());
    for (const Endpoint& e : g.circle()) circle.push_back({rename[e.chord], e.role});
    std::map<int, int> signs;
    for (const auto& [chord, s] : g.signs()) signs[rename[chord]] = s;
    return GaussDiagram(std::move(circle), std::move(signs));
}

namespace {

// Least rotation under the per-endpoint key (role, first-appearance label,
// sign) with Initial < Terminal and + < -. Streams each rotation's key
// against the best one so far instead of materializing candidate diagrams;
// ties keep the earliest rotation.
int best_rotation(const GaussDiagram& g) {
    int m = g.endpoint_count();
    std::map<int, int> dense;
    for (const auto& [c, s] : g.signs()) {
        (void)s;
        int next = static_cast<int>(dense.size());
        dense.emplace(c, next);
    }
    std::vector<int> chord(m), attrs(m);
    for (int i = 0; i < m; ++i) {
        const Endpoint& e = g.circle()[i];
        chord[i] = dense[e.chord];
        attrs[i] = (e.role == Role::Terminal ? 2 : 0) | (g.sign(e.chord) > 0 ? 0 : 1);
    }

    int best_r = 0;
    std::vector<int> best_key(2 * m), cur(2 * m), label(dense.size());
    auto fill_key = [&](int r, std::vector<int>& key, bool compare, bool& smaller,
                        bool& bigger) {
        std::fill(label.begin(), label.end(), 0);
        int next = 1;
        smaller = bigger = false;
        for (int i = 0; i < m; ++i) {
            int p = (i + r) % m;
            int& lab = label[chord[p]];
            if (lab == 0) lab = next++;
            // role bit first, then label, then sign bit
            key[2 * i] = (attrs[p] & 2) ? (1 << 20) + lab : lab;
            key[2 * i + 1] = attrs[p] & 1;
            if (compare && !smaller) {
                for (int t = 2 * i; t <= 2 * i + 1; ++t) {
                    if (key[t] < best_key[t]) {
                        smaller = true;
                        break;
                    }
                    if (key[t] > best_key[t]) {
                        bigger = true;
                        return;
                    }
                }
            }
        }
    };
    bool smaller, bigger;
    fill_key(0, best_key, false, smaller, bigger);
    for (int r = 1; r < m; ++r) {
        fill_key(r, cur, true, smaller, bigger);
        if (smaller && !bigger) {
            best_key.swap(cur);
            best_r = r;
        }
    }
    return best_r;
}

std::map<int, int> first_appearance_map(const GaussDiagram& g) {
    std::map<int, int> rename;
    int next = 1;
    for (const Endpoint& e : g.circle())
        if (!rename.count(e.chord)) rename[e.chord] = next++;
    return rename;
}

} // namespace

CanonicalForm canonical_form(const GaussDiagram& g) {
    if (g.empty()) return {g, 0, {}};
    int r = best_rotation(g);
    GaussDiagram turned = rotated(g, r);
    return {relabel_by_first_appearance(turned), r, first_appearance_map(turned)};
}

GaussDiagram canonicalize(const GaussDiagram& g) { return canonical_form(g).diagram; }

std::string canonical_code(const GaussDiagram& g) {
    if (g.empty()) return "";
    int m = g.endpoint_count();
    int r = best_rotation(g);
    std::map<int, int> rename;
    int next = 1;
    std::string out;
    out.reserve(static_cast<std::size_t>(m) * 4);
    for (int i = 0; i < m; ++i) {
        const Endpoint& e = g.circle()[(i + r) % m];
        auto [it, fresh] = rename.emplace(e.chord, next);
        if (fresh) ++next;
        if (i) out += ' ';
        out += role_char(e.role);
        out += std::to_string(it->second);
        out += g.sign(e.chord) > 0 ? '+' : '-';
    }
    return out;
}

// === random diagrams ===

GaussDiagram random_diagram(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("chord count must be nonnegative");
    std::mt19937_64 rng(seed);
    int m = 2 * n;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    // Fisher-Yates with explicit modular draws so results do not depend on
    // the standard library's distribution implementations.
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Endpoint> circle(m);
    std::map<int, int> signs;
    for (int c = 1; c <= n; ++c) {
        int p = perm[2 * (c - 1)], q = perm[2 * (c - 1) + 1];
        bool p_initial = rng() & 1;
        circle[p] = {c, p_initial ? Role::Initial : Role::Terminal};
        circle[q] = {c, p_initial ? Role::Terminal : Role::Initial};
        signs[c] = (rng() & 1) ? 1 : -1;
    }
    return relabel_by_first_appearance(GaussDiagram(std::move(circle), std::move(signs)));
}

} // namespace vknots
