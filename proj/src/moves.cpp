#include "vknots/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vknots/errors.hpp"

namespace vknots {

std::string move_kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::XiSwap: return "XI";
    case MoveKind::TwoKInsert: return "2K+";
    case MoveKind::TwoKRemove: return "2K-";
    }
    throw std::logic_error("unreachable move kind");
}

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

Role flip(Role r) { return r == Role::Initial ? Role::Terminal : Role::Initial; }

int norm_gap(const GaussDiagram& g, int gap, const char* what) {
    if (g.empty()) {
        if (gap != 0)
            throw std::invalid_argument(std::string(what) +
                                        ": the empty diagram only has gap 0");
        return 0;
    }
    return mod(gap, g.endpoint_count());
}

int norm_pos(const GaussDiagram& g, int pos, const char* what) {
    if (g.empty()) throw MoveError(std::string(what) + ": diagram is empty");
    return mod(pos, g.endpoint_count());
}

// Inserts window_a just before position gap_a and window_b just before
// gap_b; at equal gaps window_a goes first. Gaps are linear slots 0..m.
GaussDiagram insert_windows(const GaussDiagram& g, int gap_a,
                            const std::vector<Endpoint>& window_a, int gap_b,
                            const std::vector<Endpoint>& window_b,
                            const std::map<int, int>& added_signs) {
    std::vector<Endpoint> circle;
    int m = g.endpoint_count();
    circle.reserve(m + window_a.size() + window_b.size());
    for (int i = 0; i <= m; ++i) {
        if (i == gap_a) circle.insert(circle.end(), window_a.begin(), window_a.end());
        if (i == gap_b) circle.insert(circle.end(), window_b.begin(), window_b.end());
        if (i < m) circle.push_back(g.circle()[i]);
    }
    std::map<int, int> signs = g.signs();
    for (const auto& [c, s] : added_signs) signs[c] = s;
    return GaussDiagram(std::move(circle), std::move(signs));
}

GaussDiagram remove_positions(const GaussDiagram& g, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    std::set<int> gone(positions.begin(), positions.end());
    std::set<int> dead_chords;
    for (int p : gone) dead_chords.insert(g.circle()[p].chord);
    std::vector<Endpoint> circle;
    circle.reserve(g.circle().size() - gone.size());
    for (int i = 0; i < g.endpoint_count(); ++i)
        if (!gone.count(i)) circle.push_back(g.circle()[i]);
    std::map<int, int> signs = g.signs();
    for (int c : dead_chords) signs.erase(c);
    return GaussDiagram(std::move(circle), std::move(signs));
}

// === site validators ===

bool r2_site_valid(const GaussDiagram& g, int p, int q) {
    int m = g.endpoint_count();
    if (m < 4) return false;
    int p1 = mod(p + 1, m), q1 = mod(q + 1, m);
    std::set<int> span{p, p1, q, q1};
    if (span.size() != 4) return false;
    const Endpoint &e0 = g.circle()[p], &e1 = g.circle()[p1];
    const Endpoint &f0 = g.circle()[q], &f1 = g.circle()[q1];
    if (e0.role != e1.role || f0.role != f1.role || e0.role == f0.role) return false;
    if (e0.chord == e1.chord) return false;
    if (std::set<int>{e0.chord, e1.chord} != std::set<int>{f0.chord, f1.chord})
        return false;
    return g.sign(e0.chord) == -g.sign(e1.chord);
}

int resolve_r2_partner(const GaussDiagram& g, int p) {
    for (int q = 0; q < g.endpoint_count(); ++q)
        if (r2_site_valid(g, p, q)) return q;
    throw MoveError("no R2 pair completes the window at position " + std::to_string(p));
}

struct R3Site {
    int tm = 0, tb = 0, mb = 0; // the three chords, named by the windows they join
    bool valid = false;
};

R3Site r3_site(const GaussDiagram& g, int p, int q, int r) {
    R3Site site;
    int m = g.endpoint_count();
    if (m < 6) return site;
    int starts[3] = {mod(p, m), mod(q, m), mod(r, m)};
    std::set<int> span;
    for (int s : starts) {
        span.insert(s);
        span.insert(mod(s + 1, m));
    }
    if (span.size() != 6) return site;

    // classify windows: one all-initial, one all-terminal, one mixed
    int w_t = -1, w_b = -1, w_m = -1;
    for (int i = 0; i < 3; ++i) {
        Role a = g.circle()[starts[i]].role;
        Role b = g.circle()[mod(starts[i] + 1, m)].role;
        if (a == Role::Initial && b == Role::Initial) w_t = i;
        else if (a == Role::Terminal && b == Role::Terminal) w_b = i;
        else w_m = i;
    }
    if (w_t < 0 || w_b < 0 || w_m < 0 || w_t == w_b || w_t == w_m || w_b == w_m)
        return site;

    auto chords_of = [&](int i) {
        return std::pair<int, int>{g.circle()[starts[i]].chord,
                                   g.circle()[mod(starts[i] + 1, m)].chord};
    };
    auto [t0, t1] = chords_of(w_t);
    auto [m0, m1] = chords_of(w_m);
    auto [b0, b1] = chords_of(w_b);
    std::set<int> all{t0, t1, m0, m1, b0, b1};
    if (t0 == t1 || m0 == m1 || b0 == b1 || all.size() != 3) return site;

    std::set<int> ts{t0, t1}, ms{m0, m1}, bs{b0, b1};
    int tm = -1, tb = -1, mb = -1;
    for (int c : all) {
        bool in_t = ts.count(c), in_m = ms.count(c), in_b = bs.count(c);
        if (in_t && in_m && !in_b) tm = c;
        else if (in_t && in_b && !in_m) tb = c;
        else if (in_m && in_b && !in_t) mb = c;
        else return site;
    }
    if (tm < 0 || tb < 0 || mb < 0) return site;

    // order bits: which chord leads each window
    bool bit_t = t0 == tm;
    bool bit_m = m0 == tm;
    bool bit_b = b0 == tb;
    bool s_tm = g.sign(tm) > 0, s_tb = g.sign(tb) > 0, s_mb = g.sign(mb) > 0;
    // a slide site exists exactly when the window orders are compatible with
    // the chord signs: the top/middle orders agree iff sign(tb)*sign(mb) > 0,
    // and the middle/bottom orders agree iff sign(tm)*sign(tb) > 0
    if (((bit_t == bit_m) != (s_tb == s_mb)) || ((bit_m == bit_b) != (s_tm == s_tb)))
        return site;
    site.tm = tm;
    site.tb = tb;
    site.mb = mb;
    site.valid = true;
    return site;
}

struct TwoKMatch {
    bool ok = false;
    bool parallel = false;
    int sign = 0;
};

TwoKMatch match_2k(const GaussDiagram& g, int p, int q, int k) {
    TwoKMatch res;
    int m = g.endpoint_count();
    int w = 2 * k;
    if (k < 1 || m < 2 * w) return res;
    p = mod(p, m);
    q = mod(q, m);
    std::vector<const Endpoint*> w1, w2;
    std::set<int> span;
    for (int i = 0; i < w; ++i) {
        int a = mod(p + i, m), b = mod(q + i, m);
        span.insert(a);
        span.insert(b);
        w1.push_back(&g.circle()[a]);
        w2.push_back(&g.circle()[b]);
    }
    if (static_cast<int>(span.size()) != 2 * w) return res;

    std::set<int> c1, c2;
    for (int i = 0; i < w; ++i) {
        c1.insert(w1[i]->chord);
        c2.insert(w2[i]->chord);
        if (i > 0 && (w1[i]->role == w1[i - 1]->role || w2[i]->role == w2[i - 1]->role))
            return res; // roles must alternate along each window
    }
    if (static_cast<int>(c1.size()) != w || c1 != c2) return res;

    int s = g.sign(*c1.begin());
    for (int c : c1)
        if (g.sign(c) != s) return res;

    bool anti = true, par = true;
    for (int i = 0; i < w; ++i) {
        if (w1[i]->chord != w2[w - 1 - i]->chord) anti = false;
        if (w1[i]->chord != w2[i]->chord) par = false;
    }
    if (!anti && !par) return res;
    res.ok = true;
    res.parallel = par;
    res.sign = s;
    return res;
}

int resolve_2k_partner(const GaussDiagram& g, int p, int k) {
    for (int q = 0; q < g.endpoint_count(); ++q)
        if (match_2k(g, p, q, k).ok) return q;
    throw MoveError("no 2k block completes the window at position " + std::to_string(p));
}

// === individual applications ===

GaussDiagram do_r1_add(const GaussDiagram& g, int gap, int sign, Role first) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    gap = norm_gap(g, gap, "R1 insertion");
    int id = g.max_chord_id() + 1;
    return insert_windows(g, gap, {{id, first}, {id, flip(first)}}, -1, {}, {{id, sign}});
}

GaussDiagram do_r1_remove(const GaussDiagram& g, int chord) {
    if (!g.has_chord(chord))
        throw MoveError("no chord " + std::to_string(chord) + " to remove");
    auto [i, t] = g.chord_span(chord);
    int m = g.endpoint_count();
    if (mod(i + 1, m) != t && mod(t + 1, m) != i)
        throw MoveError("chord " + std::to_string(chord) +
                        " is not an isolated kink: endpoints are not adjacent");
    return remove_positions(g, {i, t});
}

GaussDiagram do_r2_add(const GaussDiagram& g, const Move& mv) {
    if (mv.sign != 1 && mv.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    int ga = norm_gap(g, mv.pos_a, "R2 insertion");
    int gb = norm_gap(g, mv.pos_b, "R2 insertion");
    int c = g.max_chord_id() + 1, d = c + 1;
    std::vector<Endpoint> wi{{c, Role::Initial}, {d, Role::Initial}};
    std::vector<Endpoint> wt = mv.crossed
                                   ? std::vector<Endpoint>{{d, Role::Terminal}, {c, Role::Terminal}}
                                   : std::vector<Endpoint>{{c, Role::Terminal}, {d, Role::Terminal}};
    std::map<int, int> signs{{c, mv.sign}, {d, -mv.sign}};
    if (mv.orient == Role::Initial)
        return insert_windows(g, ga, wi, gb, wt, signs);
    return insert_windows(g, ga, wt, gb, wi, signs);
}

GaussDiagram do_r2_remove(const GaussDiagram& g, int p, int q) {
    int m = g.endpoint_count();
    p = norm_pos(g, p, "R2 removal");
    q = q < 0 ? resolve_r2_partner(g, p) : norm_pos(g, q, "R2 removal");
    if (!r2_site_valid(g, p, q))
        throw MoveError("positions " + std::to_string(p) + "," + std::to_string(q) +
                        " do not start an R2 pair of windows");
    return remove_positions(g, {p, mod(p + 1, m), q, mod(q + 1, m)});
}

GaussDiagram do_r3(const GaussDiagram& g, int p, int q, int r) {
    int m = g.endpoint_count();
    if (m < 6) throw MoveError("R3 needs at least three chords");
    p = mod(p, m);
    q = mod(q, m);
    r = mod(r, m);
    if (!r3_site(g, p, q, r).valid)
        throw MoveError("positions " + std::to_string(p) + "," + std::to_string(q) +
                        "," + std::to_string(r) + " do not form a slide site");
    std::vector<Endpoint> circle = g.circle();
    for (int s : {p, q, r}) std::swap(circle[s], circle[mod(s + 1, m)]);
    return GaussDiagram(std::move(circle), g.signs());
}

GaussDiagram do_xi(const GaussDiagram& g, int position) {
    int m = g.endpoint_count();
    if (m < 4) throw MoveError("xi swap needs at least two chords");
    position = mod(position, m);
    std::vector<Endpoint> circle = g.circle();
    std::swap(circle[position], circle[mod(position + 2, m)]);
    return GaussDiagram(std::move(circle), g.signs());
}

GaussDiagram do_2k_insert(const GaussDiagram& g, const Move& mv) {
    if (mv.k < 1) throw std::invalid_argument("k must be at least 1");
    if (mv.sign != 1 && mv.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    int ga = norm_gap(g, mv.pos_a, "2k insertion");
    int gb = norm_gap(g, mv.pos_b, "2k insertion");
    int w = 2 * mv.k;
    int base = g.max_chord_id() + 1;
    std::vector<Endpoint> e, f;
    std::map<int, int> signs;
    for (int j = 0; j < w; ++j) {
        e.push_back({base + j, j % 2 == 0 ? Role::Initial : Role::Terminal});
        signs[base + j] = mv.sign;
    }
    if (mv.parallel) {
        for (int j = 0; j < w; ++j)
            f.push_back({base + j, j % 2 == 0 ? Role::Terminal : Role::Initial});
    } else {
        for (int j = w - 1; j >= 0; --j)
            f.push_back({base + j, j % 2 == 0 ? Role::Terminal : Role::Initial});
    }
    if (mv.orient == Role::Terminal) {
        // open both windows with terminal endpoints instead
        for (Endpoint& ep : e) ep.role = flip(ep.role);
        for (Endpoint& ep : f) ep.role = flip(ep.role);
    }
    return insert_windows(g, ga, e, gb, f, signs);
}

GaussDiagram do_2k_remove(const GaussDiagram& g, int p, int q, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    p = norm_pos(g, p, "2k removal");
    q = q < 0 ? resolve_2k_partner(g, p, k) : norm_pos(g, q, "2k removal");
    if (!match_2k(g, p, q, k).ok)
        throw MoveError("positions " + std::to_string(p) + "," + std::to_string(q) +
                        " do not start matched 2k windows");
    int m = g.endpoint_count();
    std::vector<int> gone;
    for (int i = 0; i < 2 * k; ++i) {
        gone.push_back(mod(p + i, m));
        gone.push_back(mod(q + i, m));
    }
    return remove_positions(g, gone);
}

// Reinsertion slots for two removed windows of w endpoints each. Walking
// the circle from a surviving endpoint keeps the cyclic order intact even
// when a window touches the basepoint, and fixes which window has to go
// back first when both collapse into the same slot (insert_windows puts
// the pos_a window ahead of the pos_b one there).
struct RemovedWindows {
    int first = 0, second = 0;         // window starts, in reinsertion order
    int gap_first = 0, gap_second = 0; // slots relative to the shrunken diagram
};

RemovedWindows removal_sites(const GaussDiagram& g, int p, int q, int w) {
    int m = g.endpoint_count();
    std::set<int> removed;
    for (int i = 0; i < w; ++i) {
        removed.insert(mod(p + i, m));
        removed.insert(mod(q + i, m));
    }
    int start = 0;
    while (start < m && removed.count(start)) ++start;
    RemovedWindows out;
    out.first = -1;
    int survivors = 0;
    for (int step = 0; step < m; ++step) {
        int pos = mod(start + step, m);
        if (pos == p || pos == q) {
            if (out.first < 0) {
                out.first = pos;
                out.gap_first = survivors;
            } else {
                out.second = pos;
                out.gap_second = survivors;
            }
        }
        if (!removed.count(pos)) ++survivors;
    }
    return out;
}

} // namespace

// === public move interface ===

GaussDiagram apply_move(const GaussDiagram& g, const Move& m) {
    switch (m.kind) {
    case MoveKind::R1Add: return do_r1_add(g, m.pos_a, m.sign, m.orient);
    case MoveKind::R1Remove: return do_r1_remove(g, m.chord);
    case MoveKind::R2Add: return do_r2_add(g, m);
    case MoveKind::R2Remove: return do_r2_remove(g, m.pos_a, m.pos_b);
    case MoveKind::R3: return do_r3(g, m.pos_a, m.pos_b, m.pos_c);
    case MoveKind::XiSwap: return do_xi(g, m.pos_a);
    case MoveKind::TwoKInsert: return do_2k_insert(g, m);
    case MoveKind::TwoKRemove: return do_2k_remove(g, m.pos_a, m.pos_b, m.k);
    }
    throw std::logic_error("unreachable move kind");
}

std::vector<Move> enumerate_reidemeister(const GaussDiagram& g) {
    std::vector<Move> out;
    int m = g.endpoint_count();

    for (const auto& [c, s] : g.signs()) {
        (void)s;
        auto [i, t] = g.chord_span(c);
        if (mod(i + 1, m) == t || mod(t + 1, m) == i) {
            Move mv;
            mv.kind = MoveKind::R1Remove;
            mv.chord = c;
            out.push_back(mv);
        }
    }
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            if (r2_site_valid(g, p, q)) {
                Move mv;
                mv.kind = MoveKind::R2Remove;
                mv.pos_a = p;
                mv.pos_b = q;
                out.push_back(mv);
            }
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            for (int r = q + 1; r < m; ++r)
                if (r3_site(g, p, q, r).valid) {
                    Move mv;
                    mv.kind = MoveKind::R3;
                    mv.pos_a = p;
                    mv.pos_b = q;
                    mv.pos_c = r;
                    out.push_back(mv);
                }

    int gap_count = g.empty() ? 1 : m;
    for (int gap = 0; gap < gap_count; ++gap)
        for (int sign : {1, -1})
            for (Role orient : {Role::Initial, Role::Terminal}) {
                Move mv;
                mv.kind = MoveKind::R1Add;
                mv.pos_a = gap;
                mv.sign = sign;
                mv.orient = orient;
                out.push_back(mv);
            }
    for (int ga = 0; ga < gap_count; ++ga)
        for (int gb = 0; gb < gap_count; ++gb)
            for (int sign : {1, -1})
                for (bool crossed : {false, true}) {
                    Move mv;
                    mv.kind = MoveKind::R2Add;
                    mv.pos_a = ga;
                    mv.pos_b = gb;
                    mv.sign = sign;
                    mv.crossed = crossed;
                    out.push_back(mv);
                }
    return out;
}

Move inverse_move(const GaussDiagram& g, const Move& m) {
    int sz = g.endpoint_count();
    switch (m.kind) {
    case MoveKind::R1Add: {
        Move inv;
        inv.kind = MoveKind::R1Remove;
        inv.chord = g.max_chord_id() + 1;
        return inv;
    }
    case MoveKind::R1Remove: {
        if (!g.has_chord(m.chord))
            throw MoveError("no chord " + std::to_string(m.chord));
        auto [i, t] = g.chord_span(m.chord);
        int first = mod(i + 1, sz) == t ? i : t;
        Move inv;
        inv.kind = MoveKind::R1Add;
        inv.sign = g.sign(m.chord);
        inv.orient = g.circle()[first].role;
        inv.pos_a = first == sz - 1 ? 0 : first; // wrapped kink reinserts at the basepoint
        return inv;
    }
    case MoveKind::R2Add: {
        int ga = norm_gap(g, m.pos_a, "R2 insertion");
        int gb = norm_gap(g, m.pos_b, "R2 insertion");
        int sa = ga <= gb ? ga : ga + 2;
        int sb = ga <= gb ? gb + 2 : gb;
        Move inv;
        inv.kind = MoveKind::R2Remove;
        inv.pos_a = std::min(sa, sb);
        inv.pos_b = std::max(sa, sb);
        return inv;
    }
    case MoveKind::R2Remove: {
        int p = norm_pos(g, m.pos_a, "R2 removal");
        int q = m.pos_b < 0 ? resolve_r2_partner(g, p) : norm_pos(g, m.pos_b, "R2 removal");
        if (!r2_site_valid(g, p, q)) throw MoveError("invalid R2 removal site");
        int pi = g.circle()[p].role == Role::Initial ? p : q;
        int c = g.circle()[pi].chord;
        int d = g.circle()[mod(pi + 1, sz)].chord;
        int pt = pi == p ? q : p;
        RemovedWindows sites = removal_sites(g, p, q, 2);
        Move inv;
        inv.kind = MoveKind::R2Add;
        inv.pos_a = sites.gap_first;
        inv.pos_b = sites.gap_second;
        inv.sign = g.sign(c);
        inv.crossed = g.circle()[pt].chord == d;
        inv.orient = g.circle()[sites.first].role;
        return inv;
    }
    case MoveKind::R3: return m;
    case MoveKind::XiSwap: return m;
    case MoveKind::TwoKInsert: {
        int ga = norm_gap(g, m.pos_a, "2k insertion");
        int gb = norm_gap(g, m.pos_b, "2k insertion");
        int w = 2 * m.k;
        int sa = ga <= gb ? ga : ga + w;
        int sb = ga <= gb ? gb + w : gb;
        Move inv;
        inv.kind = MoveKind::TwoKRemove;
        inv.k = m.k;
        inv.pos_a = std::min(sa, sb);
        inv.pos_b = std::max(sa, sb);
        return inv;
    }
    case MoveKind::TwoKRemove: {
        int p = norm_pos(g, m.pos_a, "2k removal");
        int q = m.pos_b < 0 ? resolve_2k_partner(g, p, m.k)
                            : norm_pos(g, m.pos_b, "2k removal");
        TwoKMatch match = match_2k(g, p, q, m.k);
        if (!match.ok) throw MoveError("invalid 2k removal site");
        RemovedWindows sites = removal_sites(g, p, q, 2 * m.k);
        Move inv;
        inv.kind = MoveKind::TwoKInsert;
        inv.k = m.k;
        inv.sign = match.sign;
        inv.parallel = match.parallel;
        inv.pos_a = sites.gap_first;
        inv.pos_b = sites.gap_second;
        // the block has to reopen with whatever role the removed windows
        // led with, and the first site fixes that orientation
        inv.orient = g.circle()[sites.first].role;
        return inv;
    }
    }
    throw std::logic_error("unreachable move kind");
}

GaussDiagram apply_xi(const GaussDiagram& g, int position) { return do_xi(g, position); }

GaussDiagram apply_2k_insert(const GaussDiagram& g, int site_a, int site_b, int k,
                             int sign) {
    Move mv;
    mv.kind = MoveKind::TwoKInsert;
    mv.pos_a = site_a;
    mv.pos_b = site_b;
    mv.k = k;
    mv.sign = sign;
    return do_2k_insert(g, mv);
}

std::vector<Move> detect_2k_removals(const GaussDiagram& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<Move> out;
    int m = g.endpoint_count();
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            if (match_2k(g, p, q, k).ok) {
                Move mv;
                mv.kind = MoveKind::TwoKRemove;
                mv.pos_a = p;
                mv.pos_b = q;
                mv.k = k;
                out.push_back(mv);
            }
    return out;
}

// === shells and shell pairs ===

std::vector<Shell> find_shells(const GaussDiagram& g) {
    std::vector<Shell> out;
    int m = g.endpoint_count();
    if (m < 4) return out;
    for (const auto& [c, s] : g.signs()) {
        (void)s;
        auto [i, t] = g.chord_span(c);
        if (mod(t - i, m) == 2) out.push_back({c, g.circle()[mod(i + 1, m)]});
        if (mod(i - t, m) == 2) out.push_back({c, g.circle()[mod(t + 1, m)]});
    }
    return out;
}

std::vector<ShellPair> find_shell_pairs(const GaussDiagram& g) {
    std::vector<ShellPair> out;
    int m = g.endpoint_count();
    if (m < 4) return out;
    std::set<std::pair<int, int>> seen;
    for (int p = 0; p < m; ++p) {
        int a = g.circle()[p].chord;
        if (g.circle()[mod(p + 2, m)].chord != a) continue;
        int b = g.circle()[mod(p + 1, m)].chord;
        if (b == a || g.circle()[mod(p + 3, m)].chord != b) continue;
        if (g.sign(a) != g.sign(b)) continue;
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
        out.push_back({p, a, b, g.sign(a)});
    }
    return out;
}

namespace {

void require_shellpair(const GaussDiagram& g, const ShellPair& sp) {
    int m = g.endpoint_count();
    bool ok = m >= 4 && sp.chord_a != sp.chord_b && g.has_chord(sp.chord_a) &&
              g.has_chord(sp.chord_b) &&
              g.circle()[mod(sp.start, m)].chord == sp.chord_a &&
              g.circle()[mod(sp.start + 2, m)].chord == sp.chord_a &&
              g.circle()[mod(sp.start + 1, m)].chord == sp.chord_b &&
              g.circle()[mod(sp.start + 3, m)].chord == sp.chord_b &&
              g.sign(sp.chord_a) == g.sign(sp.chord_b) && g.sign(sp.chord_a) == sp.sign;
    if (!ok) throw MoveError("shell pair is not present at position " +
                             std::to_string(sp.start));
}

} // namespace

ScriptResult shellpair_transport(const GaussDiagram& g, const ShellPair& sp, Side side) {
    require_shellpair(g, sp);
    int m = g.endpoint_count();
    if (m < 6) throw MoveError("no endpoint outside the shell pair to transport past");
    int p = mod(sp.start, m);
    MoveScript script;
    for (int pos : side == Side::Left ? std::vector<int>{mod(p - 1, m), mod(p + 1, m)}
                                      : std::vector<int>{mod(p + 2, m), p}) {
        Move mv;
        mv.kind = MoveKind::XiSwap;
        mv.pos_a = pos;
        script.push_back(mv);
    }
    GaussDiagram d = g;
    for (const Move& mv : script) d = apply_move(d, mv);
    return {std::move(d), std::move(script)};
}

ScriptResult shellpair_cancel(const GaussDiagram& g, const ShellPair& first,
                              const ShellPair& second) {
    require_shellpair(g, first);
    require_shellpair(g, second);
    int m = g.endpoint_count();
    const ShellPair *lead = &first, *trail = &second;
    if (mod(lead->start + 4, m) != mod(trail->start, m)) std::swap(lead, trail);
    if (mod(lead->start + 4, m) != mod(trail->start, m))
        throw MoveError("shell pairs are not adjacent");
    if (lead->sign != -trail->sign)
        throw MoveError("shell pairs do not have opposite signs");
    int p = mod(lead->start, m);
    // role layout must align so that both R2 windows come out uniform
    if (g.circle()[p].role != g.circle()[mod(p + 5, m)].role ||
        g.circle()[mod(p + 1, m)].role != g.circle()[mod(p + 4, m)].role)
        throw MoveError("shell pairs have incompatible role patterns");

    int chord_a = lead->chord_a, chord_b = lead->chord_b;
    Role role_a1 = g.circle()[p].role, role_b1 = g.circle()[mod(p + 1, m)].role;

    MoveScript script;
    GaussDiagram d = g;
    for (int pos : {mod(p + 2, m), mod(p + 3, m)}) {
        Move mv;
        mv.kind = MoveKind::XiSwap;
        mv.pos_a = pos;
        script.push_back(mv);
        d = apply_move(d, mv);
    }
    Move r2a;
    r2a.kind = MoveKind::R2Remove;
    r2a.pos_a = d.position_of(chord_b, role_b1);
    r2a.pos_b = d.position_of(chord_b, flip(role_b1));
    script.push_back(r2a);
    d = apply_move(d, r2a);

    Move r2b;
    r2b.kind = MoveKind::R2Remove;
    r2b.pos_a = d.position_of(chord_a, role_a1);
    r2b.pos_b = d.position_of(chord_a, flip(role_a1));
    script.push_back(r2b);
    d = apply_move(d, r2b);
    return {std::move(d), std::move(script)};
}

ScriptResult add_k_shellpairs(const GaussDiagram& g, int gap, int k, int sign) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    gap = norm_gap(g, gap, "shell pair insertion");

    int kink = g.max_chord_id() + 1;
    MoveScript script;
    GaussDiagram d = g;

    Move m1;
    m1.kind = MoveKind::R1Add;
    m1.pos_a = gap;
    m1.sign = +1;
    m1.orient = Role::Initial;
    script.push_back(m1);
    d = apply_move(d, m1);

    Move m2;
    m2.kind = MoveKind::TwoKInsert;
    m2.pos_a = gap;
    m2.pos_b = gap + 1;
    m2.k = k;
    m2.sign = sign;
    script.push_back(m2);
    d = apply_move(d, m2);

    // the 4k+2 inserted endpoints occupy gap .. gap+4k+1; comb them into k
    // shell pair blocks followed by the kink, using xi swaps that stay
    // inside the region (a xi swap moves an endpoint by two, so each
    // endpoint stays in its parity class; the block layout is chosen so
    // the classes already agree)
    int len = 4 * k + 2;
    std::vector<Endpoint> want;
    for (int j = 0; j < k; ++j) {
        int c1 = kink + 1 + 2 * j, c2 = c1 + 1;
        want.push_back({c1, Role::Initial});
        want.push_back({c2, Role::Initial});
        want.push_back({c1, Role::Terminal});
        want.push_back({c2, Role::Terminal});
    }
    want.push_back({kink, Role::Initial});
    want.push_back({kink, Role::Terminal});

    std::vector<Endpoint> cur(d.circle().begin() + gap, d.circle().begin() + gap + len);
    for (int t = 0; t < len; ++t) {
        if (cur[t] == want[t]) continue;
        int s = -1;
        for (int u = t + 2; u < len; u += 2)
            if (cur[u] == want[t]) {
                s = u;
                break;
            }
        if (s < 0) throw std::logic_error("shell pair comb lost an endpoint");
        while (s > t) {
            Move mx;
            mx.kind = MoveKind::XiSwap;
            mx.pos_a = gap + s - 2;
            script.push_back(mx);
            d = apply_move(d, mx);
            std::swap(cur[s - 2], cur[s]);
            s -= 2;
        }
    }

    Move m3;
    m3.kind = MoveKind::R1Remove;
    m3.chord = kink;
    script.push_back(m3);
    d = apply_move(d, m3);
    return {std::move(d), std::move(script)};
}

} // namespace vknots
