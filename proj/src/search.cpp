#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_map>

#include "vknots/distance.hpp"
#include "vknots/errors.hpp"

#ifdef VKNOTS_HAVE_OPENMP
#include <omp.h>
#endif

namespace vknots {

namespace {

struct Node {
    std::string code; // canonical form; doubles as the state key
    long long cost = 0;
    long long lb = 0;
    int parent = -1;
    Move via; // move applied to the parent's canonical diagram
    int chords = 0;
    bool queued = false;
};

struct ChildRec {
    std::string code;
    int chords = 0;
    long long cost = 0;
    long long lb = 0;
    Move via;
};

// Generates every admissible successor of one state. Pure function of its
// arguments, so batches can be expanded on worker threads; the result order
// is fixed by the move enumeration order.
std::vector<ChildRec> expand_node(const std::string& code, long long node_cost,
                                  long long node_lb, const WritheVector& target_wv,
                                  long long k, long long chord_cap,
                                  const SearchBudget& budget,
                                  const SearchOptions& opts) {
    GaussDiagram d = parse_gauss_code(code);
    int m = d.endpoint_count();

    struct Edge {
        Move move;
        bool costed = false;
        bool invariant_entries = true; // free Reidemeister moves keep the writhe entries
    };
    std::vector<Edge> edges;

    for (const Move& mv : enumerate_reidemeister(d)) {
        int grow = mv.kind == MoveKind::R1Add ? 1 : mv.kind == MoveKind::R2Add ? 2 : 0;
        if (d.chord_count() + grow > chord_cap) continue;
        edges.push_back({mv, false, true});
    }
    if (opts.allow_xi && m >= 4)
        for (int p = 0; p < m; ++p) {
            Move mv;
            mv.kind = MoveKind::XiSwap;
            mv.pos_a = p;
            edges.push_back({mv, false, false});
        }
    for (const Move& mv : detect_2k_removals(d, static_cast<int>(k)))
        edges.push_back({mv, true, false});
    if (d.chord_count() + 2 * k <= chord_cap) {
        // TODO: also enumerate terminal-first insertions (orient=T); skipping
        // them can only weaken the upper bound, never break it
        auto push_insert = [&](int a, int b, int sign, bool par) {
            Move mv;
            mv.kind = MoveKind::TwoKInsert;
            mv.pos_a = a;
            mv.pos_b = b;
            mv.k = static_cast<int>(k);
            mv.sign = sign;
            mv.parallel = par;
            edges.push_back({mv, true, false});
        };
        if (m == 0) {
            for (int sign : {1, -1})
                for (bool par : {false, true}) push_insert(0, 0, sign, par);
        } else {
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    if (a == b) continue;
                    for (int sign : {1, -1})
                        for (bool par : {false, true}) push_insert(a, b, sign, par);
                }
        }
    }

    std::vector<ChildRec> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        long long cost = node_cost + (e.costed ? 1 : 0);
        if (cost > budget.max_moves) continue;
        GaussDiagram child = apply_move(d, e.move);
        long long lb = node_lb;
        if (!e.invariant_entries) {
            auto b = writhe_lower_bound(writhe_vector(child), target_wv, k);
            if (!b) continue; // congruences forbid ever reaching the target
            lb = *b;
        }
        if (cost + lb > budget.max_moves) continue;
        out.push_back({canonical_code(child), child.chord_count(), cost, lb, e.move});
    }
    return out;
}

} // namespace

std::optional<SearchResult> search_upper_bound(const GaussDiagram& g,
                                               const GaussDiagram& h, long long k,
                                               const SearchBudget& budget,
                                               const SearchOptions& options) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (budget.max_moves < 0) throw std::invalid_argument("max_moves must be nonnegative");
    if (budget.max_states < 1) throw std::invalid_argument("max_states must be positive");

    WritheVector target_wv = writhe_vector(h);
    auto lb0 = writhe_lower_bound(writhe_vector(g), target_wv, k);
    if (!lb0) return std::nullopt;
    long long cap = budget.max_chords >= 0
                        ? budget.max_chords
                        : std::max(g.chord_count(), h.chord_count()) + 2 * k + 2;

    std::string target_code = canonical_code(h);
    std::string root_code = canonical_code(g);
    if (root_code == target_code) return SearchResult{0, {}};
    if (*lb0 > budget.max_moves) return std::nullopt;

    std::vector<Node> nodes;
    std::unordered_map<std::string, int> index;
    nodes.push_back(Node{root_code, 0, *lb0, -1, Move{}, g.chord_count(), true});
    index.emplace(root_code, 0);
    std::vector<int> pending{0};

    struct Goal {
        long long cost;
        int parent;
        Move via;
    };
    std::optional<Goal> best;
    bool states_full = false;
    int batch_cap = std::max(1, options.batch_size);

    while (!pending.empty()) {
        if (best && best->cost == *lb0) break;
        if (best) {
            long long floor = LLONG_MAX;
            for (int i : pending) floor = std::min(floor, nodes[i].cost);
            if (floor >= best->cost) break; // edge costs never decrease along a path
        }
        std::sort(pending.begin(), pending.end(), [&](int x, int y) {
            const Node &a = nodes[x], &b = nodes[y];
            if (a.chords != b.chords) return a.chords < b.chords;
            if (a.cost != b.cost) return a.cost < b.cost;
            return a.code < b.code;
        });
        int take = static_cast<int>(std::min<std::size_t>(batch_cap, pending.size()));
        std::vector<int> batch(pending.begin(), pending.begin() + take);
        pending.erase(pending.begin(), pending.begin() + take);
        for (int i : batch) nodes[i].queued = false;

        std::vector<std::vector<ChildRec>> results(batch.size());
#ifdef VKNOTS_HAVE_OPENMP
        if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int bi = 0; bi < static_cast<int>(batch.size()); ++bi) {
                const Node& n = nodes[batch[bi]];
                results[bi] = expand_node(n.code, n.cost, n.lb, target_wv, k, cap,
                                          budget, options);
            }
        } else
#endif
        {
            for (std::size_t bi = 0; bi < batch.size(); ++bi) {
                const Node& n = nodes[batch[bi]];
                results[bi] = expand_node(n.code, n.cost, n.lb, target_wv, k, cap,
                                          budget, options);
            }
        }

        // admission runs in batch order so outcomes do not depend on thread timing
        for (std::size_t bi = 0; bi < batch.size(); ++bi) {
            int parent_idx = batch[bi];
            for (ChildRec& c : results[bi]) {
                if (c.code == target_code) {
                    if (!best || c.cost < best->cost) best = Goal{c.cost, parent_idx, c.via};
                    continue;
                }
                auto it = index.find(c.code);
                if (it == index.end()) {
                    if (states_full ||
                        static_cast<long long>(nodes.size()) >= budget.max_states) {
                        states_full = true;
                        continue;
                    }
                    int idx = static_cast<int>(nodes.size());
                    nodes.push_back(Node{std::move(c.code), c.cost, c.lb, parent_idx,
                                         c.via, c.chords, true});
                    index.emplace(nodes[idx].code, idx);
                    pending.push_back(idx);
                } else {
                    Node& n = nodes[it->second];
                    if (c.cost < n.cost) {
                        n.cost = c.cost;
                        n.parent = parent_idx;
                        n.via = c.via;
                        if (!n.queued) {
                            n.queued = true;
                            pending.push_back(it->second);
                        }
                    }
                }
            }
        }
    }

    if (!best) return std::nullopt;

    // walk the parent chain; each move lives in its source state's canonical frame
    std::vector<std::pair<Move, const std::string*>> chain;
    chain.emplace_back(best->via, &nodes[best->parent].code);
    for (int at = best->parent; at > 0; at = nodes[at].parent)
        chain.emplace_back(nodes[at].via, &nodes[nodes[at].parent].code);
    std::reverse(chain.begin(), chain.end());

    // re-express each move in the caller's evolving coordinates
    MoveScript script;
    GaussDiagram d = g;
    for (const auto& [canon_move, source_code] : chain) {
        CanonicalForm cf = canonical_form(d);
        if (serialize(cf.diagram) != *source_code)
            throw std::logic_error("search certificate lost its frame");
        std::map<int, int> back;
        for (auto [user_id, canon_id] : cf.relabel) back[canon_id] = user_id;
        Move m = canon_move;
        int sz = d.endpoint_count();
        auto fix_pos = [&](int p) { return p < 0 || sz == 0 ? p : (p + cf.rotation) % sz; };
        m.pos_a = fix_pos(m.pos_a);
        m.pos_b = fix_pos(m.pos_b);
        m.pos_c = fix_pos(m.pos_c);
        if (m.kind == MoveKind::R1Remove) m.chord = back.at(m.chord);
        script.push_back(m);
        d = apply_move(d, m);
    }
    if (canonical_code(d) != target_code)
        throw std::logic_error("search certificate failed to replay");
    return SearchResult{best->cost, std::move(script)};
}

} // namespace vknots
