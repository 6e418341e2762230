#include "vknots/invariants.hpp"

#include <stdexcept>

namespace vknots {

int endpoint_sign(const GaussDiagram& g, const Endpoint& e) {
    int s = g.sign(e.chord);
    return e.role == Role::Terminal ? s : -s;
}

int endpoint_sign_at(const GaussDiagram& g, int position) {
    return endpoint_sign(g, g.at(position));
}

long long chord_index(const GaussDiagram& g, int chord) {
    auto [from, to] = g.chord_span(chord);
    int m = g.endpoint_count();
    long long total = 0;
    for (int p = (from + 1) % m; p != to; p = (p + 1) % m)
        total += endpoint_sign(g, g.circle()[p]);
    return total;
}

WritheVector writhe_vector(const GaussDiagram& g) {
    WritheVector wv;
    for (const auto& [chord, s] : g.signs()) {
        long long n = chord_index(g, chord);
        if (n == 0) {
            wv.j0 += s;
        } else {
            auto it = wv.entries.find(n);
            if (it == wv.entries.end()) wv.entries[n] = s;
            else if ((it->second += s) == 0) wv.entries.erase(it);
        }
    }
    return wv;
}

long long n_writhe(const GaussDiagram& g, long long n) {
    if (n == 0)
        throw std::invalid_argument("the 0-writhe is not an invariant; "
                                    "read WritheVector::j0 instead");
    auto wv = writhe_vector(g);
    auto it = wv.entries.find(n);
    return it == wv.entries.end() ? 0 : it->second;
}

long long odd_writhe(const GaussDiagram& g) {
    long long total = 0;
    for (const auto& [n, jn] : writhe_vector(g).entries)
        if (n % 2 != 0) total += jn;
    return total;
}

LaurentPolynomial affine_index_polynomial(const GaussDiagram& g) {
    LaurentPolynomial p;
    for (const auto& [chord, s] : g.signs()) {
        long long n = chord_index(g, chord);
        p.add_term(static_cast<int>(n), s);
        p.add_term(0, -s);
    }
    return p;
}

} // namespace vknots
