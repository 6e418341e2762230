#include "vknots/distance.hpp"

#include <stdexcept>

namespace vknots {

std::optional<long long> writhe_lower_bound(const WritheVector& from,
                                            const WritheVector& to, long long k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::map<long long, long long> delta;
    for (const auto& [n, jn] : to.entries) delta[n] += jn;
    for (const auto& [n, jn] : from.entries) delta[n] -= jn;

    long long pos = 0, neg = 0, odd = 0;
    for (const auto& [n, d] : delta) {
        if (d % k != 0) return std::nullopt; // each 2k-move shifts a pair of entries by k
        if (n > 0) pos += d < 0 ? -d : d;
        else neg += d < 0 ? -d : d;
        if (n % 2 != 0) odd += d;
    }
    if (odd % (2 * k) != 0) return std::nullopt; // odd writhe moves in steps of 2k
    if (pos != neg) return std::nullopt;         // shifts come in (n, -n) pairs
    return pos / k;
}

std::optional<long long> lower_bound_2k(const GaussDiagram& g, const GaussDiagram& h,
                                        long long k) {
    return writhe_lower_bound(writhe_vector(g), writhe_vector(h), k);
}

std::optional<long long> unknotting_lower_bound(const GaussDiagram& g, long long k) {
    return lower_bound_2k(g, GaussDiagram{}, k);
}

GaussDiagram witness_construction(const GaussDiagram& base, long long a, long long k) {
    if (a < 1) throw std::invalid_argument("a must be at least 1");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (a > 1000 || k > 1000 || a * k > 10000)
        throw std::invalid_argument("witness parameters too large");

    std::vector<Endpoint> circle = base.circle();
    std::map<int, int> signs = base.signs();
    int w = static_cast<int>(2 * k);
    int first = base.max_chord_id() + 1;
    int pivot = first + static_cast<int>(a) * w;

    // a forward blocks, the pivot's terminal point, the matching reversed
    // blocks, then the pivot's initial point; every added chord positive.
    // Each block pairs with its mirror as a removable 2k site, and the
    // pivot's endpoints become adjacent once all blocks are gone.
    for (long long t = 0; t < a; ++t)
        for (int j = 0; j < w; ++j) {
            int id = first + static_cast<int>(t) * w + j;
            circle.push_back({id, j % 2 == 0 ? Role::Initial : Role::Terminal});
            signs[id] = 1;
        }
    circle.push_back({pivot, Role::Terminal});
    signs[pivot] = 1;
    for (long long t = a - 1; t >= 0; --t)
        for (int j = w - 1; j >= 0; --j) {
            int id = first + static_cast<int>(t) * w + j;
            circle.push_back({id, j % 2 == 0 ? Role::Terminal : Role::Initial});
        }
    circle.push_back({pivot, Role::Initial});
    return GaussDiagram(std::move(circle), std::move(signs));
}

std::optional<long long> exact_distance(const GaussDiagram& g, const GaussDiagram& h,
                                        long long k, const SearchBudget& budget,
                                        const SearchOptions& options) {
    auto lower = lower_bound_2k(g, h, k);
    if (!lower) return std::nullopt;
    auto found = search_upper_bound(g, h, k, budget, options);
    if (found && found->twok_moves == *lower) return *lower;
    return std::nullopt;
}

} // namespace vknots
