#include "vknots/classify.hpp"

#include <stdexcept>

#include "vknots/invariants.hpp"

namespace vknots {

GaussDiagram normal_form_diagram(long long a) {
    long long blocks = a < 0 ? -a : a;
    int sign = a < 0 ? -1 : 1;
    std::vector<Endpoint> circle;
    std::map<int, int> signs;
    for (long long b = 0; b < blocks; ++b) {
        int c1 = static_cast<int>(2 * b + 1), c2 = c1 + 1;
        circle.push_back({c1, Role::Initial});
        circle.push_back({c2, Role::Initial});
        circle.push_back({c1, Role::Terminal});
        circle.push_back({c2, Role::Terminal});
        signs[c1] = sign;
        signs[c2] = sign;
    }
    return GaussDiagram(std::move(circle), std::move(signs));
}

NormalForm classify_2k_xi(const GaussDiagram& g, long long k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    long long half = odd_writhe(g) / 2; // the odd writhe is always even
    long long a = ((half % k) + k) % k;
    return {a, normal_form_diagram(a)};
}

bool same_class_2k_xi(const GaussDiagram& g, const GaussDiagram& h, long long k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    long long diff = odd_writhe(g) - odd_writhe(h);
    return ((diff % (2 * k)) + 2 * k) % (2 * k) == 0;
}

bool xi_equivalent(const GaussDiagram& g, const GaussDiagram& h) {
    return odd_writhe(g) == odd_writhe(h);
}

std::optional<long long> separating_k(const GaussDiagram& g, const GaussDiagram& h) {
    long long diff = odd_writhe(g) - odd_writhe(h);
    if (diff == 0) return std::nullopt;
    for (long long k = 1;; ++k)
        if (diff % (2 * k) != 0) return k;
}

std::vector<GaussDiagram> representative_system(long long k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<GaussDiagram> out;
    out.reserve(static_cast<std::size_t>(k));
    for (long long a = 0; a < k; ++a) out.push_back(normal_form_diagram(a));
    return out;
}

} // namespace vknots
