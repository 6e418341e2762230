#include "vknots/laurent.hpp"

#include <sstream>

namespace vknots {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, long long coefficient) {
    LaurentPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

void LaurentPolynomial::add_term(int exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_[exponent] = coefficient;
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

long long LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

long long LaurentPolynomial::evaluate_at_one() const {
    long long total = 0;
    for (const auto& [e, c] : terms_) {
        (void)e;
        total += c;
    }
    return total;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long mag = c < 0 ? -c : c;
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

} // namespace vknots
