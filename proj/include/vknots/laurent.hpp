#pragma once

#include <map>
#include <string>

namespace vknots {

// Laurent polynomial in one variable t with integer coefficients,
// stored sparsely as exponent -> coefficient with no zero entries.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(int exponent, long long coefficient);

    void add_term(int exponent, long long coefficient);

    const std::map<int, long long>& terms() const { return terms_; }
    long long coefficient(int exponent) const;
    bool is_zero() const { return terms_.empty(); }

    long long evaluate_at_one() const;

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;

    // Human-readable form, highest exponent first, e.g. "t^2 - 2 + t^-1".
    // The zero polynomial prints as "0".
    std::string to_string() const;

    bool operator==(const LaurentPolynomial&) const = default;

private:
    std::map<int, long long> terms_;
};

} // namespace vknots
