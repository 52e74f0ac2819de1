#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace braidforge {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable t with exact integer coefficients.
// Canonical form: zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    explicit LaurentPoly(BigInt constant);
    explicit LaurentPoly(long long constant);
    static LaurentPoly monomial(BigInt coefficient, int exponent);

    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;  // require nonzero
    int max_exp() const;
    BigInt coeff(int exponent) const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly operator-() const;
    LaurentPoly shifted(int by) const;  // multiply by t^by
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    // Exact division; throws std::runtime_error on a nonzero remainder.
    LaurentPoly exact_div(const LaurentPoly& divisor) const;

    BigInt one_norm() const;  // sum of |coefficients|

    // e.g. "1 - t + t^2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void set(int exponent, BigInt coefficient);

    std::map<int, BigInt> terms_;
};

// Canonical representative of a polynomial defined up to units +-t^k:
// lowest exponent shifted to 0, coefficient at exponent 0 made positive.
LaurentPoly normalize_up_to_units(const LaurentPoly& p);

}  // namespace braidforge
