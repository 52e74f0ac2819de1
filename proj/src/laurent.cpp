#include "braidforge/laurent.hpp"

#include <stdexcept>
#include <utility>

namespace braidforge {

LaurentPoly::LaurentPoly(BigInt constant) {
    set(0, std::move(constant));
}

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, int exponent) {
    LaurentPoly p;
    p.set(exponent, std::move(coefficient));
    return p;
}

void LaurentPoly::set(int exponent, BigInt coefficient) {
    if (coefficient == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(coefficient);
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e + by] = c;
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exp();
    const BigInt& dcoeff = divisor.terms_.rbegin()->second;
    // An exact quotient Q of A = Q * D has min_exp(Q) = min_exp(A) - min_exp(D);
    // a quotient term below that proves non-divisibility.
    const int shift_floor = min_exp() - divisor.min_exp();
    while (!rem.is_zero()) {
        const int rlead = rem.max_exp();
        const BigInt rcoeff = rem.coeff(rlead);
        const int shift = rlead - dlead;
        if (shift < shift_floor || rcoeff % dcoeff != 0)
            throw std::runtime_error("exact_div: nonzero remainder dividing " + to_string() +
                                     " by " + divisor.to_string());
        const BigInt q = rcoeff / dcoeff;
        quot.set(shift, quot.coeff(shift) + q);
        for (const auto& [e, c] : divisor.terms_) rem.set(e + shift, rem.coeff(e + shift) - q * c);
    }
    return quot;
}

BigInt LaurentPoly::one_norm() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += abs(c);
    return total;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1;
        if (!unit || e == 0) out += mag.str();
        if (e != 0) {
            if (!unit) out += "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly normalize_up_to_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out = p.shifted(-p.min_exp());
    if (out.coeff(0) < 0) out = -out;
    return out;
}

}  // namespace braidforge
