#include "gbt/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gbt {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::constant(Rat c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(Rat c, std::size_t degree) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rat(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat Poly::coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Rat(0);
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Rat Poly::operator()(const Rat& point) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return Poly();
    Poly out(p);
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

Poly Poly::pow(unsigned long exponent) const {
    Poly result = Poly::one();
    Poly base(*this);
    while (exponent > 0) {
        if (exponent & 1UL) result = result * base;
        exponent >>= 1UL;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& numerator, const Poly& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (numerator.degree() < denominator.degree()) return {Poly(), numerator};

    std::vector<Rat> rem = numerator.coeffs_;
    const std::vector<Rat>& den = denominator.coeffs_;
    const std::size_t dd = den.size() - 1;
    std::vector<Rat> quot(rem.size() - dd, Rat(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / den.back();
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0 || mag != 1) {
            out << gbt::to_string(mag);
            if (i > 0) out << "*";
        }
        if (i >= 1) out << var;
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

bool poly_divides(const Poly& p, const Poly& q) {
    if (p.is_zero()) throw std::invalid_argument("zero divisor polynomial");
    return Poly::divmod(q, p).second.is_zero();
}

}  // namespace gbt
