#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbt/numbers.hpp"

namespace gbt {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly x();
    static Poly constant(Rat c);
    static Poly monomial(Rat c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    const Rat& leading() const;
    Rat coefficient(std::size_t degree) const;
    bool is_monic() const;

    Rat operator()(const Rat& point) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);

    Poly pow(unsigned long exponent) const;

    // Exact quotient and remainder; throws on zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& denominator);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// True iff q = p * h for some polynomial h (zero remainder on exact division).
bool poly_divides(const Poly& p, const Poly& q);

}  // namespace gbt
