#ifndef JACIDEAL_UNIPOLY_HPP
#define JACIDEAL_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "jacideal/rat.hpp"

namespace jacideal {

// Univariate polynomial over Q, coefficients stored low-to-high with a
// nonzero leading coefficient (the zero polynomial stores nothing).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly constant(const Rat& c);
    static UniPoly linear(const Rat& c0, const Rat& c1); // c0 + c1*t

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    Rat leading() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator*(const Rat& c) const;

    bool operator==(const UniPoly&) const = default;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    // Exact quotient; throws when the division leaves a remainder.
    UniPoly divide_exact(const UniPoly& divisor) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    Rat eval(const Rat& t) const;

private:
    std::vector<Rat> c_;

    void trim();
};

// Monic gcd.
UniPoly gcd(UniPoly a, UniPoly b);

} // namespace jacideal

#endif
