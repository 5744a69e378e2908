#include "jacideal/unipoly.hpp"

#include <stdexcept>

namespace jacideal {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && rat_is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::linear(const Rat& c0, const Rat& c1) { return UniPoly({c0, c1}); }

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

Rat UniPoly::leading() const {
    if (is_zero()) throw std::logic_error("UniPoly::leading: zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rat> out(std::max(c_.size(), rhs.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<Rat> out(c_.size() + rhs.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (rat_is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] += c_[i] * rhs.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    std::vector<Rat> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("UniPoly::divmod: division by zero");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), Rat(0));
    Rat lead_inv = 1 / divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rat> sub(rem.c_.size(), Rat(0));
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            sub[i + static_cast<std::size_t>(shift)] = divisor.c_[i] * factor;
        rem = rem - UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("UniPoly::divide_exact: inexact division");
    return q;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return *this * (1 / leading());
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace jacideal
