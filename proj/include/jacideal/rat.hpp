#ifndef JACIDEAL_RAT_HPP
#define JACIDEAL_RAT_HPP

#include <gmpxx.h>

#include <string>

namespace jacideal {

using Int = mpz_class;

// Exact rational scalar. GMP keeps mpq values canonical (den > 0, gcd 1)
// through arithmetic as long as they are constructed canonical, which the
// helpers below guarantee.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace jacideal

#endif
