#include "jacideal/eigen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace jacideal {

namespace {

// ---- integer factorization (for the rational-root theorem) ----

bool probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int pollard_rho(const Int& n) {
    // Brent's cycle variant with deterministic parameter sweep.
    for (long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        auto step = [&](Int v) {
            Int r = (v * v + c) % n;
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = x - y;
            if (sgn(diff) < 0) diff = -diff;
            if (sgn(diff) == 0) break; // cycle without factor; try next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    long p = 17;
    while (n > 1 && Int(p) * p <= n && p < 100000) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
        p += 2;
    }
    if (n == 1) return;
    if (probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// All positive divisors not exceeding |bound| (bound <= 0 means unbounded).
std::vector<Int> divisors_up_to(const Int& n, const Int& bound) {
    std::map<Int, int> factors;
    Int m = n < 0 ? Int(-n) : n;
    factor_into(m, factors);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                Int d = divs[i] * pk;
                if (bound > 0 && d > bound) continue;
                divs.push_back(d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

RatMatrix matrix_power(const RatMatrix& M, int k) {
    RatMatrix out = RatMatrix::identity(M.rows());
    for (int i = 0; i < k; ++i) out = out * M;
    return out;
}

std::vector<Rat> vectorize(const RatMatrix& M) {
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(M.rows()) * M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) v.push_back(M(i, j));
    return v;
}

} // namespace

UniPoly char_poly(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("char_poly: not square");
    int n = M.rows();
    if (n == 0) return UniPoly::constant(Rat(1));

    // Bareiss over Q[t] on tI - M; every division is exact.
    std::vector<std::vector<UniPoly>> B(static_cast<std::size_t>(n),
                                        std::vector<UniPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? UniPoly::linear(-M(i, j), Rat(1)) : UniPoly::constant(-M(i, j));

    UniPoly prev = UniPoly::constant(Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        auto& Bk = B[static_cast<std::size_t>(k)];
        if (Bk[static_cast<std::size_t>(k)].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) { piv = i; break; }
            if (piv < 0) return UniPoly(); // cannot happen for tI - M
            std::swap(B[static_cast<std::size_t>(k)], B[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto& Bi = B[static_cast<std::size_t>(i)];
            for (int j = k + 1; j < n; ++j) {
                UniPoly num = Bi[static_cast<std::size_t>(j)] * B[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]
                            - Bi[static_cast<std::size_t>(k)] * B[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                Bi[static_cast<std::size_t>(j)] = num.divide_exact(prev);
            }
            Bi[static_cast<std::size_t>(k)] = UniPoly();
        }
        prev = B[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    UniPoly result = B[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sign < 0) result = -result;
    if (result.degree() != n || result.leading() != Rat(1))
        throw std::logic_error("char_poly: result not monic of full degree");
    return result;
}

UniPoly min_poly(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("min_poly: not square");
    int n = M.rows();
    if (n == 0) return UniPoly::constant(Rat(1));

    EchelonSpan span(n * n);
    std::vector<RatMatrix> powers;
    powers.push_back(RatMatrix::identity(n));
    span.add(vectorize(powers.back()));
    for (int k = 1;; ++k) {
        powers.push_back(powers.back() * M);
        if (span.add(vectorize(powers.back()))) continue;
        // M^k depends on lower powers: solve for the monic combination.
        RatMatrix A(n * n, k);
        for (int j = 0; j < k; ++j) {
            auto col = vectorize(powers[static_cast<std::size_t>(j)]);
            for (int i = 0; i < n * n; ++i) A(i, j) = col[static_cast<std::size_t>(i)];
        }
        RatMatrix rhs(n * n, 1);
        auto last = vectorize(powers.back());
        for (int i = 0; i < n * n; ++i) rhs(i, 0) = last[static_cast<std::size_t>(i)];
        auto x = solve(A, rhs);
        if (!x) throw std::logic_error("min_poly: dependence without solution");
        std::vector<Rat> coeffs(static_cast<std::size_t>(k + 1));
        for (int j = 0; j < k; ++j) coeffs[static_cast<std::size_t>(j)] = -(*x)(j, 0);
        coeffs[static_cast<std::size_t>(k)] = 1;
        return UniPoly(std::move(coeffs));
    }
}

RatMatrix eval_at_matrix(const UniPoly& p, const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eval_at_matrix: not square");
    int n = M.rows();
    RatMatrix acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * M;
        for (int i = 0; i < n; ++i) acc(i, i) += p.coeff(k);
    }
    return acc;
}

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<std::pair<Rat, int>> roots;
    if (p.degree() == 0) return roots;

    // Split off the power of t.
    int t_mult = 0;
    while (rat_is_zero(p.coeff(t_mult))) ++t_mult;
    if (t_mult > 0) roots.emplace_back(Rat(0), t_mult);

    std::vector<Rat> shifted(p.coeffs().begin() + t_mult, p.coeffs().end());
    UniPoly q(std::move(shifted));
    if (q.degree() == 0) return roots;

    // Integer-scale: candidates are ±(divisor of const)/(divisor of lead).
    Int scale(1);
    for (const Rat& c : q.coeffs())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> ic;
    ic.reserve(q.coeffs().size());
    Int content(0);
    for (const Rat& c : q.coeffs()) {
        Rat s = c * Rat(scale);
        ic.push_back(s.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic.back().get_mpz_t());
    }
    if (content > 1)
        for (Int& v : ic) v /= content;

    Int a0 = ic.front();
    Int alead = ic.back();

    // Cauchy bound on root magnitude: 1 + max|a_i|/|a_lead|, as an integer cap
    // on the numerator of a candidate a/b (since b >= 1).
    Int maxabs(0);
    for (const Int& v : ic) {
        Int av = v < 0 ? Int(-v) : v;
        if (av > maxabs) maxabs = av;
    }
    Int alead_abs = alead < 0 ? Int(-alead) : alead;
    Int num_bound = (maxabs / alead_abs + 2) * alead_abs; // crude but safe cap

    std::set<Rat> candidates;
    for (const Int& a : divisors_up_to(a0, num_bound))
        for (const Int& b : divisors_up_to(alead, Int(0))) {
            candidates.insert(rat(a, b));
            candidates.insert(rat(-a, b));
        }

    UniPoly rem = q;
    std::vector<std::pair<Rat, int>> found;
    for (const Rat& cand : candidates) {
        if (!rat_is_zero(rem.eval(cand))) continue;
        int mult = 0;
        UniPoly lin = UniPoly::linear(-cand, Rat(1));
        while (true) {
            auto [quot, r] = rem.divmod(lin);
            if (!r.is_zero()) break;
            rem = quot;
            ++mult;
        }
        found.emplace_back(cand, mult);
    }
    for (auto& f : found) roots.push_back(std::move(f));
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

EigenReport eigen_report(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eigen_report: not square");
    EigenReport rep;
    rep.char_poly = char_poly(M);
    rep.min_poly = min_poly(M);
    if (!rep.char_poly.divmod(rep.min_poly).second.is_zero())
        throw std::logic_error("eigen_report: min_poly does not divide char_poly");
    rep.is_scalar = rep.min_poly.degree() == 1;
    rep.is_diagonalizable_over_closure =
        gcd(rep.min_poly, rep.min_poly.derivative()).degree() == 0;
    rep.rational_eigenvalues = rational_roots(rep.char_poly);
    int total = 0;
    for (const auto& [v, m] : rep.rational_eigenvalues) {
        (void)v;
        total += m;
    }
    rep.splits_over_Q = total == M.rows();
    return rep;
}

std::optional<JordanPair> rational_jordan_transform(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("rational_jordan_transform: not square");
    int n = M.rows();
    auto roots = rational_roots(char_poly(M));
    int total = 0;
    for (const auto& [v, m] : roots) {
        (void)v;
        total += m;
    }
    if (total != n) return std::nullopt;

    struct Chain {
        Rat lambda;
        int length;
        std::vector<std::vector<Rat>> vectors; // top first
    };
    std::vector<Chain> chains;

    for (const auto& [lambda, mult] : roots) {
        RatMatrix N = M - RatMatrix::identity(n) * lambda;

        // Generalized kernels ker(N^k) until the algebraic multiplicity fills.
        std::vector<std::vector<std::vector<Rat>>> kerbasis{{}};
        while (static_cast<int>(kerbasis.back().size()) < mult) {
            int k = static_cast<int>(kerbasis.size());
            kerbasis.push_back(kernel(matrix_power(N, k)));
            if (kerbasis.back().size() <= kerbasis[static_cast<std::size_t>(k - 1)].size())
                throw std::logic_error("rational_jordan_transform: kernel ascent stalled");
        }
        int height = static_cast<int>(kerbasis.size()) - 1;

        // Walk from the top level down, carrying N-images of chain tops.
        std::vector<std::vector<Rat>> carried;
        for (int k = height; k >= 1; --k) {
            EchelonSpan span(n);
            for (const auto& v : kerbasis[static_cast<std::size_t>(k - 1)]) span.add(v);
            for (const auto& v : carried)
                if (!span.add(v))
                    throw std::logic_error("rational_jordan_transform: carried vector dependent");
            std::vector<std::vector<Rat>> new_tops;
            for (const auto& v : kerbasis[static_cast<std::size_t>(k)]) {
                if (span.rank() == static_cast<int>(kerbasis[static_cast<std::size_t>(k)].size())) break;
                if (span.add(v)) new_tops.push_back(v);
            }
            for (const auto& top : new_tops) {
                Chain ch;
                ch.lambda = lambda;
                ch.length = k;
                ch.vectors.push_back(top);
                for (int step = 1; step < k; ++step)
                    ch.vectors.push_back(mat_vec(N, ch.vectors.back()));
                chains.push_back(std::move(ch));
            }
            std::vector<std::vector<Rat>> next;
            for (const auto& v : carried) next.push_back(mat_vec(N, v));
            for (const auto& v : new_tops) next.push_back(mat_vec(N, v));
            carried = std::move(next);
        }
    }

    // Blocks: eigenvalue ascending (roots are sorted), then size descending
    // (discovery order within one eigenvalue walks levels downward).
    RatMatrix Q(n, n);
    RatMatrix J(n, n);
    int col = 0;
    for (const auto& ch : chains) {
        for (int j = 0; j < ch.length; ++j) {
            // Column col+j holds N^{length-1-j} top: eigenvector first.
            const auto& v = ch.vectors[static_cast<std::size_t>(ch.length - 1 - j)];
            for (int i = 0; i < n; ++i) Q(i, col + j) = v[static_cast<std::size_t>(i)];
            J(col + j, col + j) = ch.lambda;
            if (j + 1 < ch.length) J(col + j, col + j + 1) = 1;
        }
        col += ch.length;
    }
    if (col != n) throw std::logic_error("rational_jordan_transform: chain sizes do not fill");

    auto Qinv = inverse(Q);
    if (!Qinv) throw std::logic_error("rational_jordan_transform: chain matrix singular");
    if (!(M * Q == Q * J)) throw std::logic_error("rational_jordan_transform: verification failed");
    // M = Q J Q^{-1} = P^{-1} J P with P = Q^{-1}.
    return JordanPair{*Qinv, J};
}

} // namespace jacideal
