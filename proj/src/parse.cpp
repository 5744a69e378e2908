#include "jacideal/parse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jacideal {

namespace {

constexpr int kMaxVars = 10; // x0..x9

const char* kAliases = "xyztu";

// Multi-degree scratch polynomial used only during parsing; homogeneity is
// checked once the whole expression is read (so cancelling terms of equal
// degree is fine).
using Scratch = std::map<std::vector<int>, Rat>;

void accumulate(Scratch& into, const std::vector<int>& key, const Rat& c) {
    auto [it, fresh] = into.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (rat_is_zero(it->second)) into.erase(it);
    }
}

Scratch scratch_add(const Scratch& a, const Scratch& b, int sign) {
    Scratch out = a;
    for (const auto& [k, c] : b) accumulate(out, k, sign > 0 ? c : Rat(-c));
    return out;
}

Scratch scratch_mul(const Scratch& a, const Scratch& b) {
    Scratch out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::vector<int> k(kMaxVars);
            for (int i = 0; i < kMaxVars; ++i)
                k[static_cast<std::size_t>(i)] = ka[static_cast<std::size_t>(i)] + kb[static_cast<std::size_t>(i)];
            accumulate(out, k, ca * cb);
        }
    return out;
}

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    bool saw_alias = false;
    bool saw_indexed = false;
    int max_var_seen = -1;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    Int parse_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    Rat parse_rational() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        }
        Int num = parse_digits();
        Int den(1);
        if (peek() == '/') {
            ++pos;
            den = parse_digits();
            if (sgn(den) == 0) fail("zero denominator");
        }
        Rat r = rat(neg ? Int(-num) : num, den);
        return r;
    }

    int parse_exponent() {
        Int e = parse_digits();
        if (e > 1000) fail("exponent too large");
        return static_cast<int>(e.get_si());
    }

    int parse_variable() {
        skip_ws();
        std::size_t var_pos = pos;
        char c = s[pos];
        if (c == 'x' && pos + 1 < s.size() && s[pos + 1] >= '0' && s[pos + 1] <= '9') {
            pos += 2;
            if (saw_alias) throw parse_error("mixed variable naming styles", var_pos);
            saw_indexed = true;
            int idx = s[var_pos + 1] - '0';
            max_var_seen = std::max(max_var_seen, idx);
            return idx;
        }
        const char* hit = std::char_traits<char>::find(kAliases, 5, c);
        if (!hit) fail("expected a variable, number, or parenthesis");
        ++pos;
        if (saw_indexed) throw parse_error("mixed variable naming styles", var_pos);
        saw_alias = true;
        int idx = static_cast<int>(hit - kAliases);
        max_var_seen = std::max(max_var_seen, idx);
        return idx;
    }

    Scratch parse_factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Scratch inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            Rat r = parse_rational();
            Scratch out;
            if (!rat_is_zero(r)) out.emplace(std::vector<int>(kMaxVars, 0), r);
            return out;
        }
        int var = parse_variable();
        int exp = 1;
        if (peek() == '^') {
            ++pos;
            exp = parse_exponent();
        }
        Scratch out;
        std::vector<int> key(kMaxVars, 0);
        key[static_cast<std::size_t>(var)] = exp;
        out.emplace(std::move(key), Rat(1));
        return out;
    }

    Scratch parse_term() {
        Scratch acc = parse_factor();
        while (peek() == '*') {
            ++pos;
            acc = scratch_mul(acc, parse_factor());
        }
        return acc;
    }

    Scratch parse_expr() {
        Scratch acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = scratch_add(acc, parse_term(), +1);
            } else if (c == '-') {
                ++pos;
                acc = scratch_add(acc, parse_term(), -1);
            } else {
                return acc;
            }
        }
    }
};

} // namespace

HomPoly parse_poly(std::string_view text) {
    Parser p{text};
    if (p.at_end()) throw parse_error("empty expression", 0);
    Scratch terms = p.parse_expr();
    if (!p.at_end()) p.fail("unexpected character");

    std::set<int> degrees;
    int max_used = p.max_var_seen;
    for (const auto& [k, c] : terms) {
        (void)c;
        int deg = 0;
        for (int e : k) deg += e;
        degrees.insert(deg);
    }
    if (degrees.size() > 1) {
        std::string msg = "nonhomogeneous expression: degrees";
        for (int d : degrees) msg += " " + std::to_string(d);
        throw parse_error(msg, 0);
    }

    int n = max_used < 0 ? 0 : max_used;
    int degree = degrees.empty() ? 0 : *degrees.begin();
    HomPoly::TermMap out;
    for (const auto& [k, c] : terms) {
        std::vector<int> e(k.begin(), k.begin() + n + 1);
        out.emplace(ExponentVector(std::move(e)), c);
    }
    return HomPoly::from_terms(n, degree, std::move(out));
}

std::string variable_name(int i, VarStyle style) {
    if (style == VarStyle::alias) {
        if (i < 0 || i > 4) throw std::invalid_argument("alias style covers x..u only");
        return std::string(1, kAliases[i]);
    }
    if (i < 0 || i >= kMaxVars) throw std::invalid_argument("variable index out of range");
    return "x" + std::to_string(i);
}

std::string print_poly(const HomPoly& f, VarStyle style) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [ev, c] : f.terms()) {
        std::string mono;
        for (int i = 0; i <= f.n(); ++i) {
            if (ev[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(i, style);
            if (ev[i] > 1) mono += "^" + std::to_string(ev[i]);
        }
        Rat a = c;
        if (first) {
            if (sgn(a) < 0 && !mono.empty()) {
                // No unary minus in the grammar: emit the signed coefficient.
                out += rat_str(a) + "*" + mono;
                first = false;
                continue;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            a = abs(a);
        }
        if (mono.empty()) {
            out += rat_str(a);
        } else if (a == Rat(1)) {
            out += mono;
        } else {
            out += rat_str(a) + "*" + mono;
        }
        first = false;
    }
    return out;
}

} // namespace jacideal
