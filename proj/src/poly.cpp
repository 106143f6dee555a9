#include "ndeg/poly.hpp"

#include <cctype>
#include <sstream>

namespace ndeg {

std::vector<IVec> Poly::support() const {
    std::vector<IVec> out;
    for (const auto& [e, c] : terms) out.push_back(e);
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    int d;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at position " + std::to_string(i) + ": " + msg, i);
    }
    mpz_class integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return mpz_class(s.substr(start, i - start));
    }
    void factor(IVec& e) {
        skip();
        if (i >= s.size() || s[i] != 'x') fail("expected variable x<index>");
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected variable index");
        size_t at = i;
        mpz_class idx = integer();
        if (idx < 1 || idx > d) {
            i = at;
            fail("variable index out of range 1.." + std::to_string(d));
        }
        long k = 1;
        if (peek('^')) {
            ++i;
            mpz_class ex = integer();
            if (!ex.fits_slong_p() || ex > 1000000) fail("exponent too large");
            k = ex.get_si();
        }
        e[idx.get_si() - 1] += k;
    }
    // term := coef | [coef '*'] factor ('*' factor)*
    void term(int sign, Poly& f) {
        skip();
        mpq_class c = sign;
        IVec e(d, 0);
        bool need_factor = true;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mpq_class q(integer());
            if (peek('/')) {
                ++i;
                mpz_class den = integer();
                if (den == 0) fail("zero denominator");
                q /= den;
            }
            c *= q;
            if (peek('*')) {
                ++i;
            } else {
                need_factor = false;  // bare constant
            }
        }
        if (need_factor) {
            factor(e);
            while (peek('*')) {
                ++i;
                factor(e);
            }
        }
        mpq_class& slot = f.terms[e];
        slot += c;
        if (slot == 0) f.terms.erase(e);
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int d) {
    if (d < 1) throw ParseError("dimension must be positive", 0);
    Poly f;
    f.dim = d;
    Parser p{text, d};
    int sign = 1;
    if (p.peek('-')) {
        ++p.i;
        sign = -1;
    } else if (p.peek('+')) {
        ++p.i;
    }
    p.term(sign, f);
    for (;;) {
        p.skip();
        if (p.i >= text.size()) break;
        char c = text[p.i];
        if (c != '+' && c != '-') p.fail("expected '+' or '-'");
        ++p.i;
        p.term(c == '+' ? 1 : -1, f);
    }
    return f;
}

int max_variable_index(const std::string& text) {
    int best = 0;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
        size_t j = i + 1;
        long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1000) v = v * 10 + (text[j++] - '0');
        best = std::max(best, static_cast<int>(v));
    }
    return best;
}

std::string to_string(const Poly& f) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = is_zero(e);
        if (a != 1 || constant) {
            os << a.get_str();
            if (!constant) os << "*";
        }
        bool firstf = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!firstf) os << "*";
            firstf = false;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Poly restrict(const Poly& f, Subset J) {
    Poly g;
    g.dim = f.dim;
    for (const auto& [e, c] : f.terms) {
        bool keep = true;
        for (int i = 0; i < f.dim; ++i)
            if (e[i] && !contains(J, i)) keep = false;
        if (keep) g.terms.emplace(e, c);
    }
    return g;
}

Subset tilde_J(const Poly& f, Subset J) {
    Subset out = 0;
    for (const auto& [e, c] : restrict(f, J).terms)
        for (int i = 0; i < f.dim; ++i)
            if (e[i]) out |= 1u << i;
    return out;
}

Poly partial_derivative(const Poly& f, int i) {
    Poly g;
    g.dim = f.dim;
    for (const auto& [e, c] : f.terms) {
        if (!e[i]) continue;
        IVec e2 = e;
        e2[i] -= 1;
        g.terms[e2] += c * e[i];
    }
    return g;
}

bool constant_term_zero(const Poly& f) { return !f.terms.count(IVec(f.dim, 0)); }

Poly face_function_by_weight(const Poly& f, const IVec& w, Subset ambient) {
    Poly g = restrict(f, ambient);
    if (g.terms.empty()) return g;
    long best = 0;
    bool have = false;
    for (const auto& [e, c] : g.terms) {
        long v = dot(w, e);
        if (!have || v < best) best = v, have = true;
    }
    Poly out;
    out.dim = f.dim;
    for (const auto& [e, c] : g.terms)
        if (dot(w, e) == best) out.terms.emplace(e, c);
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

PolyFp reduce_mod_p(const Poly& f, long p) {
    if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
    PolyFp g;
    g.dim = f.dim;
    g.p = p;
    mpz_class P = p;
    for (const auto& [e, c] : f.terms) {
        mpz_class den = c.get_den();
        if (den % P == 0) throw MathError("prime " + std::to_string(p) + " divides a coefficient denominator");
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
        mpz_class r = c.get_num() * inv;
        mpz_class m;
        mpz_fdiv_r(m.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
        if (m == 0) {
            g.support_changed = true;
            continue;
        }
        g.terms[e] = m.get_si();
    }
    return g;
}

}  // namespace ndeg
