#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ndeg/linalg.hpp"

namespace ndeg {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

// Invalid mathematical input: zero polynomial where forbidden, f(O) != 0, bad reduction, ...
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Poly {
    int dim = 1;
    std::map<IVec, mpq_class> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Poly& o) const { return dim == o.dim && terms == o.terms; }
    std::vector<IVec> support() const;
};

Poly parse_poly(const std::string& text, int d);
// Largest variable index mentioned (1-based), 0 if none; does not validate the rest.
int max_variable_index(const std::string& text);
std::string to_string(const Poly& f);

Poly restrict(const Poly& f, Subset J);
Subset tilde_J(const Poly& f, Subset J);
Poly partial_derivative(const Poly& f, int i);
bool constant_term_zero(const Poly& f);

// Face function with respect to the face hit by a weight vector w (w >= 0):
// the terms of f^K whose exponents minimize <w, .>.
Poly face_function_by_weight(const Poly& f, const IVec& w, Subset ambient);

struct PolyFp {
    int dim = 1;
    long p = 2;
    std::map<IVec, long> terms;
    bool support_changed = false;
};

PolyFp reduce_mod_p(const Poly& f, long p);
bool is_prime(long p);

}  // namespace ndeg
