#include "trindex/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace trindex::intpoly {

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

bool is_zero(const IntPoly& f) { return f.empty(); }

bool is_monic(const IntPoly& f) { return !f.empty() && f.back() == 1; }

IntPoly make(std::initializer_list<Int> coeffs) {
    IntPoly f(coeffs);
    trim(f);
    return f;
}

IntPoly monomial(int deg, const Int& c) {
    if (c == 0) return {};
    IntPoly f(deg + 1, Int(0));
    f[deg] = c;
    return f;
}

IntPoly x_minus(const Int& c) { return IntPoly{-c, 1}; }

IntPoly add(const IntPoly& f, const IntPoly& g) {
    IntPoly r(std::max(f.size(), g.size()), Int(0));
    for (size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    trim(r);
    return r;
}

IntPoly sub(const IntPoly& f, const IntPoly& g) {
    IntPoly r(std::max(f.size(), g.size()), Int(0));
    for (size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    trim(r);
    return r;
}

IntPoly mul(const IntPoly& f, const IntPoly& g) {
    if (f.empty() || g.empty()) return {};
    IntPoly r(f.size() + g.size() - 1, Int(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    trim(r);
    return r;
}

IntPoly scale(const IntPoly& f, const Int& c) {
    if (c == 0) return {};
    IntPoly r = f;
    for (auto& ci : r) ci *= c;
    return r;
}

IntPoly derivative(const IntPoly& f) {
    if (f.size() <= 1) return {};
    IntPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = Int(i) * f[i];
    trim(r);
    return r;
}

Int eval(const IntPoly& f, const Int& x) {
    Int r{0};
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

DivMod divmod_monic(const IntPoly& f, const IntPoly& g) {
    if (!is_monic(g)) throw std::domain_error("divmod_monic: non-monic divisor");
    IntPoly r = f;
    int dg = degree(g);
    if (degree(r) < dg) return {{}, r};
    IntPoly q(r.size() - dg, Int(0));
    for (int i = degree(r); i >= dg; --i) {
        Int c = r[i];
        if (c == 0) continue;
        q[i - dg] = c;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] -= c * g[j];
    }
    trim(r);
    trim(q);
    return {q, r};
}

bool divides_monic(const IntPoly& g, const IntPoly& f) {
    return is_zero(divmod_monic(f, g).remainder);
}

Valuation content_valuation(const Int& p, const IntPoly& f) {
    Valuation best = Valuation::infinity();
    for (const auto& c : f) {
        if (c == 0) continue;
        Valuation v = vp(p, c);
        if (best.infinite || v.value < best.value) best = v;
        if (best.value == 0) break;
    }
    return best;
}

IntPoly divide_pk(const IntPoly& f, const Int& p, long k) {
    Int pk = ipow(p, static_cast<unsigned>(k));
    IntPoly r = f;
    for (auto& c : r) {
        if (c % pk != 0) throw std::domain_error("divide_pk: inexact division");
        c /= pk;
    }
    return r;
}

IntPoly compose_mod(const IntPoly& f, const IntPoly& g, const IntPoly& m) {
    IntPoly acc;
    for (size_t i = f.size(); i-- > 0;) {
        acc = mul(acc, g);
        if (!acc.empty() && f[i] != 0) {
            acc = add(acc, IntPoly{f[i]});
        } else if (acc.empty() && f[i] != 0) {
            acc = IntPoly{f[i]};
        }
        acc = divmod_monic(acc, m).remainder;
    }
    return acc;
}

std::string to_string(const IntPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        const Int& c = f[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = iabs(c);
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace trindex::intpoly
