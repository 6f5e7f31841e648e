#pragma once

#include <gkn/errors.hpp>
#include <gkn/rational.hpp>
#include <gkn/scalar.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace gkn {

// ------------------------------------------------------------------
// Dense polynomials over Q, coefficient of x^k at index k, no trailing zeros.
// ------------------------------------------------------------------
namespace poly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly zero() { return {}; }
inline Poly constant(Rational c) {
    Poly p;
    if (c != 0) p.push_back(std::move(c));
    return p;
}
inline bool is_zero(const Poly& p) { return p.empty(); }
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
inline void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    q.clear();
    r = a;
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
    while (!r.empty() && r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

inline Poly mod(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

inline Poly monic(const Poly& a) {
    if (a.empty()) return a;
    return scale(a, Rational(1) / a.back());
}

inline Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Extended Euclid: returns g = gcd(a,b) monic and u with u*a = g (mod b).
inline void half_ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& u) {
    Poly r0 = a, r1 = b;
    Poly u0 = constant(Rational(1)), u1 = zero();
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly u2 = sub(u0, mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) {
        g = zero();
        u = zero();
        return;
    }
    Rational lead = r0.back();
    g = scale(r0, Rational(1) / lead);
    u = scale(u0, Rational(1) / lead);
}

inline std::string to_string(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0 || c != 1) os << c.get_str();
        if (k > 0) {
            if (c != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// N-th cyclotomic polynomial via Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline Poly cyclotomic(long n) {
    static std::map<long, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly num(static_cast<size_t>(n) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly q, r;
        divmod(num, cyclotomic(d), q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = std::move(q);
    }
    cache[n] = num;
    return num;
}

} // namespace poly

// ------------------------------------------------------------------
// Field tags
// ------------------------------------------------------------------
enum class FieldKind { Rat, Cyclo, RatFunc };

struct FieldTag {
    FieldKind kind = FieldKind::Rat;
    long conductor = 1;      // Cyclo only
    std::string var = "t";   // RatFunc only

    static FieldTag rat() { return {FieldKind::Rat, 1, ""}; }
    static FieldTag cyclo(long n) { return {FieldKind::Cyclo, n, ""}; }
    static FieldTag ratfunc(std::string v = "t") { return {FieldKind::RatFunc, 1, std::move(v)}; }

    std::string str() const {
        switch (kind) {
            case FieldKind::Rat: return "RAT";
            case FieldKind::Cyclo: return "CYCLO(" + std::to_string(conductor) + ")";
            case FieldKind::RatFunc: return "RATFUNC";
        }
        return "?";
    }

    static FieldTag parse(const std::string& s) {
        if (s == "RAT") return rat();
        if (s == "RATFUNC") return ratfunc();
        if (s.rfind("CYCLO(", 0) == 0 && s.back() == ')') {
            long n = std::stol(s.substr(6, s.size() - 7));
            if (n <= 0) throw IncompatibleField("bad conductor in " + s);
            return cyclo(n);
        }
        throw IncompatibleField("unknown field tag: " + s);
    }
};

// ------------------------------------------------------------------
// Q
// ------------------------------------------------------------------
class RatField {
public:
    using Elem = Rational;

    FieldTag tag() const { return FieldTag::rat(); }

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_rational(const Rational& r) const { return r; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return Rational(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }

    Elem embed(const MonoScalar& s) const {
        if (s.has_free_part())
            throw IncompatibleField("scalar " + s.str() + " has indeterminates; not in Q");
        if (s.is_one()) return Rational(1);
        if (s.is_minus_one()) return Rational(-1);
        throw IncompatibleField("scalar " + s.str() + " is not rational");
    }

    Elem embed(const ScalarLiteral& l) const {
        ScalarLiteral unit = l;
        Rational c = unit.coeff;
        unit.coeff = 1;
        return c * embed(unit.to_mono());
    }
};

// ------------------------------------------------------------------
// Q(zeta_N): polynomials in zeta reduced mod the N-th cyclotomic polynomial.
// Canonical representative has degree < phi(N), so eq is representational.
// ------------------------------------------------------------------
class CycloField {
public:
    using Elem = poly::Poly; // degree < phi(N)

    explicit CycloField(long n) : n_(n), phi_(poly::cyclotomic(n)) {
        deg_ = poly::degree(phi_);
    }

    long conductor() const { return n_; }
    long extension_degree() const { return deg_; }
    const poly::Poly& modulus() const { return phi_; }
    FieldTag tag() const { return FieldTag::cyclo(n_); }

    Elem zero() const { return {}; }
    Elem one() const { return poly::constant(Rational(1)); }
    Elem from_rational(const Rational& r) const { return poly::constant(r); }

    Elem zeta(long k = 1) const {
        // zeta^k reduced
        long e = ((k % n_) + n_) % n_;
        poly::Poly p(static_cast<size_t>(e) + 1, Rational(0));
        p[static_cast<size_t>(e)] = 1;
        return reduce(p);
    }

    Elem add(const Elem& a, const Elem& b) const { return poly::add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly::sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(poly::mul(a, b)); }
    Elem neg(const Elem& a) const { return poly::scale(a, Rational(-1)); }

    Elem inv(const Elem& a) const {
        if (a.empty()) throw std::domain_error("division by zero in cyclotomic field");
        poly::Poly g, u;
        poly::half_ext_gcd(a, phi_, g, u);
        if (poly::degree(g) != 0)
            throw std::logic_error("cyclotomic modulus not coprime to element");
        return reduce(u);
    }

    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const { return poly::to_string(a, "z" + std::to_string(n_)); }

    Elem embed(const MonoScalar& s) const {
        if (s.has_free_part())
            throw IncompatibleField("scalar " + s.str() + " has indeterminates; not cyclotomic");
        const Rational& t = s.torsion();
        long b = t.get_den().get_si();
        long a = t.get_num().get_si();
        if (n_ % b == 0) return zeta(a * (n_ / b));
        // Q(zeta_N) for odd N also contains the 2N-th roots: split off a sign.
        if (n_ % 2 == 1 && (2 * n_) % b == 0) {
            long k = a * (2 * n_ / b); // torsion = k / (2N)
            long d = ((k % 2) + 2) % 2;
            long c = (k - d * n_) / 2;
            Elem e = zeta(c);
            return d ? neg(e) : e;
        }
        throw IncompatibleField("scalar " + s.str() + " of order " + std::to_string(b) +
                                " does not embed into CYCLO(" + std::to_string(n_) + ")");
    }

    Elem embed(const ScalarLiteral& l) const {
        ScalarLiteral unit = l;
        Rational c = unit.coeff;
        unit.coeff = 1;
        Elem e = embed(unit.to_mono());
        return poly::scale(e, c);
    }

private:
    Elem reduce(const poly::Poly& p) const { return poly::mod(p, phi_); }

    long n_;
    poly::Poly phi_;
    int deg_;
};

// ------------------------------------------------------------------
// Q(t): reduced fractions of integer-coefficient polynomials.
// Canonical form: gcd(num, den) = 1 over Q, den primitive with positive
// leading coefficient, num primitive-scaled to integer coefficients times a
// rational... we keep both as rational polynomials normalized so that the
// denominator is monic; equality is then representational.
// ------------------------------------------------------------------
class RatFuncField {
public:
    struct Elem {
        poly::Poly num; // over Q
        poly::Poly den; // monic, nonzero
        bool operator==(const Elem& o) const { return num == o.num && den == o.den; }
    };

    explicit RatFuncField(std::string var = "t") : var_(std::move(var)) {}

    const std::string& var() const { return var_; }
    FieldTag tag() const { return FieldTag::ratfunc(var_); }

    Elem zero() const { return {{}, poly::constant(Rational(1))}; }
    Elem one() const { return {poly::constant(Rational(1)), poly::constant(Rational(1))}; }
    Elem from_rational(const Rational& r) const {
        return {poly::constant(r), poly::constant(Rational(1))};
    }

    Elem t_power(long k) const {
        poly::Poly p(static_cast<size_t>(k >= 0 ? k : -k) + 1, Rational(0));
        p.back() = 1;
        if (k >= 0) return make(p, poly::constant(Rational(1)));
        return make(poly::constant(Rational(1)), p);
    }

    Elem add(const Elem& a, const Elem& b) const {
        return make(poly::add(poly::mul(a.num, b.den), poly::mul(b.num, a.den)),
                    poly::mul(a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return make(poly::sub(poly::mul(a.num, b.den), poly::mul(b.num, a.den)),
                    poly::mul(a.den, b.den));
    }
    Elem mul(const Elem& a, const Elem& b) const {
        return make(poly::mul(a.num, b.num), poly::mul(a.den, b.den));
    }
    Elem neg(const Elem& a) const { return {poly::scale(a.num, Rational(-1)), a.den}; }
    Elem inv(const Elem& a) const {
        if (a.num.empty()) throw std::domain_error("division by zero in Q(t)");
        return make(a.den, a.num);
    }

    bool is_zero(const Elem& a) const { return a.num.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const {
        if (a.num.empty()) return "0";
        std::string n = poly::to_string(a.num, var_);
        if (poly::degree(a.den) == 0 && a.den[0] == 1) return n;
        return "(" + n + ")/(" + poly::to_string(a.den, var_) + ")";
    }

    Elem embed(const MonoScalar& s) const {
        const auto& f = s.free();
        Rational sign(1);
        if (s.torsion() == Rational(1, 2))
            sign = -1;
        else if (s.torsion() != 0)
            throw IncompatibleField("scalar " + s.str() + " has torsion beyond {1,-1}; not in Q(t)");
        if (f.size() > 1)
            throw IncompatibleField("scalar " + s.str() + " has several indeterminates");
        long k = 0;
        if (!f.empty()) {
            if (f.begin()->first != var_)
                throw IncompatibleField("indeterminate " + f.begin()->first +
                                        " does not match field variable " + var_);
            k = f.begin()->second;
        }
        Elem e = t_power(k);
        return {poly::scale(e.num, sign), e.den};
    }

    Elem embed(const ScalarLiteral& l) const {
        ScalarLiteral unit = l;
        Rational c = unit.coeff;
        unit.coeff = 1;
        Elem e = embed(unit.to_mono());
        return {poly::scale(e.num, c), e.den};
    }

private:
    Elem make(poly::Poly n, poly::Poly d) const {
        if (d.empty()) throw std::domain_error("zero denominator in Q(t)");
        if (n.empty()) return zero();
        poly::Poly g = poly::gcd(n, d);
        if (poly::degree(g) > 0) {
            poly::Poly q, r;
            poly::divmod(n, g, q, r);
            n = std::move(q);
            poly::divmod(d, g, q, r);
            d = std::move(q);
        }
        Rational lead = d.back();
        if (lead != 1) {
            n = poly::scale(n, Rational(1) / lead);
            d = poly::scale(d, Rational(1) / lead);
        }
        return {std::move(n), std::move(d)};
    }

    std::string var_;
};

// ------------------------------------------------------------------
// Choosing a field for a set of scalars: lcm of conductors, or Q(t) when a
// single indeterminate occurs with torsion restricted to {0, 1/2}.
// ------------------------------------------------------------------
inline FieldTag common_field(const std::vector<MonoScalar>& scalars) {
    std::string var;
    bool any_free = false;
    long lcm = 1;
    bool torsion_beyond_sign = false;
    for (const auto& s : scalars) {
        for (const auto& [name, e] : s.free()) {
            (void)e;
            if (!any_free) {
                var = name;
                any_free = true;
            } else if (var != name) {
                throw IncompatibleField("scalars use several indeterminates: " + var + ", " + name);
            }
        }
        long den = s.torsion().get_den().get_si();
        lcm = lcm_long(lcm, den);
        if (den > 2) torsion_beyond_sign = true;
    }
    if (any_free) {
        if (torsion_beyond_sign)
            throw IncompatibleField(
                "scalars mix indeterminates with roots of unity beyond {1,-1}");
        return FieldTag::ratfunc(var);
    }
    if (lcm <= 2) return FieldTag::rat();
    return FieldTag::cyclo(lcm);
}

} // namespace gkn
