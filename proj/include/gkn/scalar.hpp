#pragma once

#include <gkn/errors.hpp>
#include <gkn/rational.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace gkn {

// A multiplicative symbolic scalar: a root of unity times a monomial in named
// indeterminates.  The torsion part t in [0,1) stands for e^{2*pi*i*t}; the
// free part maps indeterminate names to nonzero integer exponents.  A scalar
// with nonempty free part is, by definition of the input model, not a root of
// unity.
class MonoScalar {
public:
    MonoScalar() : torsion_(0) {}

    static MonoScalar one() { return MonoScalar(); }
    static MonoScalar minus_one() { return from_torsion(Rational(1, 2)); }

    // e^{2*pi*i*t}, t reduced into [0,1).
    static MonoScalar from_torsion(Rational t) {
        MonoScalar s;
        s.torsion_ = normalize_mod1(std::move(t));
        return s;
    }

    // Primitive N-th root of unity zeta(N), raised to k.
    static MonoScalar root_of_unity(long n, long k = 1) {
        if (n <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
        return from_torsion(Rational(k, n));
    }

    static MonoScalar indeterminate(const std::string& name, long exp = 1) {
        MonoScalar s;
        if (exp != 0) s.free_[name] = exp;
        return s;
    }

    const Rational& torsion() const { return torsion_; }
    const std::map<std::string, long>& free() const { return free_; }

    bool is_one() const { return torsion_ == 0 && free_.empty(); }
    bool is_minus_one() const { return torsion_ == Rational(1, 2) && free_.empty(); }
    bool has_free_part() const { return !free_.empty(); }

    // Order as a root of unity: N iff the free part is empty and the torsion is
    // a/N in lowest terms; absent for scalars with indeterminates.
    std::optional<long> order() const {
        if (!free_.empty()) return std::nullopt;
        return torsion_.get_den().get_si();
    }

    bool is_root_of_unity() const { return free_.empty(); }

    // Member of G'_N (primitive N-th roots).
    bool is_primitive_root(long n) const {
        auto o = order();
        return o && *o == n;
    }

    MonoScalar operator*(const MonoScalar& rhs) const {
        MonoScalar r;
        r.torsion_ = normalize_mod1(torsion_ + rhs.torsion_);
        r.free_ = free_;
        for (const auto& [name, e] : rhs.free_) {
            long& slot = r.free_[name];
            slot += e;
            if (slot == 0) r.free_.erase(name);
        }
        return r;
    }

    MonoScalar inverse() const {
        MonoScalar r;
        r.torsion_ = normalize_mod1(-torsion_);
        for (const auto& [name, e] : free_) r.free_[name] = -e;
        return r;
    }

    MonoScalar pow(long k) const {
        MonoScalar r;
        r.torsion_ = normalize_mod1(torsion_ * k);
        if (k != 0)
            for (const auto& [name, e] : free_) r.free_[name] = e * k;
        return r;
    }

    bool operator==(const MonoScalar& rhs) const {
        return torsion_ == rhs.torsion_ && free_ == rhs.free_;
    }
    bool operator!=(const MonoScalar& rhs) const { return !(*this == rhs); }
    bool operator<(const MonoScalar& rhs) const {
        if (torsion_ != rhs.torsion_) return torsion_ < rhs.torsion_;
        return free_ < rhs.free_;
    }

    // Canonical literal form, re-parsable by parse_scalar.
    std::string str() const {
        std::ostringstream os;
        bool need_star = false;
        if (torsion_ == 0) {
            if (free_.empty()) return "1";
        } else if (torsion_ == Rational(1, 2)) {
            os << "-1";
            need_star = true;
        } else {
            os << "zeta(" << torsion_.get_den().get_str() << ")";
            if (torsion_.get_num() != 1) os << "^" << torsion_.get_num().get_str();
            need_star = true;
        }
        for (const auto& [name, e] : free_) {
            if (need_star) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            need_star = true;
        }
        return os.str();
    }

private:
    static Rational normalize_mod1(Rational t) {
        t.canonicalize();
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
        Rational r = t - Rational(fl);
        r.canonicalize();
        return r;
    }

    Rational torsion_;
    std::map<std::string, long> free_;
};

inline std::optional<long> order_of(const MonoScalar& s) { return s.order(); }

inline MonoScalar mono_mul(const MonoScalar& a, const MonoScalar& b) { return a * b; }
inline MonoScalar mono_inv(const MonoScalar& a) { return a.inverse(); }
inline MonoScalar mono_pow(const MonoScalar& a, long k) { return a.pow(k); }

// A parsed scalar literal: rational * product of zeta(N)^k * product of NAME^k.
// MonoScalar only carries the unit part, so conversion demands |rational| = 1;
// field embeddings accept the general form.
struct ScalarLiteral {
    Rational coeff{1};
    Rational torsion{0}; // already reduced mod 1
    std::map<std::string, long> free;

    bool is_unit() const { return coeff == 1 || coeff == -1; }

    MonoScalar to_mono() const {
        if (!is_unit())
            throw IncompatibleField("scalar " + str() + " is not a root of unity times a monomial");
        MonoScalar m = MonoScalar::from_torsion(coeff == -1 ? torsion + Rational(1, 2) : torsion);
        for (const auto& [name, e] : free) m = m * MonoScalar::indeterminate(name, e);
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        bool emitted = false;
        if (coeff != 1) {
            if (coeff == -1)
                os << "-1";
            else
                os << coeff.get_str();
            emitted = true;
        }
        if (torsion != 0) {
            if (emitted) os << "*";
            os << "zeta(" << torsion.get_den().get_str() << ")";
            if (torsion.get_num() != 1) os << "^" << torsion.get_num().get_str();
            emitted = true;
        }
        for (const auto& [name, e] : free) {
            if (emitted) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            emitted = true;
        }
        if (!emitted) os << "1";
        return os.str();
    }
};

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    ScalarLiteral parse() {
        ScalarLiteral lit;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i_;
        } else if (peek() == '+') {
            ++i_;
        }
        parse_factor(lit);
        skip_ws();
        while (peek() == '*') {
            ++i_;
            skip_ws();
            parse_factor(lit);
            skip_ws();
        }
        if (i_ != s_.size()) fail("trailing characters in scalar literal");
        if (neg) lit.coeff = -lit.coeff;
        normalize(lit);
        return lit;
    }

private:
    void parse_factor(ScalarLiteral& lit) {
        skip_ws();
        char c = peek();
        if (isdigit(static_cast<unsigned char>(c))) {
            Rational r = parse_number();
            lit.coeff *= r;
            return;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            if (name == "zeta") {
                skip_ws();
                expect('(');
                skip_ws();
                long n = parse_long();
                skip_ws();
                expect(')');
                long k = parse_optional_exponent();
                if (n <= 0) fail("zeta order must be positive");
                lit.torsion += Rational(k, n);
                return;
            }
            long k = parse_optional_exponent();
            if (k != 0) {
                long& slot = lit.free[name];
                slot += k;
                if (slot == 0) lit.free.erase(name);
            }
            return;
        }
        fail("expected scalar factor");
    }

    long parse_optional_exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        ++i_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i_;
        }
        long v = parse_long();
        return neg ? -v : v;
    }

    Rational parse_number() {
        long num = parse_long();
        skip_ws();
        if (peek() == '/') {
            ++i_;
            skip_ws();
            long den = parse_long();
            if (den == 0) fail("division by zero in scalar literal");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    long parse_long() {
        skip_ws();
        if (!isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        long v = 0;
        while (i_ < s_.size() && isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_] - '0');
            ++i_;
        }
        return v;
    }

    std::string parse_ident() {
        std::string r;
        while (i_ < s_.size() &&
               (isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
            r += s_[i_];
            ++i_;
        }
        return r;
    }

    static void normalize(ScalarLiteral& lit) {
        lit.coeff.canonicalize();
        if (lit.coeff == 0) throw IncompatibleField("zero is not a valid scalar");
        // fold torsion into [0,1)
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), lit.torsion.get_num().get_mpz_t(),
                   lit.torsion.get_den().get_mpz_t());
        lit.torsion -= Rational(fl);
        lit.torsion.canonicalize();
        // fold a sign hiding in the coefficient onto -1 = zeta(2)
        if (lit.coeff < 0 && (lit.coeff == -1)) {
            // kept as coeff; to_mono folds it into torsion.
        }
    }

    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    void skip_ws() {
        while (i_ < s_.size() && isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw IncompatibleField("scalar literal '" + s_ + "': " + msg);
    }

    const std::string& s_;
    size_t i_ = 0;
};

} // namespace detail

inline ScalarLiteral parse_scalar_literal(const std::string& text) {
    return detail::ScalarParser(text).parse();
}

inline MonoScalar parse_scalar(const std::string& text) {
    return parse_scalar_literal(text).to_mono();
}

} // namespace gkn
