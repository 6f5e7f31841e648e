#pragma once

#include <gkn/errors.hpp>
#include <gkn/fields.hpp>
#include <gkn/matrix.hpp>
#include <gkn/space.hpp>

#include <string>
#include <tuple>
#include <vector>

namespace gkn {

// Explicit braiding c on V (x) V over an exact field.  Stored column-sparse:
// img[s*d + t] lists terms (u, v, coef) of c(x_s (x) x_t) = sum coef x_u (x) x_v.
template <class F>
struct Braiding {
    using Elem = typename F::Elem;

    Braiding() = default;
    explicit Braiding(F f) : field(std::move(f)) {}

    F field;
    int d = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<std::tuple<int, int, Elem>>> img;

    // Optional Z-grading: deg(x_i) = degs[i]; each crossing shifts the total
    // degree by `shift`.
    bool graded = false;
    std::vector<long> degs;
    long shift = 0;

    // Set-theoretic fixtures are total only on an enlarged ambient window;
    // boundary columns where the image would leave the window are left empty.
    bool partial = false;
};

namespace detail {

template <class F>
void braid_apply_slot(const Braiding<F>& b, int n, int slot, const std::vector<typename F::Elem>& in,
                      std::vector<typename F::Elem>& out) {
    const F& f = b.field;
    long d = b.d;
    long stride_b = 1;
    for (int j = slot + 2; j < n; ++j) stride_b *= d;
    long stride_a = stride_b * d;
    for (size_t idx = 0; idx < in.size(); ++idx) {
        if (f.is_zero(in[idx])) continue;
        long a = (static_cast<long>(idx) / stride_a) % d;
        long bb = (static_cast<long>(idx) / stride_b) % d;
        for (const auto& [u, v, coef] : b.img[a * d + bb]) {
            long nidx = static_cast<long>(idx) + (u - a) * stride_a + (v - bb) * stride_b;
            out[nidx] = f.add(out[nidx], f.mul(coef, in[idx]));
        }
    }
}

} // namespace detail

template <class F>
std::vector<typename F::Elem> braid_apply_word(const Braiding<F>& b, int n,
                                               const std::vector<int>& word,
                                               std::vector<typename F::Elem> vec) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::vector<typename F::Elem> out(vec.size(), b.field.zero());
        detail::braid_apply_slot(b, n, *it, vec, out);
        vec = std::move(out);
    }
    return vec;
}

// Sparse column image of M_w: cheap even when d^n is large.
template <class F>
std::map<long, typename F::Elem> braid_apply_word_sparse(const Braiding<F>& b, int n,
                                                         const std::vector<int>& word,
                                                         long column) {
    const F& f = b.field;
    long d = b.d;
    std::map<long, typename F::Elem> vec{{column, f.one()}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int slot = *it;
        long stride_b = 1;
        for (int j = slot + 2; j < n; ++j) stride_b *= d;
        long stride_a = stride_b * d;
        std::map<long, typename F::Elem> out;
        for (const auto& [idx, val] : vec) {
            long a = (idx / stride_a) % d;
            long bb = (idx / stride_b) % d;
            for (const auto& [u, v, coef] : b.img[a * d + bb]) {
                long nidx = idx + (u - a) * stride_a + (v - bb) * stride_b;
                auto entry = out.find(nidx);
                auto term = f.mul(coef, val);
                if (entry == out.end())
                    out.emplace(nidx, std::move(term));
                else
                    entry->second = f.add(entry->second, term);
            }
        }
        vec = std::move(out);
    }
    for (auto it = vec.begin(); it != vec.end();)
        it = f.is_zero(it->second) ? vec.erase(it) : std::next(it);
    return vec;
}

// Verifies (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on V^{(x)3}.
template <class F>
void check_braid_equation(const Braiding<F>& b) {
    const F& f = b.field;
    long n3 = static_cast<long>(b.d) * b.d * b.d;
    for (long idx = 0; idx < n3; ++idx) {
        std::vector<typename F::Elem> e(n3, f.zero());
        e[idx] = f.one();
        auto lhs = braid_apply_word(b, 3, {0, 1, 0}, e);
        auto rhs = braid_apply_word(b, 3, {1, 0, 1}, e);
        for (long k = 0; k < n3; ++k)
            if (!f.eq(lhs[k], rhs[k]))
                throw BraidEquationViolation("braid equation fails on basis vector " +
                                             std::to_string(idx));
    }
}

// ------------------------------------------------------------------
// Assembly from a finite spec
// ------------------------------------------------------------------

template <class F>
Braiding<F> braiding_matrix(const Validated& v, const F& field) {
    if (!v.spec.is_finite())
        throw MalformedSpec("spec", "braiding matrices need a finite truncation");
    Braiding<F> b(field);

    struct LabelInfo {
        std::string base;
        bool half;
        bool is_block;
        int eps;
    };
    std::vector<LabelInfo> info;
    for (const auto& blk : v.spec.blocks) {
        b.labels.push_back("x_" + blk.id);
        info.push_back({blk.id, false, true, blk.eps});
        b.labels.push_back("x_" + blk.id + "+1/2");
        info.push_back({blk.id, true, true, blk.eps});
    }
    for (const auto& p : v.spec.points) {
        b.labels.push_back("x_" + p.id);
        info.push_back({p.id, false, false, 0});
    }
    b.d = static_cast<int>(b.labels.size());

    auto q_of = [&](const LabelInfo& flying, const LabelInfo& over) -> MonoScalar {
        if (flying.base == over.base) {
            if (over.is_block)
                return over.eps == 1 ? MonoScalar::one() : MonoScalar::minus_one();
            return v.point(over.base).q;
        }
        return v.q(flying.base, over.base);
    };
    auto a_of = [&](const LabelInfo& flying, const LabelInfo& over) -> Rational {
        if (flying.base == over.base) return Rational(over.eps); // eps * a = 1
        return v.a(flying.base, over.base);
    };

    b.img.resize(static_cast<size_t>(b.d) * b.d);
    for (int s = 0; s < b.d; ++s) {
        for (int t = 0; t < b.d; ++t) {
            const LabelInfo& fu = info[s];
            const LabelInfo& fv = info[t];
            auto& terms = b.img[static_cast<size_t>(s) * b.d + t];
            typename F::Elem q = field.embed(q_of(fu, fv));
            // c(x_s (x) x_t) = q (x_t + a x_{t,plain}) (x) x_s, the a-term only
            // when x_t is a half label.
            terms.emplace_back(t, s, q);
            if (fv.half) {
                Rational a = a_of(fu, fv);
                if (a != 0)
                    terms.emplace_back(t - 1, s, field.mul(q, field.from_rational(a)));
            }
        }
    }
    if (b.d <= 6) check_braid_equation(b);
    return b;
}

template <class F>
Braiding<F> braiding_matrix(const BraidedSpaceSpec& spec, const F& field) {
    return braiding_matrix(validate(spec), field);
}

// Restriction of the braiding to the pair of components (i, j): the composite
// c_{ji} c_{ij} as a dense matrix, for the identity test of weak + ghostless
// pairs.
template <class F>
bool pair_braiding_is_identity(const Braiding<F>& b, const std::vector<int>& part_i,
                               const std::vector<int>& part_j) {
    const F& f = b.field;
    for (int s : part_i)
        for (int t : part_j) {
            // c_ij (x_s (x) x_t), then c_ji on each term
            std::map<std::pair<int, int>, typename F::Elem> acc;
            for (const auto& [u, v, c1] : b.img[static_cast<size_t>(s) * b.d + t])
                for (const auto& [w, z, c2] : b.img[static_cast<size_t>(u) * b.d + v]) {
                    auto key = std::make_pair(w, z);
                    auto it = acc.find(key);
                    auto val = f.mul(c1, c2);
                    if (it == acc.end())
                        acc[key] = val;
                    else
                        it->second = f.add(it->second, val);
                }
            for (const auto& [key, val] : acc) {
                bool diag = key.first == s && key.second == t;
                if (diag ? !f.eq(val, f.one()) : !f.is_zero(val)) return false;
            }
        }
    return true;
}

// ------------------------------------------------------------------
// Set-theoretic fixtures (Theorem 3.7 Step 2 and Example 3.1)
// ------------------------------------------------------------------

enum class SetBraidingKind {
    Shift,    // c(v_a (x) v_b) = v_{b+1} (x) v_a
    Reflect,  // c(v_a (x) v_b) = v_{2a-b} (x) v_a
};

struct ShiftFixture {
    Braiding<RatField> braiding;
    // indices (into labels) of the declared window inside the ambient one
    std::vector<int> window;
};

// Braiding on basis (v_m) for m in an ambient integer window large enough that
// `applications` many crossings starting from the declared window stay total.
inline ShiftFixture shift_fixture(long lo, long hi, int applications,
                                  SetBraidingKind kind = SetBraidingKind::Shift) {
    long alo = lo, ahi = hi;
    if (kind == SetBraidingKind::Shift) {
        ahi += applications;
    } else {
        for (int k = 0; k < applications; ++k) {
            long nlo = 2 * alo - ahi, nhi = 2 * ahi - alo;
            alo = nlo;
            ahi = nhi;
        }
    }
    ShiftFixture out;
    Braiding<RatField>& b = out.braiding;
    b.d = static_cast<int>(ahi - alo + 1);
    b.partial = true;
    for (long m = alo; m <= ahi; ++m) b.labels.push_back("v_" + std::to_string(m));
    b.img.resize(static_cast<size_t>(b.d) * b.d);
    for (long a = alo; a <= ahi; ++a)
        for (long bb = alo; bb <= ahi; ++bb) {
            long u, v;
            if (kind == SetBraidingKind::Shift) {
                u = bb + 1;
                v = a;
            } else {
                u = 2 * a - bb;
                v = a;
            }
            if (u < alo || u > ahi) continue; // boundary: left partial
            b.img[static_cast<size_t>(a - alo) * b.d + (bb - alo)].emplace_back(
                static_cast<int>(u - alo), static_cast<int>(v - alo), Rational(1));
        }
    if (kind == SetBraidingKind::Shift) {
        b.graded = true;
        b.shift = 1;
        for (long m = alo; m <= ahi; ++m) b.degs.push_back(m);
    }
    for (long m = lo; m <= hi; ++m) out.window.push_back(static_cast<int>(m - alo));
    return out;
}

} // namespace gkn
