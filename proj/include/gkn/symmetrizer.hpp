#pragma once

#include <gkn/braiding.hpp>
#include <gkn/matrix.hpp>
#include <gkn/permutation.hpp>

#include <map>
#include <vector>

namespace gkn {

// Quantum symmetrizer Omega_n = sum_{sigma in S_n} M_sigma and the graded
// dimensions dim B^n(V) = rank Omega_n it yields.

struct SymmetrizerBudget {
    long max_side = 10000; // bound on d^n, the matrix side
};

namespace detail {

inline long checked_power(long d, int n, const SymmetrizerBudget& budget) {
    long side = 1;
    for (int i = 0; i < n; ++i) {
        side *= d;
        if (side > budget.max_side)
            throw BudgetExceeded("d^n = " + std::to_string(d) + "^" + std::to_string(n) +
                                 " exceeds the budget side " + std::to_string(budget.max_side));
    }
    return side;
}

// Applies Omega_n in place via the factored recursion: Omega_n =
// (id + C_{n-2} + C_{n-3}C_{n-2} + ... + C_0...C_{n-2}) (Omega_{n-1} (x) id).
template <class F>
void omega_apply(const Braiding<F>& b, int n, std::vector<typename F::Elem>& vec) {
    if (n <= 1) return;
    const F& f = b.field;
    long d = b.d;
    long sub = static_cast<long>(vec.size()) / d;
    // (Omega_{n-1} (x) id): recurse on the strided slices with fixed last slot.
    {
        std::vector<typename F::Elem> slice(sub, f.zero());
        for (long t = 0; t < d; ++t) {
            for (long j = 0; j < sub; ++j) slice[j] = vec[j * d + t];
            omega_apply(b, n - 1, slice);
            for (long j = 0; j < sub; ++j) vec[j * d + t] = slice[j];
        }
    }
    // shuffle-insertion sum
    std::vector<typename F::Elem> acc = vec;
    std::vector<typename F::Elem> tmp = vec;
    for (int i = n - 2; i >= 0; --i) {
        std::vector<typename F::Elem> out(vec.size(), f.zero());
        braid_apply_slot(b, n, i, tmp, out);
        tmp = std::move(out);
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = f.add(acc[k], tmp[k]);
    }
    vec = std::move(acc);
}

} // namespace detail

// M_sigma for a specific word (not necessarily reduced); columns of the dense
// matrix are the images of the basis vectors.
template <class F>
Mat<F> m_sigma_word(const Braiding<F>& b, int n, const std::vector<int>& word,
                    const SymmetrizerBudget& budget = {}) {
    long side = detail::checked_power(b.d, n, budget);
    Mat<F> m(b.field, static_cast<int>(side), static_cast<int>(side));
    for (long col = 0; col < side; ++col) {
        std::vector<typename F::Elem> e(side, b.field.zero());
        e[col] = b.field.one();
        auto img = braid_apply_word(b, n, word, std::move(e));
        for (long row = 0; row < side; ++row) m.at(static_cast<int>(row), static_cast<int>(col)) = img[row];
    }
    return m;
}

// M_sigma along the lexicographically smallest reduced word of sigma.
template <class F>
Mat<F> m_sigma(const Braiding<F>& b, int n, const Perm& sigma,
               const SymmetrizerBudget& budget = {}) {
    return m_sigma_word(b, n, lex_min_reduced_word(sigma), budget);
}

// Omega_n by the factored recursion.
template <class F>
Mat<F> omega(const Braiding<F>& b, int n, const SymmetrizerBudget& budget = {}) {
    long side = detail::checked_power(b.d, n, budget);
    Mat<F> m(b.field, static_cast<int>(side), static_cast<int>(side));
    for (long col = 0; col < side; ++col) {
        std::vector<typename F::Elem> e(side, b.field.zero());
        e[col] = b.field.one();
        detail::omega_apply(b, n, e);
        for (long row = 0; row < side; ++row) m.at(static_cast<int>(row), static_cast<int>(col)) = e[row];
    }
    return m;
}

// Omega_n as the literal n!-term sum; the independent oracle for the recursion.
template <class F>
Mat<F> omega_literal(const Braiding<F>& b, int n, const SymmetrizerBudget& budget = {}) {
    long side = detail::checked_power(b.d, n, budget);
    Mat<F> acc(b.field, static_cast<int>(side), static_cast<int>(side));
    for (const auto& sigma : all_perms(n)) {
        Mat<F> m = m_sigma(b, n, sigma, budget);
        acc.add_in_place(b.field, m);
    }
    return acc;
}

enum class OmegaMode { Recursion, LiteralSum };

// dim B^0..dim B^{n_max}: rank of Omega_n over the operator's field.
template <class F>
std::vector<long> nichols_dims(const Braiding<F>& b, int n_max,
                               const SymmetrizerBudget& budget = {},
                               OmegaMode mode = OmegaMode::Recursion) {
    std::vector<long> dims;
    dims.push_back(1);
    if (n_max >= 1) dims.push_back(b.d);
    for (int n = 2; n <= n_max; ++n) {
        Mat<F> om = mode == OmegaMode::Recursion ? omega(b, n, budget) : omega_literal(b, n, budget);
        dims.push_back(mat_rank(b.field, om));
    }
    return dims;
}

// ------------------------------------------------------------------
// Graded injectivity (Theorem 3.7 Step 2)
// ------------------------------------------------------------------

// True iff Omega_n restricted to every graded slice of the declared window is
// injective.  The operator must carry a Z-grading under which every crossing
// shifts the total degree by the declared amount.
template <class F>
bool graded_injectivity(const Braiding<F>& b, int n, const std::vector<int>& window,
                        const SymmetrizerBudget& budget = {}) {
    const F& f = b.field;
    if (!b.graded) throw GradingViolation("operator carries no grading");
    for (int s = 0; s < b.d; ++s)
        for (int t = 0; t < b.d; ++t)
            for (const auto& [u, v, coef] : b.img[static_cast<size_t>(s) * b.d + t]) {
                (void)coef;
                if (b.degs[u] + b.degs[v] != b.degs[s] + b.degs[t] + b.shift)
                    throw GradingViolation("braiding does not shift degree by " +
                                           std::to_string(b.shift));
            }
    long side = detail::checked_power(b.d, n, budget);

    // enumerate window tuples grouped by total degree
    std::map<long, std::vector<long>> slices;
    std::vector<int> tuple(n, 0);
    while (true) {
        long flat = 0, deg = 0;
        for (int k = 0; k < n; ++k) {
            flat = flat * b.d + window[tuple[k]];
            deg += b.degs[window[tuple[k]]];
        }
        slices[deg].push_back(flat);
        int k = n - 1;
        while (k >= 0 && tuple[k] + 1 == static_cast<int>(window.size())) tuple[k--] = 0;
        if (k < 0) break;
        ++tuple[k];
    }

    for (const auto& [deg, cols] : slices) {
        (void)deg;
        Mat<F> m(f, static_cast<int>(side), static_cast<int>(cols.size()));
        for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
            std::vector<typename F::Elem> e(side, f.zero());
            e[cols[cidx]] = f.one();
            detail::omega_apply(b, n, e);
            for (long row = 0; row < side; ++row)
                m.at(static_cast<int>(row), static_cast<int>(cidx)) = e[row];
        }
        if (mat_rank(f, m) != static_cast<int>(cols.size())) return false;
    }
    return true;
}

} // namespace gkn
