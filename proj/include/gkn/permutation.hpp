#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace gkn {

// Permutations in one-line notation, 0-based: p[m] = sigma(m).
// Generators s_i (0 <= i <= n-2) swap the values i and i+1 when multiplied on
// the left: (s_i . sigma)(m) = s_i(sigma(m)).  A word (i1,...,il) stands for
// the composition s_{i1} . s_{i2} ... s_{il} with the rightmost letter applied
// first, matching M_w = C_{i1} C_{i2} ... C_{il} as a matrix product.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool perm_is_identity(const Perm& p) {
    for (size_t m = 0; m < p.size(); ++m)
        if (p[m] != static_cast<int>(m)) return false;
    return true;
}

inline Perm perm_transposition(int n, int i) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

// (a . b)(m) = a(b(m))
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t m = 0; m < b.size(); ++m) r[m] = a[b[m]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t m = 0; m < p.size(); ++m) r[p[m]] = static_cast<int>(m);
    return r;
}

inline int perm_length(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

inline std::vector<Perm> all_perms(int n) {
    Perm p = perm_identity(n);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// l(s_i . sigma) = l(sigma) - 1 iff sigma^{-1}(i) > sigma^{-1}(i+1).
inline bool perm_left_descent(const Perm& p, int i) {
    int pos_i = -1, pos_i1 = -1;
    for (size_t m = 0; m < p.size(); ++m) {
        if (p[m] == i) pos_i = static_cast<int>(m);
        if (p[m] == i + 1) pos_i1 = static_cast<int>(m);
    }
    return pos_i > pos_i1;
}

// Lexicographically smallest reduced word: greedily pick the smallest valid
// first letter; the suffix is always completable, so greedy is lex-min.
inline std::vector<int> lex_min_reduced_word(Perm p) {
    std::vector<int> word;
    int n = static_cast<int>(p.size());
    while (!perm_is_identity(p)) {
        for (int i = 0; i + 1 < n; ++i) {
            if (perm_left_descent(p, i)) {
                word.push_back(i);
                p = perm_compose(perm_transposition(n, i), p);
                break;
            }
        }
    }
    return word;
}

// All reduced words of p (exhaustive; for small n only).
inline void all_reduced_words_rec(const Perm& p, std::vector<int>& prefix,
                                  std::vector<std::vector<int>>& out) {
    if (perm_is_identity(p)) {
        out.push_back(prefix);
        return;
    }
    int n = static_cast<int>(p.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (perm_left_descent(p, i)) {
            prefix.push_back(i);
            all_reduced_words_rec(perm_compose(perm_transposition(n, i), p), prefix, out);
            prefix.pop_back();
        }
    }
}

inline std::vector<std::vector<int>> all_reduced_words(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    all_reduced_words_rec(p, prefix, out);
    return out;
}

} // namespace gkn
