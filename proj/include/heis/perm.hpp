#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

// Permutation in one-line notation, 0-based internally: p[i] = image of i.
// Diagrammatically: the strand entering at bottom position i exits at top position p[i].
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool perm_valid(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// Composition acting as functions: (a*b)(i) = a(b(i)). Diagrams: a stacked above b.
inline Perm perm_mul(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_mul: size mismatch");
    Perm c(a.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inv(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

inline int perm_length(const Perm& a) {
    int inv = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return inv;
}

inline int perm_sign(const Perm& a) { return perm_length(a) % 2 == 0 ? 1 : -1; }

// Simple transposition s_i = (i, i+1), 0-based i in [0, n-2].
inline Perm perm_si(int n, int i) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

// Reduced word (list of 0-based simple-reflection indices) by bubble sort,
// so that composing s_{w[0]} * s_{w[1]} * ... equals a... as functions the
// word satisfies a = s_{w[0]} s_{w[1]} ... s_{w[last]}.
inline std::vector<int> reduced_word(Perm a) {
    std::vector<int> word;
    int n = static_cast<int>(a.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (a[i] > a[i + 1]) {
                // a = a' * s_i with a' shorter; record i, continue with a' = a*s_i.
                std::swap(a[i], a[i + 1]);
                word.push_back(i);
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::string perm_str(const Perm& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i] + 1);
    }
    return s + "]";
}

}  // namespace heis
