#pragma once

#include "heis/daha.hpp"
#include "heis/diagram/genterm.hpp"

namespace heis {

// i_n: AH_n -> End(up^n), s_i to the crossing of the i-th and (i+1)-th strings and
// x_j to the dot on the j-th string, strings numbered 1,2,... from right to left.
// Internally AH positions are 0-based; position p corresponds to column n-1-p.
inline Morphism ah_embed_up(const AHElem& a, int k) {
    int n = a.n();
    Word w = word_up(n);
    Engine eng(k);
    Morphism out(k, w, w);
    for (auto& [key, c] : a.coeffs()) {
        const Mono& mono = key.first;
        const Perm& p = key.second;
        Events evs;
        auto word = reduced_word(p);
        // p = s_{word[0]} o s_{word[1]} o ... ; bottom-to-top stack order is reversed
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            int j = *it;  // AH positions (j, j+1) -> columns (n-2-j, n-1-j)
            evs.push_back(ev_cross(n - 2 - j));
        }
        for (int i = 0; i < n; ++i)
            if (mono[i] > 0) evs.push_back(ev_dot(n - 1 - i, mono[i]));
        eng.reduce(w, std::move(evs), c, sym_one(), out);
    }
    return out;
}

// j_n: AH_n -> End(down^n), -s_i to the crossing, x_j to the dot; same numbering.
inline Morphism ah_embed_down(const AHElem& a, int k) {
    int n = a.n();
    Word w = word_down(n);
    Engine eng(k);
    Morphism out(k, w, w);
    for (auto& [key, c] : a.coeffs()) {
        const Mono& mono = key.first;
        const Perm& p = key.second;
        Events evs;
        auto word = reduced_word(p);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            evs.push_back(ev_cross(n - 2 - *it));
        for (int i = 0; i < n; ++i)
            if (mono[i] > 0) evs.push_back(ev_dot(n - 1 - i, mono[i]));
        Rat sign = (word.size() % 2) ? -1 : 1;
        eng.reduce(w, std::move(evs), c * sign, sym_one(), out);
    }
    return out;
}

}  // namespace heis
