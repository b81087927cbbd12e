#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "heis/partition.hpp"
#include "heis/perm.hpp"
#include "heis/rational.hpp"

namespace heis {

// Element of the group algebra QS_n.
class PermAlgElem {
public:
    explicit PermAlgElem(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Perm, Rat>& coeffs() const& { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(const Perm& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add(const Perm& p, const Rat& c) {
        if (c == 0) return;
        if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("PermAlgElem: arity");
        auto [it, fresh] = coeffs_.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    PermAlgElem& operator+=(const PermAlgElem& o) {
        check(o);
        for (auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }
    PermAlgElem& operator-=(const PermAlgElem& o) {
        check(o);
        for (auto& [p, c] : o.coeffs_) add(p, -c);
        return *this;
    }
    PermAlgElem& operator*=(const Rat& c) {
        if (c == 0) coeffs_.clear();
        else
            for (auto& [p, v] : coeffs_) v *= c;
        return *this;
    }
    friend PermAlgElem operator+(PermAlgElem a, const PermAlgElem& b) { return a += b; }
    friend PermAlgElem operator-(PermAlgElem a, const PermAlgElem& b) { return a -= b; }
    friend PermAlgElem operator*(PermAlgElem a, const Rat& c) { return a *= c; }
    bool operator==(const PermAlgElem& o) const = default;

private:
    void check(const PermAlgElem& o) const {
        if (n_ != o.n_) throw std::invalid_argument("PermAlgElem: size mismatch");
    }
    int n_;
    std::map<Perm, Rat> coeffs_;
};

inline PermAlgElem perm_alg_unit(int n) {
    PermAlgElem e(n);
    e.add(perm_identity(n), 1);
    return e;
}

inline PermAlgElem perm_alg_of(const Perm& p) {
    PermAlgElem e(static_cast<int>(p.size()));
    e.add(p, 1);
    return e;
}

inline PermAlgElem mul(const PermAlgElem& a, const PermAlgElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("PermAlgElem mul: size mismatch");
    PermAlgElem out(a.n());
    for (auto& [p, cp] : a.coeffs())
        for (auto& [q, cq] : b.coeffs()) out.add(perm_mul(p, q), cp * cq);
    return out;
}

inline PermAlgElem operator*(const PermAlgElem& a, const PermAlgElem& b) { return mul(a, b); }

// Young symmetrizer for the row-reading canonical tableau of shape lam:
// e_lam = (f^lam / n!) a_T b_T with a_T the row symmetrizer and b_T the signed
// column symmetrizer.
inline PermAlgElem young_symmetrizer(const Partition& lam) {
    int n = lam.size();
    // canonical tableau: cell (i,j) holds entry sum(lam_0..lam_{i-1}) + j (0-based)
    std::vector<std::vector<int>> tab(lam.length());
    int next = 0;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.part(i); ++j) tab[i].push_back(next++);

    auto subgroup_sum = [&](const std::vector<std::vector<int>>& groups, bool sign) {
        // sum over the Young subgroup permuting each group independently
        PermAlgElem acc = perm_alg_unit(n);
        for (const auto& g : groups) {
            PermAlgElem factor(n);
            std::vector<int> idx(g.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::vector<int> arrangement = idx;
            std::sort(arrangement.begin(), arrangement.end());
            do {
                Perm p = perm_identity(n);
                for (size_t t = 0; t < g.size(); ++t) p[g[t]] = g[arrangement[t]];
                int sgn = 1;
                if (sign) {
                    // parity of the arrangement
                    int inv = 0;
                    for (size_t x = 0; x < arrangement.size(); ++x)
                        for (size_t y = x + 1; y < arrangement.size(); ++y)
                            if (arrangement[x] > arrangement[y]) ++inv;
                    sgn = inv % 2 ? -1 : 1;
                }
                factor.add(p, sgn);
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
            acc = mul(acc, factor);
        }
        return acc;
    };

    std::vector<std::vector<int>> rows(tab.begin(), tab.end());
    Partition conj = conjugate(lam);
    std::vector<std::vector<int>> cols(conj.length());
    for (int j = 0; j < conj.length(); ++j)
        for (int i = 0; i < conj.part(j); ++i) cols[j].push_back(tab[i][j]);

    PermAlgElem a_T = subgroup_sum(rows, false);
    PermAlgElem b_T = subgroup_sum(cols, true);
    PermAlgElem e = mul(a_T, b_T);
    e *= Rat(num_standard_tableaux(lam), factorial(n));
    return e;
}

// ---------------------------------------------------------------------------
// Two-colored matrix model: End((B (+) R)^{x n}) = (+)_r Mat_{C(n,r)}(QS_r (x) QS_{n-r}).
// Colorings with r reds are indexed by the sorted list of red-position subsets in
// lexicographic order; the block entry is a linear combination of (red perm, blue perm).
// ---------------------------------------------------------------------------

using ColorWord = std::vector<bool>;  // true = red, positions left to right

inline std::vector<ColorWord> color_words(int n, int r) {
    std::vector<ColorWord> out;
    ColorWord w(n, false);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (left == 0) {
            out.push_back(w);
            return;
        }
        if (pos == n || n - pos < left) return;
        w[pos] = true;
        self(self, pos + 1, left - 1);
        w[pos] = false;
        self(self, pos + 1, left);
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end());
    return out;
}

using PermPair = std::pair<Perm, Perm>;  // (red in S_r, blue in S_{n-r})
using PairAlg = std::map<PermPair, Rat>;

inline void pair_alg_add(PairAlg& a, const PermPair& p, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = a.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

inline PairAlg pair_alg_mul(const PairAlg& a, const PairAlg& b) {
    PairAlg out;
    for (auto& [p, cp] : a)
        for (auto& [q, cq] : b)
            pair_alg_add(out, {perm_mul(p.first, q.first), perm_mul(p.second, q.second)}, cp * cq);
    return out;
}

inline PairAlg pair_alg_of(const PermAlgElem& red, const PermAlgElem& blue) {
    PairAlg out;
    for (auto& [p, cp] : red.coeffs())
        for (auto& [q, cq] : blue.coeffs()) pair_alg_add(out, {p, q}, cp * cq);
    return out;
}

// Block-diagonal element of the two-colored endomorphism algebra.
class ColoredBlockElem {
public:
    explicit ColoredBlockElem(int n) : n_(n), blocks_(n + 1) {
        for (int r = 0; r <= n; ++r) {
            size_t sz = color_words(n, r).size();
            blocks_[r].assign(sz, std::vector<PairAlg>(sz));
        }
    }

    int n() const { return n_; }
    PairAlg& entry(int r, int row, int col) { return blocks_[r][row][col]; }
    const PairAlg& entry(int r, int row, int col) const { return blocks_[r][row][col]; }
    size_t block_size(int r) const { return blocks_[r].size(); }

    friend ColoredBlockElem mul(const ColoredBlockElem& a, const ColoredBlockElem& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("ColoredBlockElem mul: size");
        ColoredBlockElem out(a.n_);
        for (int r = 0; r <= a.n_; ++r) {
            size_t sz = a.block_size(r);
            for (size_t i = 0; i < sz; ++i)
                for (size_t j = 0; j < sz; ++j) {
                    PairAlg acc;
                    for (size_t t = 0; t < sz; ++t) {
                        if (a.entry(r, i, t).empty() || b.entry(r, t, j).empty()) continue;
                        for (auto& [p, c] : pair_alg_mul(a.entry(r, i, t), b.entry(r, t, j)))
                            pair_alg_add(acc, p, c);
                    }
                    out.blocks_[r][i][j] = std::move(acc);
                }
        }
        return out;
    }

    bool operator==(const ColoredBlockElem& o) const = default;

private:
    int n_;
    std::vector<std::vector<std::vector<PairAlg>>> blocks_;
};

// Index of a coloring in the lexicographic list.
inline int color_index(const std::vector<ColorWord>& words, const ColorWord& w) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) throw std::logic_error("color_index: missing word");
    return static_cast<int>(it - words.begin());
}

// Delta on the group algebra: color the strands of each permutation red/blue in all
// possible ways. The block entry at (target coloring, source coloring) is the pair of
// induced permutations of the red and blue strands (numbered left to right).
inline ColoredBlockElem delta_colored(const PermAlgElem& x) {
    int n = x.n();
    ColoredBlockElem out(n);
    std::vector<std::vector<ColorWord>> words(n + 1);
    for (int r = 0; r <= n; ++r) words[r] = color_words(n, r);
    for (auto& [p, c] : x.coeffs()) {
        // strand from bottom position i to top position p[i]; color per strand
        for (int mask = 0; mask < (1 << n); ++mask) {
            int r = 0;
            ColorWord bot(n), top(n);
            for (int i = 0; i < n; ++i) {
                bool red = (mask >> i) & 1;
                if (red) ++r;
                bot[i] = red;
                top[p[i]] = red;
            }
            // induced permutations: reds of bot (sorted) -> reds of top (sorted)
            std::vector<int> bot_red, bot_blue, top_red, top_blue;
            for (int i = 0; i < n; ++i) (bot[i] ? bot_red : bot_blue).push_back(i);
            for (int i = 0; i < n; ++i) (top[i] ? top_red : top_blue).push_back(i);
            Perm pr(r), pb(n - r);
            for (int a = 0; a < r; ++a) {
                int img = p[bot_red[a]];
                pr[a] = static_cast<int>(
                    std::lower_bound(top_red.begin(), top_red.end(), img) - top_red.begin());
            }
            for (int a = 0; a < n - r; ++a) {
                int img = p[bot_blue[a]];
                pb[a] = static_cast<int>(
                    std::lower_bound(top_blue.begin(), top_blue.end(), img) - top_blue.begin());
            }
            int row = color_index(words[r], top);
            int col = color_index(words[r], bot);
            pair_alg_add(out.entry(r, row, col), {pr, pb}, c);
        }
    }
    return out;
}

// |coloring| = number of boxes of the partition labelling the coloring word, which
// equals the number of (red, blue) pairs in which the red is left of the blue...
// Concretely lambda_i counts blues to the right of the i-th red in the rectangle
// picture, i.e. |lambda| = #{(i,j) : word[i] red, word[j] blue, i < j}.
inline int coloring_weight(const ColorWord& w) {
    int weight = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i])
            for (size_t j = i + 1; j < w.size(); ++j)
                if (!w[j]) ++weight;
    return weight;
}

// Verifies the conjugacy witnesses from the H_n (and E_n) splitting:
// u o v = Delta(i_n(e)) and v o u = sum_r i_{r,n}(e x e), for e = e_(n) and the
// signed variant for e_(1^n).
inline bool verify_trivial_split(int n) {
    std::vector<std::vector<ColorWord>> words(n + 1);
    for (int r = 0; r <= n; ++r) words[r] = color_words(n, r);
    // min coloring: blues then reds (left to right): word = B^{n-r} R^r.
    auto min_index = [&](int r) {
        ColorWord w(n, false);
        for (int i = n - r; i < n; ++i) w[i] = true;
        return color_index(words[r], w);
    };

    for (bool signed_case : {false, true}) {
        auto e_of = [&](int m) {
            return signed_case ? young_symmetrizer(Partition(std::vector<int>(m, 1)))
                               : (m == 0 ? perm_alg_unit(0) : young_symmetrizer(Partition{m}));
        };
        PermAlgElem e_n = e_of(n);
        ColoredBlockElem lhs = delta_colored(e_n);

        ColoredBlockElem u(n), v(n);
        for (int r = 0; r <= n; ++r) {
            PairAlg ee = pair_alg_of(e_of(r), e_of(n - r));
            int mi = min_index(r);
            Rat inv_binom = Rat(1, binomial(n, r));
            for (size_t t = 0; t < words[r].size(); ++t) {
                int sgn = signed_case && (coloring_weight(words[r][t]) % 2) ? -1 : 1;
                for (auto& [p, c] : ee) {
                    pair_alg_add(u.entry(r, t, mi), p, c * inv_binom * sgn);
                    pair_alg_add(v.entry(r, mi, t), p, c * sgn);
                }
            }
        }
        ColoredBlockElem uv = mul(u, v);
        if (!(uv == lhs)) return false;

        ColoredBlockElem vu = mul(v, u);
        ColoredBlockElem rhs(n);
        for (int r = 0; r <= n; ++r) {
            int mi = min_index(r);
            rhs.entry(r, mi, mi) = pair_alg_of(e_of(r), e_of(n - r));
        }
        if (!(vu == rhs)) return false;
    }
    return true;
}

}  // namespace heis
