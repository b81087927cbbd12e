#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "heis/partition.hpp"
#include "heis/perm.hpp"
#include "heis/rational.hpp"

namespace heis {

// Element of Sym over Q in the Schur basis. No zero coefficients stored.
class SymElem {
public:
    SymElem() = default;
    explicit SymElem(const Rat& c) {
        if (c != 0) coeffs_[Partition{}] = c;
    }

    static SymElem schur(const Partition& lam, const Rat& c = 1) {
        SymElem e;
        if (c != 0) e.coeffs_[lam] = c;
        return e;
    }

    const std::map<Partition, Rat>& coeffs() const& { return coeffs_; }
    std::map<Partition, Rat> coeffs() const&& { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(const Partition& lam) const {
        auto it = coeffs_.find(lam);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add(const Partition& lam, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs_.emplace(lam, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SymElem& operator+=(const SymElem& o) {
        for (auto& [lam, c] : o.coeffs_) add(lam, c);
        return *this;
    }
    SymElem& operator-=(const SymElem& o) {
        for (auto& [lam, c] : o.coeffs_) add(lam, -c);
        return *this;
    }
    SymElem& operator*=(const Rat& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [lam, v] : coeffs_) v *= c;
        return *this;
    }

    friend SymElem operator+(SymElem a, const SymElem& b) { return a += b; }
    friend SymElem operator-(SymElem a, const SymElem& b) { return a -= b; }
    friend SymElem operator*(SymElem a, const Rat& c) { return a *= c; }
    friend SymElem operator*(const Rat& c, SymElem a) { return a *= c; }
    bool operator==(const SymElem& o) const = default;

    // All Schur coefficients integral.
    bool is_integral() const {
        for (auto& [lam, c] : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (auto& [lam, c] : coeffs_) d = std::max(d, lam.size());
        return d;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [lam, c] : coeffs_) {
            if (!first) os << " + ";
            os << rat_str(c) << "*s" << lam.str();
            first = false;
        }
        return os.str();
    }

private:
    std::map<Partition, Rat> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const SymElem& e) { return os << e.str(); }

class SymTensor {
public:
    SymTensor() = default;
    const std::map<std::pair<Partition, Partition>, Rat>& coeffs() const& { return coeffs_; }
    std::map<std::pair<Partition, Partition>, Rat> coeffs() const&& { return coeffs_; }

    void add(const Partition& a, const Partition& b, const Rat& c) {
        if (c == 0) return;
        auto key = std::make_pair(a, b);
        auto [it, fresh] = coeffs_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    SymTensor& operator+=(const SymTensor& o) {
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }
    bool operator==(const SymTensor& o) const = default;

private:
    std::map<std::pair<Partition, Partition>, Rat> coeffs_;
};

inline SymElem sym_one() { return SymElem(Rat(1)); }

inline SymElem complete(int n) {
    if (n < 0) return SymElem();
    if (n == 0) return sym_one();
    return SymElem::schur(Partition{n});
}

inline SymElem elementary(int n) {
    if (n < 0) return SymElem();
    if (n == 0) return sym_one();
    return SymElem::schur(Partition(std::vector<int>(n, 1)));
}

// Pieri rule: product by h_r in the Schur basis.
inline SymElem mul_complete(const SymElem& a, int r) {
    if (r == 0) return a;
    SymElem out;
    for (auto& [lam, c] : a.coeffs())
        for (const Partition& mu : add_horizontal_strip(lam, r)) out.add(mu, c);
    return out;
}

// Expansion of s_lam into monomials in h (Jacobi-Trudi determinant).
// Returns list of (coefficient, multiset of h-indices).
inline std::vector<std::pair<Rat, std::vector<int>>> schur_to_h(const Partition& lam) {
    std::vector<std::pair<Rat, std::vector<int>>> out;
    int l = lam.length();
    if (l == 0) {
        out.push_back({1, {}});
        return out;
    }
    Perm p = perm_identity(l);
    std::vector<int> idx(l);
    do {
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            idx[i] = lam.part(i) - i + p[i];
            if (idx[i] < 0) zero = true;
        }
        if (zero) continue;
        std::vector<int> hs;
        for (int i = 0; i < l; ++i)
            if (idx[i] > 0) hs.push_back(idx[i]);
        std::sort(hs.begin(), hs.end());
        out.push_back({Rat(perm_sign(p)), hs});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline SymElem mul(const SymElem& a, const SymElem& b) {
    // Expand the factor with smaller total support via Jacobi-Trudi, then Pieri.
    const SymElem& big = a.coeffs().size() >= b.coeffs().size() ? a : b;
    const SymElem& small = a.coeffs().size() >= b.coeffs().size() ? b : a;
    SymElem out;
    for (auto& [lam, c] : small.coeffs()) {
        for (auto& [sgn, hs] : schur_to_h(lam)) {
            SymElem term = big;
            for (int h : hs) term = mul_complete(term, h);
            term *= sgn * c;
            out += term;
        }
    }
    return out;
}

inline SymElem operator*(const SymElem& a, const SymElem& b) { return mul(a, b); }

inline SymElem power_sum(int n) {
    if (n <= 0) throw std::invalid_argument("power_sum: n must be positive");
    // Newton: p_n = n h_n - sum_{i=1}^{n-1} p_i h_{n-i}
    std::vector<SymElem> p(n + 1);
    for (int m = 1; m <= n; ++m) {
        SymElem acc = complete(m) * Rat(m);
        for (int i = 1; i < m; ++i) acc -= p[i] * complete(m - i);
        p[m] = acc;
    }
    return p[n];
}

// Skew Schur s_{lam/mu} in the Schur basis (zero unless mu is contained in lam).
inline SymElem skew_schur(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return SymElem();
    int l = lam.length();
    if (l == 0) return sym_one();
    // det(h_{lam_i - mu_j - i + j})
    SymElem out;
    Perm p = perm_identity(l);
    do {
        int sgn = perm_sign(p);
        SymElem term = sym_one();
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int e = lam.part(i) - mu.part(p[i]) - i + p[i];
            if (e < 0) zero = true;
            else if (e > 0) term = mul_complete(term, e);
        }
        if (!zero) out += term * Rat(sgn);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Littlewood-Richardson coefficient c^lam_{mu nu} = <s_mu s_nu, s_lam>.
inline Rat lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size() || !lam.contains(mu)) return 0;
    return skew_schur(lam, mu).coeff(nu);
}

inline SymTensor comul(const SymElem& a) {
    SymTensor out;
    for (auto& [lam, c] : a.coeffs())
        for (const Partition& mu : subpartitions(lam)) {
            SymElem sk = skew_schur(lam, mu);
            for (auto& [nu, d] : sk.coeffs()) out.add(mu, nu, c * d);
        }
    return out;
}

// Skewing operator: f^perp(a), adjoint of multiplication by f for the Hall pairing.
inline SymElem skew_by(const SymElem& a, const SymElem& f) {
    SymElem out;
    for (auto& [nu, c] : a.coeffs())
        for (auto& [mu, d] : f.coeffs()) {
            if (!nu.contains(mu)) continue;
            SymElem sk = skew_schur(nu, mu);
            out += sk * (c * d);
        }
    return out;
}

// Expansion in the power-sum basis over Q.
inline std::map<Partition, Rat> to_power_basis(const SymElem& a) {
    // h_n = sum_{lam |- n} p_lam / z_lam.
    std::map<Partition, Rat> out;
    auto add_pmono = [&](std::vector<int> combined, const Rat& c) {
        std::sort(combined.begin(), combined.end(), std::greater<int>());
        Partition key(combined);
        out[key] += c;
        if (out[key] == 0) out.erase(key);
    };
    for (auto& [lam, c] : a.coeffs()) {
        for (auto& [sgn, hs] : schur_to_h(lam)) {
            // expand product of h_{hs[i]} into p-monomials
            std::vector<std::pair<Rat, std::vector<int>>> acc = {{sgn * c, {}}};
            for (int h : hs) {
                std::vector<std::pair<Rat, std::vector<int>>> nxt;
                for (const Partition& mu : partitions_of(h)) {
                    Rat w = Rat(1) / Rat(z_of(mu));
                    for (auto& [cc, mono] : acc) {
                        std::vector<int> m2 = mono;
                        for (int i = 0; i < mu.length(); ++i) m2.push_back(mu.part(i));
                        nxt.push_back({cc * w, m2});
                    }
                }
                acc = std::move(nxt);
            }
            for (auto& [cc, mono] : acc) add_pmono(mono, cc);
        }
    }
    return out;
}

inline SymElem from_power_basis(const std::map<Partition, Rat>& pm) {
    // p_n in Schur basis via Newton, then multiply out monomials.
    int maxn = 0;
    for (auto& [lam, c] : pm) maxn = std::max(maxn, lam.empty() ? 0 : lam.part(0));
    std::vector<SymElem> p(maxn + 1);
    for (int n = 1; n <= maxn; ++n) p[n] = power_sum(n);
    SymElem out;
    for (auto& [lam, c] : pm) {
        SymElem term(c);
        for (int i = 0; i < lam.length(); ++i) term = term * p[lam.part(i)];
        out += term;
    }
    return out;
}

// Charge-k Hopf pairing: <p_lam, p_mu>_k = delta z_lam k^{len(lam)}.
inline Rat pairing_k(const SymElem& a, const SymElem& b, int k) {
    auto pa = to_power_basis(a);
    auto pb = to_power_basis(b);
    Rat out = 0;
    for (auto& [lam, ca] : pa) {
        auto it = pb.find(lam);
        if (it == pb.end()) continue;
        Rat term = ca * it->second * Rat(z_of(lam));
        for (int i = 0; i < lam.length(); ++i) term *= k;
        out += term;
    }
    return out;
}

// Antipode: s_lam -> (-1)^{|lam|} s_{lam^T}.
inline SymElem antipode(const SymElem& a) {
    SymElem out;
    for (auto& [lam, c] : a.coeffs()) out.add(conjugate(lam), lam.size() % 2 ? -c : c);
    return out;
}

// omega involution: s_lam -> s_{lam^T}.
inline SymElem omega_invol(const SymElem& a) {
    SymElem out;
    for (auto& [lam, c] : a.coeffs()) out.add(conjugate(lam), c);
    return out;
}

// h_r(xs) for r = 0..maxr by dynamic programming over variables.
inline std::vector<Rat> complete_evals(const std::vector<Rat>& xs, int maxr) {
    std::vector<Rat> H(maxr + 1, 0);
    H[0] = 1;
    for (const Rat& x : xs) {
        std::vector<Rat> nxt = H;
        for (int r = 1; r <= maxr; ++r) nxt[r] = H[r] + x * nxt[r - 1];
        H = std::move(nxt);
    }
    return H;
}

// s_lam(x_1..x_n); zero when lam has more parts than variables.
inline Rat schur_poly_eval(const Partition& lam, const std::vector<Rat>& xs) {
    int n = static_cast<int>(xs.size());
    if (lam.length() > n) return 0;
    int l = lam.length();
    if (l == 0) return 1;
    int maxr = lam.part(0) + l;
    std::vector<Rat> H = complete_evals(xs, maxr);
    auto h = [&](int r) -> Rat {
        if (r < 0) return 0;
        return H[r];
    };
    Rat out = 0;
    Perm p = perm_identity(l);
    do {
        Rat term = perm_sign(p);
        for (int i = 0; i < l; ++i) term *= h(lam.part(i) - i + p[i]);
        out += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Expansion of a into monomials in e (elementary basis), via omega + Jacobi-Trudi.
inline std::vector<std::pair<Rat, std::vector<int>>> to_e_monomials(const SymElem& a) {
    std::vector<std::pair<Rat, std::vector<int>>> out;
    for (auto& [lam, c] : a.coeffs())
        for (auto& [sgn, hs] : schur_to_h(conjugate(lam))) out.push_back({sgn * c, hs});
    return out;
}

}  // namespace heis
