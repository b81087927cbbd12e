#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "heis/symfunc.hpp"

namespace heis {

// Element of Heis_k in the normal-ordered basis: finite sum of c * s_mu^- s_lam^+,
// keyed by (mu, lam). The central charge travels with every element.
class HeisElem {
public:
    explicit HeisElem(int charge) : charge_(charge) {}

    int charge() const { return charge_; }
    const std::map<std::pair<Partition, Partition>, Rat>& coeffs() const& { return coeffs_; }
    std::map<std::pair<Partition, Partition>, Rat> coeffs() const&& { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Partition& mu, const Partition& lam, const Rat& c) {
        if (c == 0) return;
        auto key = std::make_pair(mu, lam);
        auto [it, fresh] = coeffs_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    HeisElem& operator+=(const HeisElem& o) {
        check_charge(o);
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }
    HeisElem& operator-=(const HeisElem& o) {
        check_charge(o);
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
        return *this;
    }
    HeisElem& operator*=(const Rat& c) {
        if (c == 0) coeffs_.clear();
        else
            for (auto& [k, v] : coeffs_) v *= c;
        return *this;
    }
    friend HeisElem operator+(HeisElem a, const HeisElem& b) { return a += b; }
    friend HeisElem operator-(HeisElem a, const HeisElem& b) { return a -= b; }
    friend HeisElem operator*(HeisElem a, const Rat& c) { return a *= c; }
    bool operator==(const HeisElem& o) const = default;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : coeffs_) {
            if (!first) os << " + ";
            os << rat_str(c) << "*s-" << k.first.str() << "*s+" << k.second.str();
            first = false;
        }
        return os.str();
    }

private:
    void check_charge(const HeisElem& o) const {
        if (charge_ != o.charge_) throw std::invalid_argument("HeisElem: charge mismatch");
    }
    int charge_;
    std::map<std::pair<Partition, Partition>, Rat> coeffs_;
};

inline HeisElem heis_unit(int k) {
    HeisElem e(k);
    e.add(Partition{}, Partition{}, 1);
    return e;
}

inline HeisElem embed_plus(const SymElem& f, int k) {
    HeisElem e(k);
    for (auto& [lam, c] : f.coeffs()) e.add(Partition{}, lam, c);
    return e;
}

inline HeisElem embed_minus(const SymElem& f, int k) {
    HeisElem e(k);
    for (auto& [mu, c] : f.coeffs()) e.add(mu, Partition{}, c);
    return e;
}

// Straightening product on basis elements:
//   (s_mu^- s_lam^+)(s_nu^- s_kap^+)
//     = sum <lam_(1), nu_(2)>_k  (s_mu nu_(1))^- (lam_(2) s_kap)^+
// from the Heisenberg-double multiplication rule.
inline HeisElem mul(const HeisElem& a, const HeisElem& b) {
    if (a.charge() != b.charge()) throw std::invalid_argument("HeisElem mul: charge mismatch");
    int k = a.charge();
    HeisElem out(k);
    for (auto& [ka, ca] : a.coeffs()) {
        const Partition& mu = ka.first;
        const Partition& lam = ka.second;
        SymTensor dl = comul(SymElem::schur(lam));
        for (auto& [kb, cb] : b.coeffs()) {
            const Partition& nu = kb.first;
            const Partition& kap = kb.second;
            SymTensor dn = comul(SymElem::schur(nu));
            for (auto& [lp, cl] : dl.coeffs()) {
                for (auto& [np, cn] : dn.coeffs()) {
                    Rat pr = pairing_k(SymElem::schur(lp.first), SymElem::schur(np.second), k);
                    if (pr == 0) continue;
                    SymElem minus = mul(SymElem::schur(mu), SymElem::schur(np.first));
                    SymElem plus = mul(SymElem::schur(lp.second), SymElem::schur(kap));
                    Rat c = ca * cb * cl * cn * pr;
                    for (auto& [m2, cm] : minus.coeffs())
                        for (auto& [p2, cp] : plus.coeffs()) out.add(m2, p2, c * cm * cp);
                }
            }
        }
    }
    return out;
}

inline HeisElem operator*(const HeisElem& a, const HeisElem& b) { return mul(a, b); }

inline HeisElem heis_h_plus(int n, int k) { return embed_plus(complete(n), k); }
inline HeisElem heis_e_minus(int n, int k) { return embed_minus(elementary(n), k); }
inline HeisElem heis_h_minus(int n, int k) { return embed_minus(complete(n), k); }
inline HeisElem heis_e_plus(int n, int k) { return embed_plus(elementary(n), k); }

// Image of x under delta_{l|m} in Heis_l (x) Heis_m, keyed by pairs of basis pairs.
using HeisTensor = std::map<std::pair<std::pair<Partition, Partition>, std::pair<Partition, Partition>>, Rat>;

inline void heis_tensor_add(HeisTensor& t, const std::pair<Partition, Partition>& a,
                            const std::pair<Partition, Partition>& b, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = t.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

inline HeisTensor delta_lm(const HeisElem& x, int l, int m) {
    if (x.charge() != l + m) throw std::invalid_argument("delta_lm: charge must be l+m");
    HeisTensor out;
    for (auto& [key, c] : x.coeffs()) {
        const Partition& mu = key.first;
        const Partition& lam = key.second;
        // delta(s_mu^-) delta(s_lam^+) with each tensor factor straightened.
        SymTensor dm = comul(SymElem::schur(mu));
        SymTensor dl = comul(SymElem::schur(lam));
        for (auto& [mp, cm] : dm.coeffs())
            for (auto& [lp, cl] : dl.coeffs()) {
                // factor 1: s_{mp1}^- s_{lp1}^+ in Heis_l; factor 2: likewise in Heis_m.
                HeisElem f1 = mul(embed_minus(SymElem::schur(mp.first), l),
                                  embed_plus(SymElem::schur(lp.first), l));
                HeisElem f2 = mul(embed_minus(SymElem::schur(mp.second), m),
                                  embed_plus(SymElem::schur(lp.second), m));
                for (auto& [k1, c1] : f1.coeffs())
                    for (auto& [k2, c2] : f2.coeffs())
                        heis_tensor_add(out, k1, k2, c * cm * cl * c1 * c2);
            }
    }
    return out;
}

// sigma_k: Heis_k -> (Heis_{-k})^op, s_lam^± -> (-1)^{|lam|} s_{lam^T}^±.
inline HeisElem sigma(const HeisElem& x) {
    int k = -x.charge();
    HeisElem out(k);
    for (auto& [key, c] : x.coeffs()) {
        const Partition& mu = key.first;
        const Partition& lam = key.second;
        int sgn = (mu.size() + lam.size()) % 2 ? -1 : 1;
        // antihomomorphism: sigma(s_mu^- s_lam^+) = sigma(s_lam^+) sigma(s_mu^-),
        // which requires restraightening.
        HeisElem t = mul(embed_plus(SymElem::schur(conjugate(lam)), k),
                         embed_minus(SymElem::schur(conjugate(mu)), k));
        out += t * (c * sgn);
    }
    return out;
}

// omega_k: Heis_k -> Heis_{-k}, s_lam^± -> s_{lam^T}^∓ (a homomorphism).
inline HeisElem omega(const HeisElem& x) {
    int k = -x.charge();
    HeisElem out(k);
    for (auto& [key, c] : x.coeffs()) {
        const Partition& mu = key.first;
        const Partition& lam = key.second;
        HeisElem t = mul(embed_plus(SymElem::schur(conjugate(mu)), k),
                         embed_minus(SymElem::schur(conjugate(lam)), k));
        out += t * c;
    }
    return out;
}

// State in the Fock space V(l|m) = Sym^{x l} (x) (Sym^vee)^{x m}, charge m - l.
class FockState {
public:
    FockState(int l, int m) : l_(l), m_(m) {}

    int l() const { return l_; }
    int m() const { return m_; }
    int charge() const { return m_ - l_; }
    const std::map<std::vector<Partition>, Rat>& coeffs() const& { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const std::vector<Partition>& key, const Rat& c) {
        if (c == 0) return;
        if (static_cast<int>(key.size()) != l_ + m_)
            throw std::invalid_argument("FockState: tuple length must be l+m");
        auto [it, fresh] = coeffs_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    FockState& operator+=(const FockState& o) {
        if (l_ != o.l_ || m_ != o.m_) throw std::invalid_argument("FockState: arity mismatch");
        for (auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    FockState& operator*=(const Rat& c) {
        if (c == 0) coeffs_.clear();
        else
            for (auto& [k, v] : coeffs_) v *= c;
        return *this;
    }
    bool operator==(const FockState& o) const = default;

private:
    int l_, m_;
    std::map<std::vector<Partition>, Rat> coeffs_;
};

namespace detail {

// Iterated comultiplication of s_lam into n factors.
inline void iter_comul(const Partition& lam, int n, std::vector<Partition>& cur,
                       std::vector<std::pair<std::vector<Partition>, Rat>>& out, const Rat& c) {
    if (c == 0) return;
    if (n == 1) {
        cur.push_back(lam);
        out.push_back({cur, c});
        cur.pop_back();
        return;
    }
    SymTensor d = comul(SymElem::schur(lam));
    for (auto& [pq, w] : d.coeffs()) {
        cur.push_back(pq.first);
        iter_comul(pq.second, n - 1, cur, out, c * w);
        cur.pop_back();
    }
}

}  // namespace detail

// Module action of Heis_{m-l} on V(l|m). On a basic factor f^+ multiplies and f^-
// skews; on a dual factor f^+ skews and f^- multiplies (in the vee basis).
inline FockState fock_act(const HeisElem& x, const FockState& v) {
    if (x.charge() != v.charge())
        throw std::invalid_argument("fock_act: charge/arity mismatch");
    int N = v.l() + v.m();
    FockState out(v.l(), v.m());
    if (N == 0) {
        // Heis_0 acting on the trivial space: only the coefficient of 1 survives... but
        // V(0|0) has a single basis vector (the empty tuple); f^± with |f|>0 act by 0.
        for (auto& [key, c] : x.coeffs())
            if (key.first.empty() && key.second.empty())
                for (auto& [t, cv] : v.coeffs()) out.add(t, c * cv);
        return out;
    }
    for (auto& [key, cx] : x.coeffs()) {
        std::vector<std::pair<std::vector<Partition>, Rat>> minus_splits, plus_splits;
        std::vector<Partition> tmp;
        detail::iter_comul(key.first, N, tmp, minus_splits, 1);
        detail::iter_comul(key.second, N, tmp, plus_splits, 1);
        for (auto& [msplit, cm] : minus_splits)
            for (auto& [psplit, cp] : plus_splits) {
                for (auto& [tuple, cv] : v.coeffs()) {
                    // apply factor-wise: first s_{psplit_i}^+, then s_{msplit_i}^-.
                    std::vector<std::pair<std::vector<Partition>, Rat>> states = {{tuple, cx * cm * cp * cv}};
                    for (int i = 0; i < N && !states.empty(); ++i) {
                        bool dual = i >= v.l();
                        std::vector<std::pair<std::vector<Partition>, Rat>> nxt;
                        for (auto& [t, c] : states) {
                            SymElem cur = SymElem::schur(t[i]);
                            SymElem after_plus =
                                dual ? skew_by(cur, SymElem::schur(psplit[i]))
                                     : mul(SymElem::schur(psplit[i]), cur);
                            SymElem after_minus =
                                dual ? mul(SymElem::schur(msplit[i]), after_plus)
                                     : skew_by(after_plus, SymElem::schur(msplit[i]));
                            for (auto& [res, cr] : after_minus.coeffs()) {
                                auto t2 = t;
                                t2[i] = res;
                                nxt.push_back({t2, c * cr});
                            }
                        }
                        states = std::move(nxt);
                    }
                    for (auto& [t, c] : states) out.add(t, c);
                }
            }
    }
    return out;
}

// Checks h_m^+ e_n^- = sum_r binom(k,r) e_{n-r}^- h_{m-r}^+ by straightening.
inline bool verify_upper(int m, int n, int k) {
    HeisElem lhs = mul(heis_h_plus(m, k), heis_e_minus(n, k));
    HeisElem rhs(k);
    for (int r = 0; r <= std::min(m, n); ++r) {
        HeisElem term = mul(heis_e_minus(n - r, k), heis_h_plus(m - r, k));
        rhs += term * binomial_any(k, r);
    }
    return lhs == rhs;
}

}  // namespace heis
