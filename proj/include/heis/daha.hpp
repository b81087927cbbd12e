#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "heis/group_algebra.hpp"
#include "heis/partition.hpp"
#include "heis/perm.hpp"
#include "heis/rational.hpp"

namespace heis {

using Mono = std::vector<int>;  // exponent vector, length n

// Polynomial in x_1..x_n over Q.
class PolyN {
public:
    explicit PolyN(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Mono, Rat>& coeffs() const& { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Mono& m, const Rat& c) {
        if (c == 0) return;
        if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("PolyN: arity");
        auto [it, fresh] = coeffs_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    PolyN& operator+=(const PolyN& o) {
        for (auto& [m, c] : o.coeffs_) add(m, c);
        return *this;
    }
    PolyN& operator-=(const PolyN& o) {
        for (auto& [m, c] : o.coeffs_) add(m, -c);
        return *this;
    }
    PolyN& operator*=(const Rat& c) {
        if (c == 0) coeffs_.clear();
        else
            for (auto& [m, v] : coeffs_) v *= c;
        return *this;
    }
    friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
    friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
    friend PolyN operator*(PolyN a, const Rat& c) { return a *= c; }
    bool operator==(const PolyN& o) const = default;

    static PolyN constant(int n, const Rat& c) {
        PolyN p(n);
        p.add(Mono(n, 0), c);
        return p;
    }
    static PolyN variable(int n, int i) {
        PolyN p(n);
        Mono m(n, 0);
        m[i] = 1;
        p.add(m, 1);
        return p;
    }
    static PolyN monomial(const Mono& m, const Rat& c = 1) {
        PolyN p(static_cast<int>(m.size()));
        p.add(m, c);
        return p;
    }

    Rat eval(const std::vector<Rat>& xs) const {
        Rat out = 0;
        for (auto& [m, c] : coeffs_) {
            Rat t = c;
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) t *= xs[i];
            out += t;
        }
        return out;
    }

private:
    int n_;
    std::map<Mono, Rat> coeffs_;
};

inline PolyN mul(const PolyN& a, const PolyN& b) {
    PolyN out(a.n());
    for (auto& [ma, ca] : a.coeffs())
        for (auto& [mb, cb] : b.coeffs()) {
            Mono m = ma;
            for (int i = 0; i < a.n(); ++i) m[i] += mb[i];
            out.add(m, ca * cb);
        }
    return out;
}
inline PolyN operator*(const PolyN& a, const PolyN& b) { return mul(a, b); }

// Action of a permutation on polynomials: (pi f)(x) = f(x_{pi^{-1}(1)}, ...),
// i.e. the monomial exponent at position pi(i) is the old exponent at i.
inline PolyN perm_apply(const Perm& p, const PolyN& f) {
    PolyN out(f.n());
    for (auto& [m, c] : f.coeffs()) {
        Mono m2(f.n(), 0);
        for (int i = 0; i < f.n(); ++i) m2[p[i]] = m[i];
        out.add(m2, c);
    }
    return out;
}

// Demazure operator (f - s_i f)/(x_{i+1} - x_i); i is 0-based in [0, n-2].
inline PolyN demazure(int i, const PolyN& f) {
    int n = f.n();
    if (i < 0 || i + 1 >= n) throw std::out_of_range("demazure: index");
    PolyN num = f - perm_apply(perm_si(n, i), f);
    // Divide by x_{i+1} - x_i exactly: write num = sum over monomials; peel
    // the leading term in the (x_i, x_{i+1}) grading repeatedly.
    PolyN out(n);
    while (!num.is_zero()) {
        // pick any monomial with maximal exponent of x_{i+1}
        auto best = num.coeffs().begin();
        for (auto it = num.coeffs().begin(); it != num.coeffs().end(); ++it)
            if (it->first[i + 1] > best->first[i + 1]) best = it;
        Mono m = best->first;
        Rat c = best->second;
        if (m[i + 1] == 0) throw std::logic_error("demazure: not divisible");
        Mono q = m;
        q[i + 1] -= 1;
        out.add(q, c);
        // num -= (x_{i+1} - x_i) * c x^q
        Mono t1 = q, t2 = q;
        t1[i + 1] += 1;
        t2[i] += 1;
        PolyN sub(n);
        sub.add(t1, c);
        sub.add(t2, -c);
        num -= sub;
    }
    return out;
}

// Twisted actions s_i (+) f = s_i(f) + d_i(f), s_i (-) f = s_i(f) - d_i(f),
// extended to words/permutations (well-defined; tested for word independence).
inline PolyN act_oplus_si(int i, const PolyN& f) {
    return perm_apply(perm_si(f.n(), i), f) + demazure(i, f);
}
inline PolyN act_ominus_si(int i, const PolyN& f) {
    return perm_apply(perm_si(f.n(), i), f) - demazure(i, f);
}
inline PolyN act_oplus(const Perm& p, const PolyN& f) {
    PolyN out = f;
    auto word = reduced_word(p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_oplus_si(*it, out);
    return out;
}
inline PolyN act_ominus(const Perm& p, const PolyN& f) {
    PolyN out = f;
    auto word = reduced_word(p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_ominus_si(*it, out);
    return out;
}

// (1/n!) sum_pi pi (+) f  (or the (-) variant); always symmetric.
inline PolyN spherical_sandwich(const PolyN& f, bool plus_variant = true) {
    int n = f.n();
    PolyN acc(n);
    for (const Perm& p : all_perms(n)) acc += plus_variant ? act_oplus(p, f) : act_ominus(p, f);
    acc *= Rat(1, factorial(n));
    return acc;
}

// ---------------------------------------------------------------------------
// AH_n: basis x^a pi with polynomial part on the left.
// ---------------------------------------------------------------------------

class AHElem {
public:
    explicit AHElem(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<std::pair<Mono, Perm>, Rat>& coeffs() const& { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Mono& m, const Perm& p, const Rat& c) {
        if (c == 0) return;
        auto key = std::make_pair(m, p);
        auto [it, fresh] = coeffs_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    AHElem& operator+=(const AHElem& o) {
        check(o);
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }
    AHElem& operator-=(const AHElem& o) {
        check(o);
        for (auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
        return *this;
    }
    AHElem& operator*=(const Rat& c) {
        if (c == 0) coeffs_.clear();
        else
            for (auto& [k, v] : coeffs_) v *= c;
        return *this;
    }
    friend AHElem operator+(AHElem a, const AHElem& b) { return a += b; }
    friend AHElem operator-(AHElem a, const AHElem& b) { return a -= b; }
    friend AHElem operator*(AHElem a, const Rat& c) { return a *= c; }
    bool operator==(const AHElem& o) const = default;

    static AHElem unit(int n) {
        AHElem e(n);
        e.add(Mono(n, 0), perm_identity(n), 1);
        return e;
    }
    static AHElem of_poly(const PolyN& f) {
        AHElem e(f.n());
        for (auto& [m, c] : f.coeffs()) e.add(m, perm_identity(f.n()), c);
        return e;
    }
    static AHElem of_perm_alg(const PermAlgElem& a) {
        AHElem e(a.n());
        for (auto& [p, c] : a.coeffs()) e.add(Mono(a.n(), 0), p, c);
        return e;
    }
    static AHElem x(int n, int i) { return of_poly(PolyN::variable(n, i)); }
    static AHElem s(int n, int i) { return of_perm_alg(perm_alg_of(perm_si(n, i))); }

private:
    void check(const AHElem& o) const {
        if (n_ != o.n_) throw std::invalid_argument("AHElem: size mismatch");
    }
    int n_;
    std::map<std::pair<Mono, Perm>, Rat> coeffs_;
};

// Left multiplication by a simple reflection: s_i (x^b sigma) = s_i(x^b) s_i sigma + d_i(x^b) sigma.
inline AHElem si_mul_left(int i, const AHElem& b) {
    int n = b.n();
    AHElem out(n);
    Perm si = perm_si(n, i);
    for (auto& [k, c] : b.coeffs()) {
        PolyN f = PolyN::monomial(k.first, c);
        PolyN sf = perm_apply(si, f);
        PolyN df = demazure(i, f);
        Perm sp = perm_mul(si, k.second);
        for (auto& [m, cc] : sf.coeffs()) out.add(m, sp, cc);
        for (auto& [m, cc] : df.coeffs()) out.add(m, k.second, cc);
    }
    return out;
}

inline AHElem mul(const AHElem& a, const AHElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("AHElem mul: size mismatch");
    int n = a.n();
    AHElem out(n);
    for (auto& [k, c] : a.coeffs()) {
        // x^a pi * b: first pi * b via the reduced word, then multiply by x^a on the left.
        AHElem t = b;
        auto word = reduced_word(k.second);
        for (auto it = word.rbegin(); it != word.rend(); ++it) t = si_mul_left(*it, t);
        for (auto& [kb, cb] : t.coeffs()) {
            Mono m = kb.first;
            for (int i = 0; i < n; ++i) m[i] += k.first[i];
            out.add(m, kb.second, c * cb);
        }
    }
    return out;
}
inline AHElem operator*(const AHElem& a, const AHElem& b) { return mul(a, b); }

// Signed Schur polynomial chi_lam = A_{lam+rho} / A_rho for lam in Z^n with
// lam + rho componentwise nonnegative; zero when lam + rho has repeats.
inline PolyN signed_schur_chi(const std::vector<int>& lam, int n) {
    if (static_cast<int>(lam.size()) != n) throw std::invalid_argument("chi: arity");
    std::vector<int> shifted(n);
    for (int i = 0; i < n; ++i) {
        shifted[i] = lam[i] + (n - 1 - i);
        if (shifted[i] < 0) throw std::invalid_argument("chi: lam+rho has a negative entry");
    }
    // repeated entry -> zero
    std::vector<int> sorted = shifted;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) return PolyN(n);
    // sign of the sorting permutation
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (shifted[i] < shifted[j]) ++inv;
    int sgn = inv % 2 ? -1 : 1;
    std::vector<int> mu(n);
    for (int i = 0; i < n; ++i) mu[i] = sorted[i] - (n - 1 - i);
    Partition shape(mu);
    // Jacobi-Trudi with h_r(x_1..x_n) as PolyN
    int l = shape.length();
    if (l == 0) return PolyN::constant(n, sgn);
    int maxr = shape.part(0) + l;
    std::vector<PolyN> H(maxr + 1, PolyN(n));
    H[0] = PolyN::constant(n, 1);
    for (int v = 0; v < n; ++v) {
        std::vector<PolyN> nxt = H;
        for (int r = 1; r <= maxr; ++r) nxt[r] = H[r] + PolyN::variable(n, v) * nxt[r - 1];
        H = std::move(nxt);
    }
    PolyN out(n);
    Perm p = perm_identity(l);
    do {
        PolyN term = PolyN::constant(n, perm_sign(p));
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int e = shape.part(i) - i + p[i];
            if (e < 0) zero = true;
            else if (e > 0) term = term * H[e];
        }
        if (!zero) out += term;
    } while (std::next_permutation(p.begin(), p.end()));
    out *= Rat(sgn);
    return out;
}

// e_{(1^n)} x^lam e_{(n)} = chi_{lam-rho} e_{(1^n)} x^rho e_{(n)}  (lam in N^n).
inline bool verify_thick_cap(const std::vector<int>& lam, int n) {
    AHElem e_sym = AHElem::of_perm_alg(young_symmetrizer(Partition{n}));
    AHElem e_alt = AHElem::of_perm_alg(young_symmetrizer(Partition(std::vector<int>(n, 1))));
    if (n == 0) return true;
    if (n == 1) {
        e_sym = AHElem::unit(1);
        e_alt = AHElem::unit(1);
    }
    Mono rho(n);
    for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
    Mono lm(lam.begin(), lam.end());
    std::vector<int> lam_minus_rho(n);
    for (int i = 0; i < n; ++i) lam_minus_rho[i] = lam[i] - rho[i];
    if (*std::min_element(lam.begin(), lam.end()) < 0) throw std::invalid_argument("thick cap: lam");

    AHElem lhs = e_alt * AHElem::of_poly(PolyN::monomial(lm)) * e_sym;
    PolyN chi = signed_schur_chi(lam_minus_rho, n);
    AHElem rhs = e_alt * AHElem::of_poly(PolyN::monomial(rho)) * e_sym;
    AHElem chirhs = AHElem::of_poly(chi) * rhs;
    AHElem rhschi = rhs * AHElem::of_poly(chi);
    return lhs == chirhs && lhs == rhschi;
}

// Rational function represented as an evaluation closure Q^n -> Q.
using RatFn = std::function<Rat(const std::vector<Rat>&)>;

inline RatFn ratfn_oplus_si(int i, RatFn f, bool plus) {
    return [i, f, plus](const std::vector<Rat>& xs) -> Rat {
        std::vector<Rat> ys = xs;
        std::swap(ys[i], ys[i + 1]);
        Rat fx = f(xs), fy = f(ys);
        Rat d = (fx - fy) / (xs[i + 1] - xs[i]);
        return plus ? Rat(fy + d) : Rat(fy - d);
    };
}

inline RatFn ratfn_act(const Perm& p, RatFn f, bool plus) {
    auto word = reduced_word(p);
    RatFn out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = ratfn_oplus_si(*it, out, plus);
    return out;
}

// Lemma check: sum over S_r x S_{n-r} of pi (+) ( sum_{lam in P_{r,n}}
// prod (1 + eps_{ij}(lam) y_ij) ) = n!, plus the (-) variant with 1 - eps y,
// evaluated at sample points with pairwise distinct coordinates.
inline bool verify_lemma_wow(int r, int n, const std::vector<std::vector<Rat>>& points) {
    if (r < 0 || r > n) throw std::invalid_argument("lemma wow: r");
    auto boxes = box_partitions(r, n - r);
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != n) throw std::invalid_argument("lemma wow: point arity");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pt[i] == pt[j]) throw std::invalid_argument("lemma wow: repeated coordinate");
        for (bool plus : {true, false}) {
            RatFn inner = [&, plus](const std::vector<Rat>& xs) -> Rat {
                Rat total = 0;
                for (const Partition& lam : boxes) {
                    Rat prod = 1;
                    for (int i = 1; i <= r; ++i)
                        for (int j = 1; j <= n - r; ++j) {
                            int eps = j <= lam.part(i - 1) ? 1 : -1;
                            Rat y = Rat(1) / (xs[r - i] - xs[r + j - 1]);
                            // y_{i,j} = (x_{r+1-i} - x_{r+j})^{-1}, 1-based paper indices
                            Rat factor = plus ? Rat(Rat(1) + Rat(eps) * y) : Rat(Rat(1) - Rat(eps) * y);
                            prod *= factor;
                        }
                    total += prod;
                }
                return total;
            };
            // sum over the Young subgroup S_r x S_{n-r}
            Rat total = 0;
            for (const Perm& pr : all_perms(r))
                for (const Perm& pb : all_perms(n - r)) {
                    Perm p = perm_identity(n);
                    for (int i = 0; i < r; ++i) p[i] = pr[i];
                    for (int j = 0; j < n - r; ++j) p[r + j] = r + pb[j];
                    total += ratfn_act(p, inner, plus)(pt);
                }
            if (total != Rat(factorial(n))) return false;
        }
    }
    return true;
}

// Reduction modulo the cyclotomic relation f(x_1) = 0 (f monic of degree l),
// to the basis x_1^{a_1}...x_n^{a_n} pi with all a_i < l.
//
// The key rewrite pushes a high power toward x_1, where polynomial division by
// f applies:
//   x_i^a = s x_{i-1}^a s + sum_{j<a} x_{i-1}^j x_i^{a-1-j} s      (s = s_{i-1}),
// derived from s x_{i-1}^a = x_i^a s + d_{i-1}(x_{i-1}^a). The middle factor is
// reduced recursively before the sandwich is restraightened, so the rewrite
// genuinely lowers the exponent profile.
namespace detail {

inline AHElem cyclo_reduce_power(int i, int a, int n, const std::vector<Rat>& f_coeffs,
                                 std::map<std::pair<int, int>, AHElem>& memo);

inline AHElem cyclo_reduce_elem(AHElem x, int n, const std::vector<Rat>& f_coeffs,
                                std::map<std::pair<int, int>, AHElem>& memo) {
    int l = static_cast<int>(f_coeffs.size());
    while (true) {
        bool found = false;
        Mono vm;
        Perm vp;
        Rat vc;
        int vi = -1;
        for (auto& [k, c] : x.coeffs())
            for (int i = n - 1; i >= 0; --i)
                if (k.first[i] >= l && i > vi) {
                    found = true;
                    vm = k.first;
                    vp = k.second;
                    vc = c;
                    vi = i;
                    break;
                }
        if (!found) return x;
        AHElem term(n);
        term.add(vm, vp, vc);
        x -= term;
        Mono rest = vm;
        rest[vi] = 0;
        AHElem mid = cyclo_reduce_power(vi, vm[vi], n, f_coeffs, memo);
        // left-multiply by the commuting monomial, right-multiply by the permutation
        AHElem repl(n);
        for (auto& [k, c] : mid.coeffs()) {
            Mono m = k.first;
            for (int t = 0; t < n; ++t) m[t] += rest[t];
            repl.add(m, perm_mul(k.second, vp), c * vc);
        }
        x += repl;
    }
}

inline AHElem cyclo_reduce_power(int i, int a, int n, const std::vector<Rat>& f_coeffs,
                                 std::map<std::pair<int, int>, AHElem>& memo) {
    int l = static_cast<int>(f_coeffs.size());
    auto key = std::make_pair(i, a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    AHElem out(n);
    if (a < l) {
        Mono m(n, 0);
        m[i] = a;
        out.add(m, perm_identity(n), 1);
    } else if (i == 0) {
        // polynomial division of w^a by f(w)
        std::vector<Rat> poly(a + 1, 0);
        poly[a] = 1;
        for (int d = a; d >= l; --d) {
            Rat lead = poly[d];
            if (lead == 0) continue;
            poly[d] = 0;
            for (int t = 0; t < l; ++t) poly[d - 1 - t] -= lead * f_coeffs[t];
        }
        for (int d = 0; d < l && d <= a; ++d) {
            if (poly[d] == 0) continue;
            Mono m(n, 0);
            m[0] = d;
            out.add(m, perm_identity(n), poly[d]);
        }
    } else {
        AHElem mid = cyclo_reduce_power(i - 1, a, n, f_coeffs, memo);
        AHElem s = AHElem::s(n, i - 1);
        out = cyclo_reduce_elem(s * mid * s, n, f_coeffs, memo);
        for (int j = 0; j < a; ++j) {
            Mono m(n, 0);
            m[i - 1] = j;
            m[i] = a - 1 - j;
            AHElem t(n);
            t.add(m, perm_si(n, i - 1), 1);
            out += cyclo_reduce_elem(t, n, f_coeffs, memo);
        }
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace detail

inline AHElem cyclotomic_reduce(const AHElem& a, const std::vector<Rat>& f_coeffs) {
    std::map<std::pair<int, int>, AHElem> memo;
    return detail::cyclo_reduce_elem(a, a.n(), f_coeffs, memo);
}

}  // namespace heis
