#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "heis/diagram/word.hpp"
#include "heis/symfunc.hpp"

namespace heis {

// Bubble values under beta: a counterclockwise bubble with d dots is e_{d+k+1},
// a clockwise bubble with d dots is (-1)^{d-k} h_{d-k+1}. Covers genuine and fake
// bubbles uniformly (zero for sufficiently negative dot counts).
inline SymElem bubble_value(bool ccw, int dots, int charge) {
    if (ccw) {
        int m = dots + charge + 1;
        if (m < 0) return SymElem();
        return elementary(m);
    }
    int m = dots - charge + 1;
    if (m < 0) return SymElem();
    SymElem h = complete(m);
    return ((dots - charge) % 2 == 0) ? h : h * Rat(-1);
}

// Endpoint of a strand: bottom or top boundary, 0-based position.
struct End {
    bool top = false;
    int pos = 0;
    auto operator<=>(const End&) const = default;
};

// Normal-form key: an orientation-consistent matching of the boundary endpoints
// plus nonnegative dot multiplicities attached near each strand's terminus.
// partner[side][pos] gives the matched endpoint; dots keyed by terminus endpoint.
struct NormalKey {
    std::vector<End> bot;  // partner of bottom endpoint i
    std::vector<End> top;  // partner of top endpoint j
    std::map<End, int> dots;

    auto operator<=>(const NormalKey&) const = default;

    End partner(End e) const { return e.top ? top[e.pos] : bot[e.pos]; }
};

// Terminus of the strand through endpoint e (given its partner p):
// prefer a top endpoint (leftmost when both are on top), otherwise the
// rightmost bottom endpoint.
inline End strand_terminus(End a, End b) {
    if (a.top && b.top) return a.pos < b.pos ? a : b;
    if (a.top) return a;
    if (b.top) return b;
    return a.pos > b.pos ? a : b;
}

// Linear combination of normal diagrams with Sym coefficients at the right edge;
// a morphism src -> tgt in the category at the given central charge.
class Morphism {
public:
    Morphism(int charge, Word src, Word tgt)
        : charge_(charge), src_(std::move(src)), tgt_(std::move(tgt)) {}

    int charge() const { return charge_; }
    const Word& src() const { return src_; }
    const Word& tgt() const { return tgt_; }
    const std::map<NormalKey, SymElem>& terms() const& { return terms_; }
    std::map<NormalKey, SymElem> terms() const&& { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const NormalKey& key, const SymElem& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Morphism& operator+=(const Morphism& o) {
        check(o);
        for (auto& [key, c] : o.terms_) add(key, c);
        return *this;
    }
    Morphism& operator-=(const Morphism& o) {
        check(o);
        for (auto& [key, c] : o.terms_) add(key, c * Rat(-1));
        return *this;
    }
    Morphism& operator*=(const Rat& c) {
        if (c == 0) terms_.clear();
        else
            for (auto& [key, v] : terms_) v *= c;
        return *this;
    }
    Morphism& operator*=(const SymElem& f) {
        std::map<NormalKey, SymElem> out;
        for (auto& [key, v] : terms_) {
            SymElem w = mul(v, f);
            if (!w.is_zero()) out.emplace(key, std::move(w));
        }
        terms_ = std::move(out);
        return *this;
    }
    friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
    friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
    friend Morphism operator*(Morphism a, const Rat& c) { return a *= c; }
    bool operator==(const Morphism& o) const {
        return charge_ == o.charge_ && src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
    }

    // Maximum of (total dots + Sym degree) over terms.
    int degree() const {
        int d = 0;
        for (auto& [key, c] : terms_) {
            int dots = 0;
            for (auto& [e, m] : key.dots) dots += m;
            d = std::max(d, dots + c.max_degree());
        }
        return d;
    }

private:
    void check(const Morphism& o) const {
        if (charge_ != o.charge_ || src_ != o.src_ || tgt_ != o.tgt_)
            throw std::invalid_argument("Morphism: signature mismatch");
    }
    int charge_;
    Word src_, tgt_;
    std::map<NormalKey, SymElem> terms_;
};

inline Morphism morphism_identity(const Word& w, int charge) {
    Morphism m(charge, w, w);
    NormalKey key;
    key.bot.resize(w.size());
    key.top.resize(w.size());
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        key.bot[i] = End{true, i};
        key.top[i] = End{false, i};
    }
    m.add(key, sym_one());
    return m;
}

// beta: Sym -> End(1). In the normal form End(1) is spanned by the empty diagram
// with a Sym coefficient, so beta is the tautological embedding.
inline Morphism beta_map(const SymElem& f, int charge) {
    Morphism m(charge, Word{}, Word{});
    if (!f.is_zero()) m.add(NormalKey{}, f);
    return m;
}

inline SymElem beta_inverse(const Morphism& m) {
    if (!m.src().empty() || !m.tgt().empty())
        throw std::invalid_argument("beta_inverse: endomorphism of the unit required");
    if (m.is_zero()) return SymElem();
    if (m.terms().size() != 1 || !(m.terms().begin()->first == NormalKey{}))
        throw std::logic_error("beta_inverse: unexpected non-scalar normal form");
    return m.terms().begin()->second;
}

}  // namespace heis
