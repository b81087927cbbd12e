#pragma once

#include <stdexcept>
#include <vector>

#include "heis/diagram/engine.hpp"
#include "heis/diagram/morphism.hpp"
#include "heis/diagram/word.hpp"

namespace heis {

// A composite of elementary generators: an event list over a source word, with a
// central charge. This is the raw term language; normalize() maps it to Morphism.
class GenTerm {
public:
    GenTerm(int charge, Word src) : charge_(charge), src_(std::move(src)), tgt_(src_) {}
    GenTerm(int charge, Word src, Events evs) : charge_(charge), src_(std::move(src)) {
        tgt_ = src_;
        for (const Event& e : evs) push(e);
    }

    int charge() const { return charge_; }
    const Word& src() const { return src_; }
    const Word& tgt() const { return tgt_; }
    const Events& events() const { return evs_; }

    void push(const Event& e) {
        apply_event(tgt_, e);  // validates
        evs_.push_back(e);
    }

    bool operator==(const GenTerm&) const = default;

private:
    int charge_;
    Word src_;
    Word tgt_;
    Events evs_;
};

// --- generator constructors ---------------------------------------------------

inline GenTerm gen_id(const Word& w, int k) { return GenTerm(k, w); }
inline GenTerm gen_dot(int k) {
    GenTerm t(k, word_up(1));
    t.push(ev_dot(0, 1));
    return t;
}
inline GenTerm gen_up_crossing(int k) {
    GenTerm t(k, word_up(2));
    t.push(ev_cross(0));
    return t;
}
inline GenTerm gen_rcup(int k) {
    GenTerm t(k, Word{});
    t.push(ev_rcup(0));
    return t;
}
inline GenTerm gen_lcup(int k) {
    GenTerm t(k, Word{});
    t.push(ev_lcup(0));
    return t;
}
inline GenTerm gen_rcap(int k) {
    GenTerm t(k, Word{Dir::Up, Dir::Down});
    t.push(ev_rcap(0));
    return t;
}
inline GenTerm gen_lcap(int k) {
    GenTerm t(k, Word{Dir::Down, Dir::Up});
    t.push(ev_lcap(0));
    return t;
}

// f after g (vertical composition; f on top).
inline GenTerm compose(const GenTerm& f, const GenTerm& g) {
    if (f.charge() != g.charge()) throw std::invalid_argument("compose: charge mismatch");
    if (f.src() != g.tgt()) throw std::invalid_argument("compose: boundary mismatch");
    GenTerm t(f.charge(), g.src());
    for (const Event& e : g.events()) t.push(e);
    for (const Event& e : f.events()) t.push(e);
    return t;
}

// f drawn to the left of g.
inline GenTerm tensor(const GenTerm& f, const GenTerm& g) {
    if (f.charge() != g.charge()) throw std::invalid_argument("tensor: charge mismatch");
    GenTerm t(f.charge(), word_concat(f.src(), g.src()));
    for (const Event& e : f.events()) t.push(e);
    int off = static_cast<int>(f.tgt().size());
    for (Event e : g.events()) {
        e.col += off;
        t.push(e);
    }
    return t;
}

// Sideways crossings (the rotated composites).
inline GenTerm sideways_right(int k) {
    // (1_d 1_u rcap) o (1_d x 1_d) o (rcup 1_u 1_d) : up down -> down up
    GenTerm t(k, Word{Dir::Up, Dir::Down});
    t.push(ev_rcup(0));
    t.push(ev_cross(1));
    t.push(ev_rcap(2));
    return t;
}
inline GenTerm sideways_left(int k) {
    // (lcap 1_u 1_d) o (1_d x 1_d) o (1_d 1_u lcup) : down up -> up down
    GenTerm t(k, Word{Dir::Down, Dir::Up});
    t.push(ev_lcup(2));
    t.push(ev_cross(1));
    t.push(ev_lcap(0));
    return t;
}

// Downward dot and crossing. In the event language these are plain events on
// downward strands; the zig-zag composites of the presentation normalize to them.
inline GenTerm gen_down_dot(int k) {
    GenTerm t(k, word_down(1));
    t.push(ev_dot(0, 1));
    return t;
}
inline GenTerm gen_down_crossing(int k) {
    GenTerm t(k, word_down(2));
    t.push(ev_cross(0));
    return t;
}
// The zig-zag composite of the downward dot (for cross-checks).
inline GenTerm gen_down_dot_composite(int k) {
    GenTerm t(k, word_down(1));
    t.push(ev_rcup(0));
    t.push(ev_dot(1, 1));
    t.push(ev_rcap(1));
    return t;
}

// 180-degree rotation (the duality *).
inline GenTerm star(const GenTerm& f) {
    Word nb;
    Events evs = engine_detail::star_events(f.src(), f.events(), &nb);
    return GenTerm(f.charge(), nb, evs);
}

// Horizontal-axis reflection with the (-1)^{crossings + left cups/caps} sign;
// lands in charge -k. Returns the sign separately.
inline std::pair<Rat, GenTerm> omega_term(const GenTerm& f) {
    std::vector<Word> ws = words_along(f.src(), f.events());
    Word nb = word_reflect(f.tgt());
    GenTerm t(-f.charge(), nb);
    int sign_exp = 0;
    for (size_t j = f.events().size(); j-- > 0;) {
        Event e = f.events()[j];
        switch (e.kind) {
            case EvKind::Dot:
            case EvKind::Bub:
                t.push(e);
                break;
            case EvKind::Cross:
                sign_exp += 1;
                t.push(e);
                break;
            case EvKind::Cup:
                // reflected: becomes a cap at the same columns; lcup -> lcap
                if (e.flag) sign_exp += 1;  // left cups carry the sign
                t.push(Event{EvKind::Cap, e.col, 0, e.flag});
                break;
            case EvKind::Cap:
                if (e.flag) sign_exp += 1;
                t.push(Event{EvKind::Cup, e.col, 0, e.flag});
                break;
        }
    }
    return {sign_exp % 2 ? Rat(-1) : Rat(1), t};
}

// --- normalization API ----------------------------------------------------------

inline Morphism normalize(const GenTerm& t) {
    Engine eng(t.charge());
    return eng.normalize(t.src(), t.events());
}

inline bool equal(const GenTerm& f, const GenTerm& g) {
    if (f.charge() != g.charge() || f.src() != g.src() || f.tgt() != g.tgt())
        throw std::invalid_argument("equal: signature mismatch");
    return normalize(f) == normalize(g);
}

// Canonical event realization of a normal-form key (for replay and composition).
inline Events key_events(const NormalKey& key, const Word& src, const Word& tgt) {
    return canonical_events(key, src, tgt);
}

// Vertical composition of normalized morphisms.
inline Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.charge() != g.charge()) throw std::invalid_argument("compose: charge mismatch");
    if (f.src() != g.tgt()) throw std::invalid_argument("compose: boundary mismatch");
    Engine eng(f.charge());
    Morphism out(f.charge(), g.src(), f.tgt());
    for (auto& [gk, gc] : g.terms())
        for (auto& [fk, fc] : f.terms()) {
            Events evs = key_events(gk, g.src(), g.tgt());
            Events fe = key_events(fk, f.src(), f.tgt());
            evs.insert(evs.end(), fe.begin(), fe.end());
            eng.reduce(g.src(), std::move(evs), 1, mul(gc, fc), out);
        }
    return out;
}

// Horizontal composition; the left factor's Sym coefficient re-enters as bubble
// tokens at the interface and slides to the global right edge.
inline Morphism tensor(const Morphism& f, const Morphism& g) {
    if (f.charge() != g.charge()) throw std::invalid_argument("tensor: charge mismatch");
    Engine eng(f.charge());
    Word src = word_concat(f.src(), g.src());
    Word tgt = word_concat(f.tgt(), g.tgt());
    Morphism out(f.charge(), src, tgt);
    int k = f.charge();
    for (auto& [fk, fc] : f.terms())
        for (auto& [gk, gc] : g.terms()) {
            Events evs = key_events(fk, f.src(), f.tgt());
            int off = static_cast<int>(f.tgt().size());
            // f's Sym coefficient as ccw bubble tokens at f's right edge
            for (auto& [cf, emono] : to_e_monomials(fc)) {
                Events evs2 = evs;
                for (int m : emono) evs2.push_back(ev_bub(off, m - k - 1, true));
                for (Event e : key_events(gk, g.src(), g.tgt())) {
                    e.col += off;
                    evs2.push_back(e);
                }
                eng.reduce(src, std::move(evs2), cf, gc, out);
            }
        }
    return out;
}

// Re-wrap a normal form as a generator term (expanding keys canonically).
inline std::vector<std::pair<SymElem, GenTerm>> to_genterms(const Morphism& m) {
    std::vector<std::pair<SymElem, GenTerm>> out;
    for (auto& [key, c] : m.terms())
        out.push_back({c, GenTerm(m.charge(), m.src(), key_events(key, m.src(), m.tgt()))});
    return out;
}

inline Morphism star(const Morphism& m) {
    Engine eng(m.charge());
    Morphism out(m.charge(), word_rotate(m.tgt()), word_rotate(m.src()));
    for (auto& [key, c] : m.terms()) {
        Word nb;
        Events evs = engine_detail::star_events(m.src(), key_events(key, m.src(), m.tgt()), &nb);
        eng.reduce(nb, std::move(evs), 1, c, out);
    }
    return out;
}

inline Morphism omega_sym(const Morphism& m) {
    Engine eng(-m.charge());
    Morphism out(-m.charge(), word_reflect(m.tgt()), word_reflect(m.src()));
    for (auto& [key, c] : m.terms()) {
        GenTerm t(m.charge(), m.src(), key_events(key, m.src(), m.tgt()));
        auto [sgn, ot] = omega_term(t);
        // Sym coefficients are spanned by bubbles; reflection maps a ccw bubble
        // with d dots to a cw bubble with d dots (and contributes no sign for
        // right cups/caps; the ccw bubble is lcap over rcup, one left cap).
        for (auto& [cf, emono] : to_e_monomials(c)) {
            Events evs = ot.events();
            Rat coeff = sgn * cf;
            for (int mm : emono) {
                // omega(beta(e_m)) = reflected ccw bubble with m-k-1 dots; reflection
                // maps it to a cw bubble with the same dots at charge -k, with sign -1
                // from its single left cup/cap pair... the sign bookkeeping: a ccw
                // bubble = lcap o rcup has one left cap, so omega contributes (-1).
                evs.push_back(ev_bub(static_cast<int>(ot.tgt().size()), mm - m.charge() - 1,
                                     false));
                coeff *= Rat(-1);
            }
            eng.reduce(ot.src(), std::move(evs), coeff, sym_one(), out);
        }
    }
    return out;
}

}  // namespace heis
