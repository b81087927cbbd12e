#pragma once

// Normalization engine: rewrites diagrams (lists of elementary events over a word)
// into the normal form of the basis theorem: matchings with dots near termini and
// Sym coefficients at the right edge. The rules are the defining relations plus the
// derived curl, sideways-quadratic, bubble-slide and alternating-braid relations;
// termination follows the lexicographic measure (crossings, cupcaps, displaced dots,
// schedule distance), with a fuel guard for safety.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heis/diagram/morphism.hpp"
#include "heis/diagram/word.hpp"
#include "heis/symfunc.hpp"

namespace heis {

enum class EvKind : unsigned char { Dot, Cross, Cup, Cap, Bub };

struct Event {
    EvKind kind;
    int col = 0;
    int mult = 0;      // Dot: multiplicity; Bub: dot count (may be negative)
    bool flag = false; // Cup/Cap: true = L variety; Bub: true = ccw

    bool operator==(const Event&) const = default;
};

inline Event ev_dot(int col, int mult = 1) { return {EvKind::Dot, col, mult, false}; }
inline Event ev_cross(int col) { return {EvKind::Cross, col, 0, false}; }
inline Event ev_rcup(int col) { return {EvKind::Cup, col, 0, false}; }
inline Event ev_lcup(int col) { return {EvKind::Cup, col, 0, true}; }
inline Event ev_rcap(int col) { return {EvKind::Cap, col, 0, false}; }
inline Event ev_lcap(int col) { return {EvKind::Cap, col, 0, true}; }
inline Event ev_bub(int col, int dots, bool ccw) { return {EvKind::Bub, col, dots, ccw}; }

using Events = std::vector<Event>;

// Applies one event to a running word; throws on signature violations.
inline void apply_event(Word& w, const Event& e) {
    int n = static_cast<int>(w.size());
    switch (e.kind) {
        case EvKind::Dot:
            if (e.col < 0 || e.col >= n) throw std::logic_error("event: dot column");
            break;
        case EvKind::Cross:
            if (e.col < 0 || e.col + 1 >= n) throw std::logic_error("event: cross column");
            std::swap(w[e.col], w[e.col + 1]);
            break;
        case EvKind::Cup: {
            if (e.col < 0 || e.col > n) throw std::logic_error("event: cup column");
            Dir l = e.flag ? Dir::Up : Dir::Down;
            Dir r = e.flag ? Dir::Down : Dir::Up;
            w.insert(w.begin() + e.col, {l, r});
            break;
        }
        case EvKind::Cap: {
            if (e.col < 0 || e.col + 1 >= n) throw std::logic_error("event: cap column");
            Dir needl = e.flag ? Dir::Down : Dir::Up;
            Dir needr = e.flag ? Dir::Up : Dir::Down;
            if (w[e.col] != needl || w[e.col + 1] != needr)
                throw std::logic_error("event: cap orientation");
            w.erase(w.begin() + e.col, w.begin() + e.col + 2);
            break;
        }
        case EvKind::Bub:
            if (e.col < 0 || e.col > n) throw std::logic_error("event: bubble gap");
            break;
    }
}

// Words at every level: result[i] is the word below event i; result[N] is the target.
inline std::vector<Word> words_along(const Word& bot, const Events& evs) {
    std::vector<Word> out;
    out.reserve(evs.size() + 1);
    Word w = bot;
    out.push_back(w);
    for (const Event& e : evs) {
        apply_event(w, e);
        out.push_back(w);
    }
    return out;
}

inline Word word_after(const Word& bot, const Events& evs) {
    Word w = bot;
    for (const Event& e : evs) apply_event(w, e);
    return w;
}

// ---------------------------------------------------------------------------
// Strand tracing: segment ids per level, endpoint pairing, per-pair crossing counts.
// ---------------------------------------------------------------------------

struct Trace {
    // ids[i] = segment ids of the word below event i (ids[N] for the target word)
    std::vector<std::vector<int>> ids;
    int nseg = 0;
    std::vector<int> uf;  // union-find over segments (joined at cups and caps)

    int find(int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    }
    void unite(int a, int b) { uf[find(a)] = find(b); }
};

inline Trace trace_strands(const Word& bot, const Events& evs) {
    Trace t;
    std::vector<int> cur(bot.size());
    for (size_t i = 0; i < bot.size(); ++i) cur[i] = t.nseg++;
    t.ids.push_back(cur);
    for (const Event& e : evs) {
        switch (e.kind) {
            case EvKind::Dot:
            case EvKind::Bub:
                break;
            case EvKind::Cross:
                std::swap(cur[e.col], cur[e.col + 1]);
                break;
            case EvKind::Cup: {
                int a = t.nseg++, b = t.nseg++;
                cur.insert(cur.begin() + e.col, {a, b});
                break;
            }
            case EvKind::Cap:
                cur.erase(cur.begin() + e.col, cur.begin() + e.col + 2);
                break;
        }
        t.ids.push_back(cur);
    }
    t.uf.resize(t.nseg);
    for (int i = 0; i < t.nseg; ++i) t.uf[i] = i;
    // unite cup legs and capped segments
    Word w = bot;
    for (size_t i = 0; i < evs.size(); ++i) {
        const Event& e = evs[i];
        if (e.kind == EvKind::Cup) t.unite(t.ids[i + 1][e.col], t.ids[i + 1][e.col + 1]);
        if (e.kind == EvKind::Cap) t.unite(t.ids[i][e.col], t.ids[i][e.col + 1]);
        apply_event(w, e);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Canonical staircase events for a normal key.
// Caps close in ascending order of their right (terminus) leg, the left leg
// swinging right; then propagating strands bubble-sort; then cups open in
// ascending order of their left (terminus) leg, the right leg swinging right.
// Dots are emitted at terminus-adjacent positions.
// ---------------------------------------------------------------------------

inline Events canonical_events(const NormalKey& key, const Word& src, const Word& tgt) {
    Events out;
    int nb = static_cast<int>(src.size());
    int nt = static_cast<int>(tgt.size());
    if (static_cast<int>(key.bot.size()) != nb || static_cast<int>(key.top.size()) != nt)
        throw std::logic_error("canonical_events: key arity");

    // live columns: list of bottom endpoints still propagating (by bottom position)
    std::vector<int> cols(nb);
    for (int i = 0; i < nb; ++i) cols[i] = i;

    auto col_of = [&](int botpos) {
        for (size_t c = 0; c < cols.size(); ++c)
            if (cols[c] == botpos) return static_cast<int>(c);
        throw std::logic_error("canonical_events: lost column");
    };
    auto dots_of = [&](End e) {
        auto it = key.dots.find(e);
        return it == key.dots.end() ? 0 : it->second;
    };

    // cap band
    std::vector<std::pair<int, int>> caps;  // (i1, i2), i1 < i2
    for (int i = 0; i < nb; ++i)
        if (!key.bot[i].top && key.bot[i].pos > i) caps.push_back({i, key.bot[i].pos});
    std::sort(caps.begin(), caps.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto [i1, i2] : caps) {
        int c1 = col_of(i1), c2 = col_of(i2);
        // terminus dots on the right leg, below the cap
        int d = dots_of(End{false, i2});
        if (d > 0) out.push_back(ev_dot(c2, d));
        // left leg swings right: crossings at c1, c1+1, ..., c2-2
        for (int c = c1; c + 1 < c2; ++c) out.push_back(ev_cross(c));
        bool left_up = src[i1] == Dir::Down;  // cap type from letters: LCap = (Down, Up)
        if ((src[i1] == Dir::Up) == (src[i2] == Dir::Up))
            throw std::logic_error("canonical_events: cap letters");
        out.push_back(left_up ? ev_lcap(c2 - 1) : ev_rcap(c2 - 1));
        // net effect of the swing plus the cap: both legs leave the arrangement
        cols.erase(cols.begin() + c2);
        cols.erase(cols.begin() + c1);
    }

    // permutation band: bubble sort by target position, left-to-right passes
    auto target_pos = [&](int botpos) { return key.bot[botpos].pos; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t c = 0; c + 1 < cols.size(); ++c)
            if (target_pos(cols[c]) > target_pos(cols[c + 1])) {
                out.push_back(ev_cross(static_cast<int>(c)));
                std::swap(cols[c], cols[c + 1]);
                changed = true;
            }
    }

    // cup band: cups by ascending left end
    std::vector<std::pair<int, int>> cups;  // (j1, j2)
    for (int j = 0; j < nt; ++j)
        if (key.top[j].top && key.top[j].pos > j) cups.push_back({j, key.top[j].pos});
    std::sort(cups.begin(), cups.end());
    // current top arrangement: target positions of live columns, then insert cups
    std::vector<int> topcols;
    for (int c : cols) topcols.push_back(target_pos(c));
    for (auto [j1, j2] : cups) {
        // insertion position: number of current entries < j1
        int pos = 0;
        while (pos < static_cast<int>(topcols.size()) && topcols[pos] < j1) ++pos;
        bool left_up = tgt[j1] == Dir::Up;  // LCup = (Up, Down)
        if ((tgt[j1] == Dir::Up) == (tgt[j2] == Dir::Up))
            throw std::logic_error("canonical_events: cup letters");
        out.push_back(left_up ? ev_lcup(pos) : ev_rcup(pos));
        topcols.insert(topcols.begin() + pos, {j1, j2});
        // right leg swings right: cross while the next entry is < j2
        int c = pos + 1;
        while (c + 1 < static_cast<int>(topcols.size()) && topcols[c + 1] < j2) {
            out.push_back(ev_cross(c));
            std::swap(topcols[c], topcols[c + 1]);
            ++c;
        }
    }
    // top dot stacks for strands with top termini
    for (int j = 0; j < nt; ++j) {
        End e{true, j};
        End p = key.top[j];
        End term = strand_terminus(e, p);
        if (term == e) {
            int d = dots_of(e);
            if (d > 0) {
                int c = 0;
                while (c < static_cast<int>(topcols.size()) && topcols[c] != j) ++c;
                out.push_back(ev_dot(c, d));
            }
        }
    }
    // sanity: final arrangement must be sorted 0..nt-1
    for (int j = 0; j < static_cast<int>(topcols.size()); ++j)
        if (topcols[j] != j) throw std::logic_error("canonical_events: wiring failed");
    return out;
}

// Extracts the normal key (matching only; dots must be added separately).
inline NormalKey matching_of(const Word& bot, const Events& evs, const Word& tgt) {
    Trace t = trace_strands(bot, evs);
    int nb = static_cast<int>(bot.size());
    int nt = static_cast<int>(tgt.size());
    // endpoint -> root segment
    std::map<int, std::vector<End>> ends;
    for (int i = 0; i < nb; ++i) ends[t.find(t.ids.front()[i])].push_back(End{false, i});
    for (int j = 0; j < nt; ++j) ends[t.find(t.ids.back()[j])].push_back(End{true, j});
    NormalKey key;
    key.bot.resize(nb);
    key.top.resize(nt);
    for (auto& [root, es] : ends) {
        if (es.size() != 2) throw std::logic_error("matching_of: open or closed strand");
        auto set = [&](End e, End p) {
            if (e.top) key.top[e.pos] = p;
            else key.bot[e.pos] = p;
        };
        set(es[0], es[1]);
        set(es[1], es[0]);
    }
    return key;
}

// ---------------------------------------------------------------------------
// The engine.
// ---------------------------------------------------------------------------

class Engine {
public:
    explicit Engine(int charge) : k_(charge) {}

    // Normalizes coeff * sym * (events over bot) into out.
    void reduce(const Word& bot, Events evs, Rat coeff, SymElem sym, Morphism& out) const {
        Budget budget{200000};
        reduce_impl(bot, std::move(evs), std::move(coeff), std::move(sym), out, budget);
    }

    Morphism normalize(const Word& bot, const Events& evs) const {
        Word tgt = word_after(bot, evs);
        Morphism out(k_, bot, tgt);
        reduce(bot, evs, 1, sym_one(), out);
        return out;
    }

private:
    int k_;

    struct Budget {
        long long fuel;
        void spend() {
            if (--fuel <= 0) throw std::logic_error("engine: fuel exhausted");
        }
    };

    struct Branch {
        Events evs;
        Rat coeff;
        SymElem sym;
    };

    void reduce_impl(const Word& bot, Events evs, Rat coeff, SymElem sym, Morphism& out,
                     Budget& budget) const {
        std::vector<Branch> stack;
        stack.push_back({std::move(evs), std::move(coeff), std::move(sym)});
        while (!stack.empty()) {
            Branch br = std::move(stack.back());
            stack.pop_back();
            if (br.coeff == 0 || br.sym.is_zero()) continue;
            budget.spend();
            std::vector<Branch> next;
            if (step(bot, br, next, out, budget)) {
                for (auto& b : next) stack.push_back(std::move(b));
            }
        }
    }

    // Performs one rewrite (possibly branching) on br; pushes results into next.
    // Returns false when the branch was fully emitted into out.
    bool step(const Word& bot, Branch& br, std::vector<Branch>& next, Morphism& out,
              Budget& budget) const;

    // rule helpers; each returns true if it fired (filling next)
    bool rule_tokens(const Word& bot, Branch& br, std::vector<Branch>& next) const;
    bool rule_cupcap(const Word& bot, Branch& br, std::vector<Branch>& next) const;
    bool rule_wiggle(const Word& bot, Branch& br, std::vector<Branch>& next) const;
    bool rule_pair_reduction(const Word& bot, Branch& br, std::vector<Branch>& next,
                             Budget& budget) const;
    bool settle_dots(const Word& bot, Branch& br, std::vector<Branch>& next) const;
    bool align_schedule(const Word& bot, Branch& br, std::vector<Branch>& next,
                        Budget& budget) const;

    bool step_pull_down(const Word& bot, Branch& br, size_t& pos, std::vector<Branch>& next,
                        bool* progressed) const;
    void apply_braid(const Word& bot, Branch& br, size_t i, std::vector<Branch>& next) const;

    void emit(const Word& bot, const Branch& br, Morphism& out) const;

    friend struct EngineTestAccess;
};


}  // namespace heis

#include "heis/diagram/engine_rules.hpp"
