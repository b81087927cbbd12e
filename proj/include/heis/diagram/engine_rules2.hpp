#pragma once

// Pair reduction, dot settling, schedule alignment and the step driver.
// Only engine_rules.hpp includes this.

namespace heis {

namespace engine_detail {

// --- dot slides through a crossing -------------------------------------------
//
// For an adjacent pair [Dot(1)@side; Cross@c] (ascending) the main branch moves
// the dot above the crossing onto the other column; the correction consumes the
// dot and replaces the crossing by the identity (same-orientation cases) or a
// turnback (mixed cases). Signs per the dot-slide relations.
struct DotSlide {
    Event main_dot;          // relocated dot (above for ascending, below for descending)
    Events corr;             // replacement events for the crossing, dot consumed
    int corr_sign;           // sign of the correction branch
};

// letters (l, r) are the crossing's source letters; side = the dot's column
// relative to the crossing (0 = left/cross.col, 1 = right).
inline DotSlide dot_slide_up(int c, Dir l, Dir r, int side) {
    DotSlide out;
    out.main_dot = ev_dot(side == 0 ? c + 1 : c, 1);
    if (l == Dir::Up && r == Dir::Up) {
        out.corr = {};
        out.corr_sign = side == 0 ? 1 : -1;
    } else if (l == Dir::Down && r == Dir::Down) {
        out.corr = {};
        out.corr_sign = side == 0 ? -1 : 1;
    } else if (l == Dir::Up && r == Dir::Down) {  // sigma_r
        out.corr = {ev_rcap(c), ev_rcup(c)};
        out.corr_sign = -1;
    } else {  // sigma_l
        out.corr = {ev_lcap(c), ev_lcup(c)};
        out.corr_sign = 1;
    }
    return out;
}

// Descending slide: [Cross@c; Dot(1)@side-above] -> [Dot@other; Cross] - sign*corr.
inline DotSlide dot_slide_down(int c, Dir l, Dir r, int side_above) {
    // invert the ascending rule: if [D@s; X] = [X; D@s'] + sign*corr then
    // [X; D@s'] = [D@s; X] - sign*corr.
    int src_side = 1 - side_above;
    DotSlide up = dot_slide_up(c, l, r, src_side);
    DotSlide out;
    out.main_dot = ev_dot(src_side == 0 ? c : c + 1, 1);
    out.corr = up.corr;
    out.corr_sign = -up.corr_sign;
    return out;
}

// --- 180-degree rotation of an event list ------------------------------------

inline Events star_events(const Word& bot, const Events& evs, Word* new_bot = nullptr) {
    std::vector<Word> ws = words_along(bot, evs);
    Events out;
    for (size_t j = evs.size(); j-- > 0;) {
        const Event& e = evs[j];
        int nlo = static_cast<int>(ws[j].size());      // word below e
        int nhi = static_cast<int>(ws[j + 1].size());  // word above e
        Event ne = e;
        switch (e.kind) {
            case EvKind::Dot:
                ne.col = nlo - 1 - e.col;
                break;
            case EvKind::Cross:
                ne.col = nlo - 2 - e.col;
                break;
            case EvKind::Cup:
                // becomes a cap consuming the mirrored columns of the upper word
                ne.kind = EvKind::Cap;
                ne.flag = !e.flag;  // rcup -> lcap, lcup -> rcap
                ne.col = nhi - 2 - e.col;
                break;
            case EvKind::Cap:
                ne.kind = EvKind::Cup;
                ne.flag = !e.flag;  // rcap -> lcup, lcap -> rcup
                ne.col = nlo - 2 - e.col;
                break;
            case EvKind::Bub:
                ne.col = nlo - e.col;
                break;
        }
        out.push_back(ne);
    }
    if (new_bot) *new_bot = word_rotate(ws.back());
    return out;
}

}  // namespace engine_detail

// ---------------------------------------------------------------------------
// pulling machinery shared by pair reduction and alignment
// ---------------------------------------------------------------------------

namespace engine_detail {

struct PullContext {
    const Word* bot;
    Rat coeff;
    SymElem sym;
    std::vector<struct BranchRef>* unused = nullptr;
};

}  // namespace engine_detail

// Moves evs[pos] one step down (to pos-1). Corrections (with the moving context)
// are appended to `next` as full branches. Returns true with pos decremented on
// success; false when blocked in a way the caller must resolve.
inline bool Engine::step_pull_down(const Word& bot, Branch& br, size_t& pos,
                                   std::vector<Branch>& next, bool* progressed) const {
    using namespace engine_detail;
    Events& evs = br.evs;
    if (pos == 0) return false;
    if (swap_free(evs, pos - 1)) {
        --pos;
        if (progressed) *progressed = true;
        return true;
    }
    Event& mover = evs[pos];
    Event& below = evs[pos - 1];

    // dot directly below a crossing we are pulling down: slide the dot up
    if (mover.kind == EvKind::Cross && below.kind == EvKind::Dot &&
        (below.col == mover.col || below.col == mover.col + 1)) {
        std::vector<Word> ws = words_along(bot, evs);
        const Word& w = ws[pos - 1];
        Dir l = w[mover.col], r = w[mover.col + 1];
        int side = below.col == mover.col ? 0 : 1;
        DotSlide ds = dot_slide_up(mover.col, l, r, side);
        int m = below.mult;
        // correction branch: one dot consumed, crossing replaced
        {
            Branch b2;
            b2.evs = evs;
            Events repl;
            if (m > 1) repl.push_back(ev_dot(below.col, m - 1));
            for (const Event& e : ds.corr) repl.push_back(e);
            b2.evs.erase(b2.evs.begin() + pos - 1, b2.evs.begin() + pos + 1);
            b2.evs.insert(b2.evs.begin() + pos - 1, repl.begin(), repl.end());
            b2.coeff = br.coeff * Rat(ds.corr_sign);
            b2.sym = br.sym;
            next.push_back(std::move(b2));
        }
        // main branch: one dot above, rest below
        Event moved = mover;
        Events repl;
        if (m > 1) repl.push_back(ev_dot(below.col, m - 1));
        repl.push_back(moved);
        repl.push_back(ds.main_dot);
        evs.erase(evs.begin() + pos - 1, evs.begin() + pos + 1);
        evs.insert(evs.begin() + pos - 1, repl.begin(), repl.end());
        pos = pos - 1 + (m > 1 ? 1 : 0);
        if (progressed) *progressed = true;
        return true;
    }

    // a cup stuck inside the mouth of the event below (between a lower cup's legs
    // or a crossing's wedge): recoordinate one of its swing crossings above to
    // shift the insertion gap out of the mouth
    if (mover.kind == EvKind::Cup &&
        ((below.kind == EvKind::Cup && mover.col == below.col + 1) ||
         (below.kind == EvKind::Cross && mover.col == below.col + 1))) {
        for (bool leftward : {true, false}) {
            int track = leftward ? mover.col - 1 : mover.col + 2;
            if (track < 0) continue;
            size_t cx = evs.size();
            int tcol = track;
            bool ok = true;
            for (size_t j = pos + 1; j < evs.size() && ok; ++j) {
                const Event& u = evs[j];
                if (u.kind == EvKind::Bub) continue;
                if (engine_detail::touches(u, tcol) ||
                    (u.kind == EvKind::Cup && u.col == tcol)) {
                    cx = j;
                    break;
                }
                if (!engine_detail::col_up(u, tcol)) ok = false;
            }
            if (!ok || cx == evs.size() || evs[cx].kind != EvKind::Cross) continue;
            Events probe = evs;
            if (!engine_detail::move_down_free(probe, cx, pos + 1)) continue;
            Event& cup = probe[pos];
            Event& x = probe[pos + 1];
            if (x.col == cup.col + 1) {
                cup.col += 1;
                x.col -= 1;
            } else if (x.col + 1 == cup.col) {
                cup.col -= 1;
                x.col += 1;
            } else
                continue;
            evs = std::move(probe);
            if (progressed) *progressed = true;
            return true;
        }
    }

    // braid triple [X@a; X@b; X@a] with |a-b| = 1
    if (mover.kind == EvKind::Cross && below.kind == EvKind::Cross &&
        (below.col == mover.col + 1 || below.col + 1 == mover.col)) {
        if (pos >= 2 && evs[pos - 2].kind == EvKind::Cross && evs[pos - 2].col == mover.col) {
            apply_braid(bot, br, pos - 2, next);
            pos -= 2;
            if (progressed) *progressed = true;
            return true;
        }
        // bring the completing crossing (same column as the mover) up under `below`
        for (size_t j = pos - 1; j-- > 0;) {
            if (evs[j].kind != EvKind::Cross) continue;
            Events probe = evs;
            if (!move_up_free(probe, j, pos - 2)) continue;
            if (probe[pos - 2].col == probe[pos].col &&
                probe[pos - 2].kind == EvKind::Cross) {
                evs = std::move(probe);
                apply_braid(bot, br, pos - 2, next);
                pos -= 2;
                if (progressed) *progressed = true;
                return true;
            }
        }
    }
    return false;
}

// Braid move on the contiguous triple evs[i..i+2] with columns (a, b, a);
// rewrites to (b, a, b) in place, appending alternating-braid corrections.
inline void Engine::apply_braid(const Word& bot, Branch& br, size_t i,
                                std::vector<Branch>& next) const {
    using namespace engine_detail;
    Events& evs = br.evs;
    int a = evs[i].col, b = evs[i + 1].col;
    if (evs[i + 2].col != a || (b != a + 1 && b + 1 != a))
        throw std::logic_error("apply_braid: not a braid triple");
    std::vector<Word> ws = words_along(bot, evs);
    int lo = std::min(a, b);
    const Word& w = ws[i];
    Dir o1 = w[lo], o2 = w[lo + 1], o3 = w[lo + 2];
    // flip the word
    evs[i].col = b;
    evs[i + 1].col = a;
    evs[i + 2].col = b;
    bool alternating = (o1 == o3) && (o1 != o2);
    if (!alternating) return;

    // corrections, relative to the pattern with base column lo
    int c = lo;
    auto add_corr = [&](const Events& repl, const Rat& sgn) {
        Branch b2;
        b2.evs = Events(evs.begin(), evs.begin() + i);
        b2.evs.insert(b2.evs.end(), repl.begin(), repl.end());
        b2.evs.insert(b2.evs.end(), evs.begin() + i + 3, evs.end());
        b2.coeff = br.coeff * sgn;
        b2.sym = br.sym;
        next.push_back(std::move(b2));
    };
    // direction sign: rewriting (a,b,a)->(b,a,b) with a == lo corresponds to
    // LHS1 -> LHS2 (+corr); starting from (lo+1, lo, lo+1) is the reverse (-corr).
    Rat dir = (a == lo) ? 1 : -1;
    if (o1 == Dir::Up) {
        // source (Up, Down, Up)
        for (int aa = 0;; ++aa) {
            bool any_a = false;
            for (int bb = 0;; ++bb) {
                bool any_b = false;
                for (int tt = 0;; ++tt) {
                    int nd = -aa - bb - tt - 3;
                    bool okl = nd >= -k_ - 1;  // ccw token nonzero range
                    bool okr = nd >= k_ - 1;   // cw token nonzero range
                    if (!okl && !okr) break;
                    any_a = any_b = true;
                    if (okl) {
                        Events repl;
                        if (tt > 0) repl.push_back(ev_dot(c + 2, tt));
                        if (bb > 0) repl.push_back(ev_dot(c, bb));
                        repl.push_back(ev_rcap(c));
                        repl.push_back(ev_lcup(c));
                        if (aa > 0) repl.push_back(ev_dot(c, aa));
                        repl.push_back(ev_bub(c, nd, true));
                        add_corr(repl, dir);
                    }
                    if (okr) {
                        Events repl;
                        if (tt > 0) repl.push_back(ev_dot(c, tt));
                        if (bb > 0) repl.push_back(ev_dot(c + 2, bb));
                        repl.push_back(ev_lcap(c + 1));
                        repl.push_back(ev_rcup(c + 1));
                        if (aa > 0) repl.push_back(ev_dot(c + 2, aa));
                        repl.push_back(ev_bub(c + 3, nd, false));
                        add_corr(repl, dir);
                    }
                }
                if (!any_b) break;
            }
            if (!any_a) break;
        }
    } else {
        // source (Down, Up, Down): the star image of the Up case; the pattern
        // direction also mirrors, so (lo+1, lo, lo+1)->(lo, lo+1, lo) carries +corr.
        dir = (a == lo) ? -1 : 1;
        for (int aa = 0;; ++aa) {
            bool any_a = false;
            for (int bb = 0;; ++bb) {
                bool any_b = false;
                for (int tt = 0;; ++tt) {
                    int nd = -aa - bb - tt - 3;
                    bool okl = nd >= -k_ - 1;
                    bool okr = nd >= k_ - 1;
                    if (!okl && !okr) break;
                    any_a = any_b = true;
                    if (okl) {
                        Events repl{ev_bub(c + 3, nd, true)};
                        if (aa > 0) repl.push_back(ev_dot(c + 2, aa));
                        repl.push_back(ev_rcap(c + 1));
                        repl.push_back(ev_lcup(c + 1));
                        if (bb > 0) repl.push_back(ev_dot(c + 2, bb));
                        if (tt > 0) repl.push_back(ev_dot(c, tt));
                        add_corr(repl, dir);
                    }
                    if (okr) {
                        Events repl{ev_bub(c, nd, false)};
                        if (aa > 0) repl.push_back(ev_dot(c, aa));
                        repl.push_back(ev_lcap(c));
                        repl.push_back(ev_rcup(c));
                        if (bb > 0) repl.push_back(ev_dot(c, bb));
                        if (tt > 0) repl.push_back(ev_dot(c + 2, tt));
                        add_corr(repl, dir);
                    }
                }
                if (!any_b) break;
            }
            if (!any_a) break;
        }
    }
}

// ---------------------------------------------------------------------------
// pair reduction: same pair crossing twice (quadratics)
// ---------------------------------------------------------------------------

inline bool Engine::rule_pair_reduction(const Word& bot, Branch& br, std::vector<Branch>& next,
                                        Budget& budget) const {
    using namespace engine_detail;
    Events& evs = br.evs;
    Trace t = trace_strands(bot, evs);
    // locate the two lowest crossings of an identical strand pair
    std::map<std::pair<int, int>, size_t> seen;
    size_t lo = evs.size(), hi = evs.size();
    for (size_t j = 0; j < evs.size(); ++j) {
        if (evs[j].kind != EvKind::Cross) continue;
        int s1 = t.find(t.ids[j][evs[j].col]);
        int s2 = t.find(t.ids[j][evs[j].col + 1]);
        auto key = std::minmax(s1, s2);
        auto [it, fresh] = seen.emplace(std::make_pair(key.first, key.second), j);
        if (!fresh) {
            lo = it->second;
            hi = j;
            break;
        }
    }
    if (hi == evs.size()) return false;

    // pull the upper crossing down until adjacent to the lower one
    size_t pos = hi;
    while (pos > lo + 1) {
        bool progressed = false;
        if (!step_pull_down(bot, br, pos, next, &progressed)) {
            // cannot make them adjacent right now; let other rules act first
            return false;
        }
        budget.spend();
        (void)progressed;
    }
    // adjacent same-pair crossings at evs[lo], evs[lo+1]
    if (evs[lo].col != evs[lo + 1].col)
        throw std::logic_error("pair reduction: columns disagree");
    int c = evs[lo].col;
    std::vector<Word> ws = words_along(bot, evs);
    Dir l = ws[lo][c], r = ws[lo][c + 1];
    Events base(evs.begin(), evs.begin() + lo);
    Events tail(evs.begin() + lo + 2, evs.end());
    auto splice = [&](const Events& repl) {
        Events out = base;
        out.insert(out.end(), repl.begin(), repl.end());
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    };
    if (l == r) {
        next.push_back({splice({}), br.coeff, br.sym});  // quadratic: double crossing vanishes
        return true;
    }
    next.push_back({splice({}), br.coeff, br.sym});  // identity part of the sideways relation
    if (l == Dir::Down) {
        // [sigma_l; sigma_r] on (Down, Up): + sum ccw-token left of the turnback
        for (int aa = 0; aa <= std::max(0, k_ - 1); ++aa)
            for (int bb = 0; aa + bb <= k_ - 1; ++bb) {
                Events repl;
                if (bb > 0) repl.push_back(ev_dot(c + 1, bb));
                repl.push_back(ev_lcap(c));
                repl.push_back(ev_rcup(c));
                if (aa > 0) repl.push_back(ev_dot(c + 1, aa));
                repl.push_back(ev_bub(c, -aa - bb - 2, true));
                next.push_back({splice(repl), br.coeff, br.sym});
            }
    } else {
        // [sigma_r; sigma_l] on (Up, Down): + sum turnback with cw-token at the right
        for (int aa = 0; aa <= std::max(0, -k_ - 1); ++aa)
            for (int bb = 0; aa + bb <= -k_ - 1; ++bb) {
                Events repl;
                if (bb > 0) repl.push_back(ev_dot(c, bb));
                repl.push_back(ev_rcap(c));
                repl.push_back(ev_lcup(c));
                if (aa > 0) repl.push_back(ev_dot(c, aa));
                repl.push_back(ev_bub(c + 2, -aa - bb - 2, false));
                next.push_back({splice(repl), br.coeff, br.sym});
            }
    }
    return true;
}

}  // namespace heis

#include "heis/diagram/engine_rules3.hpp"
