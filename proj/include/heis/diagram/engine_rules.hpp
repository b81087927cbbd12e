#pragma once

// Rule implementations for the normalization engine. Only engine.hpp includes this.

#include <cassert>

namespace heis {

namespace engine_detail {

// --- column translation across one event ------------------------------------

// Strand-column translation from the level above event b to the level below.
// Fails when the column belongs to strands created or consumed by b.
inline bool col_down(const Event& b, int& col) {
    switch (b.kind) {
        case EvKind::Dot:
        case EvKind::Bub:
            return true;
        case EvKind::Cross:
            return col != b.col && col != b.col + 1;
        case EvKind::Cup:
            if (col == b.col || col == b.col + 1) return false;
            if (col > b.col + 1) col -= 2;
            return true;
        case EvKind::Cap:
            if (col >= b.col) col += 2;
            return true;
    }
    return true;
}

inline bool col_up(const Event& b, int& col) {
    switch (b.kind) {
        case EvKind::Dot:
        case EvKind::Bub:
            return true;
        case EvKind::Cross:
            return col != b.col && col != b.col + 1;
        case EvKind::Cup:
            if (col >= b.col) col += 2;
            return true;
        case EvKind::Cap:
            if (col == b.col || col == b.col + 1) return false;
            if (col > b.col + 1) col -= 2;
            return true;
    }
    return true;
}

// Gap (insertion-position / bubble) translation. A gap g sits left of strand g.
inline bool gap_down(const Event& b, int& g) {
    switch (b.kind) {
        case EvKind::Dot:
        case EvKind::Bub:
            return true;
        case EvKind::Cross:
            return g != b.col + 1;
        case EvKind::Cup:
            if (g == b.col + 1) return false;
            if (g >= b.col + 2) g -= 2;
            return true;
        case EvKind::Cap:
            if (g > b.col) g += 2;
            return true;
    }
    return true;
}

inline bool gap_up(const Event& b, int& g) {
    switch (b.kind) {
        case EvKind::Dot:
        case EvKind::Bub:
            return true;
        case EvKind::Cross:
            return g != b.col + 1;
        case EvKind::Cup:
            if (g >= b.col + 1) g += 2;  // gaps at or right of the left leg shift
            return true;
        case EvKind::Cap:
            if (g == b.col + 1) return false;  // inside the mouth
            if (g > b.col + 1) g -= 2;
            return true;
    }
    return true;
}

inline bool touches(const Event& e, int col) {
    switch (e.kind) {
        case EvKind::Dot:
            return e.col == col;
        case EvKind::Cross:
        case EvKind::Cap:
            return e.col == col || e.col + 1 == col;
        case EvKind::Cup:
        case EvKind::Bub:
            return false;
    }
    return false;
}

// Swap adjacent events evs[i] (below) and evs[i+1] (above) when they commute
// freely. Tokens (Bub) are moved only by the dedicated token rule.
inline bool swap_free(Events& evs, size_t i) {
    Event b = evs[i], a = evs[i + 1];
    if (b.kind == EvKind::Bub || a.kind == EvKind::Bub) return false;
    Event na = a, nb = b;

    // translate a's coordinates down through b
    switch (a.kind) {
        case EvKind::Dot: {
            int c = a.col;
            if (!col_down(b, c)) return false;
            if (b.kind == EvKind::Dot && b.col == c) return false;  // merge elsewhere
            na.col = c;
            break;
        }
        case EvKind::Cross:
        case EvKind::Cap: {
            int c1 = a.col, c2 = a.col + 1;
            if (!col_down(b, c1) || !col_down(b, c2)) return false;
            if (c2 != c1 + 1) return false;  // separated by b's strands
            if (b.kind == EvKind::Dot && (b.col == c1 || b.col == c2)) return false;
            na.col = c1;
            break;
        }
        case EvKind::Cup: {
            int g = a.col;
            if (!gap_down(b, g)) return false;
            na.col = g;
            break;
        }
        case EvKind::Bub:
            return false;
    }

    // compute b's coordinates above the relocated a, order-aware
    auto strand_up = [&](int c, int& out) -> bool {
        switch (na.kind) {
            case EvKind::Dot:
                out = c;
                return true;
            case EvKind::Cross:
                if (c == na.col || c == na.col + 1) return false;
                out = c;
                return true;
            case EvKind::Cup:
                out = c >= na.col ? c + 2 : c;
                return true;
            case EvKind::Cap:
                if (c == na.col || c == na.col + 1) return false;
                out = c > na.col + 1 ? c - 2 : c;
                return true;
            default:
                return false;
        }
    };
    auto gap_up_ordered = [&](int g, int& out) -> bool {
        switch (na.kind) {
            case EvKind::Dot:
            case EvKind::Cross:
                out = g;
                return true;
            case EvKind::Cup:
                // a inserted at na.col (in the word without b's legs); b sits right
                // of a's legs exactly when a's insertion point was at or left of b's
                out = (na.col <= g) ? g + 2 : g;
                return true;
            case EvKind::Cap:
                if (g <= na.col) out = g;
                else if (g >= na.col + 2) out = g - 2;
                else out = na.col;  // gap between the capped strands collapses
                return true;
            default:
                return false;
        }
    };

    switch (b.kind) {
        case EvKind::Dot: {
            int c;
            if (!strand_up(b.col, c)) return false;
            nb.col = c;
            break;
        }
        case EvKind::Cross:
        case EvKind::Cap: {
            int c1, c2;
            if (!strand_up(b.col, c1) || !strand_up(b.col + 1, c2)) return false;
            if (c2 != c1 + 1) return false;
            nb.col = c1;
            break;
        }
        case EvKind::Cup: {
            int g;
            if (!gap_up_ordered(b.col, g)) return false;
            nb.col = g;
            break;
        }
        case EvKind::Bub:
            return false;
    }
    evs[i] = na;
    evs[i + 1] = nb;
    return true;
}

// Move the event at index `from` down to index `to` (from > to) by free swaps.
// Returns false without modifying evs when blocked.
inline bool move_down_free(Events& evs, size_t from, size_t to) {
    Events copy = evs;
    for (size_t p = from; p > to; --p)
        if (!swap_free(copy, p - 1)) return false;
    evs = std::move(copy);
    return true;
}

inline bool move_up_free(Events& evs, size_t from, size_t to) {
    Events copy = evs;
    for (size_t p = from; p < to; ++p)
        if (!swap_free(copy, p)) return false;
    evs = std::move(copy);
    return true;
}

// Upward walk from event i along tracked columns c1 <= c2 given at level i+1.
// Dot events on the tracked columns are collected; the walk stops at the first
// other touching event (or a cup inserted strictly between an adjacent pair).
struct WalkResult {
    size_t stop;  // index of the touching event, or evs.size()
    int c1, c2;   // tracked columns at level stop (below the touching event)
    int dots = 0;
    std::vector<size_t> dot_events;
};

inline WalkResult walk_up(const Events& evs, size_t i, int c1, int c2) {
    WalkResult r{evs.size(), c1, c2, 0, {}};
    for (size_t j = i + 1; j < evs.size(); ++j) {
        const Event& e = evs[j];
        if (e.kind == EvKind::Bub) continue;
        if (e.kind == EvKind::Dot && (e.col == r.c1 || e.col == r.c2)) {
            r.dots += e.mult;
            r.dot_events.push_back(j);
            continue;
        }
        if (touches(e, r.c1) || touches(e, r.c2) ||
            (e.kind == EvKind::Cup && r.c2 == r.c1 + 1 && e.col == r.c1 + 1)) {
            r.stop = j;
            return r;
        }
        if (!col_up(e, r.c1) || !col_up(e, r.c2)) throw std::logic_error("walk_up: consumed");
    }
    return r;
}

// Mirror walk downward from event i along columns tracked at level i (below it).
// Seen from above, cups touch on their legs and caps never touch.
inline WalkResult walk_down(const Events& evs, size_t i, int c1, int c2) {
    WalkResult r{i, c1, c2, 0, {}};
    r.stop = evs.size();
    for (size_t j = i; j-- > 0;) {
        const Event& e = evs[j];
        if (e.kind == EvKind::Bub) continue;
        if (e.kind == EvKind::Dot && (e.col == r.c1 || e.col == r.c2)) {
            r.dots += e.mult;
            r.dot_events.push_back(j);
            continue;
        }
        bool touch = false;
        switch (e.kind) {
            case EvKind::Cross:
                touch = e.col == r.c1 || e.col + 1 == r.c1 || e.col == r.c2 || e.col + 1 == r.c2;
                break;
            case EvKind::Cup:
                touch = e.col == r.c1 || e.col + 1 == r.c1 || e.col == r.c2 || e.col + 1 == r.c2;
                break;
            case EvKind::Cap:
                // a cap whose columns sit strictly between adjacent tracked columns
                touch = (r.c2 == r.c1 + 1 && e.col == r.c1 + 1);
                break;
            default:
                break;
        }
        if (touch) {
            r.stop = j;
            return r;
        }
        if (!col_down(e, r.c1) || !col_down(e, r.c2)) throw std::logic_error("walk_down: consumed");
    }
    return r;
}

// Compacts a [lo, hi] window: moves the events listed in `members` (all indices in
// [lo, hi], includes lo and hi) into a contiguous block starting at lo, preserving
// their relative order; everything else in the window is pushed above. Free swaps
// only; returns the index one past the block, or nullopt when blocked.
inline std::optional<size_t> compact_block(Events& evs, std::vector<size_t> members) {
    std::sort(members.begin(), members.end());
    Events copy = evs;
    size_t base = members.front();
    for (size_t t = 0; t < members.size(); ++t) {
        size_t cur = members[t];
        // everything between base+t and cur is a non-member; push cur down
        for (size_t p = cur; p > base + t; --p)
            if (!swap_free(copy, p - 1)) return std::nullopt;
    }
    evs = std::move(copy);
    return base + members.size();
}

// Mirror compaction: gathers the members contiguously ending at the last member,
// pushing the non-members below. Returns one past the block.
inline std::optional<size_t> compact_block_up(Events& evs, std::vector<size_t> members) {
    std::sort(members.begin(), members.end());
    Events copy = evs;
    size_t top = members.back();
    for (size_t t = 0; t < members.size(); ++t) {
        size_t cur = members[members.size() - 1 - t];
        for (size_t p = cur; p < top - t; ++p)
            if (!swap_free(copy, p)) return std::nullopt;
    }
    evs = std::move(copy);
    return top + 1;
}

// Tries both compaction directions.
inline std::optional<size_t> compact_either(Events& evs, const std::vector<size_t>& members) {
    Events probe = evs;
    if (auto blk = compact_block(probe, members)) {
        evs = std::move(probe);
        return blk;
    }
    probe = evs;
    if (auto blk = compact_block_up(probe, members)) {
        evs = std::move(probe);
        return blk;
    }
    return std::nullopt;
}

}  // namespace engine_detail

// ---------------------------------------------------------------------------
// token handling (floating up, sliding right, evaluating)
// ---------------------------------------------------------------------------

inline bool Engine::rule_tokens(const Word& bot, Branch& br, std::vector<Branch>& next) const {
    Events& evs = br.evs;
    for (size_t i = evs.size(); i-- > 0;) {
        if (evs[i].kind != EvKind::Bub) continue;
        Event tok = evs[i];
        int thresh = tok.flag ? -k_ - 1 : k_ - 1;
        if (tok.mult < thresh) return true;  // token value and all corrections vanish
        if (i + 1 < evs.size()) {
            const Event& a = evs[i + 1];
            int g = tok.col;
            bool blocked = false;
            switch (a.kind) {
                case EvKind::Dot:
                case EvKind::Bub:
                    break;
                case EvKind::Cross:
                    if (g == a.col + 1) blocked = true;
                    break;
                case EvKind::Cup:
                    if (g >= a.col + 1) g += 2;  // stay left when g == a.col
                    break;
                case EvKind::Cap:
                    if (g == a.col + 1) blocked = true;  // inside the mouth
                    else if (g > a.col + 1) g -= 2;
                    break;
            }
            if (!blocked) {
                evs[i] = evs[i + 1];
                tok.col = g;
                evs[i + 1] = tok;
                next.push_back(std::move(br));
                return true;
            }
        }
        // At the top, or blocked underneath: evaluate or slide right one strand.
        std::vector<Word> ws = words_along(bot, evs);
        const Word& w = ws[i + 1];
        if (i + 1 == evs.size() && tok.col == static_cast<int>(w.size())) {
            SymElem v = bubble_value(tok.flag, tok.mult, k_);
            if (v.is_zero()) return true;
            Branch b2;
            b2.evs = evs;
            b2.evs.erase(b2.evs.begin() + i);
            b2.coeff = br.coeff;
            b2.sym = mul(br.sym, v);
            next.push_back(std::move(b2));
            return true;
        }
        if (tok.col >= static_cast<int>(w.size()))
            throw std::logic_error("token: gap out of range");
        bool up = w[tok.col] == Dir::Up;
        {
            Branch b2;
            b2.evs = evs;
            b2.evs[i].col += 1;
            b2.coeff = br.coeff;
            b2.sym = br.sym;
            next.push_back(std::move(b2));
        }
        int sign = (tok.flag == up) ? 1 : -1;
        for (int t = 0;; ++t) {
            int nd = tok.mult - t - 2;
            if (nd < thresh) break;
            Branch b2;
            b2.evs = evs;
            b2.evs[i] = ev_bub(tok.col + 1, nd, tok.flag);
            if (t > 0) b2.evs.insert(b2.evs.begin() + i, ev_dot(tok.col, t));
            b2.coeff = br.coeff * Rat(sign) * Rat(t + 1);
            b2.sym = br.sym;
            next.push_back(std::move(b2));
        }
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// cup/cap local patterns: loops, zigzags, twists
// ---------------------------------------------------------------------------

inline bool Engine::rule_cupcap(const Word& bot, Branch& br, std::vector<Branch>& next) const {
    using namespace engine_detail;
    Events& evs = br.evs;

    for (size_t i = 0; i < evs.size(); ++i) {
        if (evs[i].kind != EvKind::Cup) continue;
        WalkResult r = walk_up(evs, i, evs[i].col, evs[i].col + 1);
        if (r.stop == evs.size()) continue;
        const Event& u = evs[r.stop];
        bool hit = false;
        if (u.kind == EvKind::Cap &&
            (u.col == r.c1 - 1 || u.col == r.c1 || (u.col == r.c2 && r.c2 == r.c1 + 1) ||
             u.col == r.c2 - 1))
            hit = true;
        if (u.kind == EvKind::Cross && u.col == r.c1 && r.c2 == r.c1 + 1) hit = true;
        if (!hit) continue;  // a swing crossing on one leg: canonical, leave it

        // compact the pattern into a contiguous block [i .. blk)
        std::vector<size_t> members = r.dot_events;
        members.push_back(i);
        members.push_back(r.stop);
        Events work = evs;
        auto blk = compact_either(work, members);
        if (!blk) continue;  // try other patterns first
        size_t hi = *blk - 1;  // index of the touching event after compaction
        size_t lo = hi - members.size() + 1;
        const Event cup = work[lo];
        const Event top = work[hi];
        int c = cup.col;
        int a = r.dots;

        auto spliced = [&](const Events& repl) {
            Events out(work.begin(), work.begin() + lo);
            out.insert(out.end(), repl.begin(), repl.end());
            out.insert(out.end(), work.begin() + hi + 1, work.end());
            return out;
        };

        if (top.kind == EvKind::Cap && top.col == c) {
            // closed loop -> bubble token (LCap over RCup is ccw)
            if (top.flag == cup.flag) throw std::logic_error("loop: incompatible cup/cap");
            bool ccw = top.flag;
            next.push_back({spliced({ev_bub(c, a, ccw)}), br.coeff, br.sym});
            return true;
        }
        if (top.kind == EvKind::Cap && (top.col == c + 1 || top.col == c - 1)) {
            // zigzag: straighten to the identity, dots transfer to the through strand
            Events repl;
            if (a > 0) repl.push_back(ev_dot(top.col == c + 1 ? c : c - 1, a));
            next.push_back({spliced(repl), br.coeff, br.sym});
            return true;
        }
        if (top.kind == EvKind::Cross && top.col == c) {
            // twisted cup
            if (!cup.flag) {
                // [RCup; a dots; sigma_l] = sum_b [LCup; Dot(b); Bub(ccw, a-b-1)]
                for (int b = 0;; ++b) {
                    int nd = a - b - 1;
                    if (nd < -k_ - 1) break;
                    Events repl{ev_lcup(c)};
                    if (b > 0) repl.push_back(ev_dot(c, b));
                    repl.push_back(ev_bub(c, nd, true));
                    next.push_back({spliced(repl), br.coeff, br.sym});
                }
            } else {
                // [LCup; a dots; sigma_r] = - sum_b [RCup; Dot(b)@c+1; Bub(cw, a-b-1)@c+2]
                for (int b = 0;; ++b) {
                    int nd = a - b - 1;
                    if (nd < k_ - 1) break;
                    Events repl{ev_rcup(c)};
                    if (b > 0) repl.push_back(ev_dot(c + 1, b));
                    repl.push_back(ev_bub(c + 2, nd, false));
                    next.push_back({spliced(repl), br.coeff * Rat(-1), br.sym});
                }
            }
            return true;
        }
    }

    // two-turn curls: a crossing whose passes reconnect through a cup and a cap
    // beside a through strand (the loop-beside-strand shapes of the curl relations)
    for (size_t i = 0; i < evs.size(); ++i) {
        if (evs[i].kind != EvKind::Cup) continue;
        // walk each leg upward separately
        auto leg_walk = [&](int col0) {
            struct R {
                size_t stop = SIZE_MAX;
                int col = 0;
                int dots = 0;
                std::vector<size_t> dot_events;
            } r;
            int col = col0;
            for (size_t j = i + 1; j < evs.size(); ++j) {
                const Event& e = evs[j];
                if (e.kind == EvKind::Bub) continue;
                if (e.kind == EvKind::Dot && e.col == col) {
                    r.dots += e.mult;
                    r.dot_events.push_back(j);
                    continue;
                }
                if (touches(e, col)) {
                    r.stop = j;
                    r.col = col;
                    return r;
                }
                if (!col_up(e, col)) {
                    r.stop = SIZE_MAX;
                    return r;
                }
            }
            return r;
        };
        auto w1 = leg_walk(evs[i].col);
        auto w2 = leg_walk(evs[i].col + 1);
        if (w1.stop == SIZE_MAX || w2.stop == SIZE_MAX) continue;
        // one leg hits a crossing, the other a cap; the crossing must connect to the
        // cap through the outside strand
        size_t xi, ci;
        if (evs[w1.stop].kind == EvKind::Cross && evs[w2.stop].kind == EvKind::Cap) {
            xi = w1.stop;
            ci = w2.stop;
        } else if (evs[w2.stop].kind == EvKind::Cross && evs[w1.stop].kind == EvKind::Cap) {
            xi = w2.stop;
            ci = w1.stop;
        } else
            continue;
        if (xi >= ci) continue;
        // collect dots on the through strand between the crossing and the cap; the
        // through strand occupies the crossing leg's column above the crossing
        std::vector<size_t> members = w1.dot_events;
        members.insert(members.end(), w2.dot_events.begin(), w2.dot_events.end());
        {
            int col = (evs[w1.stop].kind == EvKind::Cross) ? w1.col : w2.col;
            bool dead = false;
            for (size_t j = xi + 1; j < ci && !dead; ++j) {
                const Event& e = evs[j];
                if (e.kind == EvKind::Bub) continue;
                if (e.kind == EvKind::Dot && e.col == col) {
                    members.push_back(j);
                    continue;
                }
                if (touches(e, col)) dead = true;
                else if (!col_up(e, col)) dead = true;
            }
            if (dead) continue;
        }
        members.push_back(i);
        members.push_back(xi);
        members.push_back(ci);
        Events work = evs;
        auto blk = compact_either(work, members);
        if (!blk) continue;
        size_t hi = *blk - 1;
        size_t lo = hi - members.size() + 1;
        // locate the three structural events inside the block
        size_t bi = SIZE_MAX, bx = SIZE_MAX, bc = SIZE_MAX;
        int a = 0;
        for (size_t j = lo; j <= hi; ++j) {
            if (work[j].kind == EvKind::Cup) bi = j;
            else if (work[j].kind == EvKind::Cross) bx = j;
            else if (work[j].kind == EvKind::Cap) bc = j;
            else if (work[j].kind == EvKind::Dot) a += work[j].mult;
        }
        if (bi == SIZE_MAX || bx == SIZE_MAX || bc == SIZE_MAX) continue;
        const Event cup = work[bi];
        const Event x = work[bx];
        const Event cap = work[bc];
        if (cap.col != cup.col || (x.col != cup.col - 1 && x.col != cup.col + 1)) continue;
        std::vector<Word> ws = words_along(bot, work);
        bool loop_right = x.col == cup.col - 1;
        Dir o = ws[lo][loop_right ? x.col : cup.col];  // the through strand's letter
        int p = loop_right ? x.col : cup.col;
        auto spliced = [&](const Events& repl) {
            Events out(work.begin(), work.begin() + lo);
            out.insert(out.end(), repl.begin(), repl.end());
            out.insert(out.end(), work.begin() + hi + 1, work.end());
            return out;
        };
        bool plus_ccw = (o == Dir::Up) != loop_right;  // (up,left) and (down,right)
        for (int b = 0;; ++b) {
            int nd = a - b - 1;
            if (nd < (plus_ccw ? -k_ - 1 : k_ - 1)) break;
            Events repl;
            if (b > 0) repl.push_back(ev_dot(p, b));
            repl.push_back(ev_bub(loop_right ? p + 1 : p, nd, plus_ccw));
            next.push_back({spliced(repl), br.coeff * Rat(plus_ccw ? 1 : -1), br.sym});
        }
        return true;
    }

    // patterns seen from a cap walking down: loops/zigzags against a cup, and
    // twists (crossing directly below on both columns)
    for (size_t i = 0; i < evs.size(); ++i) {
        if (evs[i].kind != EvKind::Cap) continue;
        WalkResult r = walk_down(evs, i, evs[i].col, evs[i].col + 1);
        if (r.stop == evs.size()) continue;
        const Event& u = evs[r.stop];
        if (u.kind == EvKind::Cup &&
            (u.col == r.c1 - 1 || u.col == r.c1 || u.col == r.c1 + 1)) {
            std::vector<size_t> members = r.dot_events;
            members.push_back(i);
            members.push_back(r.stop);
            Events work = evs;
            auto blk = compact_either(work, members);
            if (blk) {
                size_t hi = *blk - 1;
                size_t lo = hi - members.size() + 1;
                const Event cup = work[lo];
                const Event cap = work[hi];
                int a = r.dots;
                auto spliced = [&](const Events& repl) {
                    Events out(work.begin(), work.begin() + lo);
                    out.insert(out.end(), repl.begin(), repl.end());
                    out.insert(out.end(), work.begin() + hi + 1, work.end());
                    return out;
                };
                if (cap.col == cup.col) {
                    if (cap.flag == cup.flag) throw std::logic_error("loop: cup/cap mismatch");
                    next.push_back({spliced({ev_bub(cup.col, a, cap.flag)}), br.coeff, br.sym});
                    return true;
                }
                Events repl;
                if (a > 0)
                    repl.push_back(ev_dot(cap.col == cup.col + 1 ? cup.col : cup.col - 1, a));
                next.push_back({spliced(repl), br.coeff, br.sym});
                return true;
            }
        }
        if (!(u.kind == EvKind::Cross && u.col == r.c1 && r.c2 == r.c1 + 1)) continue;
        // members: cross, dots, cap; compact so that the cross sits at r.stop
        std::vector<size_t> members = r.dot_events;
        members.push_back(i);
        members.push_back(r.stop);
        Events work = evs;
        auto blk = compact_either(work, members);
        if (!blk) continue;
        size_t hi = *blk - 1;
        size_t lo = hi - members.size() + 1;
        const Event cap = work[hi];
        int c = cap.col;
        int a = r.dots;
        auto spliced = [&](const Events& repl) {
            Events out(work.begin(), work.begin() + lo);
            out.insert(out.end(), repl.begin(), repl.end());
            out.insert(out.end(), work.begin() + hi + 1, work.end());
            return out;
        };
        if (cap.flag) {
            // [sigma_r; a dots; LCap] = sum_b [Dot(b)@c+1; RCap; Bub(ccw, a-b-1)@c]
            for (int b = 0;; ++b) {
                int nd = a - b - 1;
                if (nd < -k_ - 1) break;
                Events repl;
                if (b > 0) repl.push_back(ev_dot(c + 1, b));
                repl.push_back(ev_rcap(c));
                repl.push_back(ev_bub(c, nd, true));
                next.push_back({spliced(repl), br.coeff, br.sym});
            }
        } else {
            // [sigma_l; a dots; RCap] = - sum_b [Dot(b)@c; LCap; Bub(cw, a-b-1)@c]
            for (int b = 0;; ++b) {
                int nd = a - b - 1;
                if (nd < k_ - 1) break;
                Events repl;
                if (b > 0) repl.push_back(ev_dot(c, b));
                repl.push_back(ev_lcap(c));
                repl.push_back(ev_bub(c, nd, false));
                next.push_back({spliced(repl), br.coeff * Rat(-1), br.sym});
            }
        }
        return true;
    }
    return false;
}

}  // namespace heis

#include "heis/diagram/engine_rules2.hpp"
