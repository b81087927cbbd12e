#pragma once

// Dot settling, schedule alignment, extraction and the step driver.
// Only engine_rules2.hpp includes this.

namespace heis {

namespace engine_detail {

// One station along a strand route.
struct Station {
    size_t ev;    // event index participated in (crossing or turn), or SIZE_MAX at endpoints
    int col;      // column below/at the event on this strand
    bool turning; // cup/cap U-turn
};

// The full route of the strand through endpoint `from`, as the ordered list of
// crossings it participates in (with the strand's column just before each, seen
// from the walking direction); used to transport dots toward the terminus.
// Direction: starts at `from` and walks to the other endpoint.
struct Route {
    std::vector<Station> stations;
};

inline Route strand_route(const Word& bot, const Events& evs, End from) {
    Route route;
    int level = from.top ? static_cast<int>(evs.size()) : 0;
    int col = from.pos;
    bool up = !from.top;  // walking direction
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw std::logic_error("strand_route: runaway");
        if (up) {
            if (level == static_cast<int>(evs.size())) break;  // reached the top boundary
            const Event& e = evs[level];
            switch (e.kind) {
                case EvKind::Dot:
                case EvKind::Bub:
                    break;
                case EvKind::Cross:
                    if (col == e.col || col == e.col + 1) {
                        route.stations.push_back({static_cast<size_t>(level), col, false});
                        col = (col == e.col) ? e.col + 1 : e.col;
                    }
                    break;
                case EvKind::Cup:
                    if (col >= e.col) col += 2;
                    break;
                case EvKind::Cap:
                    if (col == e.col || col == e.col + 1) {
                        route.stations.push_back({static_cast<size_t>(level), col, true});
                        col = (col == e.col) ? e.col + 1 : e.col;
                        up = false;
                        // stay at this level, now descending: next examined event is level-1
                        break;
                    }
                    if (col > e.col + 1) col -= 2;
                    break;
            }
            if (up) ++level;
        } else {
            if (level == 0) break;  // reached the bottom boundary
            const Event& e = evs[level - 1];
            switch (e.kind) {
                case EvKind::Dot:
                case EvKind::Bub:
                    break;
                case EvKind::Cross:
                    if (col == e.col || col == e.col + 1) {
                        route.stations.push_back({static_cast<size_t>(level - 1), col, false});
                        col = (col == e.col) ? e.col + 1 : e.col;
                    }
                    break;
                case EvKind::Cap:
                    if (col >= e.col) col += 2;
                    break;
                case EvKind::Cup:
                    if (col == e.col || col == e.col + 1) {
                        route.stations.push_back({static_cast<size_t>(level - 1), col, true});
                        col = (col == e.col) ? e.col + 1 : e.col;
                        up = true;
                        break;
                    }
                    if (col > e.col + 1) col -= 2;
                    break;
            }
            if (!up) --level;
        }
    }
    return route;
}

}  // namespace engine_detail

// ---------------------------------------------------------------------------
// wiggle straightening: strands with several turns get their crossings slid
// around the outermost turn until a clean cup/cap pair is exposed
// ---------------------------------------------------------------------------

inline bool Engine::rule_wiggle(const Word& bot, Branch& br, std::vector<Branch>& next) const {
    using namespace engine_detail;
    Events& evs = br.evs;
    Word tgt = word_after(bot, evs);

    auto try_slide = [&](size_t turn_idx, size_t cross_idx) -> bool {
        // make the crossing adjacent to the turn, then recoordinate across it
        Events work = evs;
        const bool turn_is_cup = work[turn_idx].kind == EvKind::Cup;
        size_t tpos = turn_idx, xpos = cross_idx;
        if (turn_is_cup) {
            if (xpos <= tpos) return false;
            if (!move_down_free(work, xpos, tpos + 1)) return false;
            xpos = tpos + 1;
        } else {
            if (xpos >= tpos) return false;
            if (!move_up_free(work, xpos, tpos - 1)) return false;
            xpos = tpos - 1;
        }
        Event& t = work[tpos];
        Event& x = work[xpos];
        if (turn_is_cup) {
            if (x.col == t.col + 1) {
                t.col += 1;
                x.col -= 1;
            } else if (x.col + 1 == t.col) {
                t.col -= 1;
                x.col += 1;
            } else
                return false;  // on both legs: a twist, other rules handle it
        } else {
            if (x.col == t.col + 1) {
                x.col -= 1;
                t.col += 1;
            } else if (x.col + 1 == t.col) {
                x.col += 1;
                t.col -= 1;
            } else
                return false;
        }
        evs = std::move(work);
        next.push_back(std::move(br));
        return true;
    };

    auto process_route = [&](const Route& route) -> int {
        // returns 1 if a rewrite fired, 0 if this route is clean, -1 if blocked
        std::vector<size_t> turns;
        for (size_t s = 0; s < route.stations.size(); ++s)
            if (route.stations[s].turning) turns.push_back(s);
        if (turns.size() < 2) return 0;
        size_t i1 = turns[0];
        // crossings between the first two turns slide across the first turn
        if (turns[1] > i1 + 1) {
            size_t xs = i1 + 1;  // station nearest the first turn
            if (try_slide(route.stations[i1].ev, route.stations[xs].ev)) return 1;
            return -1;
        }
        // consecutive turns with a clean segment: the cup/cap walks should fire;
        // nothing to do here
        return 0;
    };

    std::set<std::pair<bool, int>> seen_ends;
    for (int i = 0; i < static_cast<int>(bot.size()); ++i) {
        if (seen_ends.count({false, i})) continue;
        Route route = strand_route(bot, evs, End{false, i});
        // mark the far endpoint as visited
        seen_ends.insert({false, i});
        int rr = process_route(route);
        if (rr == 1) return true;
    }
    for (int j = 0; j < static_cast<int>(tgt.size()); ++j) {
        Route route = strand_route(bot, evs, End{true, j});
        int rr = process_route(route);
        if (rr == 1) return true;
    }

    // closed components: walk from each cup not reachable from any endpoint
    Trace tr = trace_strands(bot, evs);
    std::set<int> open_roots;
    for (int i = 0; i < static_cast<int>(bot.size()); ++i)
        open_roots.insert(tr.find(tr.ids.front()[i]));
    for (int j = 0; j < static_cast<int>(tgt.size()); ++j)
        open_roots.insert(tr.find(tr.ids.back()[j]));
    for (size_t i = 0; i < evs.size(); ++i) {
        if (evs[i].kind != EvKind::Cup) continue;
        int root = tr.find(tr.ids[i + 1][evs[i].col]);
        if (open_roots.count(root)) continue;
        // closed component: walk once around from the cup's left leg
        Route route;
        int level = static_cast<int>(i) + 1;
        int col = evs[i].col;
        bool up = true;
        int guard = 0;
        while (true) {
            if (++guard > 100000) throw std::logic_error("closed route: runaway");
            if (up) {
                const Event& e = evs[level];
                if (e.kind == EvKind::Cross && (col == e.col || col == e.col + 1)) {
                    route.stations.push_back({static_cast<size_t>(level), col, false});
                    col = (col == e.col) ? e.col + 1 : e.col;
                } else if (e.kind == EvKind::Cap && (col == e.col || col == e.col + 1)) {
                    route.stations.push_back({static_cast<size_t>(level), col, true});
                    col = (col == e.col) ? e.col + 1 : e.col;
                    up = false;
                    continue;
                } else {
                    if (e.kind == EvKind::Cup && col >= e.col) col += 2;
                    else if (e.kind == EvKind::Cap && col > e.col + 1) col -= 2;
                }
                ++level;
            } else {
                const Event& e = evs[level - 1];
                if (static_cast<size_t>(level - 1) == i &&
                    (col == e.col || col == e.col + 1)) {
                    // back at the starting cup
                    route.stations.push_back({i, col, true});
                    break;
                }
                if (e.kind == EvKind::Cross && (col == e.col || col == e.col + 1)) {
                    route.stations.push_back({static_cast<size_t>(level - 1), col, false});
                    col = (col == e.col) ? e.col + 1 : e.col;
                } else if (e.kind == EvKind::Cup && (col == e.col || col == e.col + 1)) {
                    route.stations.push_back({static_cast<size_t>(level - 1), col, true});
                    col = (col == e.col) ? e.col + 1 : e.col;
                    up = true;
                    continue;
                } else {
                    if (e.kind == EvKind::Cap && col >= e.col) col += 2;
                    else if (e.kind == EvKind::Cup && col > e.col + 1) col -= 2;
                }
                --level;
            }
        }
        int rr = process_route(route);
        if (rr == 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// dot settling: every dot travels to its strand's terminus
// ---------------------------------------------------------------------------

inline bool Engine::settle_dots(const Word& bot, Branch& br, std::vector<Branch>& next) const {
    using namespace engine_detail;
    Events& evs = br.evs;
    Word tgt = word_after(bot, evs);
    NormalKey key = matching_of(bot, evs, tgt);

    for (size_t di = 0; di < evs.size(); ++di) {
        if (evs[di].kind != EvKind::Dot) continue;
        // walk from the strand's terminus; collect stations until the dot's position
        // is found between stations; the dot must cross the stations found so far.
        // We instead walk from the NON-terminus endpoint: the dot's distance to the
        // terminus is the number of crossing-stations after it along that walk.
        // Identify the strand of the dot.
        // Dot at level di (below event di? the dot event sits between levels di and
        // di+1; its column refers to the word at level di).
        // Locate endpoints via segment ids.
        Trace tr = trace_strands(bot, evs);
        int seg = tr.find(tr.ids[di][evs[di].col]);
        End term{}, other{};
        bool found = false, split = false;
        for (int i = 0; i < static_cast<int>(bot.size()); ++i)
            if (tr.find(tr.ids.front()[i]) == seg) {
                End e{false, i};
                End p = key.bot[i];
                term = strand_terminus(e, p);
                other = (term == e) ? p : e;
                found = true;
                break;
            }
        if (!found)
            for (int j = 0; j < static_cast<int>(tgt.size()); ++j)
                if (tr.find(tr.ids.back()[j]) == seg) {
                    End e{true, j};
                    End p = key.top[j];
                    term = strand_terminus(e, p);
                    other = (term == e) ? p : e;
                    found = true;
                    break;
                }
        if (!found) throw std::logic_error("settle_dots: dot on a closed component");
        (void)split;

        Route route = strand_route(bot, evs, other);  // walks toward the terminus
        // Find the dot's position along the route: simulate the same walk and check
        // at each step whether we are at (level di..di+1, column evs[di].col).
        // Rather than re-walking, use the stations: the dot sits on a segment; the
        // stations after that segment (toward the terminus) must be crossed.
        // Determine the first station not yet passed by the dot:
        // We re-run the walk inline to locate the dot segment.
        int level = other.top ? static_cast<int>(evs.size()) : 0;
        int col = other.pos;
        bool up = !other.top;
        size_t next_station = 0;
        bool located = false;
        int guard = 0;
        while (!located) {
            if (++guard > 100000) throw std::logic_error("settle_dots: runaway");
            // check dot position: dot event di occupies the gap between level di and di+1
            if (up && level == static_cast<int>(di) && col == evs[di].col) located = true;
            else if (!up && level == static_cast<int>(di) + 1 && col == evs[di].col)
                located = true;
            if (located) break;
            if (up) {
                if (level == static_cast<int>(evs.size())) break;
                if (next_station < route.stations.size() &&
                    route.stations[next_station].ev == static_cast<size_t>(level) &&
                    route.stations[next_station].col == col) {
                    const Event& e = evs[level];
                    if (route.stations[next_station].turning) {
                        col = (col == e.col) ? e.col + 1 : e.col;
                        up = false;
                        ++next_station;
                        continue;
                    }
                    col = (col == e.col) ? e.col + 1 : e.col;
                    ++next_station;
                    ++level;
                    continue;
                }
                const Event& e = evs[level];
                if (e.kind == EvKind::Cup && col >= e.col) col += 2;
                else if (e.kind == EvKind::Cap && col > e.col + 1) col -= 2;
                ++level;
            } else {
                if (level == 0) break;
                if (next_station < route.stations.size() &&
                    route.stations[next_station].ev == static_cast<size_t>(level - 1) &&
                    route.stations[next_station].col == col) {
                    const Event& e = evs[level - 1];
                    if (route.stations[next_station].turning) {
                        col = (col == e.col) ? e.col + 1 : e.col;
                        up = true;
                        ++next_station;
                        continue;
                    }
                    col = (col == e.col) ? e.col + 1 : e.col;
                    ++next_station;
                    --level;
                    continue;
                }
                const Event& e = evs[level - 1];
                if (e.kind == EvKind::Cap && col >= e.col) col += 2;
                else if (e.kind == EvKind::Cup && col > e.col + 1) col -= 2;
                --level;
            }
        }
        if (!located) throw std::logic_error("settle_dots: dot not on its strand route");
        // stations remaining from next_station onward lie between the dot and the
        // terminus; crossings require slides and turns require free hops.
        bool needs_work = next_station < route.stations.size();
        if (!needs_work) continue;

        // Move the dot toward the terminus through the next station.
        const auto& st = route.stations[next_station];
        const Event& target = evs[st.ev];
        if (target.kind == EvKind::Cross || route.stations[next_station].turning) {
            // bring the dot adjacent to the event (free moves), then slide/hop
            bool dot_below = st.ev >= di;  // event above the dot -> dot approaches from below
            Events work = evs;
            size_t dpos = di, epos = st.ev;
            bool ok;
            if (dot_below) {
                ok = engine_detail::move_up_free(work, dpos, epos - 1 >= dpos ? epos - 1 : dpos);
                dpos = epos - 1;
            } else {
                // event below the dot: move dot down to just above the event
                ok = engine_detail::move_down_free(work, dpos, epos + 1);
                dpos = epos + 1;
            }
            if (!ok) return false;  // let other rules run first
            if (route.stations[next_station].turning) {
                // free hop across the cup/cap onto the partner leg
                Event& d = work[dpos];
                const Event& turn = work[epos];
                d.col = (d.col == turn.col) ? turn.col + 1 : turn.col;
                br.evs = std::move(work);
                next.push_back(std::move(br));
                return true;
            }
            // slide through the crossing, one dot at a time
            std::vector<Word> ws = words_along(bot, work);
            const Event& x = work[epos];
            Dir l = ws[epos][x.col], r = ws[epos][x.col + 1];
            int m = work[dpos].mult;
            int side = (work[dpos].col == x.col) ? 0 : 1;
            engine_detail::DotSlide ds = dot_below
                                             ? engine_detail::dot_slide_up(x.col, l, r, side)
                                             : engine_detail::dot_slide_down(x.col, l, r, side);
            // correction branch
            {
                Branch b2;
                b2.evs = work;
                size_t lo2 = std::min(dpos, epos), hi2 = std::max(dpos, epos);
                Events repl;
                if (m > 1) repl.push_back(ev_dot(work[dpos].col, m - 1));
                for (const Event& e : ds.corr) repl.push_back(e);
                b2.evs.erase(b2.evs.begin() + lo2, b2.evs.begin() + hi2 + 1);
                b2.evs.insert(b2.evs.begin() + lo2, repl.begin(), repl.end());
                b2.coeff = br.coeff * Rat(ds.corr_sign) * (dot_below ? Rat(1) : Rat(1));
                b2.sym = br.sym;
                next.push_back(std::move(b2));
            }
            // main branch
            {
                Branch b2;
                b2.evs = work;
                size_t lo2 = std::min(dpos, epos), hi2 = std::max(dpos, epos);
                Events repl;
                if (dot_below) {
                    if (m > 1) repl.push_back(ev_dot(work[dpos].col, m - 1));
                    repl.push_back(x);
                    repl.push_back(ds.main_dot);
                } else {
                    repl.push_back(ds.main_dot);
                    repl.push_back(x);
                    if (m > 1) repl.push_back(ev_dot(work[dpos].col, m - 1));
                }
                b2.evs.erase(b2.evs.begin() + lo2, b2.evs.begin() + hi2 + 1);
                b2.evs.insert(b2.evs.begin() + lo2, repl.begin(), repl.end());
                b2.coeff = br.coeff;
                b2.sym = br.sym;
                next.push_back(std::move(b2));
            }
            return true;
        }
        throw std::logic_error("settle_dots: unexpected station");
    }

    // merge separate dot events of the same strand (all settled near the terminus)
    {
        Trace tr2 = trace_strands(bot, evs);
        std::map<int, size_t> first_dot;
        for (size_t i = 0; i < evs.size(); ++i) {
            if (evs[i].kind != EvKind::Dot) continue;
            int root = tr2.find(tr2.ids[i][evs[i].col]);
            auto [it, fresh] = first_dot.emplace(root, i);
            if (fresh) continue;
            size_t lo = it->second, hi = i;
            if (!engine_detail::move_down_free(evs, hi, lo + 1))
                throw std::logic_error("settle_dots: dot merge blocked");
            if (evs[lo].col != evs[lo + 1].col)
                throw std::logic_error("settle_dots: dot merge columns");
            evs[lo].mult += evs[lo + 1].mult;
            evs.erase(evs.begin() + lo + 1);
            next.push_back(std::move(br));
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// alignment to the canonical staircase schedule
// ---------------------------------------------------------------------------

inline bool Engine::align_schedule(const Word& bot, Branch& br, std::vector<Branch>& next,
                                   Budget& budget) const {
    using namespace engine_detail;
    Events& evs = br.evs;
    Word tgt = word_after(bot, evs);
    NormalKey key = matching_of(bot, evs, tgt);
    // attach settled dots to termini
    {
        Trace tr = trace_strands(bot, evs);
        auto end_of_seg = [&](int seg) -> End {
            for (int i = 0; i < static_cast<int>(bot.size()); ++i)
                if (tr.find(tr.ids.front()[i]) == seg) return End{false, i};
            for (int j = 0; j < static_cast<int>(tgt.size()); ++j)
                if (tr.find(tr.ids.back()[j]) == seg) return End{true, j};
            throw std::logic_error("align: closed component survives");
        };
        for (size_t i = 0; i < evs.size(); ++i) {
            if (evs[i].kind != EvKind::Dot) continue;
            int seg = tr.find(tr.ids[i][evs[i].col]);
            End e = end_of_seg(seg);
            End p = e.top ? key.top[e.pos] : key.bot[e.pos];
            End term = strand_terminus(e, p);
            key.dots[term] += evs[i].mult;
        }
    }
    Events target = canonical_events(key, bot, tgt);
    if (evs == target) return false;  // already canonical

    // identity labels for events: strand roots involved
    Trace tr = trace_strands(bot, evs);
    Trace trt = trace_strands(bot, target);
    auto label = [](Trace& t, const Events& es, size_t i) {
        const Event& e = es[i];
        switch (e.kind) {
            case EvKind::Cross: {
                int a = t.find(t.ids[i][e.col]);
                int b = t.find(t.ids[i][e.col + 1]);
                return std::tuple<int, int, int, int>(0, std::min(a, b), std::max(a, b), 0);
            }
            case EvKind::Cap: {
                int a = t.find(t.ids[i][e.col]);
                return std::tuple<int, int, int, int>(1, a, 0, 0);
            }
            case EvKind::Cup: {
                int a = t.find(t.ids[i + 1][e.col]);
                return std::tuple<int, int, int, int>(2, a, 0, 0);
            }
            case EvKind::Dot: {
                int a = t.find(t.ids[i][e.col]);
                return std::tuple<int, int, int, int>(3, a, 0, e.mult);
            }
            case EvKind::Bub:
                throw std::logic_error("align: token left");
        }
        return std::tuple<int, int, int, int>(-1, 0, 0, 0);
    };
    // The strand roots in tr and trt coincide: both lists realize the same matching,
    // and roots are canonically identified through boundary endpoints. Map roots to
    // a boundary-endpoint id for comparison.
    auto root_key = [&](Trace& t, int seg) {
        for (int i = 0; i < static_cast<int>(bot.size()); ++i)
            if (t.find(t.ids.front()[i]) == seg) return i;
        for (int j = 0; j < static_cast<int>(tgt.size()); ++j)
            if (t.find(t.ids.back()[j]) == seg) return static_cast<int>(bot.size()) + j;
        return -1;
    };

    for (size_t ti = 0; ti < target.size(); ++ti) {
        // find the event in evs[ti..] matching target[ti] by strand identity
        auto tl = label(trt, target, ti);
        auto want = std::make_tuple(std::get<0>(tl), root_key(trt, std::get<1>(tl)),
                                    std::get<0>(tl) == 0 ? root_key(trt, std::get<2>(tl)) : 0,
                                    std::get<3>(tl));
        size_t found = evs.size();
        for (size_t j = ti; j < evs.size(); ++j) {
            if (evs[j].kind == EvKind::Bub) throw std::logic_error("align: token in list");
            auto el = label(tr, evs, j);
            auto got = std::make_tuple(std::get<0>(el), root_key(tr, std::get<1>(el)),
                                       std::get<0>(el) == 0 ? root_key(tr, std::get<2>(el)) : 0,
                                       std::get<3>(el));
            if (got == want) {
                found = j;
                break;
            }
        }
        if (found == evs.size()) throw std::logic_error("align: target event missing");
        size_t pos = found;
        while (pos > ti) {
            bool progressed = false;
            if (!step_pull_down(bot, br, pos, next, &progressed))
                throw std::logic_error("align: pull blocked");
            budget.spend();
        }
        // coordinate fixups: cups recoordinate with swing crossings above; dots hop
        // across their adjacent turn
        int guard = 0;
        while (!(evs[ti] == target[ti])) {
            if (++guard > 64) throw std::logic_error("align: fixup stuck");
            budget.spend();
            const Event t = target[ti];
            if (evs[ti].kind != t.kind || evs[ti].flag != t.flag || evs[ti].mult != t.mult)
                throw std::logic_error("align: event shape mismatch");
            if (evs[ti].kind == EvKind::Cup) {
                int want_col = t.col;
                int probe = evs[ti].col + (want_col < evs[ti].col ? -1 : 1);
                // locate the crossing above on the corresponding leg column
                int track = probe;
                size_t cx = evs.size();
                for (size_t j = ti + 1; j < evs.size(); ++j) {
                    const Event& u = evs[j];
                    if (u.kind == EvKind::Bub) continue;
                    if (engine_detail::touches(u, track) ||
                        (u.kind == EvKind::Cup && u.col == track)) {
                        cx = j;
                        break;
                    }
                    if (!engine_detail::col_up(u, track))
                        throw std::logic_error("align: fixup track lost");
                }
                if (cx == evs.size() || evs[cx].kind != EvKind::Cross)
                    throw std::logic_error("align: cup fixup needs a crossing");
                if (!engine_detail::move_down_free(evs, cx, ti + 1))
                    throw std::logic_error("align: cup fixup blocked");
                Event& e = evs[ti];
                Event& x = evs[ti + 1];
                if (x.col == e.col + 1) {
                    e.col += 1;
                    x.col -= 1;
                } else if (x.col + 1 == e.col) {
                    e.col -= 1;
                    x.col += 1;
                } else
                    throw std::logic_error("align: cup fixup geometry");
            } else if (evs[ti].kind == EvKind::Cross) {
                // recoordinate with a cap above, walking toward the target column
                bool leftward = t.col < evs[ti].col;
                int track = leftward ? evs[ti].col - 1 : evs[ti].col + 2;
                size_t cx = evs.size();
                for (size_t j = ti + 1; j < evs.size(); ++j) {
                    const Event& u = evs[j];
                    if (u.kind == EvKind::Bub) continue;
                    if (engine_detail::touches(u, track) ||
                        (u.kind == EvKind::Cup && u.col == track)) {
                        cx = j;
                        break;
                    }
                    if (!engine_detail::col_up(u, track))
                        throw std::logic_error("align: cross fixup track lost");
                }
                if (cx == evs.size() || evs[cx].kind != EvKind::Cap)
                    throw std::logic_error("align: cross fixup needs a cap");
                if (!engine_detail::move_down_free(evs, cx, ti + 1))
                    throw std::logic_error("align: cross fixup blocked");
                Event& x = evs[ti];
                Event& cap = evs[ti + 1];
                if (x.col == cap.col + 1) {
                    // [X@c+1; Cap@c] = [X'@c; Cap@c+1]
                    x.col -= 1;
                    cap.col += 1;
                } else if (x.col + 1 == cap.col) {
                    // [X@c; Cap@c+1] = [X'@c+1; Cap@c]
                    x.col += 1;
                    cap.col -= 1;
                } else
                    throw std::logic_error("align: cross fixup geometry");
            } else if (evs[ti].kind == EvKind::Dot) {
                // hop across the adjacent turn above (the dot sits on the other leg)
                int track = evs[ti].col;
                size_t tx = evs.size();
                for (size_t j = ti + 1; j < evs.size(); ++j) {
                    const Event& u = evs[j];
                    if (u.kind == EvKind::Bub) continue;
                    if (engine_detail::touches(u, track) ||
                        (u.kind == EvKind::Cup && (u.col == track || u.col + 1 == track))) {
                        tx = j;
                        break;
                    }
                    if (!engine_detail::col_up(u, track))
                        throw std::logic_error("align: dot track lost");
                }
                if (tx == evs.size() || evs[tx].kind != EvKind::Cap)
                    throw std::logic_error("align: dot fixup needs a cap");
                if (!engine_detail::move_down_free(evs, tx, ti + 1))
                    throw std::logic_error("align: dot fixup blocked");
                Event& e2 = evs[ti];
                Event& cap = evs[ti + 1];
                e2.col = (e2.col == cap.col) ? cap.col + 1 : cap.col;
            } else {
                throw std::logic_error("align: canonical mismatch after pull");
            }
        }
        tr = trace_strands(bot, evs);
    }
    if (!(evs == target)) throw std::logic_error("align: residual mismatch");
    next.push_back(std::move(br));
    return true;
}

// ---------------------------------------------------------------------------
// driver and extraction
// ---------------------------------------------------------------------------

inline void Engine::emit(const Word& bot, const Branch& br, Morphism& out) const {
    Word tgt = word_after(bot, br.evs);
    NormalKey key = matching_of(bot, br.evs, tgt);
    Trace tr = trace_strands(bot, br.evs);
    for (size_t i = 0; i < br.evs.size(); ++i) {
        if (br.evs[i].kind != EvKind::Dot) continue;
        int seg = tr.find(tr.ids[i][br.evs[i].col]);
        End e{};
        bool found = false;
        for (int b = 0; b < static_cast<int>(bot.size()) && !found; ++b)
            if (tr.find(tr.ids.front()[b]) == seg) {
                e = End{false, b};
                found = true;
            }
        for (int j = 0; j < static_cast<int>(tgt.size()) && !found; ++j)
            if (tr.find(tr.ids.back()[j]) == seg) {
                e = End{true, j};
                found = true;
            }
        if (!found) throw std::logic_error("emit: dot on closed component");
        End p = e.top ? key.top[e.pos] : key.bot[e.pos];
        key.dots[strand_terminus(e, p)] += br.evs[i].mult;
    }
    out.add(key, br.sym * br.coeff);
}

inline bool Engine::step(const Word& bot, Branch& br, std::vector<Branch>& next, Morphism& out,
                         Budget& budget) const {
    // cheap cleanups first: drop zero-dot events, merge adjacent same-column dots
    for (size_t i = 0; i < br.evs.size();) {
        if (br.evs[i].kind == EvKind::Dot && br.evs[i].mult == 0)
            br.evs.erase(br.evs.begin() + i);
        else if (i + 1 < br.evs.size() && br.evs[i].kind == EvKind::Dot &&
                 br.evs[i + 1].kind == EvKind::Dot && br.evs[i].col == br.evs[i + 1].col) {
            br.evs[i].mult += br.evs[i + 1].mult;
            br.evs.erase(br.evs.begin() + i + 1);
        } else
            ++i;
    }
    if (rule_tokens(bot, br, next)) return true;
    if (rule_cupcap(bot, br, next)) return true;
    if (rule_wiggle(bot, br, next)) return true;
    if (rule_pair_reduction(bot, br, next, budget)) return true;
    if (settle_dots(bot, br, next)) return true;
    if (align_schedule(bot, br, next, budget)) return true;
    emit(bot, br, out);
    return false;
}

}  // namespace heis
