#include "steinx/acmoves.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "steinx/error.hpp"
#include "steinx/intlinalg.hpp"

namespace steinx {

std::string move_name(AcMove::Kind k) {
    switch (k) {
        case AcMove::Kind::Invert: return "invert";
        case AcMove::Kind::Multiply: return "multiply";
        case AcMove::Kind::Conjugate: return "conjugate";
        case AcMove::Kind::Swap: return "swap";
        case AcMove::Kind::Stabilize: return "stabilize";
        case AcMove::Kind::Destabilize: return "destabilize";
    }
    return "?";
}

namespace {

std::vector<long long> cyclic_reduce(std::vector<long long> w) {
    std::size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a] == -w[b - 1]) {
        ++a;
        --b;
    }
    return std::vector<long long>(w.begin() + a, w.begin() + b);
}

std::vector<long long> invert_word(const std::vector<long long>& w) {
    std::vector<long long> out(w.rbegin(), w.rend());
    for (long long& l : out) l = -l;
    return out;
}

} // namespace

GroupPresentation apply_move(const GroupPresentation& p, const AcMove& m) {
    const std::size_t n = p.relators.size();
    auto check = [&](std::size_t idx) {
        if (idx >= n) throw Error("move references relator " + std::to_string(idx) +
                                  " of a presentation with " + std::to_string(n) + " relators");
    };
    GroupPresentation out = p;
    switch (m.kind) {
        case AcMove::Kind::Invert: {
            check(m.relator);
            out.relators[m.relator] = invert_word(out.relators[m.relator]);
            break;
        }
        case AcMove::Kind::Multiply: {
            check(m.relator);
            check(m.other);
            if (m.relator == m.other) throw Error("multiply needs two distinct relators");
            std::vector<long long> rhs = out.relators[m.other];
            if (m.invert_other) rhs = invert_word(rhs);
            auto& dst = out.relators[m.relator];
            dst.insert(dst.end(), rhs.begin(), rhs.end());
            dst = free_reduce(std::move(dst));
            break;
        }
        case AcMove::Kind::Conjugate: {
            check(m.relator);
            const long long g = m.generator;
            if (g == 0 || std::llabs(g) > p.generators)
                throw Error("conjugating generator out of range");
            std::vector<long long> w;
            w.push_back(g);
            for (long long l : out.relators[m.relator]) w.push_back(l);
            w.push_back(-g);
            out.relators[m.relator] = free_reduce(std::move(w));
            break;
        }
        case AcMove::Kind::Swap: {
            check(m.relator);
            check(m.other);
            std::swap(out.relators[m.relator], out.relators[m.other]);
            break;
        }
        case AcMove::Kind::Stabilize: {
            out.generators += 1;
            out.relators.push_back({out.generators});
            break;
        }
        case AcMove::Kind::Destabilize: {
            check(m.relator);
            const auto& r = out.relators[m.relator];
            if (r.size() != 1) throw Error("destabilization needs a single-letter relator");
            const long long g = std::llabs(r[0]);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == m.relator) continue;
                for (long long l : out.relators[i])
                    if (std::llabs(l) == g)
                        throw Error("destabilization: generator occurs in another relator");
            }
            out.relators.erase(out.relators.begin() + static_cast<long>(m.relator));
            out.generators -= 1;
            for (auto& rel : out.relators)
                for (long long& l : rel)
                    if (std::llabs(l) > g) l += l > 0 ? -1 : 1;
            break;
        }
    }
    return out;
}

namespace {

// Canonicalization that carries slot labels (original 2-handle indices or -1
// for stabilization pairs) alongside the relators.
struct LabeledPresentation {
    GroupPresentation p;
    std::vector<long long> slots;
};

void canonicalize_labeled(LabeledPresentation& s) {
    for (auto& r : s.p.relators) r = cyclic_reduce(free_reduce(std::move(r)));

    for (int iter = 0; iter < 4; ++iter) {
        // Sort relators (slots ride along; ties ordered by slot).
        std::vector<std::size_t> order(s.p.relators.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (s.p.relators[a] != s.p.relators[b]) return s.p.relators[a] < s.p.relators[b];
            return s.slots[a] < s.slots[b];
        });
        std::vector<std::vector<long long>> rel;
        std::vector<long long> slo;
        for (std::size_t i : order) {
            rel.push_back(s.p.relators[i]);
            slo.push_back(s.slots[i]);
        }
        s.p.relators = std::move(rel);
        s.slots = std::move(slo);

        // Renumber generators by first occurrence in the sorted scan;
        // unused generators keep their relative order at the end.
        std::vector<long long> map(static_cast<std::size_t>(s.p.generators) + 1, 0);
        long long next = 0;
        for (const auto& r : s.p.relators)
            for (long long l : r) {
                const std::size_t g = static_cast<std::size_t>(std::llabs(l));
                if (map[g] == 0) map[g] = ++next;
            }
        for (std::size_t g = 1; g < map.size(); ++g)
            if (map[g] == 0) map[g] = ++next;
        bool identity = true;
        for (std::size_t g = 1; g < map.size(); ++g)
            if (map[g] != static_cast<long long>(g)) identity = false;
        if (identity) break;
        for (auto& r : s.p.relators)
            for (long long& l : r) {
                const long long mapped = map[static_cast<std::size_t>(std::llabs(l))];
                l = l > 0 ? mapped : -mapped;
            }
    }
    // Renumbering can perturb the sort order; restore it.
    std::vector<std::size_t> order(s.p.relators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (s.p.relators[a] != s.p.relators[b]) return s.p.relators[a] < s.p.relators[b];
        return s.slots[a] < s.slots[b];
    });
    std::vector<std::vector<long long>> rel;
    std::vector<long long> slo;
    for (std::size_t i : order) {
        rel.push_back(s.p.relators[i]);
        slo.push_back(s.slots[i]);
    }
    s.p.relators = std::move(rel);
    s.slots = std::move(slo);
}

std::string encode(const GroupPresentation& p) {
    std::ostringstream os;
    os << p.generators << ';';
    for (const auto& r : p.relators) {
        for (long long l : r) os << l << ',';
        os << '|';
    }
    return os.str();
}

std::pair<long long, std::size_t> complexity(const GroupPresentation& p) {
    std::size_t len = 0;
    for (const auto& r : p.relators) len += r.size();
    return {p.generators, len};
}

struct Node {
    LabeledPresentation state;
    long long parent = -1;
    AcMove via;
    std::size_t depth = 0;
};

// Children move list in a fixed order; conjugation is emitted only where it
// rotates (any other conjugate canonicalizes back to the parent).
std::vector<AcMove> candidate_moves(const GroupPresentation& p) {
    std::vector<AcMove> moves;
    const std::size_t n = p.relators.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!p.relators[i].empty())
            moves.push_back({AcMove::Kind::Invert, i, 0, false, 0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || p.relators[j].empty()) continue;
            moves.push_back({AcMove::Kind::Multiply, i, j, false, 0});
            moves.push_back({AcMove::Kind::Multiply, i, j, true, 0});
        }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = p.relators[i];
        if (r.size() < 2) continue;
        moves.push_back({AcMove::Kind::Conjugate, i, 0, false, -r.front()});
        moves.push_back({AcMove::Kind::Conjugate, i, 0, false, r.back()});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = p.relators[i];
        if (r.size() != 1) continue;
        const long long g = std::llabs(r[0]);
        bool elsewhere = false;
        for (std::size_t j = 0; j < n && !elsewhere; ++j) {
            if (j == i) continue;
            for (long long l : p.relators[j])
                if (std::llabs(l) == g) {
                    elsewhere = true;
                    break;
                }
        }
        if (!elsewhere) moves.push_back({AcMove::Kind::Destabilize, i, 0, false, 0});
    }
    moves.push_back({AcMove::Kind::Stabilize, 0, 0, false, 0});
    return moves;
}

// Slot bookkeeping mirroring apply_move.
std::vector<long long> move_slots(const std::vector<long long>& slots, const AcMove& m) {
    std::vector<long long> out = slots;
    switch (m.kind) {
        case AcMove::Kind::Swap:
            std::swap(out[m.relator], out[m.other]);
            break;
        case AcMove::Kind::Stabilize:
            out.push_back(-1);
            break;
        case AcMove::Kind::Destabilize:
            out.erase(out.begin() + static_cast<long>(m.relator));
            break;
        default:
            break;
    }
    return out;
}

struct SearchOutcome {
    bool found = false;
    LabeledPresentation state;
    std::vector<AcMove> trace;
    std::size_t states = 0;
};

SearchOutcome bfs(const LabeledPresentation& start, std::size_t max_depth, std::size_t max_states,
                  bool require_original_slots) {
    auto is_goal = [&](const LabeledPresentation& s) {
        if (s.p.generators != 0) return false;
        if (require_original_slots)
            for (long long slot : s.slots)
                if (slot < 0) return false;
        return true;
    };

    std::vector<Node> arena;
    arena.push_back({start, -1, {}, 0});
    std::unordered_set<std::string> seen;
    seen.insert(encode(start.p));

    auto trace_of = [&](std::size_t idx) {
        std::vector<AcMove> t;
        for (long long cur = static_cast<long long>(idx); arena[cur].parent >= 0;
             cur = arena[cur].parent)
            t.push_back(arena[cur].via);
        std::reverse(t.begin(), t.end());
        return t;
    };

    std::size_t best = 0; // minimal-complexity node, ties by encoding

    if (is_goal(start)) return {true, start, {}, 1};

    std::vector<std::size_t> layer = {0};
    bool budget_hit = false;
    for (std::size_t depth = 1; depth <= max_depth && !layer.empty() && !budget_hit; ++depth) {
        std::vector<std::size_t> next;
        std::vector<std::size_t> goals;
        for (std::size_t idx : layer) {
            // Arena indices stay valid: we only append.
            const std::vector<AcMove> moves = candidate_moves(arena[idx].state.p);
            for (const AcMove& m : moves) {
                if (arena.size() >= max_states) {
                    budget_hit = true;
                    break;
                }
                LabeledPresentation child;
                child.p = apply_move(arena[idx].state.p, m);
                child.slots = move_slots(arena[idx].state.slots, m);
                canonicalize_labeled(child);
                std::string key = encode(child.p);
                if (!seen.insert(key).second) continue;
                arena.push_back({std::move(child), static_cast<long long>(idx), m, depth});
                const std::size_t ci = arena.size() - 1;
                next.push_back(ci);
                if (is_goal(arena[ci].state)) goals.push_back(ci);
                auto cb = complexity(arena[ci].state.p);
                auto bb = complexity(arena[best].state.p);
                if (cb < bb || (cb == bb && encode(arena[ci].state.p) < encode(arena[best].state.p)))
                    best = ci;
            }
            if (budget_hit) break;
        }
        if (!goals.empty()) {
            std::size_t pick = goals[0];
            for (std::size_t g : goals) {
                auto cg = complexity(arena[g].state.p);
                auto cp = complexity(arena[pick].state.p);
                if (cg < cp || (cg == cp && encode(arena[g].state.p) < encode(arena[pick].state.p)))
                    pick = g;
            }
            return {true, arena[pick].state, trace_of(pick), arena.size()};
        }
        layer = std::move(next);
    }
    return {false, arena[best].state, trace_of(best), arena.size()};
}

} // namespace

GroupPresentation canonicalize(const GroupPresentation& p) {
    LabeledPresentation s{p, std::vector<long long>(p.relators.size(), 0)};
    for (std::size_t i = 0; i < s.slots.size(); ++i) s.slots[i] = static_cast<long long>(i);
    canonicalize_labeled(s);
    return s.p;
}

GroupPresentation replay_trace(const GroupPresentation& p, const std::vector<AcMove>& trace) {
    GroupPresentation cur = canonicalize(p);
    for (const AcMove& m : trace) cur = canonicalize(apply_move(cur, m));
    return cur;
}

std::optional<std::string> trivializability_obstruction(const GroupPresentation& p) {
    // Exponent-sum matrix: rows are generators, columns relators. The
    // abelianization is its cokernel; trivial iff every invariant factor is 1
    // and the rank equals the generator count.
    const std::size_t g = static_cast<std::size_t>(p.generators);
    IntegerMatrix rel(g, p.relators.size());
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (long long l : p.relators[j]) {
            const std::size_t gen = static_cast<std::size_t>(std::llabs(l)) - 1;
            rel.at(gen, j) += l > 0 ? 1 : -1;
        }
    SnfFactors f = smith_normal_form_factors(rel);
    const std::size_t free_rank = g - f.rank;
    std::vector<Int> torsion;
    for (const Int& e : f.snf.d.diagonal_entries())
        if (e > 1) torsion.push_back(e);
    if (free_rank == 0 && torsion.empty()) return std::nullopt;

    std::ostringstream os;
    os << "abelianization ";
    bool first = true;
    if (free_rank > 0) {
        os << (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " x ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

AcResult ac_reduce(const GroupPresentation& p, std::size_t max_depth, std::size_t max_states) {
    if (max_depth < 1 || max_states < 1) throw Error("ac_reduce budgets must be >= 1");
    LabeledPresentation start{p, {}};
    start.slots.assign(p.relators.size(), 0);
    for (std::size_t i = 0; i < start.slots.size(); ++i) start.slots[i] = static_cast<long long>(i);
    canonicalize_labeled(start);

    AcResult res;
    res.obstruction = trivializability_obstruction(start.p);
    if (res.obstruction) {
        res.presentation = start.p;
        res.trivialized = false;
        res.states_explored = 0;
        return res;
    }
    SearchOutcome s = bfs(start, max_depth, max_states, false);
    res.presentation = s.state.p;
    res.trace = std::move(s.trace);
    res.trivialized = s.found;
    res.states_explored = s.states;
    return res;
}

ReduceOutcome reduce_handlebody(const SteinHandlebody& x, std::size_t max_depth,
                                std::size_t max_states) {
    require_valid(x);
    ReduceOutcome out;
    if (x.one_handles == 0) {
        out.reduced = x;
        out.search.presentation = canonicalize(presentation(x));
        out.search.trivialized = true;
        return out;
    }

    LabeledPresentation start{presentation(x), {}};
    start.slots.assign(start.p.relators.size(), 0);
    for (std::size_t i = 0; i < start.slots.size(); ++i) start.slots[i] = static_cast<long long>(i);
    canonicalize_labeled(start);

    out.search.obstruction = trivializability_obstruction(start.p);
    if (out.search.obstruction) {
        out.search.presentation = start.p;
        return out;
    }

    SearchOutcome s = bfs(start, max_depth, max_states, true);
    out.search.presentation = s.state.p;
    out.search.trace = s.trace;
    out.search.trivialized = s.found;
    out.search.states_explored = s.states;
    if (!s.found) return out;

    std::vector<std::size_t> survivors(s.state.slots.begin(), s.state.slots.end());
    std::sort(survivors.begin(), survivors.end());

    SteinHandlebody reduced;
    reduced.one_handles = 0;
    for (std::size_t idx : survivors) {
        TwoHandle h = x.handles[idx];
        h.word.clear();
        reduced.handles.push_back(std::move(h));
    }
    reduced.linking = x.linking.submatrix(survivors, survivors);
    reduced.comment = x.comment.empty()
                          ? "AC-reduced: 1-handles removed by Andrews-Curtis moves"
                          : x.comment + "; AC-reduced: 1-handles removed by Andrews-Curtis moves";
    out.reduced = std::move(reduced);
    return out;
}

} // namespace steinx
