#include "steinx/exotica.hpp"

#include <algorithm>
#include <map>

#include "steinx/acmoves.hpp"
#include "steinx/chern.hpp"
#include "steinx/error.hpp"

namespace steinx {

std::string verdict_name(ExoticaVerdict v) {
    return v == ExoticaVerdict::InfiniteExoticSubfamily ? "infinite_exotic_subfamily"
                                                        : "inconclusive";
}

namespace {

// Lexicographically earliest longest strictly increasing subsequence.
std::vector<std::size_t> longest_increasing_subsequence(const std::vector<Int>& values) {
    const std::size_t n = values.size();
    if (n == 0) return {};
    std::vector<std::size_t> len_from(n, 1); // LIS length starting at i
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if (values[j] > values[i]) len_from[i] = std::max(len_from[i], len_from[j] + 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total = std::max(total, len_from[i]);

    std::vector<std::size_t> pick;
    std::size_t need = total;
    long long last = -1; // index of the previous pick
    while (need > 0) {
        for (std::size_t i = last + 1; i < n; ++i) {
            if (len_from[i] != need) continue;
            if (last >= 0 && !(values[i] > values[static_cast<std::size_t>(last)])) continue;
            pick.push_back(i);
            last = static_cast<long long>(i);
            break;
        }
        --need;
    }
    return pick;
}

} // namespace

ExoticaReport detect_by_divisibility(const std::vector<FamilyMember>& family,
                                     const IntegerMatrix& q) {
    if (family.size() < 2) throw Error("a family needs at least 2 members");

    ExoticaReport rep;
    struct Entry {
        const FamilyMember* m;
        Int d;
        Int lower;
    };
    std::vector<Entry> included;
    for (const FamilyMember& m : family) {
        require_valid(m.handlebody);
        CompatibilityReport compat = form_compatibility(m.handlebody, q);
        if (!compat.failures.empty()) {
            std::string note = "excluded " + m.id + ": ";
            for (std::size_t i = 0; i < compat.failures.size(); ++i)
                note += (i ? "; " : "") + compat.failures[i];
            rep.notes.push_back(note);
            continue;
        }
        included.push_back({&m, c1_divisibility(m.handlebody), 0});
    }
    if (included.size() < 2) {
        rep.verdict = ExoticaVerdict::Inconclusive;
        rep.notes.push_back("fewer than 2 members are form-compatible with q");
        return rep;
    }

    std::stable_sort(included.begin(), included.end(),
                     [](const Entry& a, const Entry& b) { return a.d < b.d; });

    bool distinct = true;
    for (std::size_t i = 0; i + 1 < included.size(); ++i)
        if (included[i].d == included[i + 1].d) distinct = false;

    if (!distinct) {
        for (const Entry& e : included)
            rep.members.push_back({e.m->id, e.d, std::nullopt, std::nullopt});
        rep.verdict = ExoticaVerdict::Inconclusive;
        rep.notes.push_back("divisibilities are not pairwise distinct");
        return rep;
    }

    std::vector<Int> lowers;
    for (Entry& e : included) {
        QGenusBound b = q_genus_lb(e.m->handlebody, q);
        e.lower = b.lower;
        lowers.push_back(b.lower);
        rep.members.push_back({e.m->id, e.d, std::nullopt, e.lower});

        const std::vector<Int> diag = q.diagonal_entries();
        Int m_min = diag[0], m_max = diag[0];
        for (const Int& v : diag) {
            if (v < m_min) m_min = v;
            if (v > m_max) m_max = v;
        }
        rep.explanations.push_back(
            e.m->id + ": d = " + e.d.get_str() + ", min diagonal = " + m_min.get_str() +
            ": d + m_min <= 2G - 2 gives G >= " + adjunction_genus_lb(e.d, m_min).get_str() +
            "; max diagonal = " + m_max.get_str() + " alone gives G >= " +
            adjunction_genus_lb(Int(0), m_max).get_str());
    }

    const std::vector<std::size_t> lis = longest_increasing_subsequence(lowers);
    for (std::size_t i : lis) rep.witness.push_back(included[i].m->id);
    rep.verdict = ExoticaVerdict::InfiniteExoticSubfamily;
    rep.notes.push_back("divisibilities pairwise distinct: an infinite family with these "
                        "divisibilities contains an infinite pairwise non-diffeomorphic subfamily");
    rep.notes.push_back("asymptotically, d + min diagonal <= 2G - 2 sends the genus lower "
                        "bound to infinity as the divisibility grows");
    return rep;
}

ExoticaReport detect_by_contact(const std::vector<FamilyMember>& family,
                                const std::optional<IntegerMatrix>& q, const AcBudget& budget) {
    if (family.size() < 2) throw Error("a family needs at least 2 members");

    // Classify every member, reducing 1-handles when present.
    std::vector<FamilyMember> pages;
    std::vector<ContactFiveClass> classes;
    for (const FamilyMember& m : family) {
        require_valid(m.handlebody);
        SteinHandlebody page = m.handlebody;
        if (page.one_handles != 0) {
            ReduceOutcome r = reduce_handlebody(page, budget.max_depth, budget.max_states);
            if (!r.reduced)
                throw Error("member " + m.id + " is unclassifiable within budget" +
                            (r.search.obstruction ? " (" + *r.search.obstruction + ")" : ""));
            page = *r.reduced;
        }
        const Homology h = homology(page);
        if (!h.torsion_orders.empty())
            throw Error("member " + m.id + " has torsion in homology; the same-H2 reduction "
                        "does not apply");
        classes.push_back(classify(page));
        pages.push_back({m.id, std::move(page)});
    }
    for (std::size_t i = 1; i < classes.size(); ++i)
        if (classes[i].n != classes[0].n)
            throw Error("b2 mismatch between members " + pages[0].id + " and " + pages[i].id);

    ExoticaReport rep;
    bool distinct = true;
    for (std::size_t i = 0; i < classes.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (contactomorphic(classes[i], classes[j])) {
                distinct = false;
                rep.notes.push_back("members " + pages[i].id + " and " + pages[j].id +
                                    " support contactomorphic structures; equal classes carry "
                                    "no distinction");
                break;
            }
    if (!distinct) {
        for (std::size_t i = 0; i < pages.size(); ++i)
            rep.members.push_back(
                {pages[i].id, c1_divisibility(pages[i].handlebody), classes[i], std::nullopt});
        rep.verdict = ExoticaVerdict::Inconclusive;
        return rep;
    }

    const IntegerMatrix q_use = q ? *q : homology_intersection_matrix(pages[0].handlebody);
    ExoticaReport del = detect_by_divisibility(pages, q_use);

    std::map<std::string, ContactFiveClass> by_id;
    for (std::size_t i = 0; i < pages.size(); ++i) by_id.emplace(pages[i].id, classes[i]);
    for (ExoticaMember& m : del.members) {
        auto it = by_id.find(m.id);
        if (it != by_id.end()) m.contact_class = it->second;
    }
    del.notes.insert(del.notes.begin(),
                     "contact route: classes pairwise non-contactomorphic, so the Chern "
                     "divisibilities are pairwise distinct");
    return del;
}

std::optional<Certificate> certify_nondiffeomorphic(const SteinHandlebody& a,
                                                    const SteinHandlebody& b,
                                                    const IntegerMatrix& q,
                                                    const GenusOracle& oracle_a,
                                                    long long coeff_bound) {
    require_valid(a);
    require_valid(b);
    {
        CompatibilityReport ca = form_compatibility(a, q);
        if (!ca.failures.empty()) throw Error("record a is not form-compatible with q");
        CompatibilityReport cb = form_compatibility(b, q);
        if (!cb.failures.empty()) throw Error("record b is not form-compatible with q");
    }

    QGenusBound lb_a = q_genus_lb(a, q);
    QGenusBound lb_b = q_genus_lb(b, q);
    QGenusBound search = q_genus_search(a, q, oracle_a, coeff_bound);
    if (!search.upper) return std::nullopt; // no covered basis: nothing to certify with

    if (int_from_i64(*search.upper) < lb_a.lower)
        throw Error("oracle is inconsistent: declared surfaces put the Q-genus of a below its "
                    "own adjunction lower bound");

    if (int_from_i64(*search.upper) < lb_b.lower) {
        Certificate c;
        c.upper_a = *search.upper;
        c.lower_b = lb_b.lower;
        c.matrix = q;
        c.explanation.push_back("Q-genus(a) <= " + std::to_string(*search.upper) +
                                " from declared surface data over an exhaustive basis search");
        c.explanation.push_back("Q-genus(b) >= " + lb_b.lower.get_str() +
                                " from the adjunction inequality");
        c.explanation.push_back("the Q-genus is a diffeomorphism invariant for fixed q, "
                                "so a and b are not orientation-preserving diffeomorphic");
        return c;
    }
    return std::nullopt;
}

} // namespace steinx
