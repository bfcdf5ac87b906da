#include "steinx/handlebody.hpp"

#include <cstdlib>
#include <sstream>

#include "steinx/error.hpp"

namespace steinx {

std::vector<long long> free_reduce(std::vector<long long> word) {
    std::vector<long long> out;
    out.reserve(word.size());
    for (long long letter : word) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

GroupPresentation make_presentation(long long generators,
                                    std::vector<std::vector<long long>> relators) {
    if (generators < 0) throw Error("presentation: negative generator count");
    GroupPresentation p;
    p.generators = generators;
    for (auto& r : relators) {
        for (long long letter : r)
            if (letter == 0 || std::llabs(letter) > generators)
                throw Error("presentation: relator letter " + std::to_string(letter) +
                            " out of range for " + std::to_string(generators) + " generators");
        p.relators.push_back(free_reduce(std::move(r)));
    }
    return p;
}

std::vector<std::string> validate(const SteinHandlebody& x) {
    std::vector<std::string> v;
    const std::size_t n = x.handles.size();

    if (x.one_handles < 0) v.push_back("one_handles must be nonnegative");

    if (x.linking.rows() != n || x.linking.cols() != n) {
        v.push_back("linking matrix must be " + std::to_string(n) + "x" + std::to_string(n));
        return v; // shape is a prerequisite for the entry checks below
    }
    if (!x.linking.is_symmetric()) v.push_back("linking matrix must be symmetric");

    for (std::size_t i = 0; i < n; ++i) {
        const TwoHandle& h = x.handles[i];
        const std::string tag = "handle " + std::to_string(i) + ": ";

        if (x.linking.at(i, i) != int_from_i64(h.tb - 1))
            v.push_back(tag + "framing != tb - 1 (linking diagonal " +
                        x.linking.at(i, i).get_str() + ", tb " + std::to_string(h.tb) + ")");
        if ((h.tb + h.rot) % 2 == 0)
            v.push_back(tag + "tb + rot must be odd");
        for (long long letter : h.word)
            if (letter == 0 || std::llabs(letter) > x.one_handles) {
                v.push_back(tag + "word index " + std::to_string(letter) + " out of range");
                break;
            }
        if (h.front) {
            for (const std::string& fv : validate(*h.front)) v.push_back(tag + "front: " + fv);
            if ((h.front->up_cusps + h.front->down_cusps) % 2 == 0) {
                if (thurston_bennequin(*h.front) != h.tb)
                    v.push_back(tag + "front tb " + std::to_string(thurston_bennequin(*h.front)) +
                                " != declared tb " + std::to_string(h.tb));
                if (rotation_number(*h.front) != h.rot)
                    v.push_back(tag + "front rot " + std::to_string(rotation_number(*h.front)) +
                                " != declared rot " + std::to_string(h.rot));
            }
        }
    }
    return v;
}

void require_valid(const SteinHandlebody& x) {
    std::vector<std::string> v = validate(x);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid handlebody:";
    for (const std::string& s : v) os << " [" << s << "]";
    throw Error(os.str());
}

IntegerMatrix intersection_matrix(const SteinHandlebody& x) {
    if (x.one_handles != 0)
        throw Error("intersection_matrix requires a handlebody without 1-handles; "
                    "use homology_intersection_matrix for the general case");
    return x.linking;
}

IntegerMatrix chain_boundary(const SteinHandlebody& x) {
    const std::size_t rows = static_cast<std::size_t>(x.one_handles < 0 ? 0 : x.one_handles);
    IntegerMatrix d(rows, x.handles.size());
    for (std::size_t i = 0; i < x.handles.size(); ++i)
        for (long long letter : x.handles[i].word) {
            if (letter == 0 || std::llabs(letter) > x.one_handles)
                throw Error("handle " + std::to_string(i) + ": word index " +
                            std::to_string(letter) + " out of range");
            const std::size_t g = static_cast<std::size_t>(std::llabs(letter)) - 1;
            d.at(g, i) += letter > 0 ? 1 : -1;
        }
    return d;
}

Homology homology(const SteinHandlebody& x) {
    const IntegerMatrix d2 = chain_boundary(x);
    SnfFactors f = smith_normal_form_factors(d2);
    Homology h;
    h.b2 = d2.cols() - f.rank;
    h.h1_free_rank = d2.rows() - f.rank;
    for (const Int& e : f.snf.d.diagonal_entries())
        if (e > 1) h.torsion_orders.push_back(e);
    return h;
}

IntegerMatrix homology_kernel_basis(const SteinHandlebody& x) {
    return kernel_basis(chain_boundary(x));
}

IntegerMatrix homology_intersection_matrix(const SteinHandlebody& x) {
    IntegerMatrix k = homology_kernel_basis(x);
    return k.transpose() * x.linking * k;
}

GroupPresentation presentation(const SteinHandlebody& x) {
    std::vector<std::vector<long long>> relators;
    relators.reserve(x.handles.size());
    for (const TwoHandle& h : x.handles) relators.push_back(h.word);
    return make_presentation(x.one_handles, std::move(relators));
}

SteinHandlebody boundary_connected_sum(const SteinHandlebody& a, const SteinHandlebody& b) {
    SteinHandlebody s;
    s.one_handles = a.one_handles + b.one_handles;
    s.handles = a.handles;
    for (TwoHandle h : b.handles) {
        for (long long& letter : h.word)
            letter += letter > 0 ? a.one_handles : -a.one_handles;
        s.handles.push_back(std::move(h));
    }
    const std::size_t na = a.handles.size(), nb = b.handles.size();
    s.linking = IntegerMatrix(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) s.linking.at(i, j) = a.linking.at(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) s.linking.at(na + i, na + j) = b.linking.at(i, j);
    if (!a.comment.empty() && !b.comment.empty())
        s.comment = a.comment + "; " + b.comment;
    else
        s.comment = a.comment.empty() ? b.comment : a.comment;
    return s;
}

} // namespace steinx
