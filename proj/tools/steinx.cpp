// steinx: invariants and decision procedures for combinatorially presented
// compact Stein 4-manifold handlebodies and the contact 5-manifolds their
// identity-monodromy open books support.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "steinx/acmoves.hpp"
#include "steinx/c1_enum.hpp"
#include "steinx/chern.hpp"
#include "steinx/contact5.hpp"
#include "steinx/error.hpp"
#include "steinx/exotica.hpp"
#include "steinx/families.hpp"
#include "steinx/genus.hpp"
#include "steinx/json_io.hpp"

using namespace steinx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        if (j.empty()) out << prefix << " = []\n";
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const std::string& format) {
    if (format == "table")
        flatten(j, "", std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

SteinHandlebody load_handlebody(const std::string& path) {
    SteinHandlebody x = handlebody_from_json(parse_json_text(read_input(path)));
    require_valid(x);
    return x;
}

Json invariants_report(const SteinHandlebody& x, bool explain) {
    Json j;
    j["homology"] = homology_to_json(homology(x));
    j["c1_cochain"] = c1_cochain(x);
    const CohomologyClass c = c1_class(x);
    Json cls = cohomology_class_to_json(c);
    j["free_coords"] = cls["free_coords"];
    j["torsion"] = cls["torsion"];
    j["divisibility"] = int_to_json(c1_divisibility(x));
    if (x.one_handles == 0) j["rotation_divisor"] = rotation_divisor(x);
    j["form"] = form_properties_to_json(form_properties(homology_intersection_matrix(x)));
    j["provenance"] = Json{
        {"b2", "rank of the kernel of the boundary map: the second Betti number"},
        {"torsion_orders", "invariant factors > 1 of the boundary map: torsion of H1"},
        {"c1_cochain", "rotation number of each 2-handle, the value of the first Chern "
                       "cochain on that handle"},
        {"free_coords", "evaluations of the Chern cochain on the saturated kernel basis; "
                        "coordinates depend on that deterministic basis, the gcd does not"},
        {"divisibility", "gcd of the free coordinates: largest n with c1 = n times a "
                         "primitive class modulo torsion; 0 for torsion classes"},
        {"rotation_divisor", "gcd of the rotation numbers of a 1-handle-free handlebody; "
                             "0 when b2 = 0 or all rotation numbers vanish"},
        {"form", "linking pairing restricted to H2; framings tb - 1 on the diagonal"}};
    if (explain)
        j["explanations"] = Json::array(
            {"divisibility divides every pairing of c1 with a second homology class",
             "the form properties (parity, signature, determinant) are congruence invariants"});
    return j;
}

int cmd_invariants(const std::string& path, const std::string& format, bool explain) {
    emit(invariants_report(load_handlebody(path), explain), format);
    return kExitOk;
}

int cmd_classify(const std::string& path, std::size_t depth, std::size_t max_states,
                 const std::string& format) {
    SteinHandlebody x = load_handlebody(path);
    bool reduced = false;
    if (x.one_handles != 0) {
        ReduceOutcome out = reduce_handlebody(x, depth, max_states);
        if (!out.reduced) {
            Json j;
            j["status"] = "unclassifiable within budget";
            if (out.search.obstruction) j["obstruction"] = *out.search.obstruction;
            j["states_explored"] = out.search.states_explored;
            emit(j, format);
            return kExitInconclusive;
        }
        x = *out.reduced;
        reduced = true;
    }
    Json j = contact_class_to_json(classify(x));
    if (reduced) j["note"] = "AC-reduced: 1-handles removed by Andrews-Curtis moves";
    j["provenance"] = Json{
        {"n", "b2 of the page"},
        {"r", "rotation divisor of the page"},
        {"diffeo_type", "connected sum of n copies of the trivial (even r) or twisted "
                        "(odd r) S3-bundle over S2"}};
    emit(j, format);
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& oracle_path, const std::string& q_path,
                long long coeff_bound, std::size_t depth, std::size_t max_states,
                const std::string& format, bool explain) {
    SteinHandlebody a = load_handlebody(path_a);
    SteinHandlebody b = load_handlebody(path_b);
    Json j;
    int exit_code = kExitOk;

    Json evidence;
    const Homology ha = homology(a), hb = homology(b);
    evidence["b2_equal"] = ha.b2 == hb.b2;
    evidence["h1_equal"] =
        ha.h1_free_rank == hb.h1_free_rank && ha.torsion_orders == hb.torsion_orders;
    const FormProperties fa = form_properties(homology_intersection_matrix(a));
    const FormProperties fb = form_properties(homology_intersection_matrix(b));
    evidence["form_properties_equal"] = fa == fb;
    evidence["note"] = "necessary conditions only; equality of every check is evidence, "
                       "not proof, of homeomorphism";
    j["evidence"] = std::move(evidence);

    auto classify_page = [&](SteinHandlebody page) -> std::optional<ContactFiveClass> {
        if (page.one_handles != 0) {
            ReduceOutcome out = reduce_handlebody(page, depth, max_states);
            if (!out.reduced) return std::nullopt;
            page = *out.reduced;
        }
        return classify(page);
    };
    std::optional<ContactFiveClass> ca = classify_page(a), cb = classify_page(b);
    if (ca) j["a"] = contact_class_to_json(*ca);
    if (cb) j["b"] = contact_class_to_json(*cb);
    if (ca && cb) {
        j["contactomorphic"] = contactomorphic(*ca, *cb);
        j["diffeomorphic_total_spaces"] = diffeomorphic_total_spaces(*ca, *cb);
    } else {
        j["note"] = "a page was unclassifiable within budget";
        exit_code = kExitInconclusive;
    }

    if (!oracle_path.empty()) {
        GenusOracle oracle = oracle_from_json(parse_json_text(read_input(oracle_path)));
        IntegerMatrix q = q_path.empty()
                              ? homology_intersection_matrix(a)
                              : matrix_from_json(parse_json_text(read_input(q_path)), "q");
        std::optional<Certificate> cert = certify_nondiffeomorphic(a, b, q, oracle, coeff_bound);
        if (cert) {
            Json cj = certificate_to_json(*cert);
            if (!explain) cj.erase("explanation");
            j["certificate"] = std::move(cj);
        } else {
            j["certificate"] = nullptr;
        }
    }
    j["provenance"] = Json{
        {"contactomorphic", "the supported contact 5-manifolds coincide iff (b2, rotation "
                            "divisor) coincide, for 1-handle-free pages"},
        {"diffeomorphic_total_spaces", "equal b2 and rotation divisors of equal parity"},
        {"certificate", "a Q-genus upper bound for a strictly below a Q-genus lower bound "
                        "for b rules out an orientation-preserving diffeomorphism"}};
    emit(j, format);
    return exit_code;
}

int cmd_detect(const std::string& path, const std::string& route, std::size_t depth,
               std::size_t max_states, const std::string& format, bool explain) {
    FamilyFile f = family_from_json(parse_json_text(read_input(path)));
    ExoticaReport rep;
    if (route == "divisibility") {
        IntegerMatrix q = f.q ? *f.q : homology_intersection_matrix(f.members.at(0).handlebody);
        rep = detect_by_divisibility(f.members, q);
    } else {
        rep = detect_by_contact(f.members, f.q, AcBudget{depth, max_states});
    }
    Json j = exotica_report_to_json(rep, explain);
    j["provenance"] = Json{
        {"verdict", "pairwise distinct Chern divisibilities force an infinite pairwise "
                    "non-diffeomorphic subfamily"},
        {"q_genus_lower", "divisibility + min diagonal of q <= 2G - 2, and max diagonal "
                          "+ 2 <= 2G, G the intersection genus for q"},
        {"witness", "members whose genus lower bounds strictly increase"}};
    emit(j, format);
    return rep.verdict == ExoticaVerdict::InfiniteExoticSubfamily ? kExitOk : kExitInconclusive;
}

int cmd_enumerate(const std::string& path, const std::string& oracle_path, bool filter_extra,
                  const std::string& format) {
    SteinHandlebody x = load_handlebody(path);
    GenusOracle oracle = oracle_from_json(parse_json_text(read_input(oracle_path)));
    std::vector<CohomologyClass> cands = enumerate_c1_candidates(x, oracle, filter_extra);
    Json j;
    j["count"] = cands.size();
    Json arr = Json::array();
    for (const CohomologyClass& c : cands) arr.push_back(cohomology_class_to_json(c));
    j["candidates"] = std::move(arr);
    j["provenance"] = Json{
        {"candidates", "coefficient vectors with |c_i| <= 2 g_i - 2 - v_i.v_i on the "
                       "declared basis classes, matching the parity of v_i.v_i (Chern "
                       "classes are characteristic); torsion coordinates range over "
                       "residues modulo the boundary-map invariant factors"},
        {"count", "an upper bound for the number of Chern classes of Stein structures "
                  "on this smooth handlebody"}};
    emit(j, format);
    return kExitOk;
}

int cmd_acreduce(const std::string& path, std::size_t depth, std::size_t max_states,
                 const std::string& format) {
    GroupPresentation p = presentation_from_json(parse_json_text(read_input(path)));
    AcResult r = ac_reduce(p, depth, max_states);
    Json j = ac_result_to_json(r);
    j["provenance"] = Json{
        {"status", "trivialized when some sequence of Andrews-Curtis moves removes every "
                   "generator; exhausted when the bounded search gave up"},
        {"trace", "moves replaying from the canonicalized input to the reported "
                  "presentation, one canonicalization after each move"},
        {"obstruction", "a nontrivial abelianization rules out trivialization outright"}};
    emit(j, format);
    return r.trivialized ? kExitOk : kExitInconclusive;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stein handlebody invariants, contact 5-manifold classification, and "
                 "exotica detection"};
    app.require_subcommand(1);

    std::string format = "json";
    bool explain = false;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_flag("--explain", explain, "Include derivation chains in reports");

    std::size_t depth = 16, max_states = 100000;

    std::string file_a, file_b, oracle_path, q_path, route = "divisibility";
    bool filter_extra = false;
    long long coeff_bound = 2;

    auto* inv = app.add_subcommand("invariants",
                                   "Homology, Chern data, divisibility, form properties");
    inv->add_option("file", file_a, "Handlebody JSON ('-' for stdin)")->required();

    auto* cls = app.add_subcommand("classify", "Contact 5-manifold class of the page");
    cls->add_option("file", file_a, "Handlebody JSON ('-' for stdin)")->required();
    cls->add_option("--depth", depth, "AC search depth budget");
    cls->add_option("--max-states", max_states, "AC search state budget")
        ->envname("STEINX_MAX_STATES");

    auto* cmp = app.add_subcommand("compare", "Compare two handlebodies");
    cmp->add_option("a", file_a, "First handlebody JSON")->required();
    cmp->add_option("b", file_b, "Second handlebody JSON")->required();
    cmp->add_option("--oracle", oracle_path, "Genus oracle JSON for the first record");
    cmp->add_option("--q", q_path, "Intersection matrix JSON (defaults to a's form)");
    cmp->add_option("--coeff-bound", coeff_bound, "Basis search coefficient bound");
    cmp->add_option("--depth", depth, "AC search depth budget");
    cmp->add_option("--max-states", max_states, "AC search state budget")
        ->envname("STEINX_MAX_STATES");

    auto* det = app.add_subcommand("detect", "Exotica detection over a family file");
    det->add_option("family", file_a, "Family JSON ('-' for stdin)")->required();
    det->add_option("--route", route, "divisibility or contact")
        ->check(CLI::IsMember({"divisibility", "contact"}));
    det->add_option("--depth", depth, "AC search depth budget");
    det->add_option("--max-states", max_states, "AC search state budget")
        ->envname("STEINX_MAX_STATES");

    auto* enu = app.add_subcommand("enumerate-c1", "Enumerate candidate first Chern classes");
    enu->add_option("file", file_a, "Handlebody JSON ('-' for stdin)")->required();
    enu->add_option("--oracle", oracle_path, "Genus oracle JSON")->required();
    enu->add_flag("--filter-extra", filter_extra,
                  "Filter candidates against non-basis oracle entries");

    auto* acr = app.add_subcommand("acreduce", "Andrews-Curtis reduction of a presentation");
    acr->add_option("file", file_a, "Presentation JSON ('-' for stdin)")->required();
    acr->add_option("--depth", depth, "Search depth budget");
    acr->add_option("--max-states", max_states, "Search state budget")
        ->envname("STEINX_MAX_STATES");

    auto* gen = app.add_subcommand("gen", "Emit example family records");
    gen->require_subcommand(1);
    long long gen_p = 0;
    std::size_t gen_k = 1, gen_n = 2;
    std::vector<long long> gen_rs;
    auto* gxp = gen->add_subcommand("xp", "Rank-2 block with rotation data (0, p)");
    gxp->add_option("--p", gen_p, "Rotation number p >= 0")->required();
    auto* gy = gen->add_subcommand("y", "k disk bundles (tb -1, rot 0)");
    gy->add_option("--k", gen_k, "Handle count")->required();
    auto* gznp = gen->add_subcommand("znp", "xp summed with n-2 disk bundles");
    gznp->add_option("--n", gen_n, "Total b2 (>= 2)")->required();
    gznp->add_option("--p", gen_p, "Rotation number p >= 0")->required();
    auto* gtorus = gen->add_subcommand("torus", "Fixed-framing knot family");
    gtorus->add_option("--rs", gen_rs, "Rotation numbers (same parity)")
        ->required()
        ->delimiter(',');
    gtorus->add_option("--k", gen_k, "Total b2 per member (>= 1)");

    // Global options (--format, --explain) may trail a subcommand.
    for (CLI::App* sub : {inv, cls, cmp, det, enu, acr, gen, gxp, gy, gznp, gtorus})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) return cmd_invariants(file_a, format, explain);
        if (*cls) return cmd_classify(file_a, depth, max_states, format);
        if (*cmp)
            return cmd_compare(file_a, file_b, oracle_path, q_path, coeff_bound, depth,
                               max_states, format, explain);
        if (*det) return cmd_detect(file_a, route, depth, max_states, format, explain);
        if (*enu) return cmd_enumerate(file_a, oracle_path, filter_extra, format);
        if (*acr) return cmd_acreduce(file_a, depth, max_states, format);
        if (*gen) {
            if (*gxp) {
                emit(handlebody_to_json(build_xp(gen_p)), format);
            } else if (*gy) {
                emit(handlebody_to_json(build_y(gen_k)), format);
            } else if (*gznp) {
                emit(handlebody_to_json(build_znp(gen_n, gen_p)), format);
            } else if (*gtorus) {
                std::vector<SteinHandlebody> family = build_torus_family(gen_rs, gen_k);
                std::vector<FamilyMember> members;
                for (std::size_t i = 0; i < family.size(); ++i)
                    members.push_back({"torus-r" + std::to_string(gen_rs[i]), family[i]});
                emit(family_to_json(members), format);
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
