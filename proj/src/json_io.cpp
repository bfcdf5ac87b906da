#include "steinx/json_io.hpp"

#include "steinx/error.hpp"

namespace steinx {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw Error(field + ": " + what);
}

const Json& expect_object(const Json& j, const std::string& field) {
    if (!j.is_object()) bad(field, "expected a JSON object");
    return j;
}

const Json& expect_array(const Json& j, const std::string& field) {
    if (!j.is_array()) bad(field, "expected a JSON array");
    return j;
}

long long expect_int64(const Json& j, const std::string& field) {
    if (j.is_number_integer() || j.is_number_unsigned()) return j.get<long long>();
    if (j.is_string()) {
        try {
            return to_int64(int_from_string(j.get<std::string>()));
        } catch (const Error& e) {
            bad(field, e.what());
        }
    }
    bad(field, "expected an integer");
}

const Json* find(const Json& j, const std::string& key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

const Json& require(const Json& j, const std::string& key, const std::string& field) {
    const Json* p = find(j, key);
    if (!p) bad(field, "missing required field \"" + key + "\"");
    return *p;
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

Json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer() || j.is_number_unsigned()) return int_from_i64(j.get<long long>());
    if (j.is_string()) {
        try {
            return int_from_string(j.get<std::string>());
        } catch (const Error&) {
            bad(field, "not a decimal integer: \"" + j.get<std::string>() + "\"");
        }
    }
    bad(field, "expected an integer (number or decimal string)");
}

Json matrix_to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntegerMatrix matrix_from_json(const Json& j, const std::string& field) {
    expect_array(j, field);
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        const std::string rf = field + "[" + std::to_string(i) + "]";
        expect_array(row, rf);
        std::vector<Int> r;
        for (std::size_t k = 0; k < row.size(); ++k)
            r.push_back(int_from_json(row[k], rf + "[" + std::to_string(k) + "]"));
        rows.push_back(std::move(r));
    }
    try {
        return IntegerMatrix::from_rows(rows);
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

Json front_to_json(const FrontDiagram& f) {
    Json j;
    j["crossings"] = f.crossings;
    j["up_cusps"] = f.up_cusps;
    j["down_cusps"] = f.down_cusps;
    return j;
}

FrontDiagram front_from_json(const Json& j, const std::string& field) {
    expect_object(j, field);
    FrontDiagram f;
    const Json& cr = require(j, "crossings", field);
    expect_array(cr, field + ".crossings");
    for (std::size_t i = 0; i < cr.size(); ++i)
        f.crossings.push_back(static_cast<int>(
            expect_int64(cr[i], field + ".crossings[" + std::to_string(i) + "]")));
    f.up_cusps = expect_int64(require(j, "up_cusps", field), field + ".up_cusps");
    f.down_cusps = expect_int64(require(j, "down_cusps", field), field + ".down_cusps");
    return f;
}

Json handlebody_to_json(const SteinHandlebody& x) {
    Json j;
    j["one_handles"] = x.one_handles;
    Json handles = Json::array();
    for (const TwoHandle& h : x.handles) {
        Json hj;
        hj["tb"] = h.tb;
        hj["rot"] = h.rot;
        hj["word"] = h.word;
        if (h.front) hj["front"] = front_to_json(*h.front);
        handles.push_back(std::move(hj));
    }
    j["handles"] = std::move(handles);
    j["linking"] = matrix_to_json(x.linking);
    if (!x.comment.empty()) j["comment"] = x.comment;
    return j;
}

SteinHandlebody handlebody_from_json(const Json& j, const std::string& field) {
    expect_object(j, field);
    SteinHandlebody x;
    x.one_handles = expect_int64(require(j, "one_handles", field), field + ".one_handles");
    const Json& handles = require(j, "handles", field);
    expect_array(handles, field + ".handles");
    for (std::size_t i = 0; i < handles.size(); ++i) {
        const std::string hf = field + ".handles[" + std::to_string(i) + "]";
        expect_object(handles[i], hf);
        TwoHandle h;
        h.tb = expect_int64(require(handles[i], "tb", hf), hf + ".tb");
        h.rot = expect_int64(require(handles[i], "rot", hf), hf + ".rot");
        if (const Json* w = find(handles[i], "word")) {
            expect_array(*w, hf + ".word");
            for (std::size_t k = 0; k < w->size(); ++k)
                h.word.push_back(expect_int64((*w)[k], hf + ".word[" + std::to_string(k) + "]"));
        }
        if (const Json* fr = find(handles[i], "front"))
            h.front = front_from_json(*fr, hf + ".front");
        x.handles.push_back(std::move(h));
    }
    if (const Json* l = find(j, "linking")) {
        x.linking = matrix_from_json(*l, field + ".linking");
    } else {
        // Diagonal derived from the framing rule tb - 1.
        x.linking = IntegerMatrix(x.handles.size(), x.handles.size());
        for (std::size_t i = 0; i < x.handles.size(); ++i)
            x.linking.at(i, i) = int_from_i64(x.handles[i].tb) - 1;
    }
    if (const Json* c = find(j, "comment")) {
        if (!c->is_string()) bad(field + ".comment", "expected a string");
        x.comment = c->get<std::string>();
    }
    return x;
}

Json presentation_to_json(const GroupPresentation& p) {
    Json j;
    j["generators"] = p.generators;
    j["relators"] = p.relators;
    return j;
}

GroupPresentation presentation_from_json(const Json& j, const std::string& field) {
    expect_object(j, field);
    GroupPresentation p;
    p.generators = expect_int64(require(j, "generators", field), field + ".generators");
    const Json& rel = require(j, "relators", field);
    expect_array(rel, field + ".relators");
    std::vector<std::vector<long long>> relators;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        const std::string rf = field + ".relators[" + std::to_string(i) + "]";
        expect_array(rel[i], rf);
        std::vector<long long> word;
        for (std::size_t k = 0; k < rel[i].size(); ++k)
            word.push_back(expect_int64(rel[i][k], rf + "[" + std::to_string(k) + "]"));
        relators.push_back(std::move(word));
    }
    try {
        return make_presentation(p.generators, std::move(relators));
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

Json cohomology_class_to_json(const CohomologyClass& c) {
    Json j;
    Json free = Json::array();
    for (const Int& v : c.free_coords) free.push_back(int_to_json(v));
    j["free_coords"] = std::move(free);
    Json tor = Json::array();
    for (const TorsionCoordinate& t : c.torsion_coords) {
        Json tj;
        tj["residue"] = int_to_json(t.residue);
        tj["order"] = int_to_json(t.order);
        tor.push_back(std::move(tj));
    }
    j["torsion"] = std::move(tor);
    return j;
}

Json contact_class_to_json(const ContactFiveClass& c) {
    Json j;
    j["n"] = c.n;
    j["r"] = c.r;
    j["diffeo_type"] = diffeo_type_name(c.diffeo_type);
    return j;
}

Json form_properties_to_json(const FormProperties& p) {
    Json j;
    j["even"] = p.even;
    j["unimodular"] = p.unimodular;
    j["definiteness"] = definiteness_name(p.definiteness);
    j["signature"] = {p.signature.positive, p.signature.negative, p.signature.zero};
    j["rank"] = p.rank;
    return j;
}

Json homology_to_json(const Homology& h) {
    Json j;
    j["b2"] = h.b2;
    j["h1_free_rank"] = h.h1_free_rank;
    Json tor = Json::array();
    for (const Int& t : h.torsion_orders) tor.push_back(int_to_json(t));
    j["torsion_orders"] = std::move(tor);
    return j;
}

Json oracle_to_json(const GenusOracle& o) {
    Json entries = Json::array();
    for (const auto& [cls, g] : o.entries) {
        Json e;
        Json c = Json::array();
        for (const Int& v : cls) c.push_back(int_to_json(v));
        e["class"] = std::move(c);
        e["genus_ub"] = g;
        entries.push_back(std::move(e));
    }
    Json j;
    j["entries"] = std::move(entries);
    return j;
}

GenusOracle oracle_from_json(const Json& j, const std::string& field) {
    expect_object(j, field);
    GenusOracle o;
    const Json& entries = require(j, "entries", field);
    expect_array(entries, field + ".entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string ef = field + ".entries[" + std::to_string(i) + "]";
        expect_object(entries[i], ef);
        const Json& cls = require(entries[i], "class", ef);
        expect_array(cls, ef + ".class");
        std::vector<Int> c;
        for (std::size_t k = 0; k < cls.size(); ++k)
            c.push_back(int_from_json(cls[k], ef + ".class[" + std::to_string(k) + "]"));
        const long long g = expect_int64(require(entries[i], "genus_ub", ef), ef + ".genus_ub");
        o.entries[c] = g;
    }
    std::vector<std::string> v = o.validate();
    if (!v.empty()) bad(field, v.front());
    return o;
}

Json q_genus_bound_to_json(const QGenusBound& b) {
    Json j;
    j["lower"] = int_to_json(b.lower);
    if (b.upper) j["upper"] = int_to_json(int_from_i64(*b.upper));
    if (b.witness_class) {
        Json w = Json::array();
        for (const Int& v : *b.witness_class) w.push_back(int_to_json(v));
        j["witness_class"] = std::move(w);
    }
    j["matrix"] = matrix_to_json(b.matrix);
    j["checks_run"] = b.checks_run;
    return j;
}

Json exotica_report_to_json(const ExoticaReport& r, bool explain) {
    Json j;
    Json members = Json::array();
    for (const ExoticaMember& m : r.members) {
        Json mj;
        mj["id"] = m.id;
        mj["divisibility"] = int_to_json(m.divisibility);
        if (m.contact_class) mj["contact_class"] = contact_class_to_json(*m.contact_class);
        if (m.q_genus_lower) mj["q_genus_lower"] = int_to_json(*m.q_genus_lower);
        members.push_back(std::move(mj));
    }
    j["members"] = std::move(members);
    j["verdict"] = verdict_name(r.verdict);
    j["witness"] = r.witness;
    j["notes"] = r.notes;
    if (explain) j["explanations"] = r.explanations;
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["upper_a"] = c.upper_a;
    j["lower_b"] = int_to_json(c.lower_b);
    j["matrix"] = matrix_to_json(c.matrix);
    j["explanation"] = c.explanation;
    return j;
}

Json ac_move_to_json(const AcMove& m) {
    Json j;
    j["move"] = move_name(m.kind);
    switch (m.kind) {
        case AcMove::Kind::Invert:
        case AcMove::Kind::Destabilize:
            j["relator"] = m.relator;
            break;
        case AcMove::Kind::Multiply:
            j["relator"] = m.relator;
            j["by"] = m.other;
            j["inverse"] = m.invert_other;
            break;
        case AcMove::Kind::Conjugate:
            j["relator"] = m.relator;
            j["generator"] = m.generator;
            break;
        case AcMove::Kind::Swap:
            j["relator"] = m.relator;
            j["other"] = m.other;
            break;
        case AcMove::Kind::Stabilize:
            break;
    }
    return j;
}

AcMove ac_move_from_json(const Json& j, const std::string& field) {
    expect_object(j, field);
    const Json& name = require(j, "move", field);
    if (!name.is_string()) bad(field + ".move", "expected a string");
    const std::string n = name.get<std::string>();
    AcMove m;
    auto rel = [&]() {
        return static_cast<std::size_t>(expect_int64(require(j, "relator", field), field + ".relator"));
    };
    if (n == "invert") {
        m.kind = AcMove::Kind::Invert;
        m.relator = rel();
    } else if (n == "multiply") {
        m.kind = AcMove::Kind::Multiply;
        m.relator = rel();
        m.other = static_cast<std::size_t>(expect_int64(require(j, "by", field), field + ".by"));
        if (const Json* inv = find(j, "inverse")) {
            if (!inv->is_boolean()) bad(field + ".inverse", "expected a boolean");
            m.invert_other = inv->get<bool>();
        }
    } else if (n == "conjugate") {
        m.kind = AcMove::Kind::Conjugate;
        m.relator = rel();
        m.generator = expect_int64(require(j, "generator", field), field + ".generator");
    } else if (n == "swap") {
        m.kind = AcMove::Kind::Swap;
        m.relator = rel();
        m.other = static_cast<std::size_t>(expect_int64(require(j, "other", field), field + ".other"));
    } else if (n == "stabilize") {
        m.kind = AcMove::Kind::Stabilize;
    } else if (n == "destabilize") {
        m.kind = AcMove::Kind::Destabilize;
        m.relator = rel();
    } else {
        bad(field + ".move", "unknown move \"" + n + "\"");
    }
    return m;
}

Json ac_result_to_json(const AcResult& r) {
    Json j;
    j["status"] = r.trivialized ? "trivialized" : "exhausted";
    j["presentation"] = presentation_to_json(r.presentation);
    Json trace = Json::array();
    for (const AcMove& m : r.trace) trace.push_back(ac_move_to_json(m));
    j["trace"] = std::move(trace);
    if (r.obstruction) j["obstruction"] = *r.obstruction;
    j["states_explored"] = r.states_explored;
    return j;
}

FamilyFile family_from_json(const Json& j) {
    FamilyFile f;
    const Json* members = nullptr;
    if (j.is_array()) {
        members = &j;
    } else if (j.is_object()) {
        members = &require(j, "members", "family");
        if (const Json* q = find(j, "q")) f.q = matrix_from_json(*q, "family.q");
    } else {
        throw Error("family: expected an object with \"members\" or a bare array");
    }
    expect_array(*members, "family.members");
    for (std::size_t i = 0; i < members->size(); ++i) {
        const Json& m = (*members)[i];
        const std::string mf = "family.members[" + std::to_string(i) + "]";
        FamilyMember fm;
        if (m.is_object() && find(m, "handlebody")) {
            if (const Json* id = find(m, "id")) {
                if (!id->is_string()) bad(mf + ".id", "expected a string");
                fm.id = id->get<std::string>();
            }
            fm.handlebody = handlebody_from_json(require(m, "handlebody", mf), mf + ".handlebody");
        } else {
            fm.handlebody = handlebody_from_json(m, mf);
        }
        if (fm.id.empty()) fm.id = "member-" + std::to_string(i);
        f.members.push_back(std::move(fm));
    }
    return f;
}

Json family_to_json(const std::vector<FamilyMember>& members,
                    const std::optional<IntegerMatrix>& q) {
    Json j;
    Json ms = Json::array();
    for (const FamilyMember& m : members) {
        Json mj;
        mj["id"] = m.id;
        mj["handlebody"] = handlebody_to_json(m.handlebody);
        ms.push_back(std::move(mj));
    }
    j["members"] = std::move(ms);
    if (q) j["q"] = matrix_to_json(*q);
    return j;
}

} // namespace steinx
