#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "steinx/acmoves.hpp"
#include "steinx/c1_enum.hpp"
#include "steinx/chern.hpp"
#include "steinx/contact5.hpp"
#include "steinx/exotica.hpp"
#include "steinx/genus.hpp"
#include "steinx/handlebody.hpp"

namespace steinx {

using Json = nlohmann::json;

// Wire conventions: arbitrary-precision integers (matrix entries, cohomology
// coordinates, divisibilities, genus bounds, torsion orders) serialize as
// decimal strings so consumers never truncate them; structurally small
// integers (tb, rot, counts, signatures, oracle genus bounds) stay JSON
// numbers. Readers accept numbers or strings for every integer field.
// nlohmann orders object keys, so dumps are byte-stable.

Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& field);

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j, const std::string& field);

Json front_to_json(const FrontDiagram& f);
FrontDiagram front_from_json(const Json& j, const std::string& field);

Json handlebody_to_json(const SteinHandlebody& x);
SteinHandlebody handlebody_from_json(const Json& j, const std::string& field = "handlebody");

Json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j, const std::string& field = "presentation");

Json cohomology_class_to_json(const CohomologyClass& c);
Json contact_class_to_json(const ContactFiveClass& c);
Json form_properties_to_json(const FormProperties& p);
Json homology_to_json(const Homology& h);

Json oracle_to_json(const GenusOracle& o);
GenusOracle oracle_from_json(const Json& j, const std::string& field = "oracle");

Json q_genus_bound_to_json(const QGenusBound& b);
Json exotica_report_to_json(const ExoticaReport& r, bool explain);
Json certificate_to_json(const Certificate& c);

Json ac_move_to_json(const AcMove& m);
AcMove ac_move_from_json(const Json& j, const std::string& field);
Json ac_result_to_json(const AcResult& r);

// Family files: {"members": [...], "q": [[...]]?} where each member is
// either a bare handlebody or {"id": ..., "handlebody": {...}}; a bare
// array of handlebodies is also accepted. Missing ids become member-<i>.
struct FamilyFile {
    std::vector<FamilyMember> members;
    std::optional<IntegerMatrix> q;
};
FamilyFile family_from_json(const Json& j);
Json family_to_json(const std::vector<FamilyMember>& members,
                    const std::optional<IntegerMatrix>& q = std::nullopt);

Json parse_json_text(const std::string& text); // Error with position on bad input

} // namespace steinx
