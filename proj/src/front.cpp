#include "steinx/front.hpp"

#include <string>

#include "steinx/error.hpp"

namespace steinx {

std::vector<std::string> validate(const FrontDiagram& f) {
    std::vector<std::string> violations;
    if (f.up_cusps < 0) violations.push_back("up_cusps must be nonnegative");
    if (f.down_cusps < 0) violations.push_back("down_cusps must be nonnegative");
    for (std::size_t i = 0; i < f.crossings.size(); ++i)
        if (f.crossings[i] != 1 && f.crossings[i] != -1) {
            violations.push_back("crossing " + std::to_string(i) + " must be +1 or -1");
            break;
        }
    const long long total = f.up_cusps + f.down_cusps;
    if (total % 2 != 0)
        violations.push_back("total cusp count must be even");
    else if (total < 2)
        violations.push_back("a knot front needs at least 2 cusps");
    return violations;
}

long long writhe(const FrontDiagram& f) {
    long long w = 0;
    for (int s : f.crossings) w += s;
    return w;
}

static void require_even_cusps(const FrontDiagram& f) {
    if ((f.up_cusps + f.down_cusps) % 2 != 0)
        throw Error("front has an odd total cusp count");
}

long long thurston_bennequin(const FrontDiagram& f) {
    require_even_cusps(f);
    return writhe(f) - (f.up_cusps + f.down_cusps) / 2;
}

long long rotation_number(const FrontDiagram& f) {
    require_even_cusps(f);
    return (f.down_cusps - f.up_cusps) / 2;
}

void validate_knot_parity(long long tb, long long rot) {
    if ((tb + rot) % 2 == 0)
        throw Error("tb + rot must be odd for a Legendrian knot (got tb=" +
                    std::to_string(tb) + ", rot=" + std::to_string(rot) + ")");
}

} // namespace steinx
