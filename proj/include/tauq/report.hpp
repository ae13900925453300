#pragma once

#include "tauq/bijection.hpp"

#include <json.hpp>

#include <memory>

// One-stop analysis of a parsed algebra plus its deterministic JSON report.
// The report contains no wall-clock data: identical inputs produce
// byte-identical output.

namespace tauq {

struct Analysis {
    std::shared_ptr<MonomialAlgebra> A;
    CatalogOptions opts;
    Catalog C;
    TauRigidCatalog R;
    std::vector<TauTiltingModule> tilts;
    Theorem5Result thm5;
    GlobalPermResult perms;
    std::vector<std::pair<int, int>> air_violations;
};

Analysis analyze(MonomialAlgebra alg, const CatalogOptions& opts = {});

nlohmann::ordered_json build_report(const Analysis& an);

// AR quiver as DOT (nodes keyed by string word, labeled by Loewy label).
std::string ar_quiver_dot(const Catalog& C, const std::vector<std::vector<int>>& irr);

} // namespace tauq
