#pragma once

#include "tauq/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Shared test plumbing: fixture paths, label lookups, and a per-process cache
// of full analyses (the larger fixtures are too slow to rebuild per case).

namespace tt {

using namespace tauq;

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name + ".alg";
}

inline std::string testdata_path(const std::string& name) {
    return std::string(TESTDATA_DIR) + "/" + name + ".alg";
}

inline MonomialAlgebra load_fixture(const std::string& name,
                                    std::map<std::string, long> params = {}) {
    ParseOptions po;
    po.param_overrides = std::move(params);
    return parse_algebra_file(fixture_path(name), po);
}

inline const Analysis& cached_analysis(const std::string& name) {
    static std::map<std::string, Analysis> store;
    auto it = store.find(name);
    if (it == store.end()) it = store.emplace(name, analyze(load_fixture(name))).first;
    return it->second;
}

inline int label_index(const Catalog& C, const std::string& label) {
    int i = C.index_of_label(label);
    if (i < 0) throw std::runtime_error("no catalog module labeled " + label);
    return i;
}

// sorted catalog indices for a list of Loewy labels
inline std::vector<int> by_labels(const Catalog& C, const std::vector<std::string>& labels) {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(label_index(C, l));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::set<std::string> label_set(const Catalog& C, const std::vector<int>& idx) {
    std::set<std::string> s;
    for (int i : idx) s.insert(C.labels.at(i));
    return s;
}

inline std::set<std::set<std::string>> tilt_label_sets(const Catalog& C,
                                                       const std::vector<TauTiltingModule>& tilts) {
    std::set<std::set<std::string>> out;
    for (const auto& t : tilts) out.insert(label_set(C, t.summands));
    return out;
}

} // namespace tt
