#include "tauq/report.hpp"

namespace tauq {

Analysis analyze(MonomialAlgebra alg, const CatalogOptions& opts) {
    Analysis an;
    an.A = std::make_shared<MonomialAlgebra>(std::move(alg));
    an.opts = opts;
    an.C = build_catalog(*an.A, opts);
    an.R = tau_rigid_catalog(an.C);
    auto sets = tau_tilting_sets(an.C, an.R);
    an.tilts = tau_tilting_modules(an.C, an.R);
    an.thm5 = verify_theorem5(an.C, an.tilts);
    an.perms = global_permutation(an.R, sets);
    an.air_violations = air_maximality_violations(an.R, sets);
    return an;
}

using ojson = nlohmann::ordered_json;

nlohmann::ordered_json build_report(const Analysis& an) {
    const MonomialAlgebra& A = *an.A;
    const Catalog& C = an.C;

    ojson rep;
    rep["schema"] = 1;
    rep["field"] = C.prime;

    ojson alg;
    alg["name"] = A.name;
    alg["vertices"] = A.quiver.vertices;
    ojson arrows = ojson::array();
    for (const Arrow& a : A.quiver.arrows) {
        ojson ar;
        ar["name"] = a.name;
        ar["src"] = A.quiver.vertices[a.src];
        ar["tgt"] = A.quiver.vertices[a.tgt];
        arrows.push_back(ar);
    }
    alg["arrows"] = arrows;
    ojson rels = ojson::array();
    for (const auto& rel : A.relations) {
        ojson r = ojson::array();
        for (int ai : rel) r.push_back(A.quiver.arrows[ai].name);
        rels.push_back(r);
    }
    alg["relations"] = rels;
    if (!A.params.empty()) {
        ojson ps;
        for (const auto& [k, v] : A.params) ps[k] = v;
        alg["params"] = ps;
    }
    alg["dim"] = A.dim();
    alg["special_biserial"] = is_special_biserial(A);
    rep["algebra"] = alg;

    ojson cat = ojson::array();
    for (int i = 0; i < C.size(); ++i) {
        ojson m;
        m["index"] = i;
        m["word"] = word_to_string(A.quiver, C.words[i]);
        m["label"] = C.labels[i];
        m["dim_vector"] = C.dimvec[i];
        m["dim"] = C.dim[i];
        m["projective"] = static_cast<bool>(C.projective[i]);
        m["injective"] = static_cast<bool>(C.injective[i]);
        m["simple"] = static_cast<bool>(C.simple[i]);
        m["sincere"] = static_cast<bool>(C.sincere[i]);
        m["tau"] = C.tau_of[i];
        m["pd"] = pd_to_string(C.pd[i]);
        m["tau_rigid"] = C.tau_rigid(i);
        cat.push_back(m);
    }
    rep["catalog"] = cat;

    rep["tau_rigid"] = an.R.members;

    ojson tilts = ojson::array();
    for (const TauTiltingModule& t : an.tilts) {
        ojson tj;
        tj["summands"] = t.summands;
        ojson labels = ojson::array();
        for (int s : t.summands) labels.push_back(C.labels[s]);
        tj["labels"] = labels;
        tj["dim"] = t.dim;
        tj["faithful"] = t.faithful;
        tj["sincere"] = t.sincere;
        tj["tilting"] = t.tilting;
        tj["pd"] = pd_to_string(t.pd);
        tilts.push_back(tj);
    }
    rep["tau_tilting"] = tilts;

    ojson t5;
    t5["pair_count"] = static_cast<int>(an.thm5.pairs.size());
    t5["faithful_pairs_have_ext_matching"] = an.thm5.faithful_pairs_have_ext;
    t5["all_pairs_have_tau_matching"] = an.thm5.all_pairs_have_tau;
    if (an.thm5.pairs.size() <= 200) {
        ojson pairs = ojson::array();
        for (const PairCheck& pc : an.thm5.pairs) {
            ojson pj;
            pj["i"] = pc.ti;
            pj["j"] = pc.tj;
            pj["ext_strict"] = pc.ext_strict;
            pj["ext_relaxed"] = pc.ext_relaxed;
            pj["tau_strict"] = pc.tau_strict;
            pj["tau_relaxed"] = pc.tau_relaxed;
            pairs.push_back(pj);
        }
        t5["pairs"] = pairs;
    } else {
        ojson summary;
        int ext_ok = 0, tau_ok = 0;
        for (const PairCheck& pc : an.thm5.pairs) {
            if (pc.ext_strict) ++ext_ok;
            if (pc.tau_strict) ++tau_ok;
        }
        summary["ext_strict_ok"] = ext_ok;
        summary["tau_strict_ok"] = tau_ok;
        t5["summary"] = summary;
    }
    rep["theorem5"] = t5;

    ojson gp;
    if (an.perms.too_large) {
        gp["status"] = "skipped_catalog_cap";
    } else {
        gp["status"] = "ok";
        ojson ws = ojson::array();
        for (const auto& w : an.perms.witnesses) {
            // serialize as catalog indices aligned with the tau_rigid list
            ojson img = ojson::array();
            for (int pos : w) img.push_back(an.R.members[pos]);
            ws.push_back(img);
        }
        gp["witnesses"] = ws;
    }
    rep["global_permutations"] = gp;

    ojson air = ojson::array();
    for (auto [t, s] : an.air_violations) {
        ojson v;
        v["tilting"] = t;
        v["extra_summand"] = s;
        air.push_back(v);
    }
    rep["air_maximality_violations"] = air;

    return rep;
}

std::string ar_quiver_dot(const Catalog& C, const std::vector<std::vector<int>>& irr) {
    const Quiver& q = C.A->quiver;
    std::string out = "digraph ar_quiver {\n  rankdir=LR;\n";
    for (int i = 0; i < C.size(); ++i) {
        out += "  \"" + word_to_string(q, C.words[i]) + "\" [label=\"" + C.labels[i] + "\"];\n";
    }
    for (int i = 0; i < C.size(); ++i)
        for (int j = 0; j < C.size(); ++j) {
            if (irr[i][j] == 0) continue;
            out += "  \"" + word_to_string(q, C.words[i]) + "\" -> \"" +
                   word_to_string(q, C.words[j]) + "\"";
            if (irr[i][j] > 1) out += " [label=\"" + std::to_string(irr[i][j]) + "\"]";
            out += ";\n";
        }
    out += "}\n";
    return out;
}

} // namespace tauq
