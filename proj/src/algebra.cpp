#include "tauq/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace tauq {

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (vertices[i] == name) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

int MonomialAlgebra::path_source(const Path& p) const {
    return p.arrows.empty() ? p.at : quiver.arrows[p.arrows.front()].src;
}

int MonomialAlgebra::path_target(const Path& p) const {
    return p.arrows.empty() ? p.at : quiver.arrows[p.arrows.back()].tgt;
}

bool MonomialAlgebra::hits_relation(const std::vector<int>& arrows) const {
    for (const auto& rel : relations) {
        if (rel.size() > arrows.size()) continue;
        for (size_t i = 0; i + rel.size() <= arrows.size(); ++i)
            if (std::equal(rel.begin(), rel.end(), arrows.begin() + i)) return true;
    }
    return false;
}

int MonomialAlgebra::basis_index(const std::vector<int>& arrows, int src_if_trivial) const {
    if (arrows.empty()) return src_if_trivial;
    auto it = nontrivial_index.find(arrows);
    return it == nontrivial_index.end() ? -1 : it->second;
}

void finalize_algebra(MonomialAlgebra& alg, int max_path_length) {
    alg.basis.clear();
    alg.nontrivial_index.clear();
    const Quiver& q = alg.quiver;
    for (int v = 0; v < q.n(); ++v) alg.basis.push_back(Path{v, {}});

    // breadth-first by length; composability is checked on the last arrow
    std::vector<std::vector<int>> frontier;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (!alg.hits_relation({static_cast<int>(a)})) frontier.push_back({static_cast<int>(a)});
    int len = 1;
    while (!frontier.empty()) {
        if (len > max_path_length)
            throw NotAdmissibleError("path length cap " + std::to_string(max_path_length) +
                                     " exceeded: relation ideal is not admissible at this cap");
        std::sort(frontier.begin(), frontier.end());
        for (const auto& p : frontier) {
            alg.nontrivial_index[p] = static_cast<int>(alg.basis.size());
            alg.basis.push_back(Path{q.arrows[p.front()].src, p});
        }
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            int end = q.arrows[p.back()].tgt;
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != end) continue;
                std::vector<int> ext = p;
                ext.push_back(static_cast<int>(a));
                if (!alg.hits_relation(ext)) next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
        ++len;
    }
}

namespace {

struct Token {
    std::string text;
    int line, col;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks;
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
            if (raw[i] == '#') break;
            size_t j = i;
            if (raw[i] == '=') {
                ++j;
            } else {
                while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) &&
                       raw[j] != '#' && raw[j] != '=')
                    ++j;
            }
            toks.push_back(Token{raw.substr(i, j - i), lineno, static_cast<int>(i + 1)});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

long parse_long(const Token& t) {
    try {
        size_t pos = 0;
        long v = std::stol(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + t.text + "'", t.line, t.col);
    }
}

} // namespace

MonomialAlgebra parse_algebra(const std::string& text, const ParseOptions& opt) {
    MonomialAlgebra alg;
    auto lines = tokenize_lines(text);

    // relations are resolved after arrows and params are known
    std::vector<std::vector<Token>> pending_rels;

    for (const auto& toks : lines) {
        const Token& head = toks[0];
        auto need = [&](size_t k, const char* what) {
            if (toks.size() < k)
                throw ParseError(std::string("expected ") + what, head.line, head.col);
        };
        if (head.text == "algebra") {
            need(2, "algebra name");
            alg.name = toks[1].text;
        } else if (head.text == "vertices") {
            need(2, "at least one vertex");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (alg.quiver.vertex_index(toks[i].text) >= 0)
                    throw ParseError("duplicate vertex '" + toks[i].text + "'", toks[i].line, toks[i].col);
                alg.quiver.vertices.push_back(toks[i].text);
            }
        } else if (head.text == "arrow") {
            need(4, "arrow <name> <src> <tgt>");
            if (alg.quiver.arrow_index(toks[1].text) >= 0)
                throw ParseError("duplicate arrow '" + toks[1].text + "'", toks[1].line, toks[1].col);
            int s = alg.quiver.vertex_index(toks[2].text);
            if (s < 0) throw ParseError("unknown vertex '" + toks[2].text + "'", toks[2].line, toks[2].col);
            int t = alg.quiver.vertex_index(toks[3].text);
            if (t < 0) throw ParseError("unknown vertex '" + toks[3].text + "'", toks[3].line, toks[3].col);
            alg.quiver.arrows.push_back(Arrow{toks[1].text, s, t});
        } else if (head.text == "rel") {
            need(2, "relation arrows");
            pending_rels.push_back(toks);
        } else if (head.text == "param") {
            need(4, "param <name> = <int>");
            if (toks[2].text != "=")
                throw ParseError("expected '=' in param declaration", toks[2].line, toks[2].col);
            long v = parse_long(toks[3]);
            // file value is a default; command-line overrides win
            if (!alg.params.count(toks[1].text)) alg.params[toks[1].text] = v;
        } else {
            throw ParseError("unknown directive '" + head.text + "'", head.line, head.col);
        }
    }

    for (const auto& [k, v] : opt.param_overrides) alg.params[k] = v;

    for (const auto& toks : pending_rels) {
        std::vector<int> rel;
        for (size_t i = 1; i < toks.size(); ++i) {
            const Token& t = toks[i];
            std::string name = t.text;
            long exp = 1;
            auto caret = name.find('^');
            if (caret != std::string::npos) {
                std::string e = name.substr(caret + 1);
                name = name.substr(0, caret);
                if (e.empty()) throw ParseError("empty exponent", t.line, t.col);
                if (std::isdigit(static_cast<unsigned char>(e[0])) || e[0] == '-') {
                    try { exp = std::stol(e); } catch (const std::exception&) {
                        throw ParseError("bad exponent '" + e + "'", t.line, t.col);
                    }
                } else {
                    auto it = alg.params.find(e);
                    if (it == alg.params.end())
                        throw ParseError("unknown parameter '" + e + "'", t.line, t.col);
                    exp = it->second;
                }
                if (exp < 1) throw ParseError("exponent must be >= 1", t.line, t.col);
            }
            int ai = alg.quiver.arrow_index(name);
            if (ai < 0) throw ParseError("unknown arrow '" + name + "'", t.line, t.col);
            for (long k = 0; k < exp; ++k) rel.push_back(ai);
        }
        if (rel.size() < 2)
            throw ParseError("relation must have length >= 2", toks[0].line, toks[0].col);
        for (size_t i = 0; i + 1 < rel.size(); ++i)
            if (alg.quiver.arrows[rel[i]].tgt != alg.quiver.arrows[rel[i + 1]].src)
                throw ParseError("relation path is not composable", toks[0].line, toks[0].col);
        alg.relations.push_back(std::move(rel));
    }

    if (alg.quiver.vertices.empty())
        throw ParseError("algebra has no vertices", 1, 1);
    if (alg.name.empty()) alg.name = "unnamed";

    std::sort(alg.relations.begin(), alg.relations.end());
    alg.relations.erase(std::unique(alg.relations.begin(), alg.relations.end()), alg.relations.end());

    finalize_algebra(alg, opt.max_path_length);
    return alg;
}

MonomialAlgebra parse_algebra_file(const std::string& path, const ParseOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str(), opt);
}

MonomialAlgebra opposite(const MonomialAlgebra& alg) {
    MonomialAlgebra op;
    op.name = alg.name + "_op";
    op.quiver.vertices = alg.quiver.vertices;
    for (const Arrow& a : alg.quiver.arrows)
        op.quiver.arrows.push_back(Arrow{a.name, a.tgt, a.src});
    for (const auto& rel : alg.relations) {
        std::vector<int> rev(rel.rbegin(), rel.rend());
        op.relations.push_back(std::move(rev));
    }
    op.params = alg.params;
    std::sort(op.relations.begin(), op.relations.end());
    finalize_algebra(op);
    return op;
}

bool is_special_biserial(const MonomialAlgebra& alg) {
    const Quiver& q = alg.quiver;
    std::vector<int> in(q.n(), 0), out(q.n(), 0);
    for (const Arrow& a : q.arrows) { ++out[a.src]; ++in[a.tgt]; }
    for (int v = 0; v < q.n(); ++v)
        if (in[v] > 2 || out[v] > 2) return false;
    int m = static_cast<int>(q.arrows.size());
    for (int b = 0; b < m; ++b) {
        int succ = 0, pred = 0;
        for (int c = 0; c < m; ++c) {
            if (q.arrows[b].tgt == q.arrows[c].src && !alg.hits_relation({b, c})) ++succ;
            if (q.arrows[c].tgt == q.arrows[b].src && !alg.hits_relation({c, b})) ++pred;
        }
        if (succ > 1 || pred > 1) return false;
    }
    return true;
}

namespace {

bool try_arrow_assignment(const MonomialAlgebra& a, const MonomialAlgebra& b,
                          const std::vector<int>& vperm) {
    int m = static_cast<int>(a.quiver.arrows.size());
    // candidates per arrow under the vertex permutation
    std::vector<std::vector<int>> cand(m);
    for (int i = 0; i < m; ++i) {
        const Arrow& ar = a.quiver.arrows[i];
        for (int j = 0; j < m; ++j) {
            const Arrow& br = b.quiver.arrows[j];
            if (br.src == vperm[ar.src] && br.tgt == vperm[ar.tgt]) cand[i].push_back(j);
        }
        if (cand[i].empty()) return false;
    }
    std::vector<int> assign(m, -1);
    std::vector<bool> used(m, false);
    std::set<std::vector<int>> brels(b.relations.begin(), b.relations.end());

    auto rels_match = [&]() {
        std::set<std::vector<int>> mapped;
        for (const auto& rel : a.relations) {
            std::vector<int> img;
            for (int x : rel) img.push_back(assign[x]);
            mapped.insert(std::move(img));
        }
        return mapped == brels;
    };

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == m) return rels_match();
        for (int j : cand[i]) {
            if (used[j]) continue;
            used[j] = true; assign[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false; assign[i] = -1;
        }
        return false;
    };
    return rec(0);
}

} // namespace

bool presentations_isomorphic(const MonomialAlgebra& a, const MonomialAlgebra& b) {
    if (a.n() != b.n()) return false;
    if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
    if (a.relations.size() != b.relations.size()) return false;
    std::vector<int> vperm(a.n());
    for (int i = 0; i < a.n(); ++i) vperm[i] = i;
    std::sort(vperm.begin(), vperm.end());
    do {
        if (try_arrow_assignment(a, b, vperm)) return true;
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return false;
}

} // namespace tauq
