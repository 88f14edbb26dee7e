#include "clorb/strings.hpp"

#include <algorithm>

#include "clorb/fixtures.hpp"

namespace clorb {

LFRep string_module(AlgebraPtr a, const StringWord& w) {
    const Algebra& A = *a;
    std::size_t m = w.letters.size();
    if (m == 0 && !w.band) {
        if (w.trivial_vertex < 0) return LFRep::zero(a);
        return simple_module(a, w.trivial_vertex);
    }
    if (w.band && w.lambda == 0) throw InvalidWord("band scalar must be nonzero");
    // positions 0..m; for a band, position m is identified with position 0.
    std::vector<long> vertex(m + 1, -1);
    auto set_vertex = [&](std::size_t pos, long v, std::size_t letter_pos) {
        if (vertex[pos] == -1)
            vertex[pos] = v;
        else if (vertex[pos] != v)
            throw InvalidWord("letters disagree at position " + std::to_string(letter_pos));
    };
    for (std::size_t t = 0; t < m; ++t) {
        const auto& info = A.arrow(w.letters[t].arrow);
        if (w.letters[t].direct) {
            set_vertex(t, info.source, t);
            set_vertex(t + 1, info.target, t);
        } else {
            set_vertex(t, info.target, t);
            set_vertex(t + 1, info.source, t);
        }
    }
    if (w.band) {
        if (vertex[0] != vertex[m]) throw InvalidWord("band endpoints disagree");
        if (m == 0) throw InvalidWord("empty band");
        // not a proper power
        for (std::size_t p = 1; p < m; ++p) {
            if (m % p != 0) continue;
            bool repeats = true;
            for (std::size_t t = 0; t < m && repeats; ++t) {
                const auto& x = w.letters[t];
                const auto& y = w.letters[(t + p) % m];
                if (x.arrow != y.arrow || x.direct != y.direct) repeats = false;
            }
            if (repeats) throw InvalidWord("band word is a proper power");
        }
    }
    // reducedness and relations for consecutive letters (cyclically for bands)
    std::size_t pairs = w.band ? m : (m ? m - 1 : 0);
    for (std::size_t t = 0; t < pairs; ++t) {
        const auto& x = w.letters[t];
        const auto& y = w.letters[(t + 1) % m];
        if (x.arrow == y.arrow && x.direct != y.direct)
            throw InvalidWord("letter followed by its inverse at " + std::to_string(t));
        if (x.direct && y.direct && A.forbidden_pair(x.arrow, y.arrow))
            throw InvalidWord("forbidden pair at " + std::to_string(t));
        if (!x.direct && !y.direct && A.forbidden_pair(y.arrow, x.arrow))
            throw InvalidWord("forbidden pair at " + std::to_string(t));
    }
    std::size_t npos = w.band ? m : m + 1;
    LFRep rep = LFRep::zero(a);
    std::vector<std::vector<std::size_t>> at_vertex(A.nvertices());
    std::vector<std::size_t> index_at(npos);
    for (std::size_t pos = 0; pos < npos; ++pos) {
        std::size_t vi = A.vertex_index(vertex[pos]);
        index_at[pos] = at_vertex[vi].size();
        at_vertex[vi].push_back(pos);
    }
    for (std::size_t i = 0; i < A.nvertices(); ++i) {
        rep.dims[i] = at_vertex[i].size();
        rep.eps[i] = QMat(rep.dims[i], rep.dims[i]);
    }
    for (const auto& ar : A.all_arrows())
        if (!ar.loop)
            rep.arrow_map[ar.label] = QMat(rep.dims[A.vertex_index(ar.target)],
                                           rep.dims[A.vertex_index(ar.source)]);
    for (std::size_t t = 0; t < m; ++t) {
        const auto& info = A.arrow(w.letters[t].arrow);
        mpq_class scale = 1;
        std::size_t from = w.letters[t].direct ? t : t + 1;
        std::size_t to = w.letters[t].direct ? t + 1 : t;
        if (w.band) {
            // the closing letter crosses the wrap point and carries lambda
            if (from == m) {
                from = 0;
                scale = w.lambda;
            }
            if (to == m) {
                to = 0;
                scale = w.lambda;
            }
        }
        std::size_t fvi = A.vertex_index(info.source), tvi = A.vertex_index(info.target);
        QMat& mat = info.loop ? rep.eps[fvi] : rep.arrow_map[info.label];
        (void)tvi;
        mat.at(index_at[to], index_at[from]) += scale;
    }
    auto report = validate_rep(rep);
    if (!report.empty()) throw InvalidWord("word induces no module: " + report.front());
    return rep;
}

namespace {

struct Entry {
    long row, col;
    mpq_class c0, c1;  // value c0 + c1 * lambda
};

struct CaseModule {
    std::map<long, long> dims;                       // vertex id -> dimension
    std::map<long, std::vector<Entry>> eps;          // vertex id -> entries
    std::map<std::string, std::vector<Entry>> maps;  // arrow label -> entries
    std::map<long, std::array<long, 2>> decoration;  // vertex id -> (free, excess)
};

struct CaseSpec {
    std::string id;
    int table;      // 1, 2 or 3
    bool from_flipped;  // the input lives over the flipped fixture
    CaseModule top;
    CaseModule bottom;
};

DecoratedRep build_case_module(AlgebraPtr a, const CaseModule& cm, const mpq_class& lambda) {
    LFRep m = LFRep::zero(a);
    for (const auto& [vid, dim] : cm.dims) {
        std::size_t i = a->vertex_index(vid);
        m.dims[i] = static_cast<std::size_t>(dim);
        m.eps[i] = QMat(m.dims[i], m.dims[i]);
    }
    for (const auto& [vid, entries] : cm.eps) {
        std::size_t i = a->vertex_index(vid);
        for (const auto& e : entries)
            m.eps[i].at(static_cast<std::size_t>(e.row), static_cast<std::size_t>(e.col)) =
                e.c0 + e.c1 * lambda;
    }
    for (const auto& ar : a->all_arrows()) {
        if (ar.loop) continue;
        std::size_t s = a->vertex_index(ar.source), t = a->vertex_index(ar.target);
        QMat mat(m.dims[t], m.dims[s]);
        auto it = cm.maps.find(ar.label);
        if (it != cm.maps.end())
            for (const auto& e : it->second)
                mat.at(static_cast<std::size_t>(e.row), static_cast<std::size_t>(e.col)) =
                    e.c0 + e.c1 * lambda;
        m.arrow_map[ar.label] = std::move(mat);
    }
    require_valid(m);
    DecoratedRep d = DecoratedRep::plain(std::move(m));
    for (const auto& [vid, dec] : cm.decoration) d.decoration[a->vertex_index(vid)] = dec;
    return d;
}

/// All 18 cases. Table 1 runs on the octagon at the diagonal k = 1 with
/// i = 2, j = 3, p = 4, q = 5; tables 2 and 3 run on the one-orbifold disk
/// with four marked points at the pending arc k = 3 with i = 1, j = 2.
std::vector<CaseSpec> case_specs() {
    std::vector<CaseSpec> cs;
    auto C = [](const mpq_class& v) { return v; };
    (void)C;

    // ----- Table 1 (ordinary k inside a quadrilateral of arcs) -----
    {
        CaseSpec s;
        s.id = "0.a";
        s.table = 1;
        s.from_flipped = false;
        s.top.dims = {{1, 1}};
        s.bottom.decoration[1] = {1, 0};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "0.b";
        s.table = 1;
        s.from_flipped = true;
        s.top.decoration[1] = {1, 0};
        s.bottom.dims = {{1, 1}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "1.a";
        s.table = 1;
        s.from_flipped = false;
        s.top.dims = {{1, 1}, {2, 1}, {4, 1}};
        s.top.maps["a1_2"] = {{0, 0, 1, 0}};
        s.top.maps["a1_4"] = {{0, 0, 0, 1}};
        s.bottom.dims = {{1, 1}, {2, 1}, {4, 1}};
        s.bottom.maps["a2_1"] = {{0, 0, 0, -1}};
        s.bottom.maps["a4_1"] = {{0, 0, 1, 0}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "1.b";
        s.table = 1;
        s.from_flipped = true;
        s.top.dims = {{1, 1}, {2, 1}, {4, 1}};
        s.top.maps["a2_1"] = {{0, 0, 0, 1}};
        s.top.maps["a4_1"] = {{0, 0, 1, 0}};
        s.bottom.dims = {{1, 1}, {2, 1}, {4, 1}};
        s.bottom.maps["a1_4"] = {{0, 0, 0, -1}};
        s.bottom.maps["a1_2"] = {{0, 0, 1, 0}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "2.a";
        s.table = 1;
        s.from_flipped = false;
        s.top.dims = {{5, 1}, {1, 1}, {2, 1}};
        s.top.maps["a5_1"] = {{0, 0, 0, 1}};
        s.top.maps["a1_2"] = {{0, 0, 1, 0}};
        s.bottom.dims = {{5, 1}, {2, 1}};
        s.bottom.maps["a5_2"] = {{0, 0, 0, 1}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "2.b";
        s.table = 1;
        s.from_flipped = true;
        s.top.dims = {{5, 1}, {2, 1}};
        s.top.maps["a5_2"] = {{0, 0, 0, 1}};
        s.bottom.dims = {{5, 1}, {1, 1}, {2, 1}};
        s.bottom.maps["a5_1"] = {{0, 0, 0, 1}};
        s.bottom.maps["a1_2"] = {{0, 0, 1, 0}};
        cs.push_back(s);
    }

    // ----- Table 2 (pending k, eps convention [[0,0],[1,0]]) -----
    {
        CaseSpec s;
        s.id = "3.a";
        s.table = 2;
        s.from_flipped = false;
        s.top.dims = {{1, 1}, {2, 1}};
        s.top.maps["a1_2"] = {{0, 0, 0, 1}};
        s.bottom.dims = {{3, 2}, {1, 1}, {2, 1}};
        s.bottom.eps[3] = {{1, 0, 1, 0}};
        s.bottom.maps["a3_2"] = {{0, 1, 1, 0}};
        s.bottom.maps["a1_3"] = {{0, 0, 0, 1}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "3.b";
        s.table = 2;
        s.from_flipped = true;
        s.top.dims = {{3, 2}, {1, 1}, {2, 1}};
        s.top.eps[3] = {{1, 0, 1, 0}};
        s.top.maps["a3_2"] = {{0, 1, 1, 0}};
        s.top.maps["a1_3"] = {{0, 0, 0, 1}};
        s.bottom.dims = {{1, 1}, {2, 1}};
        s.bottom.maps["a1_2"] = {{0, 0, 0, 1}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "4.a";
        s.table = 2;
        s.from_flipped = false;
        s.top.dims = {{2, 2}, {3, 2}};
        s.top.eps[3] = {{1, 0, 1, 0}};
        s.top.maps["a2_3"] = {{0, 0, 1, 0}, {1, 1, 0, 1}};
        s.bottom.dims = {{2, 2}, {3, 2}};
        s.bottom.eps[3] = {{1, 0, 1, 0}};
        s.bottom.maps["a3_2"] = {{0, 0, 0, -1}, {1, 1, 1, 0}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "4.b";
        s.table = 2;
        s.from_flipped = true;
        s.top.dims = {{2, 2}, {3, 2}};
        s.top.eps[3] = {{1, 0, 1, 0}};
        s.top.maps["a3_2"] = {{0, 0, 0, 1}, {1, 1, 1, 0}};
        s.bottom.dims = {{2, 2}, {3, 2}};
        s.bottom.eps[3] = {{1, 0, 1, 0}};
        s.bottom.maps["a2_3"] = {{0, 0, 1, 0}, {1, 1, 0, -1}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "5.a";
        s.table = 2;
        s.from_flipped = false;
        s.top.dims = {{3, 2}};
        s.top.eps[3] = {{1, 0, 1, 0}};
        s.bottom.decoration[3] = {1, 0};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "5.b";
        s.table = 2;
        s.from_flipped = true;
        s.top.decoration[3] = {1, 0};
        s.bottom.dims = {{3, 2}};
        s.bottom.eps[3] = {{1, 0, 1, 0}};
        cs.push_back(s);
    }

    // ----- Table 3 (pending k, eps convention [[0,1],[0,0]]) -----
    {
        CaseSpec s;
        s.id = "6.a";
        s.table = 3;
        s.from_flipped = false;
        s.top.dims = {{2, 2}, {3, 2}};
        s.top.eps[3] = {{0, 1, 1, 0}};
        s.top.maps["a2_3"] = {{0, 0, 1, 0}, {1, 1, 0, 1}};
        s.bottom.dims = {{2, 2}, {3, 2}};
        s.bottom.eps[3] = {{0, 1, 1, 0}};
        s.bottom.maps["a3_2"] = {{0, 0, 0, -1}, {1, 1, 1, 0}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "6.b";
        s.table = 3;
        s.from_flipped = true;
        s.top.dims = {{2, 2}, {3, 2}};
        s.top.eps[3] = {{0, 1, 1, 0}};
        s.top.maps["a3_2"] = {{0, 0, 0, 1}, {1, 1, 1, 0}};
        s.bottom.dims = {{2, 2}, {3, 2}};
        s.bottom.eps[3] = {{0, 1, 1, 0}};
        s.bottom.maps["a2_3"] = {{0, 0, 1, 0}, {1, 1, 0, -1}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "7.a";
        s.table = 3;
        s.from_flipped = false;
        s.top.dims = {{2, 1}, {3, 1}};
        s.top.maps["a2_3"] = {{0, 0, 1, 0}};
        s.bottom.dims = {{2, 1}, {3, 1}};
        s.bottom.maps["a3_2"] = {{0, 0, 1, 0}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "7.b";
        s.table = 3;
        s.from_flipped = true;
        s.top.dims = {{2, 1}, {3, 1}};
        s.top.maps["a3_2"] = {{0, 0, 1, 0}};
        s.bottom.dims = {{2, 1}, {3, 1}};
        s.bottom.maps["a2_3"] = {{0, 0, 1, 0}};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "8.a";
        s.table = 3;
        s.from_flipped = false;
        s.top.dims = {{3, 1}};
        s.bottom.decoration[3] = {0, 1};
        cs.push_back(s);
    }
    {
        CaseSpec s;
        s.id = "8.b";
        s.table = 3;
        s.from_flipped = true;
        s.top.decoration[3] = {0, 1};
        s.bottom.dims = {{3, 1}};
        cs.push_back(s);
    }
    return cs;
}

}  // namespace

std::vector<std::string> all_case_ids() {
    std::vector<std::string> ids;
    for (const auto& s : case_specs()) ids.push_back(s.id);
    return ids;
}

CaseReport replay_case_table(const std::string& case_id, const mpq_class& lambda,
                             unsigned long seed) {
    const auto specs = case_specs();
    const CaseSpec* spec = nullptr;
    for (const auto& s : specs)
        if (s.id == case_id) spec = &s;
    if (!spec) throw CaseMismatch("unknown case id " + case_id);

    Triangulation base = (spec->table == 1) ? fixtures::octagon()
                                            : fixtures::disk_one_orbifold(4);
    long k = (spec->table == 1) ? 1 : 3;
    Triangulation from = spec->from_flipped ? flip(base, k) : base;
    Triangulation to = flip(from, k);
    AlgebraPtr a_from = build_algebra(from);
    AlgebraPtr a_to = build_algebra(to);

    DecoratedRep top = build_case_module(a_from, spec->top, lambda);
    DecoratedRep expected = build_case_module(a_to, spec->bottom, lambda);
    auto mut = mutate_decorated(from, top, k);

    CaseReport rep;
    rep.case_id = case_id;
    if (mut.rep.decoration != expected.decoration) {
        rep.passed = false;
        rep.detail = "decorations differ";
        return rep;
    }
    IsoResult iso = is_isomorphic(mut.rep.module, expected.module, seed);
    rep.passed = iso.isomorphic;
    if (!rep.passed) {
        std::string got, want;
        for (auto d : mut.rep.module.dims) got += std::to_string(d) + " ";
        for (auto d : expected.module.dims) want += std::to_string(d) + " ";
        rep.detail = "modules not isomorphic: got dims [" + got + "], expected [" + want + "]";
    }
    return rep;
}

}  // namespace clorb
