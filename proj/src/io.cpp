#include "clorb/io.hpp"

namespace clorb {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rat_parse(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

Json to_json(const ExchangeMatrix& b) {
    Json j;
    j["B"] = b.b;
    j["D"] = b.d;
    return j;
}

ExchangeMatrix exchange_matrix_from_json(const Json& j) {
    ExchangeMatrix b;
    b.b = j.at("B").get<std::vector<std::vector<long>>>();
    if (j.contains("D")) {
        b.d = j.at("D").get<std::vector<long>>();
    } else {
        b.d.assign(b.b.size(), 1);
        // find a symmetrizer with entries in {1, 2} if one exists
        for (std::size_t i = 0; i < b.b.size(); ++i)
            for (std::size_t jx = 0; jx < b.b.size(); ++jx)
                if (b.b[i][jx] + b.b[jx][i] != 0 && b.b[i][jx] != 0)
                    b.d[i] = (b.b[i][jx] % 2 == 0 && b.b[jx][i] % 2 != 0) ? 2 : b.d[i];
    }
    if (!b.is_skew_symmetrizable()) throw Error("matrix is not skew-symmetrizable with D");
    return b;
}

Json to_json(const Seed& s) {
    Json j;
    j["n"] = s.n();
    j["B"] = s.matrix.b;
    j["D"] = s.matrix.d;
    j["mode"] = (s.mode == SeedMode::principal) ? "principal" : "coefficient-free";
    std::vector<std::string> cluster;
    for (const auto& x : s.cluster) cluster.push_back(x.str());
    j["cluster"] = cluster;
    j["coeffs"] = s.coeffs;
    return j;
}

Seed seed_from_json(const Json& j) {
    Seed s;
    s.matrix.b = j.at("B").get<std::vector<std::vector<long>>>();
    s.matrix.d = j.at("D").get<std::vector<long>>();
    s.mode = (j.at("mode").get<std::string>() == "principal") ? SeedMode::principal
                                                              : SeedMode::coefficient_free;
    auto vars = seed_variables(s.matrix.n(), s.mode);
    for (const auto& text : j.at("cluster").get<std::vector<std::string>>())
        s.cluster.push_back(LaurentPoly::parse(vars, text));
    s.coeffs = j.at("coeffs").get<std::vector<std::vector<int>>>();
    return s;
}

Json to_json(const Triangulation& t) {
    Json j;
    Json arcs = Json::array();
    for (const auto& a : t.arcs) arcs.push_back({{"id", a.id}, {"pending", a.pending}});
    j["arcs"] = arcs;
    j["boundary"] = t.boundary;
    Json tris = Json::array();
    for (const auto& tri : t.triangles) tris.push_back({tri[0], tri[1], tri[2]});
    j["triangles"] = tris;
    return j;
}

Triangulation triangulation_from_json(const Json& j) {
    Triangulation t;
    for (const auto& a : j.at("arcs"))
        t.arcs.push_back({a.at("id").get<long>(), a.at("pending").get<bool>()});
    t.boundary = j.at("boundary").get<std::vector<long>>();
    for (const auto& tri : j.at("triangles")) {
        if (tri.size() != 3) throw ParseError("triangle must have three sides");
        t.triangles.push_back({tri[0].get<long>(), tri[1].get<long>(), tri[2].get<long>()});
    }
    return t;
}

namespace {

Json mat_to_json(const QMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    QMat m(rows, cols);
    if (j.size() != rows) throw ParseError("matrix row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw ParseError("matrix column count mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = rat_parse(j[i][c].get<std::string>());
    }
    return m;
}

}  // namespace

Json to_json(const LFRep& m) {
    Json j;
    Json verts = Json::object();
    const Algebra& A = *m.algebra;
    for (std::size_t i = 0; i < A.nvertices(); ++i) {
        Json v;
        v["dim"] = m.dims[i];
        v["eps"] = mat_to_json(m.eps[i]);
        verts[std::to_string(A.vertex_id(i))] = v;
    }
    j["vertices"] = verts;
    Json arrows = Json::object();
    for (const auto& [label, mat] : m.arrow_map) arrows[label] = mat_to_json(mat);
    j["arrows"] = arrows;
    return j;
}

LFRep rep_from_json(const Json& j, AlgebraPtr algebra) {
    LFRep m = LFRep::zero(algebra);
    const Algebra& A = *algebra;
    for (const auto& [key, v] : j.at("vertices").items()) {
        std::size_t i = A.vertex_index(std::stol(key));
        m.dims[i] = v.at("dim").get<std::size_t>();
        m.eps[i] = mat_from_json(v.at("eps"), m.dims[i], m.dims[i]);
    }
    for (const auto& ar : A.all_arrows()) {
        if (ar.loop) continue;
        std::size_t s = A.vertex_index(ar.source), t = A.vertex_index(ar.target);
        if (j.at("arrows").contains(ar.label))
            m.arrow_map[ar.label] = mat_from_json(j.at("arrows").at(ar.label), m.dims[t],
                                                  m.dims[s]);
        else
            m.arrow_map[ar.label] = QMat(m.dims[t], m.dims[s]);
    }
    return m;
}

Json to_json(const DecoratedRep& m) {
    Json j;
    j["module"] = to_json(m.module);
    Json dec = Json::object();
    const Algebra& A = *m.module.algebra;
    for (std::size_t i = 0; i < m.decoration.size(); ++i)
        dec[std::to_string(A.vertex_id(i))] = m.decoration[i];
    j["decoration"] = dec;
    return j;
}

DecoratedRep decorated_from_json(const Json& j, AlgebraPtr algebra) {
    DecoratedRep d = DecoratedRep::plain(rep_from_json(j.at("module"), algebra));
    if (j.contains("decoration"))
        for (const auto& [key, v] : j.at("decoration").items())
            d.decoration[algebra->vertex_index(std::stol(key))] = {v[0].get<long>(),
                                                                   v[1].get<long>()};
    return d;
}

Json to_json(const GentleQuiver& q) {
    Json j;
    j["vertices"] = q.vertices;
    j["d"] = q.d;
    Json arrows = Json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"label", a.label}, {"source", a.source}, {"target", a.target}});
    j["arrows"] = arrows;
    Json loops = Json::array();
    for (long k : q.loops) loops.push_back(GentleQuiver::loop_label(k));
    j["loops"] = loops;
    Json forbidden = Json::array();
    for (const auto& [a, b] : q.forbidden) forbidden.push_back({a, b});
    j["forbidden"] = forbidden;
    return j;
}

StringWord word_from_json(const Json& j) {
    StringWord w;
    const Json& letters = j.is_array() ? j : j.at("letters");
    for (const auto& l : letters) {
        StringWord::Letter letter;
        letter.arrow = l.at("arrow").get<std::string>();
        letter.direct = l.at("dir").get<std::string>() == "+";
        w.letters.push_back(letter);
    }
    if (!j.is_array()) {
        if (j.contains("band")) w.band = j.at("band").get<bool>();
        if (j.contains("lambda")) w.lambda = rat_parse(j.at("lambda").get<std::string>());
    }
    return w;
}

}  // namespace clorb
