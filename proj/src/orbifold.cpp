#include "clorb/orbifold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace clorb {

bool Triangulation::is_arc(long id) const {
    return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.id == id; });
}

bool Triangulation::is_pending(long id) const {
    for (const auto& a : arcs)
        if (a.id == id) return a.pending;
    return false;
}

std::size_t Triangulation::arc_index(long id) const {
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i].id == id) return i;
    throw NotAnArc("unknown arc id " + std::to_string(id));
}

std::vector<std::string> validate(const Triangulation& t) {
    std::vector<std::string> report;
    std::set<long> arc_ids, boundary_ids;
    for (const auto& a : t.arcs) {
        if (!arc_ids.insert(a.id).second)
            report.push_back("duplicate arc id " + std::to_string(a.id));
    }
    for (long b : t.boundary) {
        if (!boundary_ids.insert(b).second)
            report.push_back("duplicate boundary id " + std::to_string(b));
        if (arc_ids.count(b))
            report.push_back("id " + std::to_string(b) + " is both arc and boundary");
    }
    std::map<long, long> slots;
    for (std::size_t ti = 0; ti < t.triangles.size(); ++ti) {
        const auto& tri = t.triangles[ti];
        std::set<long> sides(tri.begin(), tri.end());
        if (sides.size() != 3)
            report.push_back("triangle " + std::to_string(ti) +
                             " repeats a side (self-folded configurations are rejected)");
        for (long s : tri) {
            if (!arc_ids.count(s) && !boundary_ids.count(s))
                report.push_back("triangle " + std::to_string(ti) + " uses unknown side id " +
                                 std::to_string(s));
            ++slots[s];
        }
    }
    for (const auto& a : t.arcs) {
        long c = slots[a.id];
        if (a.pending && c != 1)
            report.push_back("pending arc " + std::to_string(a.id) + " occurs in " +
                             std::to_string(c) + " triangle slots, expected 1");
        if (!a.pending && c != 2)
            report.push_back("arc " + std::to_string(a.id) + " occurs in " + std::to_string(c) +
                             " triangle slots, expected 2 (arc multiplicity)");
    }
    for (long b : t.boundary) {
        long c = slots[b];
        if (c != 1)
            report.push_back("boundary segment " + std::to_string(b) + " occurs in " +
                             std::to_string(c) + " triangle slots, expected 1");
    }
    return report;
}

namespace {

/// Rotate a triangle so that the given side comes first.
std::array<long, 3> start_at(const std::array<long, 3>& tri, long side) {
    for (int r = 0; r < 3; ++r)
        if (tri[static_cast<std::size_t>(r)] == side)
            return {tri[static_cast<std::size_t>(r)],
                    tri[static_cast<std::size_t>((r + 1) % 3)],
                    tri[static_cast<std::size_t>((r + 2) % 3)]};
    throw NotAnArc("side not in triangle");
}

}  // namespace

Triangulation flip(const Triangulation& t, long arc_id) {
    if (!t.is_arc(arc_id)) throw NotAnArc("flip at non-arc id " + std::to_string(arc_id));
    std::vector<std::size_t> holding;
    for (std::size_t i = 0; i < t.triangles.size(); ++i)
        if (std::count(t.triangles[i].begin(), t.triangles[i].end(), arc_id))
            holding.push_back(i);
    Triangulation r = t;
    if (t.is_pending(arc_id)) {
        if (holding.size() != 1) throw NotAnArc("pending arc not in exactly one triangle");
        auto tri = start_at(t.triangles[holding[0]], arc_id);
        r.triangles[holding[0]] = {arc_id, tri[2], tri[1]};
    } else {
        if (holding.size() != 2) throw NotAnArc("ordinary arc not in exactly two triangles");
        auto t1 = start_at(t.triangles[holding[0]], arc_id);
        auto t2 = start_at(t.triangles[holding[1]], arc_id);
        r.triangles[holding[0]] = {arc_id, t1[2], t2[1]};
        r.triangles[holding[1]] = {arc_id, t2[2], t1[1]};
    }
    return r;
}

ExchangeMatrix b_matrix(const Triangulation& t) {
    auto report = validate(t);
    if (!report.empty()) throw Error("invalid triangulation: " + report.front());
    std::size_t n = t.n();
    ExchangeMatrix B;
    B.b.assign(n, std::vector<long>(n, 0));
    B.d.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (t.arcs[i].pending) B.d[i] = 2;
    for (const auto& tri : t.triangles) {
        for (int r = 0; r < 3; ++r) {
            long i = tri[static_cast<std::size_t>(r)];
            long j = tri[static_cast<std::size_t>((r + 1) % 3)];  // j follows i clockwise
            if (!t.is_arc(i) || !t.is_arc(j)) continue;
            std::size_t ii = t.arc_index(i), jj = t.arc_index(j);
            long wj = t.is_pending(j) ? 2 : 1;
            long wi = t.is_pending(i) ? 2 : 1;
            B.b[ii][jj] += wj;
            B.b[jj][ii] -= wi;
        }
    }
    return B;
}

std::size_t GentleQuiver::vertex_index(long id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return i;
    throw NotAnArc("unknown quiver vertex " + std::to_string(id));
}

const GentleQuiver::Arrow* GentleQuiver::arrow_between(long source, long target) const {
    for (const auto& a : arrows)
        if (a.source == source && a.target == target) return &a;
    return nullptr;
}

std::string GentleQuiver::arrow_label(long source, long target) {
    return "a" + std::to_string(source) + "_" + std::to_string(target);
}

std::string GentleQuiver::loop_label(long vertex) {
    return "eps" + std::to_string(vertex);
}

GentleQuiver quiver(const Triangulation& t) {
    auto report = validate(t);
    if (!report.empty()) throw Error("invalid triangulation: " + report.front());
    GentleQuiver q;
    for (const auto& a : t.arcs) {
        q.vertices.push_back(a.id);
        q.d.push_back(a.pending ? 2 : 1);
        if (a.pending) q.loops.push_back(a.id);
    }
    for (std::size_t ti = 0; ti < t.triangles.size(); ++ti) {
        const auto& tri = t.triangles[ti];
        std::vector<GentleQuiver::Arrow> tri_arrows;
        for (int r = 0; r < 3; ++r) {
            long i = tri[static_cast<std::size_t>(r)];
            long j = tri[static_cast<std::size_t>((r + 1) % 3)];  // i precedes j
            if (!t.is_arc(i) || !t.is_arc(j)) continue;
            GentleQuiver::Arrow a;
            a.source = j;
            a.target = i;
            a.label = GentleQuiver::arrow_label(j, i);
            a.triangle = static_cast<long>(ti);
            if (q.arrow_between(j, i) != nullptr)
                throw Error("parallel arrows between arcs " + std::to_string(j) + " and " +
                            std::to_string(i) + " are not supported");
            q.arrows.push_back(a);
            tri_arrows.push_back(a);
        }
        // All composable pairs inside one triangle vanish.
        for (const auto& a : tri_arrows)
            for (const auto& b : tri_arrows)
                if (b.target == a.source) q.forbidden.emplace_back(a.label, b.label);
    }
    for (long k : q.loops) {
        auto l = GentleQuiver::loop_label(k);
        q.forbidden.emplace_back(l, l);
    }
    return q;
}

}  // namespace clorb
