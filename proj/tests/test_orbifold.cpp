#include <doctest.h>

#include <algorithm>
#include <set>

#include "clorb/fixtures.hpp"
#include "clorb/orbifold.hpp"

using namespace clorb;

namespace {

std::multiset<std::array<long, 3>> triangle_multiset(const Triangulation& t) {
    std::multiset<std::array<long, 3>> s;
    for (auto tri : t.triangles) {
        int best = 0;
        for (int r = 1; r < 3; ++r) {
            std::array<long, 3> a{tri[(best + 0) % 3], tri[(best + 1) % 3],
                                  tri[(best + 2) % 3]};
            std::array<long, 3> b{tri[(r + 0) % 3], tri[(r + 1) % 3], tri[(r + 2) % 3]};
            if (b < a) best = r;
        }
        s.insert({tri[(best + 0) % 3], tri[(best + 1) % 3], tri[(best + 2) % 3]});
    }
    return s;
}

const std::vector<Triangulation>& all_fixtures() {
    static std::vector<Triangulation> fs = [] {
        std::vector<Triangulation> v;
        for (int i = 0; i <= 4; ++i) v.push_back(fixtures::c2tilde(i));
        v.push_back(fixtures::hexagon2orb());
        v.push_back(fixtures::disk_one_orbifold(3));
        v.push_back(fixtures::disk_one_orbifold(4));
        v.push_back(fixtures::disk_one_orbifold(5));
        v.push_back(fixtures::octagon());
        v.push_back(fixtures::digon_example());
        return v;
    }();
    return fs;
}

}  // namespace

TEST_CASE("fixtures validate") {
    for (const auto& t : all_fixtures()) {
        auto report = validate(t);
        for (const auto& r : report) INFO(r);
        CHECK(report.empty());
    }
}

TEST_CASE("validation catches malformed input") {
    Triangulation t = fixtures::c2tilde(0);
    t.triangles.push_back({2, 101, 102});  // arc 2 now in three slots
    auto report = validate(t);
    CHECK(!report.empty());
    CHECK(std::any_of(report.begin(), report.end(), [](const std::string& s) {
        return s.find("arc multiplicity") != std::string::npos;
    }));
    Triangulation u = fixtures::c2tilde(0);
    u.triangles[1] = {3, 2, 1};  // pending arc 1 in two slots
    CHECK(!validate(u).empty());
    Triangulation v = fixtures::c2tilde(0);
    v.triangles[0] = {2, 2, 101};  // self-folded
    CHECK(!validate(v).empty());
}

TEST_CASE("the worked flip chain") {
    Triangulation t0 = fixtures::c2tilde(0);
    Triangulation t1 = flip(t0, 1);
    Triangulation t2 = flip(t1, 3);
    Triangulation t3 = flip(t2, 2);
    Triangulation t4 = flip(t3, 3);
    CHECK(triangle_multiset(t1) == triangle_multiset(fixtures::c2tilde(1)));
    CHECK(triangle_multiset(t2) == triangle_multiset(fixtures::c2tilde(2)));
    CHECK(triangle_multiset(t3) == triangle_multiset(fixtures::c2tilde(3)));
    CHECK(triangle_multiset(t4) == triangle_multiset(fixtures::c2tilde(4)));
    CHECK_THROWS_AS(flip(t0, 101), NotAnArc);
}

TEST_CASE("flip is an involution on triangle multisets") {
    for (const auto& t : all_fixtures())
        for (const auto& a : t.arcs) {
            Triangulation back = flip(flip(t, a.id), a.id);
            CHECK(triangle_multiset(back) == triangle_multiset(t));
            CHECK(flip(t, a.id).is_pending(a.id) == a.pending);
            CHECK(flip(t, a.id).n() == t.n());
        }
}

TEST_CASE("exchange matrices of the digon chain") {
    CHECK(b_matrix(fixtures::c2tilde(0)).b ==
          std::vector<std::vector<long>>{{0, -1, 0}, {2, 0, -2}, {0, 1, 0}});
    CHECK(b_matrix(fixtures::c2tilde(4)).b ==
          std::vector<std::vector<long>>{{0, 1, -2}, {-2, 0, 2}, {2, -1, 0}});
    CHECK(b_matrix(fixtures::c2tilde(0)).d == std::vector<long>{2, 1, 2});
}

TEST_CASE("regular triangles with pending sides") {
    // one pending side: realized inside the one-orbifold disk
    CHECK(b_matrix(fixtures::disk_one_orbifold(4)).b ==
          std::vector<std::vector<long>>{{0, -1, 2}, {1, 0, -2}, {-1, 1, 0}});
    // two pending sides: the digon with two orbifold points
    CHECK(b_matrix(fixtures::digon_example()).b ==
          std::vector<std::vector<long>>{{0, -2, 2}, {1, 0, -2}, {-1, 2, 0}});
}

TEST_CASE("b_matrix commutes with flips (all fixtures, all arcs)") {
    for (const auto& t : all_fixtures()) {
        ExchangeMatrix B = b_matrix(t);
        CHECK(B.is_skew_symmetrizable());
        for (std::size_t k = 0; k < t.n(); ++k) {
            Triangulation f = flip(t, t.arcs[k].id);
            CHECK(b_matrix(f).b == mutate_matrix(B, k).b);
        }
    }
}

TEST_CASE("b_matrix commutes with flips at depth 2") {
    for (const auto& t : all_fixtures()) {
        for (std::size_t k1 = 0; k1 < t.n(); ++k1) {
            Triangulation f = flip(t, t.arcs[k1].id);
            ExchangeMatrix B = b_matrix(f);
            for (std::size_t k2 = 0; k2 < t.n(); ++k2) {
                Triangulation g = flip(f, f.arcs[k2].id);
                CHECK(b_matrix(g).b == mutate_matrix(B, k2).b);
            }
        }
    }
}

TEST_CASE("quiver of the initial digon triangulation") {
    GentleQuiver q = quiver(fixtures::c2tilde(0));
    CHECK(q.vertices == std::vector<long>{1, 2, 3});
    CHECK(q.arrows.size() == 2);
    CHECK(q.arrow_between(1, 2) != nullptr);
    CHECK(q.arrow_between(2, 3) != nullptr);
    CHECK(q.loops == std::vector<long>{1, 3});
    CHECK(q.forbidden.size() == 2);  // only the two loop squares
}

TEST_CASE("quiver of the digon with two orbifold points") {
    GentleQuiver q = quiver(fixtures::digon_example());
    CHECK(q.arrow_between(3, 1) != nullptr);  // a: 3 -> 1
    CHECK(q.arrow_between(1, 2) != nullptr);  // b: 1 -> 2
    CHECK(q.arrow_between(2, 3) != nullptr);  // c: 2 -> 3
    CHECK(q.loops == std::vector<long>{2, 3});
    std::set<std::pair<std::string, std::string>> fb(q.forbidden.begin(), q.forbidden.end());
    auto a = GentleQuiver::arrow_label(3, 1);
    auto b = GentleQuiver::arrow_label(1, 2);
    auto c = GentleQuiver::arrow_label(2, 3);
    CHECK(fb.count({b, a}));
    CHECK(fb.count({c, b}));
    CHECK(fb.count({a, c}));
    CHECK(fb.size() == 5);
}

TEST_CASE("boundary-hugging arcs carry no triangle 3-cycle") {
    GentleQuiver q = quiver(fixtures::octagon());
    // each central triangle contributes a path of two arrows, no 3-cycle
    CHECK(q.arrows.size() == 6);
    std::set<long> tri_with_three;
    std::map<long, int> per_triangle;
    for (const auto& a : q.arrows) ++per_triangle[a.triangle];
    for (const auto& [tri, count] : per_triangle) CHECK(count <= 3);
}

TEST_CASE("quiver locality under flips") {
    for (const auto& t : all_fixtures()) {
        GentleQuiver q0 = quiver(t);
        for (const auto& arc : t.arcs) {
            long k = arc.id;
            GentleQuiver q1 = quiver(flip(t, k));
            std::set<long> local{k};
            for (const auto& a : q0.arrows) {
                if (a.source == k) local.insert(a.target);
                if (a.target == k) local.insert(a.source);
            }
            std::set<std::pair<long, long>> s0, s1;
            for (const auto& a : q0.arrows) s0.insert({a.source, a.target});
            for (const auto& a : q1.arrows) s1.insert({a.source, a.target});
            for (const auto& e : s0)
                if (!s1.count(e)) CHECK((local.count(e.first) && local.count(e.second)));
            for (const auto& e : s1)
                if (!s0.count(e)) CHECK((local.count(e.first) && local.count(e.second)));
        }
    }
}
