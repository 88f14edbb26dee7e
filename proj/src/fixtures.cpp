#include "clorb/fixtures.hpp"

namespace clorb {
namespace fixtures {

namespace {

Triangulation make(std::vector<Triangulation::Arc> arcs, std::vector<long> boundary,
                   std::vector<std::array<long, 3>> triangles) {
    Triangulation t;
    t.arcs = std::move(arcs);
    t.boundary = std::move(boundary);
    t.triangles = std::move(triangles);
    return t;
}

}  // namespace

Triangulation c2tilde(int index) {
    // Digon with two orbifold points; boundary 101 (right), 102 (left).
    std::vector<Triangulation::Arc> arcs{{1, true}, {2, false}, {3, true}};
    std::vector<long> boundary{101, 102};
    switch (index) {
        case 0:
            return make(arcs, boundary, {{{2, 1, 101}}, {{3, 2, 102}}});
        case 1:
            return make(arcs, boundary, {{{1, 2, 101}}, {{3, 2, 102}}});
        case 2:
            return make(arcs, boundary, {{{1, 2, 101}}, {{3, 102, 2}}});
        case 3:
            return make(arcs, boundary, {{{2, 1, 3}}, {{2, 102, 101}}});
        case 4:
            return make(arcs, boundary, {{{3, 1, 2}}, {{2, 102, 101}}});
        default:
            throw IndexOutOfRange("c2tilde index must be 0..4");
    }
}

Triangulation hexagon2orb() {
    // Hexagon marked 1..6 clockwise, two orbifold points in the middle.
    // Arcs: 1 = (1,3), 2 = (3,5), 3 = (5,1), 7 = (1,5) wrapping the loop 5,
    // 5 = loop at 1 around both points, 4/6 = pending arcs (left/right).
    return make({{1, false}, {2, false}, {3, false}, {4, true}, {5, false},
                 {6, true}, {7, false}},
                {101, 102, 103, 104, 105, 106},
                {{{101, 102, 1}},
                 {{103, 104, 2}},
                 {{105, 106, 3}},
                 {{1, 2, 7}},
                 {{3, 5, 7}},
                 {{5, 4, 6}}});
}

Triangulation disk_one_orbifold(int marked) {
    switch (marked) {
        case 3:
            // Arcs: 1 pending at A, 2 = chord A-C.
            return make({{1, true}, {2, false}}, {101, 102, 103},
                        {{{1, 2, 103}}, {{2, 101, 102}}});
        case 4:
            // Arcs: 1, 2 the two A-C chords flanking the orbifold point,
            // 3 pending at A between them.
            return make({{1, false}, {2, false}, {3, true}}, {101, 102, 103, 104},
                        {{{1, 3, 2}}, {{101, 102, 1}}, {{103, 104, 2}}});
        case 5:
            return make({{1, false}, {2, false}, {3, true}, {4, false}},
                        {101, 102, 103, 104, 105},
                        {{{1, 3, 2}}, {{101, 102, 1}}, {{103, 4, 2}}, {{104, 105, 4}}});
        default:
            throw IndexOutOfRange("disk fixture supports 3, 4 or 5 marked points");
    }
}

Triangulation octagon() {
    // Octagon marked 1..8 clockwise; quadrilateral of chords around the
    // diagonal 1 = (1,5): i = 2 = (3,5), j = 3 = (1,3), p = 4 = (7,1),
    // q = 5 = (5,7).
    return make({{1, false}, {2, false}, {3, false}, {4, false}, {5, false}},
                {101, 102, 103, 104, 105, 106, 107, 108},
                {{{2, 1, 3}},
                 {{4, 1, 5}},
                 {{101, 102, 3}},
                 {{103, 104, 2}},
                 {{105, 106, 5}},
                 {{107, 108, 4}}});
}

Triangulation digon_example() {
    // Digon with two orbifold points, pending arcs 2 and 3, ordinary loop 1.
    return make({{1, false}, {2, true}, {3, true}}, {101, 102},
                {{{2, 1, 3}}, {{1, 101, 102}}});
}

ExchangeMatrix a2_matrix() {
    ExchangeMatrix b;
    b.b = {{0, 1}, {-1, 0}};
    b.d = {1, 1};
    return b;
}

ExchangeMatrix c2_matrix() {
    ExchangeMatrix b;
    b.b = {{0, 1}, {-2, 0}};
    b.d = {2, 1};
    return b;
}

}  // namespace fixtures
}  // namespace clorb
