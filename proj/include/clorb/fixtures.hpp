#ifndef CLORB_FIXTURES_HPP
#define CLORB_FIXTURES_HPP

#include "clorb/orbifold.hpp"

namespace clorb {
namespace fixtures {

/// The five triangulations of the digon with two orbifold points related by
/// the flip sequence (1, 3, 2, 3); arcs 1 and 3 pending.
Triangulation c2tilde(int index);

/// Hexagon with two orbifold points (7 arcs, 4 and 6 pending).
Triangulation hexagon2orb();

/// Disk with one orbifold point and 3, 4 or 5 boundary marked points.
Triangulation disk_one_orbifold(int marked);

/// Octagon, no orbifold points: a quadrilateral of arcs around diagonal 1.
Triangulation octagon();

/// Digon with two orbifold points, labeled as in the quiver example with
/// loops at vertices 2 and 3.
Triangulation digon_example();

ExchangeMatrix a2_matrix();
ExchangeMatrix c2_matrix();

}  // namespace fixtures
}  // namespace clorb

#endif
