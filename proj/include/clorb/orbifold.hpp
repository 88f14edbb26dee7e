#ifndef CLORB_ORBIFOLD_HPP
#define CLORB_ORBIFOLD_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clorb/cluster.hpp"

namespace clorb {

/// Combinatorial triangulation of an unpunctured orbifold with order-2
/// orbifold points. Triangles list their three sides (arc or boundary ids)
/// in clockwise order as seen from inside the triangle. A pending arc sits
/// in exactly one triangle; the monogon around its orbifold point is
/// implicit in the pending flag.
struct Triangulation {
    struct Arc {
        long id = 0;
        bool pending = false;
    };
    std::vector<Arc> arcs;
    std::vector<long> boundary;
    std::vector<std::array<long, 3>> triangles;

    std::size_t n() const { return arcs.size(); }
    bool is_arc(long id) const;
    bool is_pending(long id) const;
    /// 0-based index of an arc id.
    std::size_t arc_index(long id) const;
};

/// Report-based validation; an empty list means the triangulation is valid.
std::vector<std::string> validate(const Triangulation& t);

/// Flip at an arc (by id). Throws NotAnArc for boundary or unknown ids.
Triangulation flip(const Triangulation& t, long arc_id);

/// Exchange matrix B(T) with symmetrizer D(T); rows/columns follow the
/// order of t.arcs.
ExchangeMatrix b_matrix(const Triangulation& t);

/// Gentle quiver Q(T) with relations. Arrows are between arcs only; the
/// loop at each pending vertex is implicit (see GentleQuiver::loops).
struct GentleQuiver {
    struct Arrow {
        long source = 0;  // arc id, tail
        long target = 0;  // arc id, head
        std::string label;
        long triangle = -1;  // index of the originating triangle
    };
    std::vector<long> vertices;          // arc ids, in triangulation order
    std::vector<long> d;                 // symmetrizer entry per vertex
    std::vector<Arrow> arrows;           // non-loop arrows
    std::vector<long> loops;             // arc ids of pending vertices
    /// Forbidden composable pairs (second then first): {a, b} with a*b = 0,
    /// i.e. path b followed by a vanishes.
    std::vector<std::pair<std::string, std::string>> forbidden;

    std::size_t vertex_index(long id) const;
    const Arrow* arrow_between(long source, long target) const;
    static std::string arrow_label(long source, long target);
    static std::string loop_label(long vertex);
};

GentleQuiver quiver(const Triangulation& t);

}  // namespace clorb

#endif
