#ifndef CLORB_ALGEBRA_HPP
#define CLORB_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "clorb/orbifold.hpp"

namespace clorb {

/// A basis path, stored in traversal order: word[0] is applied first, so as
/// an algebra element the path is word[m-1] * ... * word[0].
struct Path {
    std::vector<std::string> word;
    long source = 0;
    long target = 0;

    std::size_t length() const { return word.size(); }
    bool trivial() const { return word.empty(); }
};

/// The finite dimensional monomial algebra kQ/I of a gentle quiver, held as
/// its path basis with the induced multiplication table.
class Algebra {
public:
    explicit Algebra(GentleQuiver q);

    const GentleQuiver& quiver() const { return quiver_; }
    std::size_t nvertices() const { return quiver_.vertices.size(); }
    long vertex_id(std::size_t i) const { return quiver_.vertices[i]; }
    std::size_t vertex_index(long id) const { return quiver_.vertex_index(id); }
    long d(std::size_t i) const { return quiver_.d[i]; }
    long d_of(long id) const { return quiver_.d[vertex_index(id)]; }

    /// All arrows including the pending loops.
    struct ArrowInfo {
        std::string label;
        long source = 0;
        long target = 0;
        bool loop = false;
    };
    const std::vector<ArrowInfo>& all_arrows() const { return arrows_; }
    const ArrowInfo& arrow(const std::string& label) const;

    std::size_t dim() const { return paths_.size(); }
    const std::vector<Path>& paths() const { return paths_; }
    /// Basis paths from vertex `from` to vertex `to` (by id).
    const std::vector<std::size_t>& paths_between(long to, long from) const;

    /// True if the concatenation (first `inner`, then `outer`) survives.
    bool composable(const Path& inner, const Path& outer) const;
    /// Product outer * inner (apply inner first); nullopt when it vanishes.
    std::optional<Path> multiply(const Path& outer, const Path& inner) const;

    bool forbidden_pair(const std::string& first, const std::string& then) const;

    /// Structural equality (same quiver data), used for AlgebraMismatch.
    bool same(const Algebra& o) const;

    /// The opposite algebra (arrows reversed, relations mirrored).
    GentleQuiver opposite_quiver() const;

private:
    GentleQuiver quiver_;
    std::vector<ArrowInfo> arrows_;
    std::vector<Path> paths_;
    std::map<std::pair<long, long>, std::vector<std::size_t>> between_;  // (to, from)
    std::map<std::pair<std::string, std::string>, bool> forbidden_;      // (then, first)
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr build_algebra(const GentleQuiver& q);
AlgebraPtr build_algebra(const Triangulation& t);

/// The composite path the new arrow of the flipped quiver acts by: for a
/// through-pair (i, j) at k this is b eps_k^{d_k - 1} a with a: j -> k and
/// b: k -> i taken from one triangle. Throws NoThroughPair when the pair
/// does not pass through k.
Path theta_map(const Triangulation& t, long k, long i, long j);

}  // namespace clorb

#endif
