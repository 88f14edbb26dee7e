#ifndef CLORB_CLUSTER_HPP
#define CLORB_CLUSTER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clorb/laurent.hpp"

namespace clorb {

/// Skew-symmetrizable integer exchange matrix together with its symmetrizer.
struct ExchangeMatrix {
    std::vector<std::vector<long>> b;  // n x n
    std::vector<long> d;               // positive diagonal symmetrizer

    std::size_t n() const { return b.size(); }
    bool is_skew_symmetrizable() const;
    bool operator==(const ExchangeMatrix& o) const { return b == o.b && d == o.d; }
};

/// Matrix mutation in direction k (0-based).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, std::size_t k);

enum class SeedMode { principal, coefficient_free };

/// Labeled seed of a cluster pattern. In principal mode the cluster entries
/// are Laurent polynomials in x1..xn,y1..yn and the coefficient tuple lives
/// in Trop(y1,...,yn) as integer exponent vectors. In coefficient-free mode
/// the y-variables are absent and the coefficient tuple is all ones.
struct Seed {
    SeedMode mode = SeedMode::principal;
    ExchangeMatrix matrix;
    std::vector<LaurentPoly> cluster;
    std::vector<std::vector<int>> coeffs;  // exponent vectors over y

    std::size_t n() const { return matrix.n(); }
    bool operator==(const Seed& o) const {
        return mode == o.mode && matrix == o.matrix && cluster == o.cluster &&
               coeffs == o.coeffs;
    }
};

std::vector<std::string> seed_variables(std::size_t n, SeedMode mode);

Seed initial_seed(const ExchangeMatrix& B, SeedMode mode);

/// Seed mutation; throws NonLaurentResult if the exchange division fails.
Seed mutate_seed(const Seed& s, std::size_t k);

/// F-polynomial of a principal-coefficients cluster variable: evaluate the
/// x-variables at 1. The result lives in y1..yn and has constant term 1.
LaurentPoly extract_f_polynomial(const LaurentPoly& X, std::size_t n);

/// Principal-grading degree of a cluster variable: deg(x_i) = e_i and
/// deg(y_j) = -(j-th column of the initial exchange matrix).
std::vector<long> extract_g_vector(const LaurentPoly& X, const ExchangeMatrix& initial);

/// h-vector of an F-polynomial: tropical evaluation at
/// y_i -> x_i^{-1} prod_{j != i} x_j^{[-b_ji]_+}.
std::vector<int> cluster_h_vector(const LaurentPoly& F, const ExchangeMatrix& B);

/// Pattern rooted at a seed; nodes are cached by mutation address.
class ClusterPattern {
public:
    explicit ClusterPattern(Seed root) : root_(std::move(root)) {}
    /// Walk a (0-based) direction sequence from the root.
    const Seed& walk(const std::vector<std::size_t>& address);
    const Seed& root() const { return root_; }

private:
    Seed root_;
    std::map<std::vector<std::size_t>, Seed> cache_;
};

struct ExchangeGraph {
    struct Node {
        Seed seed;                     // representative labeled seed
        std::vector<long> neighbors;   // node index per direction, -1 if beyond depth
    };
    std::vector<Node> nodes;
    std::size_t edges = 0;
    bool closed = false;  // no unexplored frontier remained
    /// Cluster collisions with mismatched matrices (conjectural; flagged).
    std::size_t cluster_collisions = 0;
};

/// Breadth-first exploration of unlabeled seeds up to the given depth.
/// Seeds are identified up to simultaneous permutation of cluster entries,
/// coefficients and matrix rows/columns; the canonical form sorts cluster
/// entries by the LaurentPoly order with ties broken by matrix columns.
ExchangeGraph exchange_graph_bfs(const Seed& root, std::size_t depth);

/// DOT rendering; node labels are the g-vector matrices when principal.
std::string exchange_graph_dot(const ExchangeGraph& g, const ExchangeMatrix& initial);

}  // namespace clorb

#endif
