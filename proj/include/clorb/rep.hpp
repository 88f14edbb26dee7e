#ifndef CLORB_REP_HPP
#define CLORB_REP_HPP

#include <optional>
#include <random>

#include "clorb/algebra.hpp"
#include "clorb/linalg.hpp"

namespace clorb {

/// A finitely generated left module over a gentle algebra, given by one
/// vector space per vertex, the eps action at pending vertices, and one
/// matrix per non-loop arrow (mapping M(source) into M(target)).
struct LFRep {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;          // per vertex index
    std::vector<QMat> eps;                  // square, zero at d = 1 vertices
    std::map<std::string, QMat> arrow_map;  // arrow label -> matrix

    static LFRep zero(AlgebraPtr a);

    std::size_t dim_at(long vertex_id) const { return dims[algebra->vertex_index(vertex_id)]; }
    std::size_t total_dim() const;
    const QMat& eps_at(long vertex_id) const { return eps[algebra->vertex_index(vertex_id)]; }
    const QMat& arrow(const std::string& label) const;
    /// Matrix of the action of an arbitrary basis path.
    QMat path_action(const Path& p) const;
    /// Action matrix of any arrow label, loops included.
    QMat action(const std::string& arrow_label) const;

    bool operator==(const LFRep& o) const;
};

/// Module morphism: one matrix per vertex (from.dims -> to.dims).
struct LFRepMorphism {
    std::vector<QMat> comp;
    bool is_zero() const;
};

std::vector<std::string> validate_rep(const LFRep& m);
void require_valid(const LFRep& m);

/// (free rank, socle excess) of M(i) as a module over H_i.
std::pair<long, long> local_structure(const LFRep& m, long vertex_id);
bool is_locally_free(const LFRep& m);
/// Rank vector of a locally free module; throws NotLocallyFree otherwise.
std::vector<long> rank_vector(const LFRep& m);

struct HomSpace {
    std::size_t dimension = 0;
    std::vector<LFRepMorphism> basis;
};
HomSpace hom_space(const LFRep& m, const LFRep& n);

struct IsoResult {
    bool isomorphic = false;
    bool certain = true;  // false only for the probabilistic "not found"
    std::optional<LFRepMorphism> witness;
};
IsoResult is_isomorphic(const LFRep& m, const LFRep& n, unsigned long seed = 0);

LFRep direct_sum(const std::vector<LFRep>& parts);
std::vector<LFRep> indecomposable_summands(const LFRep& m, unsigned long seed = 0);

/// Simple module S_i, the free rank-one module E_i = H_i at i, projective
/// P_i and injective I_i.
LFRep simple_module(AlgebraPtr a, long vertex_id);
LFRep free_vertex_module(AlgebraPtr a, long vertex_id);  // E_i
LFRep projective_module(AlgebraPtr a, long vertex_id);
LFRep injective_module(AlgebraPtr a, long vertex_id);
/// The H_i-module H_i^a + S_i^b planted at one vertex.
LFRep planted_module(AlgebraPtr a, long vertex_id, long free_rank, long socle_excess);

/// Submodule spanned by per-vertex subspaces (columns of basis[i]); the
/// spans must be arrow- and eps-stable.
LFRep submodule(const LFRep& m, const std::vector<QMat>& basis);
/// Quotient by an arrow- and eps-stable family of subspaces.
LFRep quotient(const LFRep& m, const std::vector<QMat>& basis);
/// Kernel of a morphism as a submodule of `from`, with its inclusion bases.
std::pair<LFRep, std::vector<QMat>> kernel_submodule(const LFRep& from, const LFRep& to,
                                                     const LFRepMorphism& f);

/// Dual module over the opposite algebra.
LFRep dual_module(const LFRep& m, AlgebraPtr op_algebra);

/// Socle dimensions per vertex (largest semisimple submodule).
std::vector<std::size_t> socle_dims(const LFRep& m);

/// Minimal projective presentation P1 -> P0 -> M -> 0.
struct ProjPresentation {
    std::vector<long> p0;  // multiplicities per vertex index
    std::vector<long> p1;
    LFRep P0, P1;
    LFRepMorphism d1;  // P1 -> P0
};
ProjPresentation minimal_projective_presentation(const LFRep& m);

/// Minimal injective copresentation 0 -> M -> I0 -> I1; only the
/// multiplicities are returned (q counts the socle of coker(M -> I0)).
struct InjCopresentation {
    std::vector<long> p;  // multiplicities of I_k in I0
    std::vector<long> q;  // multiplicities of I_k in I1
};
InjCopresentation minimal_injective_copresentation(const LFRep& m);

/// Auslander-Reiten translate and its inverse.
LFRep ar_translate(const LFRep& m);
LFRep ar_translate_inverse(const LFRep& m);

/// Decorated representation: a module plus one H_i-module per vertex given
/// as (free rank, socle excess).
struct DecoratedRep {
    LFRep module;
    std::vector<std::array<long, 2>> decoration;  // per vertex index

    static DecoratedRep plain(LFRep m);
    static DecoratedRep negative(AlgebraPtr a, long vertex_id);  // (0, H_l)
    bool locally_free() const;
};

DecoratedRep dec_direct_sum(const std::vector<DecoratedRep>& parts);

}  // namespace clorb

#endif
