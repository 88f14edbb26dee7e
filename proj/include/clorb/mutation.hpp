#ifndef CLORB_MUTATION_HPP
#define CLORB_MUTATION_HPP

#include "clorb/rep.hpp"

namespace clorb {

/// The local diagram M_in(k) --alpha--> M(k) --beta--> M_out(k) --gamma--> M_in(k)
/// of H_k-modules attached to a representation at a flippable arc.
///
/// M_in(k) is the direct sum over arrows a: j -> k of A(T)_{k,j} (x) M(j),
/// realized concretely as d_k stacked copies of M(j) indexed by the free
/// right-basis {eps_k^f a}; M_out(k) likewise over arrows b: k -> i via
/// {eps_k^f b-bar}. The eps_k action shifts the f-index.
struct LocalDiagram {
    long k = 0;                     // arc id
    std::size_t k_index = 0;        // vertex index
    long dk = 1;                    // symmetrizer entry at k
    std::vector<std::string> in_arrows;   // labels a: j -> k
    std::vector<std::string> out_arrows;  // labels b: k -> i
    std::size_t dim_in = 0, dim_out = 0;
    QMat eps_in, eps_out, eps_k;
    QMat alpha;  // dim M(k) x dim_in
    QMat beta;   // dim_out x dim M(k)
    QMat gamma;  // dim_in x dim_out

    /// Offset of the f-th copy block of the summand for the given arrow.
    std::size_t in_offset(std::size_t arrow_pos, long f) const;
    std::size_t out_offset(std::size_t arrow_pos, long f) const;
    std::size_t in_block_dim(std::size_t arrow_pos) const;   // dim M(source)
    std::size_t out_block_dim(std::size_t arrow_pos) const;  // dim M(target)

    std::vector<std::size_t> in_block_dims, out_block_dims;
};

LocalDiagram local_diagram(const Triangulation& t, const LFRep& m, long k);

/// Retraction rho onto ker gamma and section sigma of ker alpha / im gamma,
/// both H_k-equivariant, produced deterministically from echelon solutions.
struct SplittingData {
    QMat ker_gamma;      // basis, dim_out x kdim
    QMat rho;            // kdim x dim_out, rho * ker_gamma = id
    QMat ker_alpha;      // basis, dim_in x adim
    QMat im_gamma;       // basis, dim_in x gdim (inside ker alpha)
    QMat sigma;          // dim_in x qdim, section of ker alpha / im gamma
    QMat quot_reps;      // dim_in x qdim representatives completing im_gamma
};

SplittingData make_splitting(const LocalDiagram& d);

struct MutationResult {
    Triangulation flipped;
    LFRep rep;
    /// H_k-module ker beta / (ker beta  im alpha) as (free rank, excess).
    std::array<long, 2> discarded;
    LocalDiagram diagram;
};

/// Mutation of a representation at arc k; the result lives over P(flip(T,k)).
MutationResult mutate_rep(const Triangulation& t, const LFRep& m, long k);

struct DecMutationResult {
    Triangulation flipped;
    DecoratedRep rep;
};

DecMutationResult mutate_decorated(const Triangulation& t, const DecoratedRep& m, long k);

struct InvolutionReport {
    bool decorated_involution_checked = false;
    bool decorated_involution_holds = false;
    bool decomposition_checked = false;
    bool decomposition_holds = false;
    std::array<long, 2> extra_summand{0, 0};
    std::string detail;
    bool ok() const {
        return (!decorated_involution_checked || decorated_involution_holds) &&
               (!decomposition_checked || decomposition_holds) &&
               (decorated_involution_checked || decomposition_checked);
    }
};

/// Verify the involution statement appropriate for the input: decorated
/// mutation squared is the identity when ker beta and im alpha are free;
/// otherwise the plain-module decomposition with the explicit extra summand.
InvolutionReport check_involution(const Triangulation& t, const DecoratedRep& m, long k,
                                  unsigned long seed = 0);

}  // namespace clorb

#endif
