#ifndef CLORB_INVARIANTS_HPP
#define CLORB_INVARIANTS_HPP

#include "clorb/mutation.hpp"

namespace clorb {

/// Representation-theoretic g-vector of a locally free decorated module:
/// g_k = rk ker gamma_k - rk M(k) + rk V(k).
std::vector<long> g_vector(const Triangulation& t, const DecoratedRep& m);

struct HVector {
    std::vector<long> h;
    std::vector<bool> defined;  // h_k is defined iff ker beta_k is free
};

HVector h_vector(const Triangulation& t, const LFRep& m);

/// Locally free F-polynomial via counting locally free submodules over
/// several prime fields and interpolating the point count. The variables
/// are y1..yn in the order of t.arcs.
LaurentPoly lf_f_polynomial(const Triangulation& t, const LFRep& m,
                            std::size_t size_bound = 12);

struct GFPair {
    std::vector<long> g;
    LaurentPoly f;
};

/// g-vector and F-polynomial of the decorated representation obtained by
/// pulling E_l^-(T_p) back along `address` (0-based arc indices into the
/// initial triangulation's arc order), computed purely by the mutation
/// recurrences, without Grassmannians.
GFPair gf_by_recurrence(const Triangulation& t0, const std::vector<std::size_t>& address,
                        std::size_t ell);

/// The decorated representation M_{l;t} over P(t0) for the same data.
DecoratedRep pullback_rep(const Triangulation& t0, const std::vector<std::size_t>& address,
                          std::size_t ell);

/// Coefficient-free Caldero-Chapoton function x^{g(M)} F(M)(y^), with
/// y^_i = prod_j x_j^{b_ji}.
LaurentPoly cc_function(const Triangulation& t, const DecoratedRep& m,
                        std::size_t size_bound = 12);

/// E-invariant E^inj(M, N) = dim Hom(M, N) + sum_i dim M(i) g_i(N).
long e_invariant(const Triangulation& t, const DecoratedRep& m, const DecoratedRep& n);
long e_invariant_self(const Triangulation& t, const DecoratedRep& m);
/// The Auslander-Reiten expression dim Hom(tau^{-1} N, M) + sum_i dim M(i) rk W(i).
long e_invariant_ar(const Triangulation& t, const DecoratedRep& m, const DecoratedRep& n);

struct TauRigidReport {
    bool hom_tau_vanishes = false;
    bool hom_proj_vanishes = false;
    bool e_invariant_zero = false;
    bool tau_rigid = false;  // both Hom conditions
    bool consistent = false; // tau_rigid == e_invariant_zero
};

TauRigidReport is_tau_rigid_pair(const Triangulation& t, const DecoratedRep& m);

struct RecurrenceReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Check the g-recurrence, g_k = h_k - h'_k, the F-polynomial identity and
/// E-invariant preservation across one mutation.
RecurrenceReport verify_recurrences(const Triangulation& t, const DecoratedRep& m, long k,
                                    std::size_t size_bound = 12);

}  // namespace clorb

#endif
