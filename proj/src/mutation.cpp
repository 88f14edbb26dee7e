#include "clorb/mutation.hpp"

#include <algorithm>
#include <sstream>

namespace clorb {

std::size_t LocalDiagram::in_offset(std::size_t arrow_pos, long f) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < arrow_pos; ++a)
        off += static_cast<std::size_t>(dk) * in_block_dims[a];
    return off + static_cast<std::size_t>(f) * in_block_dims[arrow_pos];
}

std::size_t LocalDiagram::out_offset(std::size_t arrow_pos, long f) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < arrow_pos; ++a)
        off += static_cast<std::size_t>(dk) * out_block_dims[a];
    return off + static_cast<std::size_t>(f) * out_block_dims[arrow_pos];
}

std::size_t LocalDiagram::in_block_dim(std::size_t arrow_pos) const {
    return in_block_dims[arrow_pos];
}
std::size_t LocalDiagram::out_block_dim(std::size_t arrow_pos) const {
    return out_block_dims[arrow_pos];
}

namespace {

/// Shift matrix on d stacked copies of an n-dimensional space: block (f+1, f)
/// is the identity. This is the eps_k action on A(T)_{k,j} (x) M(j).
QMat shift_blocks(long d, std::size_t n) {
    QMat s(static_cast<std::size_t>(d) * n, static_cast<std::size_t>(d) * n);
    for (long f = 0; f + 1 < d; ++f)
        for (std::size_t v = 0; v < n; ++v)
            s.at(static_cast<std::size_t>(f + 1) * n + v, static_cast<std::size_t>(f) * n + v) = 1;
    return s;
}

/// Free rank and socle excess of an eps-invariant subspace given by basis
/// columns, under a square-zero eps (trivial when d = 1).
std::array<long, 2> hk_structure(const QMat& basis, const QMat& eps, long d) {
    long dim = static_cast<long>(basis.cols());
    if (d == 1) return {dim, 0};
    if (dim == 0) return {0, 0};
    QMat inside = coordinates_in_basis(basis, eps * basis);
    long r = static_cast<long>(inside.rank());
    return {r, dim - 2 * r};
}

}  // namespace

LocalDiagram local_diagram(const Triangulation& t, const LFRep& m, long k) {
    require_valid(m);
    if (!t.is_arc(k)) throw NotAnArc("local diagram at non-arc");
    const Algebra& A = *m.algebra;
    LocalDiagram d;
    d.k = k;
    d.k_index = A.vertex_index(k);
    d.dk = A.d(d.k_index);
    d.eps_k = m.eps[d.k_index];
    std::size_t dimk = m.dims[d.k_index];

    const auto& arrows = A.quiver().arrows;
    for (const auto& a : arrows) {
        if (a.target == k) {
            d.in_arrows.push_back(a.label);
            d.in_block_dims.push_back(m.dim_at(a.source));
        }
        if (a.source == k) {
            d.out_arrows.push_back(a.label);
            d.out_block_dims.push_back(m.dim_at(a.target));
        }
    }
    auto total = [&](const std::vector<std::size_t>& blocks) {
        std::size_t s = 0;
        for (auto b : blocks) s += static_cast<std::size_t>(d.dk) * b;
        return s;
    };
    d.dim_in = total(d.in_block_dims);
    d.dim_out = total(d.out_block_dims);

    d.eps_in = QMat(d.dim_in, d.dim_in);
    for (std::size_t a = 0; a < d.in_arrows.size(); ++a)
        d.eps_in.set_block(d.in_offset(a, 0), d.in_offset(a, 0),
                           shift_blocks(d.dk, d.in_block_dims[a]));
    d.eps_out = QMat(d.dim_out, d.dim_out);
    for (std::size_t b = 0; b < d.out_arrows.size(); ++b)
        d.eps_out.set_block(d.out_offset(b, 0), d.out_offset(b, 0),
                            shift_blocks(d.dk, d.out_block_dims[b]));

    // alpha: component at arrow a (j -> k), copy f: eps_k^f . M(a).
    d.alpha = QMat(dimk, d.dim_in);
    for (std::size_t a = 0; a < d.in_arrows.size(); ++a) {
        QMat Ma = m.arrow(d.in_arrows[a]);
        QMat block = Ma;
        for (long f = 0; f < d.dk; ++f) {
            d.alpha.set_block(0, d.in_offset(a, f), block);
            if (f + 1 < d.dk) block = d.eps_k * block;
        }
    }

    // beta: component at arrow b (k -> i), copy f: M(b) . eps_k^{dk-1-f}.
    d.beta = QMat(d.dim_out, dimk);
    for (std::size_t b = 0; b < d.out_arrows.size(); ++b) {
        QMat Mb = m.arrow(d.out_arrows[b]);
        for (long f = 0; f < d.dk; ++f) {
            QMat block = Mb;
            for (long e = 0; e < d.dk - 1 - f; ++e) block = block * d.eps_k;
            d.beta.set_block(d.out_offset(b, f), 0, block);
        }
    }

    // gamma: block from the b-summand (b: k -> i) to the a-summand
    // (a: j -> k) is diag_f(M(c)) when a, b, c close up one triangle.
    d.gamma = QMat(d.dim_in, d.dim_out);
    for (std::size_t b = 0; b < d.out_arrows.size(); ++b) {
        const auto& binfo = A.arrow(d.out_arrows[b]);
        const GentleQuiver::Arrow* barrow = A.quiver().arrow_between(k, binfo.target);
        for (std::size_t a = 0; a < d.in_arrows.size(); ++a) {
            const auto& ainfo = A.arrow(d.in_arrows[a]);
            const GentleQuiver::Arrow* aarrow = A.quiver().arrow_between(ainfo.source, k);
            if (!barrow || !aarrow || barrow->triangle != aarrow->triangle) continue;
            const GentleQuiver::Arrow* c =
                A.quiver().arrow_between(binfo.target, ainfo.source);
            if (!c || c->triangle != barrow->triangle) continue;
            QMat Mc = m.arrow(c->label);
            for (long f = 0; f < d.dk; ++f)
                d.gamma.set_block(d.in_offset(a, f), d.out_offset(b, f), Mc);
        }
    }

    if (!(d.alpha * d.gamma).is_zero()) throw RelationViolated("alpha o gamma != 0");
    if (!(d.gamma * d.beta).is_zero()) throw RelationViolated("gamma o beta != 0");
    auto [gr, gexc] = hk_structure(d.gamma.image_basis(), d.eps_in, d.dk);
    (void)gr;
    if (gexc != 0) throw RelationViolated("im gamma is not free");
    return d;
}

namespace {

/// Solve for an H_k-equivariant retraction rho (in kernel coordinates):
/// rho * K = id and rho * eps_amb = eps_K * rho.
QMat solve_retraction(const QMat& K, const QMat& eps_amb) {
    std::size_t kdim = K.cols(), amb = K.rows();
    QMat eps_K = kdim ? coordinates_in_basis(K, eps_amb * K) : QMat(0, 0);
    // unknowns: rho entries, kdim x amb
    std::size_t nunk = kdim * amb;
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs_col;
    // rho * K = I
    for (std::size_t r = 0; r < kdim; ++r)
        for (std::size_t c = 0; c < kdim; ++c) {
            std::vector<mpq_class> row(nunk, 0);
            for (std::size_t t = 0; t < amb; ++t) row[r * amb + t] = K.at(t, c);
            rows.push_back(std::move(row));
            rhs_col.push_back(r == c ? 1 : 0);
        }
    // rho * eps_amb - eps_K * rho = 0
    for (std::size_t r = 0; r < kdim; ++r)
        for (std::size_t c = 0; c < amb; ++c) {
            std::vector<mpq_class> row(nunk, 0);
            for (std::size_t t = 0; t < amb; ++t) row[r * amb + t] += eps_amb.at(t, c);
            for (std::size_t t = 0; t < kdim; ++t) row[t * amb + c] -= eps_K.at(r, t);
            rows.push_back(std::move(row));
            rhs_col.push_back(0);
        }
    QMat sys = rows.empty() ? QMat(0, nunk) : QMat::from_rows(rows);
    QMat rhs(rhs_col.size(), 1);
    for (std::size_t i = 0; i < rhs_col.size(); ++i) rhs.at(i, 0) = rhs_col[i];
    auto sol = sys.solve(rhs);
    if (!sol) throw NoSplitting("no equivariant retraction");
    QMat rho(kdim, amb);
    for (std::size_t r = 0; r < kdim; ++r)
        for (std::size_t c = 0; c < amb; ++c) rho.at(r, c) = sol->at(r * amb + c, 0);
    return rho;
}

}  // namespace

SplittingData make_splitting(const LocalDiagram& d) {
    SplittingData s;
    s.ker_gamma = d.gamma.kernel_basis();
    s.rho = solve_retraction(s.ker_gamma, d.eps_out);
    s.ker_alpha = d.alpha.kernel_basis();
    s.im_gamma = d.gamma.image_basis();
    // representatives completing im gamma inside ker alpha
    QMat full = complete_basis(s.im_gamma, s.ker_alpha);
    std::size_t gdim = s.im_gamma.cols();
    std::size_t qdim = full.cols() - gdim;
    s.quot_reps = full.submatrix(0, gdim, full.rows(), qdim);
    if (qdim == 0) {
        s.sigma = QMat(d.dim_in, 0);
        return s;
    }
    // induced eps on the quotient coordinates (R-part of F-coordinates)
    QMat epsR = d.eps_in * s.quot_reps;                 // columns in span(ker alpha)
    QMat coords = coordinates_in_basis(full, epsR);     // (gdim+qdim) x qdim
    QMat eps_Q = coords.submatrix(gdim, 0, qdim, qdim);
    // sigma = R + G*Y with equivariance: eps_in (R + G Y) = (R + G Y) eps_Q
    // unknowns Y: gdim x qdim
    std::size_t nunk = gdim * qdim;
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs_col;
    QMat lhs_const = d.eps_in * s.quot_reps - s.quot_reps * eps_Q;  // dim_in x qdim
    QMat epsG = d.eps_in * s.im_gamma;                               // dim_in x gdim
    for (std::size_t r = 0; r < d.dim_in; ++r)
        for (std::size_t c = 0; c < qdim; ++c) {
            std::vector<mpq_class> row(nunk, 0);
            // (eps_in * G * Y)(r, c) = sum_g epsG(r, g) Y(g, c)
            for (std::size_t g = 0; g < gdim; ++g) row[g * qdim + c] += epsG.at(r, g);
            // (G * Y * eps_Q)(r, c) = sum_g sum_c' G(r, g) Y(g, c') eps_Q(c', c)
            for (std::size_t g = 0; g < gdim; ++g)
                for (std::size_t c2 = 0; c2 < qdim; ++c2)
                    row[g * qdim + c2] -= s.im_gamma.at(r, g) * eps_Q.at(c2, c);
            rows.push_back(std::move(row));
            rhs_col.push_back(-lhs_const.at(r, c));
        }
    QMat sys = rows.empty() ? QMat(0, nunk) : QMat::from_rows(rows);
    QMat rhs(rhs_col.size(), 1);
    for (std::size_t i = 0; i < rhs_col.size(); ++i) rhs.at(i, 0) = rhs_col[i];
    auto sol = sys.solve(rhs);
    if (!sol) throw NoSplitting("no equivariant section");
    QMat Y(gdim, qdim);
    for (std::size_t g = 0; g < gdim; ++g)
        for (std::size_t c = 0; c < qdim; ++c) Y.at(g, c) = sol->at(g * qdim + c, 0);
    s.sigma = s.quot_reps + s.im_gamma * Y;
    return s;
}

namespace {

/// Coordinates extractor for a quotient: columns of `sub` followed by
/// `reps` are completed to the ambient identity; the returned matrix maps
/// an ambient vector to its reps-coordinates.
QMat quotient_projector(const QMat& sub, const QMat& reps, std::size_t ambient_dim) {
    QMat F = sub.hstack(reps);
    QMat full = complete_basis(F, QMat::identity(ambient_dim));
    auto inv = full.inverse();
    if (!inv) throw Error("quotient basis completion failed");
    return inv->submatrix(sub.cols(), 0, reps.cols(), ambient_dim);
}

}  // namespace

MutationResult mutate_rep(const Triangulation& t, const LFRep& m, long k) {
    MutationResult res;
    res.flipped = flip(t, k);
    res.diagram = local_diagram(t, m, k);
    const LocalDiagram& d = res.diagram;
    SplittingData sp = make_splitting(d);
    const Algebra& A = *m.algebra;

    // Summand 1: ker gamma / im beta, with representatives inside ker gamma.
    QMat im_beta = d.beta.image_basis();
    QMat f1 = complete_basis(im_beta, sp.ker_gamma);
    std::size_t q1 = f1.cols() - im_beta.cols();
    QMat reps1 = f1.submatrix(0, im_beta.cols(), f1.rows(), q1);
    QMat proj1 = q1 ? quotient_projector(im_beta, reps1, d.dim_out) : QMat(0, d.dim_out);
    // Summands 2, 3 come from the splitting data.
    std::size_t gdim = sp.im_gamma.cols();
    std::size_t qdim = sp.sigma.cols();
    std::size_t dimk_new = q1 + gdim + qdim;

    // eps on the new M(k): induced on each summand.
    QMat eps_new(dimk_new, dimk_new);
    if (q1) {
        QMat e1 = proj1 * (d.eps_out * reps1);
        eps_new.set_block(0, 0, e1);
    }
    if (gdim) {
        QMat e2 = coordinates_in_basis(sp.im_gamma, d.eps_in * sp.im_gamma);
        eps_new.set_block(q1, q1, e2);
    }
    if (qdim) {
        QMat F = sp.im_gamma.hstack(sp.quot_reps);
        QMat coords = coordinates_in_basis(F, d.eps_in * sp.quot_reps);
        eps_new.set_block(q1 + gdim, q1 + gdim, coords.submatrix(gdim, 0, qdim, qdim));
    }

    // bar alpha = (pi rho, gamma, 0)^T : M_out -> new M(k)
    QMat bar_alpha(dimk_new, d.dim_out);
    if (q1) bar_alpha.set_block(0, 0, proj1 * (sp.ker_gamma * sp.rho));
    if (gdim) bar_alpha.set_block(q1, 0, coordinates_in_basis(sp.im_gamma, d.gamma));
    // bar beta = (0, iota, iota sigma) : new M(k) -> M_in
    QMat bar_beta(d.dim_in, dimk_new);
    if (gdim) bar_beta.set_block(0, q1, sp.im_gamma);
    if (qdim) bar_beta.set_block(0, q1 + gdim, sp.sigma);

    // Assemble the representation of the flipped algebra.
    AlgebraPtr A2 = build_algebra(res.flipped);
    LFRep r = LFRep::zero(A2);
    for (std::size_t i = 0; i < A2->nvertices(); ++i) {
        long vid = A2->vertex_id(i);
        if (vid == k) {
            r.dims[i] = dimk_new;
            r.eps[i] = eps_new;
        } else {
            r.dims[i] = m.dim_at(vid);
            r.eps[i] = m.eps_at(vid);
        }
    }
    for (const auto& ar : A2->quiver().arrows) {
        std::size_t s_i = A2->vertex_index(ar.source), t_i = A2->vertex_index(ar.target);
        QMat mat(r.dims[t_i], r.dims[s_i]);
        if (ar.target == k) {
            // reversal of b: k -> source; insert into the b-summand, f = 0.
            auto pos = std::find_if(d.out_arrows.begin(), d.out_arrows.end(),
                                    [&](const std::string& l) {
                                        return A.arrow(l).target == ar.source;
                                    });
            if (pos == d.out_arrows.end()) throw NoThroughPair("missing reversed arrow");
            std::size_t b = static_cast<std::size_t>(pos - d.out_arrows.begin());
            QMat insert(d.dim_out, r.dims[s_i]);
            insert.set_block(d.out_offset(b, 0), 0, QMat::identity(r.dims[s_i]));
            mat = bar_alpha * insert;
        } else if (ar.source == k) {
            // reversal of a: target -> k; read the a-summand, copy f = dk-1.
            auto pos = std::find_if(d.in_arrows.begin(), d.in_arrows.end(),
                                    [&](const std::string& l) {
                                        return A.arrow(l).source == ar.target;
                                    });
            if (pos == d.in_arrows.end()) throw NoThroughPair("missing reversed arrow");
            std::size_t a = static_cast<std::size_t>(pos - d.in_arrows.begin());
            QMat extract(r.dims[t_i], d.dim_in);
            extract.set_block(0, d.in_offset(a, d.dk - 1), QMat::identity(r.dims[t_i]));
            mat = extract * bar_beta;
        } else if (A.quiver().arrow_between(ar.source, ar.target)) {
            mat = m.arrow(GentleQuiver::arrow_label(ar.source, ar.target));
        } else {
            // through-arrow: acts by M(b eps_k^{dk-1} a) for a: j -> k, b: k -> i.
            const auto* a_old = A.quiver().arrow_between(ar.source, k);
            const auto* b_old = A.quiver().arrow_between(k, ar.target);
            if (!a_old || !b_old) throw NoThroughPair("through-arrow without a through-pair");
            QMat comp = m.arrow(a_old->label);
            for (long e = 0; e < d.dk - 1; ++e) comp = d.eps_k * comp;
            mat = m.arrow(b_old->label) * comp;
        }
        r.arrow_map[ar.label] = std::move(mat);
    }
    require_valid(r);
    res.rep = std::move(r);

    // ker beta / (ker beta  im alpha), recorded as an H_k-module.
    QMat KB = d.beta.kernel_basis();
    QMat IA = d.alpha.image_basis();
    QMat inter;
    if (KB.cols() == 0 || IA.cols() == 0) {
        inter = QMat(m.dims[d.k_index], 0);
    } else {
        QMat join = KB.hstack(IA * mpq_class(-1));
        QMat ker = join.kernel_basis();
        QMat xpart = ker.submatrix(0, 0, KB.cols(), ker.cols());
        inter = (KB * xpart).image_basis();
    }
    QMat full = complete_basis(inter, KB);
    QMat repsW = full.submatrix(0, inter.cols(), full.rows(), full.cols() - inter.cols());
    if (repsW.cols() == 0) {
        res.discarded = {0, 0};
    } else {
        QMat projW = quotient_projector(inter, repsW, m.dims[d.k_index]);
        QMat epsW = projW * (d.eps_k * repsW);
        long dimW = static_cast<long>(repsW.cols());
        if (d.dk == 1) {
            res.discarded = {dimW, 0};
        } else {
            long rk = static_cast<long>(epsW.rank());
            res.discarded = {rk, dimW - 2 * rk};
        }
    }
    return res;
}

DecMutationResult mutate_decorated(const Triangulation& t, const DecoratedRep& m, long k) {
    MutationResult mr = mutate_rep(t, m.module, k);
    DecMutationResult res;
    res.flipped = mr.flipped;
    std::size_t ki = m.module.algebra->vertex_index(k);
    auto [vk_free, vk_exc] = m.decoration[ki];
    LFRep module = mr.rep;
    if (vk_free != 0 || vk_exc != 0) {
        LFRep planted = planted_module(mr.rep.algebra, k, vk_free, vk_exc);
        module = direct_sum({mr.rep, planted});
    }
    DecoratedRep out;
    out.module = std::move(module);
    out.decoration = m.decoration;
    out.decoration[ki] = mr.discarded;
    res.rep = std::move(out);
    return res;
}

InvolutionReport check_involution(const Triangulation& t, const DecoratedRep& m, long k,
                                  unsigned long seed) {
    InvolutionReport rep;
    LocalDiagram d = local_diagram(t, m.module, k);
    auto free_part = [&](const QMat& basis) {
        QMat amb = basis.cols() ? basis : QMat(d.beta.cols(), 0);
        long dim = static_cast<long>(amb.cols());
        if (d.dk == 1) return true;
        if (dim == 0) return true;
        QMat inside = coordinates_in_basis(amb, d.eps_k * amb);
        return 2 * static_cast<long>(inside.rank()) == dim;
    };
    bool free_hyp = is_locally_free(m.module) && free_part(d.beta.kernel_basis()) &&
                    free_part(d.alpha.image_basis());
    if (free_hyp && m.locally_free()) {
        rep.decorated_involution_checked = true;
        auto m1 = mutate_decorated(t, m, k);
        auto m2 = mutate_decorated(m1.flipped, m1.rep, k);
        IsoResult iso = is_isomorphic(m2.rep.module, m.module, seed);
        rep.decorated_involution_holds =
            iso.isomorphic && m2.rep.decoration == m.decoration;
        if (!rep.decorated_involution_holds)
            rep.detail = iso.isomorphic ? "decorations differ" : "modules not isomorphic";
        return rep;
    }
    rep.decomposition_checked = true;
    auto m1 = mutate_rep(t, m.module, k);
    auto m2 = mutate_rep(m1.flipped, m1.rep, k);
    rep.extra_summand = m1.discarded;
    std::vector<LFRep> parts{m2.rep};
    if (m1.discarded[0] != 0 || m1.discarded[1] != 0)
        parts.push_back(planted_module(m2.rep.algebra, k, m1.discarded[0], m1.discarded[1]));
    LFRep sum = direct_sum(parts);
    IsoResult iso = is_isomorphic(sum, m.module, seed);
    rep.decomposition_holds = iso.isomorphic;
    if (!iso.isomorphic) rep.detail = "decomposition witness not found";
    return rep;
}

}  // namespace clorb
