#include "clorb/cluster.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace clorb {

namespace {
long pos(long a) { return a > 0 ? a : 0; }
}  // namespace

bool ExchangeMatrix::is_skew_symmetrizable() const {
    std::size_t m = n();
    if (d.size() != m) return false;
    for (long di : d)
        if (di <= 0) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i].size() != m) return false;
        for (std::size_t j = 0; j < m; ++j)
            if (d[i] * b[i][j] + d[j] * b[j][i] != 0) return false;
    }
    return true;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, std::size_t k) {
    std::size_t n = B.n();
    if (k >= n) throw IndexOutOfRange("mutation direction out of range");
    ExchangeMatrix r = B;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k)
                r.b[i][j] = -B.b[i][j];
            else
                r.b[i][j] = B.b[i][j] + pos(-B.b[i][k]) * B.b[k][j] + B.b[i][k] * pos(B.b[k][j]);
        }
    return r;
}

std::vector<std::string> seed_variables(std::size_t n, SeedMode mode) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    if (mode == SeedMode::principal)
        for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
    return vars;
}

Seed initial_seed(const ExchangeMatrix& B, SeedMode mode) {
    if (!B.is_skew_symmetrizable()) throw Error("matrix is not skew-symmetrizable");
    Seed s;
    s.mode = mode;
    s.matrix = B;
    auto vars = seed_variables(B.n(), mode);
    for (std::size_t i = 0; i < B.n(); ++i) s.cluster.push_back(LaurentPoly::variable(vars, i));
    for (std::size_t i = 0; i < B.n(); ++i) {
        std::vector<int> p(B.n(), 0);
        if (mode == SeedMode::principal) p[i] = 1;
        s.coeffs.push_back(p);
    }
    return s;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    std::size_t n = s.n();
    if (k >= n) throw IndexOutOfRange("mutation direction out of range");
    auto vars = seed_variables(n, s.mode);
    const auto& pk = s.coeffs[k];

    // y-exponent prefactors [p_k]_+ and [p_k^{-1}]_+ of the two exchange
    // monomials; both are trivial in coefficient-free mode.
    LaurentPoly mon_plus = LaurentPoly::constant(vars, 1);
    LaurentPoly mon_minus = LaurentPoly::constant(vars, 1);
    if (s.mode == SeedMode::principal) {
        std::vector<int> eplus(2 * n, 0), eminus(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            eplus[n + j] = std::max(pk[j], 0);
            eminus[n + j] = std::max(-pk[j], 0);
        }
        mon_plus = LaurentPoly::monomial(vars, eplus);
        mon_minus = LaurentPoly::monomial(vars, eminus);
    }
    for (std::size_t i = 0; i < n; ++i) {
        long bik = s.matrix.b[i][k];
        if (bik > 0) mon_plus = mon_plus * s.cluster[i].pow(bik);
        if (bik < 0) mon_minus = mon_minus * s.cluster[i].pow(-bik);
    }
    LaurentPoly numerator = mon_plus + mon_minus;
    LaurentPoly xk;
    try {
        xk = numerator.div_exact(s.cluster[k]);
    } catch (const DivNotExact&) {
        throw NonLaurentResult("exchange relation did not divide exactly");
    }

    Seed r = s;
    r.matrix = mutate_matrix(s.matrix, k);
    r.cluster[k] = xk;
    if (s.mode == SeedMode::principal) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) {
                for (std::size_t j = 0; j < n; ++j) r.coeffs[k][j] = -pk[j];
            } else {
                long bki = s.matrix.b[k][i];
                for (std::size_t j = 0; j < n; ++j)
                    r.coeffs[i][j] = s.coeffs[i][j] +
                                     static_cast<int>(pos(bki)) * pk[j] -
                                     static_cast<int>(bki) * std::min(pk[j], 0);
            }
        }
    }
    return r;
}

LaurentPoly extract_f_polynomial(const LaurentPoly& X, std::size_t n) {
    std::vector<std::string> yvars;
    for (std::size_t i = 1; i <= n; ++i) yvars.push_back("y" + std::to_string(i));
    LaurentPoly f = X.project_onto(yvars);
    if (!f.is_polynomial()) throw NotPolynomial("F-polynomial has negative exponents");
    if (f.constant_term() != 1) throw NotPolynomial("F-polynomial has constant term != 1");
    return f;
}

std::vector<long> extract_g_vector(const LaurentPoly& X, const ExchangeMatrix& initial) {
    std::size_t n = initial.n();
    if (X.is_zero()) throw NotHomogeneous("zero cluster variable");
    bool first = true;
    std::vector<long> deg(n, 0);
    for (const auto& [e, c] : X.terms()) {
        if (e.size() != 2 * n) throw IndexOutOfRange("expected principal-mode variable");
        std::vector<long> t(n, 0);
        for (std::size_t i = 0; i < n; ++i) t[i] += e[i];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) t[i] -= e[n + j] * initial.b[i][j];
        if (first) {
            deg = t;
            first = false;
        } else if (t != deg) {
            throw NotHomogeneous("cluster variable is not homogeneous");
        }
    }
    return deg;
}

std::vector<int> cluster_h_vector(const LaurentPoly& F, const ExchangeMatrix& B) {
    std::size_t n = B.n();
    if (F.nvars() != n) throw IndexOutOfRange("F-polynomial arity mismatch");
    std::vector<std::vector<int>> bindings(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        bindings[i][i] = -1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) bindings[i][j] = static_cast<int>(pos(-B.b[j][i]));
    }
    return tropical_eval(F, bindings);
}

const Seed& ClusterPattern::walk(const std::vector<std::size_t>& address) {
    // Cache keys are reduced addresses; immediate repeats cancel by the
    // involutivity of mutation.
    std::vector<std::size_t> reduced;
    for (std::size_t k : address) {
        if (k >= root_.n()) throw IndexOutOfRange("mutation direction out of range");
        if (!reduced.empty() && reduced.back() == k)
            reduced.pop_back();
        else
            reduced.push_back(k);
    }
    if (reduced.empty()) return root_;
    auto it = cache_.find(reduced);
    if (it != cache_.end()) return it->second;
    std::vector<std::size_t> prefix(reduced.begin(), reduced.end() - 1);
    const Seed& prev = walk(prefix);
    auto [jt, ok] = cache_.emplace(reduced, mutate_seed(prev, reduced.back()));
    return jt->second;
}

namespace {

/// Canonical key of a seed up to simultaneous permutation: sort cluster
/// entries (ties broken by matrix columns), then serialize.
std::string canonical_key(const Seed& s, std::size_t* collision_flag_matrix_differs,
                          const std::string* other) {
    std::size_t n = s.n();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (s.cluster[a] < s.cluster[b]) return true;
        if (s.cluster[b] < s.cluster[a]) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (s.matrix.b[i][a] != s.matrix.b[i][b]) return s.matrix.b[i][a] < s.matrix.b[i][b];
        }
        return false;
    });
    std::ostringstream cluster_part, rest;
    for (std::size_t i = 0; i < n; ++i) cluster_part << s.cluster[perm[i]].str() << ";";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rest << s.matrix.b[perm[i]][perm[j]] << ",";
        rest << "|";
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (int v : s.coeffs[perm[i]]) rest << v << ",";
        rest << "|";
    }
    (void)collision_flag_matrix_differs;
    (void)other;
    return cluster_part.str() + "#" + rest.str();
}

}  // namespace

ExchangeGraph exchange_graph_bfs(const Seed& root, std::size_t depth) {
    ExchangeGraph g;
    std::map<std::string, long> index;          // canonical key -> node
    std::map<std::string, std::string> by_cluster;  // cluster part -> full key
    auto intern = [&](const Seed& s) -> long {
        std::string key = canonical_key(s, nullptr, nullptr);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        std::string cpart = key.substr(0, key.find('#'));
        auto jt = by_cluster.find(cpart);
        if (jt != by_cluster.end() && jt->second != key) ++g.cluster_collisions;
        by_cluster.emplace(cpart, key);
        long id = static_cast<long>(g.nodes.size());
        index.emplace(std::move(key), id);
        g.nodes.push_back({s, std::vector<long>(s.n(), -1)});
        return id;
    };

    long root_id = intern(root);
    std::deque<std::pair<long, std::size_t>> queue{{root_id, 0}};
    std::set<long> expanded;
    g.closed = true;
    std::set<std::pair<long, long>> edge_set;
    while (!queue.empty()) {
        auto [id, dist] = queue.front();
        queue.pop_front();
        if (expanded.count(id)) continue;
        if (dist >= depth + 1) continue;
        if (dist == depth) {
            // Frontier node: only expand to know whether the graph closed.
        }
        expanded.insert(id);
        Seed s = g.nodes[static_cast<std::size_t>(id)].seed;
        for (std::size_t k = 0; k < s.n(); ++k) {
            Seed t = mutate_seed(s, k);
            std::string key = canonical_key(t, nullptr, nullptr);
            auto it = index.find(key);
            if (it == index.end()) {
                if (dist == depth) {
                    g.closed = false;  // unexplored frontier beyond depth
                    continue;
                }
                long nid = intern(t);
                g.nodes[static_cast<std::size_t>(id)].neighbors[k] = nid;
                edge_set.emplace(std::min(id, nid), std::max(id, nid));
                queue.emplace_back(nid, dist + 1);
            } else {
                g.nodes[static_cast<std::size_t>(id)].neighbors[k] = it->second;
                edge_set.emplace(std::min(id, it->second), std::max(id, it->second));
            }
        }
    }
    g.edges = edge_set.size();
    return g;
}

std::string exchange_graph_dot(const ExchangeGraph& g, const ExchangeMatrix& initial) {
    std::ostringstream out;
    out << "graph exchange {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const Seed& s = g.nodes[i].seed;
        std::ostringstream label;
        if (s.mode == SeedMode::principal) {
            for (std::size_t l = 0; l < s.n(); ++l) {
                auto gv = extract_g_vector(s.cluster[l], initial);
                label << "(";
                for (std::size_t j = 0; j < gv.size(); ++j)
                    label << gv[j] << (j + 1 < gv.size() ? "," : "");
                label << ")";
                if (l + 1 < s.n()) label << "\\n";
            }
        } else {
            label << "seed " << i;
        }
        out << "  n" << i << " [label=\"" << label.str() << "\"];\n";
    }
    std::set<std::pair<long, long>> seen;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (long j : g.nodes[i].neighbors) {
            if (j < 0) continue;
            auto e = std::make_pair(std::min<long>(i, j), std::max<long>(i, j));
            if (seen.insert(e).second)
                out << "  n" << e.first << " -- n" << e.second << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace clorb
