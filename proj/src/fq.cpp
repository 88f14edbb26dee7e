#include "clorb/fq.hpp"

#include <functional>

namespace clorb {

FpMat FpMat::reduce(const QMat& m, std::uint64_t p) {
    FpMat r(p, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m.at(i, j);
            mpz_class num = q.get_num() % static_cast<long>(p);
            if (num < 0) num += static_cast<long>(p);
            mpz_class den = q.get_den() % static_cast<long>(p);
            if (den == 0) throw NonIntegerCoefficient("denominator vanishes mod p");
            // modular inverse of den
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
                throw NonIntegerCoefficient("denominator not invertible mod p");
            mpz_class v = (num * inv) % static_cast<long>(p);
            r.at(i, j) = v.get_ui();
        }
    return r;
}

FpMat FpMat::mul(const FpMat& o) const {
    FpMat r(p, rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            std::uint64_t v = at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < o.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p;
        }
    return r;
}

std::size_t FpMat::rank() const {
    FpMat m = *this;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t piv = rk;
        while (piv < rows && m.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
        // normalize and eliminate below
        std::uint64_t inv = 1, base = m.at(rk, col), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = col; j < cols; ++j) m.at(rk, j) = m.at(rk, j) * inv % p;
        for (std::size_t i = rk + 1; i < rows; ++i) {
            std::uint64_t f = m.at(i, col);
            if (!f) continue;
            for (std::size_t j = col; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) + (p - f) * m.at(rk, j)) % p;
        }
        ++rk;
    }
    return rk;
}

bool FpSubspace::contains(std::vector<std::uint64_t> v) const {
    const std::uint64_t p = basis.p;
    for (std::size_t r = 0; r < basis.rows; ++r) {
        std::uint64_t c = v[pivots[r]];
        if (!c) continue;
        for (std::size_t j = 0; j < basis.cols; ++j)
            v[j] = (v[j] + (p - c) * basis.at(r, j)) % p;
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

bool FpSubspace::stable_under(const FpMat& m) const {
    // m maps the ambient space to itself; check m * (basis row)^T in span.
    for (std::size_t r = 0; r < basis.rows; ++r) {
        std::vector<std::uint64_t> img(m.rows, 0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < m.cols; ++j) s = (s + m.at(i, j) * basis.at(r, j)) % m.p;
            img[i] = s;
        }
        if (!contains(std::move(img))) return false;
    }
    return true;
}

bool enumerate_subspaces(std::uint64_t p, std::size_t n, std::size_t t,
                         const std::function<bool(const FpSubspace&)>& cb) {
    if (t > n) return true;
    if (t == 0) {
        FpSubspace s;
        s.basis = FpMat(p, 0, n);
        return cb(s);
    }
    // choose pivot columns p_0 < ... < p_{t-1}
    std::vector<std::size_t> piv(t);
    for (std::size_t i = 0; i < t; ++i) piv[i] = i;
    auto next_comb = [&]() -> bool {
        std::size_t i = t;
        while (i-- > 0) {
            if (piv[i] + (t - i) <= n - 1 + 0) {
                if (piv[i] + 1 <= n - (t - i)) {
                    ++piv[i];
                    for (std::size_t j = i + 1; j < t; ++j) piv[j] = piv[j - 1] + 1;
                    return true;
                }
            }
        }
        return false;
    };
    while (true) {
        // free positions: (row r, col c) with c > piv[r], c not a pivot col
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (auto c : piv) is_piv[c] = true;
        for (std::size_t r = 0; r < t; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);
        FpSubspace s;
        s.basis = FpMat(p, t, n);
        s.pivots = piv;
        for (std::size_t r = 0; r < t; ++r) s.basis.at(r, piv[r]) = 1;
        // odometer over free positions
        std::vector<std::uint64_t> vals(free_pos.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                s.basis.at(free_pos[i].first, free_pos[i].second) = vals[i];
            if (!cb(s)) return false;
            std::size_t i = 0;
            for (; i < vals.size(); ++i) {
                if (++vals[i] < p) break;
                vals[i] = 0;
            }
            if (i == vals.size()) break;
        }
        if (!next_comb()) break;
    }
    return true;
}

}  // namespace clorb
