#ifndef CLORB_FQ_HPP
#define CLORB_FQ_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "clorb/linalg.hpp"

namespace clorb {

/// Small dense matrix over F_p, row-major.
struct FpMat {
    std::uint64_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FpMat() = default;
    FpMat(std::uint64_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c) {}
    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static FpMat reduce(const QMat& m, std::uint64_t p);
    FpMat mul(const FpMat& o) const;
    std::size_t rank() const;
};

/// Row-echelon subspace of F_p^n of a fixed dimension; rows are the basis.
struct FpSubspace {
    FpMat basis;                       // t x n, reduced row echelon
    std::vector<std::size_t> pivots;   // pivot column per row

    /// Reduce a vector against the basis in place; returns true if it lies
    /// in the subspace (reduces to zero).
    bool contains(std::vector<std::uint64_t> v) const;
    /// Every row of m (times the subspace test) lies in the subspace.
    bool stable_under(const FpMat& m) const;
};

/// Enumerate all t-dimensional subspaces of F_p^n, invoking the callback
/// with each reduced-row-echelon basis. Returns false if the enumeration
/// was aborted by the callback returning false.
bool enumerate_subspaces(std::uint64_t p, std::size_t n, std::size_t t,
                         const std::function<bool(const FpSubspace&)>& cb);

}  // namespace clorb

#endif
