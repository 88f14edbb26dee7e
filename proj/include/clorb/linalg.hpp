#ifndef CLORB_LINALG_HPP
#define CLORB_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "clorb/errors.hpp"

namespace clorb {

/// Dense matrix over exact rationals. Column vectors are n x 1 matrices.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<std::vector<mpq_class>>& rows);
    static QMat from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpq_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat operator*(const mpq_class& c) const;
    QMat transpose() const;

    QMat hstack(const QMat& o) const;
    QMat vstack(const QMat& o) const;
    QMat submatrix(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t r0, std::size_t c0, const QMat& b);

    std::size_t rank() const;
    /// Basis of the (right) kernel, returned as the columns of a matrix.
    QMat kernel_basis() const;
    /// Basis of the column space in reduced column echelon form.
    QMat image_basis() const;
    /// First solution (free variables set to 0) of A x = b, if consistent.
    std::optional<QMat> solve(const QMat& b) const;
    /// Solve A X = B columnwise; nullopt if any column is inconsistent.
    std::optional<QMat> solve_matrix(const QMat& B) const;
    std::optional<QMat> inverse() const;

    /// Row-reduce in place; returns pivot column indices.
    std::vector<std::size_t> rref();

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Coordinates of the columns of `vecs` in the basis given by the columns of
/// `basis` (which must be independent). Throws if some vector is outside.
QMat coordinates_in_basis(const QMat& basis, const QMat& vecs);

/// Extend the independent columns of `inside` to a basis of the column space
/// of `ambient` by greedily adding columns of `ambient`.
QMat complete_basis(const QMat& inside, const QMat& ambient);

}  // namespace clorb

#endif
