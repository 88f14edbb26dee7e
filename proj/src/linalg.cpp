#include "clorb/linalg.hpp"

#include <sstream>

namespace clorb {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw IndexOutOfRange("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw IndexOutOfRange("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMat QMat::operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw IndexOutOfRange("shape mismatch in +");
    QMat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw IndexOutOfRange("shape mismatch in -");
    QMat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw IndexOutOfRange("shape mismatch in *");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

QMat QMat::operator*(const mpq_class& c) const {
    QMat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMat QMat::hstack(const QMat& o) const {
    if (rows_ != o.rows_) throw IndexOutOfRange("hstack row mismatch");
    QMat r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

QMat QMat::vstack(const QMat& o) const {
    if (cols_ != o.cols_) throw IndexOutOfRange("vstack column mismatch");
    QMat r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

QMat QMat::submatrix(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
    if (r0 + r > rows_ || c0 + c > cols_) throw IndexOutOfRange("submatrix out of range");
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

void QMat::set_block(std::size_t r0, std::size_t c0, const QMat& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw IndexOutOfRange("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

std::vector<std::size_t> QMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        mpq_class inv = 1 / at(row, col);
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            mpq_class f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMat::rank() const {
    QMat m = *this;
    return m.rref().size();
}

QMat QMat::kernel_basis() const {
    QMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> frees;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) frees.push_back(j);
    QMat k(cols_, frees.size());
    for (std::size_t fi = 0; fi < frees.size(); ++fi) {
        std::size_t f = frees[fi];
        k.at(f, fi) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], fi) = -m.at(r, f);
    }
    return k;
}

QMat QMat::image_basis() const {
    QMat t = transpose();
    auto pivots = t.rref();
    QMat b(rows_, pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) b.at(i, j) = t.at(j, i);
    return b;
}

std::optional<QMat> QMat::solve(const QMat& b) const {
    auto X = solve_matrix(b);
    return X;
}

std::optional<QMat> QMat::solve_matrix(const QMat& B) const {
    if (B.rows() != rows_) throw IndexOutOfRange("solve shape mismatch");
    QMat aug = hstack(B);
    auto pivots = aug.rref();
    for (auto p : pivots)
        if (p >= cols_) return std::nullopt;
    QMat X(cols_, B.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < B.cols(); ++j) X.at(pivots[r], j) = aug.at(r, cols_ + j);
    return X;
}

std::optional<QMat> QMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    QMat aug = hstack(identity(rows_));
    auto pivots = aug.rref();
    if (pivots.size() != rows_) return std::nullopt;
    for (std::size_t r = 0; r < rows_; ++r)
        if (pivots[r] != r) return std::nullopt;
    return aug.submatrix(0, rows_, rows_, rows_);
}

std::string QMat::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) {
            out << at(i, j).get_str();
            if (j + 1 < cols_) out << " ";
        }
        out << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

QMat coordinates_in_basis(const QMat& basis, const QMat& vecs) {
    auto X = basis.solve_matrix(vecs);
    if (!X) throw Error("vector outside of spanned subspace");
    return *X;
}

QMat complete_basis(const QMat& inside, const QMat& ambient) {
    QMat cur = inside;
    std::size_t r = cur.rank();
    for (std::size_t j = 0; j < ambient.cols(); ++j) {
        if (cur.cols() == 0) {
            QMat cand = ambient.submatrix(0, j, ambient.rows(), 1);
            if (!cand.is_zero()) {
                cur = cand;
                r = 1;
            }
            continue;
        }
        QMat cand = cur.hstack(ambient.submatrix(0, j, ambient.rows(), 1));
        std::size_t nr = cand.rank();
        if (nr > r) {
            cur = cand;
            r = nr;
        }
    }
    return cur;
}

}  // namespace clorb
