#include "fpn/matrix.hpp"

namespace fpn {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols,
                         const std::vector<long>& entries, const FieldSpec& field) {
    if (entries.size() != rows * cols)
        throw InputError("matrix initializer has wrong length");
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.data_[i] = Scalar::from_int(entries[i], field);
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    if (!(v.field() == field_))
        throw InputError("matrix entry from field " + v.field().str() +
                         " placed in a " + field_.str() + " matrix");
    data_[r * cols_ + c] = v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw InputError("mixed-field matrix product");
    if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
    Matrix out(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.set(i, j, out.at(i, j) + a * b);
            }
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix::Echelon Matrix::rref() const {
    Echelon e{*this, {}, 0};
    Matrix& m = e.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pr = r;
        while (pr < rows_ && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols_; ++j) {
                Scalar tmp = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, tmp);
            }
        const Scalar piv_inv = m.at(r, c).inv();
        for (std::size_t j = c; j < cols_; ++j) m.set(r, j, m.at(r, j) * piv_inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                m.set(i, j, m.at(i, j) - f * m.at(r, j));
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel_basis() const {
    const Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    Matrix basis(cols_ - e.rank, cols_, field_);
    std::size_t row = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(row, f, Scalar::one(field_));
        for (std::size_t t = 0; t < e.pivots.size(); ++t)
            basis.set(row, e.pivots[t], e.reduced.at(t, f).neg());
        ++row;
    }
    return basis;
}

} // namespace fpn
