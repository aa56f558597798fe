#ifndef FPN_MATRIX_HPP
#define FPN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fpn/field.hpp"

namespace fpn {

/**
 * Dense matrix over a single exact field. Plain exact Gaussian elimination
 * is all the linear algebra the rest of the project needs: rank, right
 * kernel bases and reduced row echelon form.
 *
 * Immutable in spirit: every operation returns a fresh value.
 */
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    static Matrix identity(std::size_t n, const FieldSpec& field);
    // Row-major integer initialization, mapped into the field.
    static Matrix from_ints(std::size_t rows, std::size_t cols,
                            const std::vector<long>& entries, const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);

    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;

    struct Echelon;
    Echelon rref() const;

    std::size_t rank() const;
    // Rows form a basis of {x : this * x = 0}; (cols - rank) rows.
    Matrix kernel_basis() const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

struct Matrix::Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank = 0;
};

} // namespace fpn

#endif
