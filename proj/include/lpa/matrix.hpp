#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace lpa {

// Dense integer matrix with arbitrary-precision entries, row-major.
// Empty shapes (r x 0, 0 x c) are legal everywhere.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += factor * row b
    void add_row_multiple(std::size_t a, std::size_t b, const mpz_class& factor);
    // col a += factor * col b
    void add_col_multiple(std::size_t a, std::size_t b, const mpz_class& factor);
    void negate_row(std::size_t i);

    // Exact determinant (Bareiss fraction-free elimination); matrix must be square.
    mpz_class determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

}  // namespace lpa
