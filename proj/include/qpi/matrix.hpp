#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qpi {

using Int = mpz_class;
using IntVector = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers, 0-based indexing.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntVector apply(const IntVector& v) const;

    bool is_skew_symmetric() const;
    bool is_zero() const;

    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Throws SkewSymmetryViolated when m is not square with m^T = -m.
void require_skew(const IntMatrix& m);

} // namespace qpi
