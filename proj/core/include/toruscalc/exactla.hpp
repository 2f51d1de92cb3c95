#pragma once

// Exact integer and rational linear algebra. Nothing in toruscalc uses
// floating point; every rank, kernel and normal form below is exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toruscalc {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, std::span<const std::vector<T>> columns)
    {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        return m;
    }

    static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    std::vector<T> apply(std::span<const T> v) const
    {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (v[j] != 0)
                    out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

struct SmithForm {
    /// Nonzero invariant factors d1 | d2 | ... (all positive).
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
};

/// Smith normal form by unimodular row/column operations, pivoting on the
/// entry of least absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

/// True iff the given vectors span a direct summand of Z^n of rank equal to
/// the number of vectors. Throws std::invalid_argument on length mismatch.
bool is_direct_summand(std::span<const IntVector> vectors);

Integer gcd_of(std::span<const Integer> entries);
bool is_primitive(std::span<const Integer> v);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<RatVector> kernel_basis;
};

RankKernel rank_and_kernel(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

/// A subspace of Q^dim given by spanning vectors, kept in reduced echelon
/// form together with the coefficients expressing each echelon row in the
/// original generators. Supports membership, reduction and coordinates.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }
    std::size_t dimension() const { return rows_.size(); }
    std::size_t generator_count() const { return generators_; }

    /// Adds a generator; returns true if it enlarged the span.
    bool add(std::span<const Rational> v);

    /// v minus its projection along the echelon rows; zero iff v is in the span.
    RatVector reduce(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const;

    /// Coefficients c with v = sum c_i * generator_i, using only the
    /// generators that enlarged the span (the others get coefficient 0).
    std::optional<RatVector> coordinates(std::span<const Rational> v) const;

private:
    struct Row {
        std::size_t pivot;
        RatVector values;
        RatVector combination;  // in terms of generators
    };
    std::size_t dim_;
    std::size_t generators_ = 0;
    std::vector<Row> rows_;  // sorted by pivot
};

std::string to_string(const Rational& q);

}  // namespace toruscalc
