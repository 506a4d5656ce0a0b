#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ohcp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Formats a rational as "p/q" in lowest terms, including integers ("3/1").
std::string to_pq(const Rational& q);

/// Parses "p/q", "p" or a decimal literal such as "-1.25" exactly.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Rows and columns are taken in the order given (repeats allowed).
    IntMatrix submatrix(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::size_t nonzeros_in_row(std::size_t i) const;
    std::size_t nonzeros_in_col(std::size_t j) const;
    bool is_zero() const;

    /// Largest |entry|; zero for an empty matrix.
    Integer max_abs() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Matrix-vector product over the integers.
std::vector<Integer> multiply(const IntMatrix& a, std::span<const Integer> x);

/// Prints "m n" followed by one whitespace-separated line per row.
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_int(const IntMatrix& m);

/// Rank over the rationals, again fraction-free.
std::size_t rank(const IntMatrix& m);

}  // namespace ohcp
