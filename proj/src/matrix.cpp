#include "ohcp/matrix.hpp"

#include "ohcp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace ohcp {

std::string to_pq(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> ParseError { return ParseError("not a rational number: '" + text + "'"); };
    if (text.empty()) throw fail();

    auto is_int_literal = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    auto to_int = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return Integer(s, 10);
    };

    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int_literal(num) || !is_int_literal(den)) throw fail();
        Integer d = to_int(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational q(to_int(num), d);
        q.canonicalize();
        return q;
    }

    std::string mantissa = text;
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
        std::string exp_text = mantissa.substr(e + 1);
        if (!is_int_literal(exp_text) || exp_text.size() > 6) throw fail();
        exponent = std::stol(exp_text);
        mantissa.erase(e);
    }
    std::string digits = mantissa;
    if (auto dot = digits.find('.'); dot != std::string::npos) {
        exponent -= static_cast<long>(digits.size() - dot - 1);
        digits.erase(dot, 1);
        if (digits.empty() || digits == "-" || digits == "+") throw fail();
    }
    if (!is_int_literal(digits)) throw fail();
    Rational q(to_int(digits));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0)
        q /= scale;
    else
        q *= scale;
    q.canonicalize();
    return q;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= rows_) throw InputError("row index out of range");
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= cols_) throw InputError("column index out of range");
            s(i, j) = (*this)(row_idx[i], col_idx[j]);
        }
    }
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::size_t IntMatrix::nonzeros_in_row(std::size_t i) const {
    std::size_t n = 0;
    for (std::size_t j = 0; j < cols_; ++j) n += (*this)(i, j) != 0;
    return n;
}

std::size_t IntMatrix::nonzeros_in_col(std::size_t j) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows_; ++i) n += (*this)(i, j) != 0;
    return n;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

Integer IntMatrix::max_abs() const {
    Integer best = 0;
    for (const auto& v : data_)
        if (abs(v) > best) best = abs(v);
    return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Integer> multiply(const IntMatrix& a, std::span<const Integer> x) {
    if (x.size() != a.cols()) throw InputError("matrix-vector dimension mismatch");
    std::vector<Integer> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << '\n';
    }
    return os;
}

namespace {

// Fraction-free elimination in place; returns the rank and, for square
// input, leaves the determinant (up to the tracked sign) in the last pivot.
struct Elimination {
    std::size_t rank = 0;
    int sign = 1;
};

Elimination bareiss(IntMatrix& a) {
    Elimination e;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a(piv, c) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r) {
            a.swap_rows(piv, r);
            e.sign = -e.sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    e.rank = r;
    return e;
}

}  // namespace

Integer det_int(const IntMatrix& m) {
    if (!m.square()) throw InputError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix a = m;
    Elimination e = bareiss(a);
    if (e.rank < m.rows()) return 0;
    return e.sign * a(m.rows() - 1, m.cols() - 1);
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    return bareiss(a).rank;
}

}  // namespace ohcp
