#pragma once

// Exact arithmetic over the Gaussian rationals Q(i) and dense matrices over it.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown by the scalar and input parsers. `position` is a 0-based offset
/// into the text handed to the parser.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A complex number re + im*i with arbitrary-precision rational parts.
/// Both parts are kept in lowest terms with positive denominators.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {}  // NOLINT: implicit from integers is intended
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {0, 1}; }
    static GaussianRational fraction(long long num, long long den) { return Rational(num, den); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, which stays in Q.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Canonical text: lowest terms, `/1` omitted, imaginary part with an explicit
/// sign and a trailing `i`, unit imaginary coefficients elided ("1+i", "-i").
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses `[-]p[/q][(+|-)[r[/s]]i]` or the pure-imaginary form `[-][r[/s]]i`.
/// Throws ParseError on malformed text or a zero denominator.
GaussianRational parse_scalar(std::string_view text);

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    /// Row-list construction; all rows must have equal length.
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix column(const std::vector<GaussianRational>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<GaussianRational>& entries() const noexcept { return data_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix col(std::size_t c) const;
    ExactMatrix transpose() const;
    ExactMatrix conjugate_transpose() const;
    bool is_zero() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const GaussianRational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator-(ExactMatrix a) { return a *= GaussianRational(-1); }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

ExactMatrix conjugate_transpose(const ExactMatrix& m);
/// [a | b]; row counts must agree.
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
/// [a ; b]; column counts must agree.
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

/// "[[a, b], [c, d]]" for matrices, "[a, b]" for a single column.
std::string to_string(const ExactMatrix& m);
std::string vector_to_string(const ExactMatrix& column);
std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row; pivots are scaled to 1 and cleared
/// above and below.
RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

/// Columns form a basis of {x : m x = 0}, one per free column of rref(m).
ExactMatrix kernel_basis(const ExactMatrix& m);

/// Throws std::domain_error for singular or non-square input.
ExactMatrix inverse(const ExactMatrix& m);

bool is_hermitian(const ExactMatrix& m);
bool is_idempotent(const ExactMatrix& m);
/// Hermitian and idempotent.
bool is_projector(const ExactMatrix& m);
bool commutes(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace qlat
