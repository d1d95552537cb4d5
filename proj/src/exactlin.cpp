#include "qlat/exactlin.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace qlat {

namespace {

std::string rational_to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    std::string out = num.str();
    if (den != 1)
        out += "/" + den.str();
    return out;
}

// Recursive-descent reader over the scalar grammar.
class ScalarReader {
public:
    explicit ScalarReader(std::string_view text) : text_(text) {}

    GaussianRational read() {
        if (text_.empty())
            fail("empty scalar");

        const bool negative = accept('-');
        if (accept('i')) {
            expect_end();
            return {0, negative ? -1 : 1};
        }
        Rational first = read_rational();
        if (negative)
            first = -first;
        if (accept('i')) {
            expect_end();
            return {0, first};
        }
        if (at_end())
            return {first, 0};

        bool im_negative = false;
        if (accept('-'))
            im_negative = true;
        else if (!accept('+'))
            fail("expected '+', '-', 'i' or end of scalar");

        Rational second = 1;
        if (!peek('i'))
            second = read_rational();
        if (!accept('i'))
            fail("expected 'i' after imaginary coefficient");
        expect_end();
        return {first, im_negative ? Rational(-second) : second};
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char c) const { return !at_end() && text_[pos_] == c; }

    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void expect_end() const {
        if (!at_end())
            fail("unexpected trailing character '" + std::string(1, text_[pos_]) + "'");
    }

    Integer read_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Rational read_rational() {
        Integer num = read_digits();
        if (!accept('/'))
            return Rational(num);
        const std::size_t den_pos = pos_;
        Integer den = read_digits();
        if (den == 0)
            throw ParseError("zero denominator", den_pos);
        return Rational(num, den);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch");
}

}  // namespace

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero");
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string to_string(const GaussianRational& z) {
    if (z.im() == 0)
        return rational_to_string(z.re());

    std::string out;
    Rational im = z.im();
    if (z.re() != 0) {
        out = rational_to_string(z.re());
        out += im < 0 ? "-" : "+";
        if (im < 0)
            im = -im;
    } else if (im < 0) {
        out = "-";
        im = -im;
    }
    if (im != 1)
        out += rational_to_string(im);
    out += "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

GaussianRational parse_scalar(std::string_view text) { return ScalarReader(text).read(); }

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows * cols");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<GaussianRational>& entries) {
    return {entries.size(), 1, entries};
}

ExactMatrix ExactMatrix::col(std::size_t c) const {
    ExactMatrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        out(r, 0) = (*this)(r, c);
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c).conj();
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero())
            return false;
    return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require_same_shape(*this, o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require_same_shape(*this, o, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
    for (auto& z : data_)
        z *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions differ");
    ExactMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussianRational& lhs = a(r, k);
            if (lhs.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) += lhs * b(k, c);
        }
    return out;
}

ExactMatrix conjugate_transpose(const ExactMatrix& m) { return m.conjugate_transpose(); }

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("hstack: row counts differ");
    ExactMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols())
        throw DimensionError("vstack: column counts differ");
    std::vector<GaussianRational> entries = a.entries();
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return {a.rows() + b.rows(), a.cols(), std::move(entries)};
}

std::string vector_to_string(const ExactMatrix& column) {
    std::string out = "[";
    for (std::size_t r = 0; r < column.rows(); ++r) {
        if (r)
            out += ", ";
        out += to_string(column(r, 0));
    }
    return out + "]";
}

std::string to_string(const ExactMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            out += ", ";
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out += ", ";
            out += to_string(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << to_string(m); }

RrefResult rref(const ExactMatrix& m) {
    RrefResult result{m, {}, 0};
    ExactMatrix& a = result.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (!a(r, c).is_zero()) {
                found = r;
                break;
            }
        if (found == rows)
            continue;

        if (found != pivot_row)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(a(found, k), a(pivot_row, k));

        const GaussianRational scale = a(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            a(pivot_row, k) *= scale;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, c).is_zero())
                continue;
            const GaussianRational factor = a(r, c);
            for (std::size_t k = c; k < cols; ++k)
                a(r, k) -= factor * a(pivot_row, k);
        }
        result.pivots.push_back(c);
        ++pivot_row;
    }
    result.rank = result.pivots.size();
    return result;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;

    ExactMatrix basis(cols, cols - r.rank);
    std::size_t out = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        basis(free, out) = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            basis(r.pivots[k], out) = -r.reduced(k, free);
        ++out;
    }
    return basis;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square())
        throw std::domain_error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const RrefResult r = rref(hstack(m, ExactMatrix::identity(n)));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
        throw std::domain_error("inverse of a singular matrix");
    ExactMatrix out(n, n);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t c = 0; c < n; ++c)
            out(row, c) = r.reduced(row, n + c);
    return out;
}

bool is_hermitian(const ExactMatrix& m) { return m.is_square() && m == m.conjugate_transpose(); }

bool is_idempotent(const ExactMatrix& m) { return m.is_square() && m * m == m; }

bool is_projector(const ExactMatrix& m) { return is_hermitian(m) && is_idempotent(m); }

bool commutes(const ExactMatrix& a, const ExactMatrix& b) { return a * b == b * a; }

}  // namespace qlat
