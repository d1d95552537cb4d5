#include "qlat/subspace.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace qlat {

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionError(std::string(op) + ": ambient dimensions differ (" + std::to_string(s.ambient_dim()) +
                             " vs " + std::to_string(t.ambient_dim()) + ")");
}

bool in_span(const ExactMatrix& basis, const ExactMatrix& columns) {
    if (columns.cols() == 0)
        return true;
    return rank(hstack(basis, columns)) == basis.cols();
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    return pos;
}

// Reads "[s, s, ...]" starting at `pos`; leaves `pos` after the closing bracket.
std::vector<GaussianRational> read_vector(std::string_view text, std::size_t& pos) {
    pos = skip_space(text, pos);
    if (pos >= text.size() || text[pos] != '[')
        throw ParseError("expected '['", pos);
    ++pos;
    std::vector<GaussianRational> out;
    for (;;) {
        pos = skip_space(text, pos);
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ']' && !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        try {
            out.push_back(parse_scalar(text.substr(start, pos - start)));
        } catch (const ParseError& e) {
            throw ParseError("bad scalar", start + e.position());
        }
        pos = skip_space(text, pos);
        if (pos >= text.size())
            throw ParseError("unterminated vector", pos);
        if (text[pos] == ']') {
            ++pos;
            return out;
        }
        if (text[pos] != ',')
            throw ParseError("expected ',' or ']'", pos);
        ++pos;
    }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) { return {ambient_dim, ExactMatrix(ambient_dim, 0)}; }

Subspace Subspace::full(std::size_t ambient_dim) { return {ambient_dim, ExactMatrix::identity(ambient_dim)}; }

Subspace Subspace::span_of(const ExactMatrix& m) {
    // Row-reducing the transpose yields a canonical basis of the row space of
    // m^T, which is the column space of m.
    const RrefResult r = rref(m.transpose());
    ExactMatrix basis(m.rows(), r.rank);
    for (std::size_t k = 0; k < r.rank; ++k)
        for (std::size_t row = 0; row < m.rows(); ++row)
            basis(row, k) = r.reduced(k, row);
    return {m.rows(), std::move(basis)};
}

StateVector::StateVector(ExactMatrix components) : components_(std::move(components)) {
    if (components_.cols() != 1)
        throw DimensionError("state vector must be a single column");
    if (components_.is_zero())
        throw std::invalid_argument("state vector must have a nonzero component");
}

StateVector::StateVector(std::initializer_list<GaussianRational> components)
    : StateVector(ExactMatrix::column(std::vector<GaussianRational>(components))) {}

Subspace image(const ExactMatrix& m) { return Subspace::span_of(m); }

bool leq(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "leq");
    if (s.dim() > t.dim())
        return false;
    return in_span(t.basis(), s.basis());
}

Subspace meet(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "meet");
    if (s.is_zero() || t.is_zero())
        return Subspace::zero(s.ambient_dim());

    // Solutions of B_s x = B_t y; the intersection is spanned by B_s x.
    const ExactMatrix k = kernel_basis(hstack(s.basis(), -t.basis()));
    ExactMatrix x(s.dim(), k.cols());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < k.cols(); ++c)
            x(r, c) = k(r, c);
    return Subspace::span_of(s.basis() * x);
}

Subspace orthocomplement(const Subspace& s) { return Subspace::span_of(kernel_basis(s.basis().conjugate_transpose())); }

Subspace join(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "join");
    Subspace via_complements = orthocomplement(meet(orthocomplement(s), orthocomplement(t)));
    if (via_complements != Subspace::span_of(hstack(s.basis(), t.basis())))
        throw std::logic_error("join: complement form disagrees with direct span for " + to_string(s) + " and " +
                               to_string(t));
    return via_complements;
}

ExactMatrix projector_of(const Subspace& s) {
    const std::size_t n = s.ambient_dim();
    if (s.is_zero())
        return ExactMatrix::zero(n, n);
    const ExactMatrix& b = s.basis();
    const ExactMatrix b_star = b.conjugate_transpose();
    return b * inverse(b_star * b) * b_star;
}

bool contains_vector(const Subspace& s, const ExactMatrix& column) {
    if (column.rows() != s.ambient_dim() || column.cols() != 1)
        throw DimensionError("contains_vector: vector does not live in the ambient space");
    return in_span(s.basis(), column);
}

bool contains_vector(const Subspace& s, const StateVector& v) { return contains_vector(s, v.components()); }

bool maps_into(const ExactMatrix& p, const Subspace& s) {
    if (!p.is_square() || p.rows() != s.ambient_dim())
        throw DimensionError("maps_into: operator side does not match ambient dimension");
    return in_span(s.basis(), p * s.basis());
}

std::string to_string(const Subspace& s) {
    if (s.is_zero())
        return "{0}";
    if (s.is_full())
        return "C^" + std::to_string(s.ambient_dim());
    std::string out = "span{";
    for (std::size_t c = 0; c < s.dim(); ++c) {
        if (c)
            out += ", ";
        out += vector_to_string(s.basis().col(c));
    }
    return out + "}";
}

Subspace parse_span(std::string_view text, std::size_t ambient_dim) {
    std::size_t pos = skip_space(text, 0);
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    const std::string_view body = text.substr(0, end);

    if (body.substr(pos) == "{0}")
        return Subspace::zero(ambient_dim);
    if (body.substr(pos, 2) == "C^") {
        const std::string digits = std::to_string(ambient_dim);
        if (std::string(body.substr(pos + 2)) != digits)
            throw ParseError("C^n does not match ambient dimension " + std::to_string(ambient_dim), pos + 2);
        return Subspace::full(ambient_dim);
    }
    if (body.substr(pos, 5) != "span{")
        throw ParseError("expected '{0}', 'C^n' or 'span{'", pos);
    pos += 5;

    std::vector<GaussianRational> entries;
    std::size_t count = 0;
    for (;;) {
        const std::size_t vec_pos = skip_space(body, pos);
        std::vector<GaussianRational> v = read_vector(body, pos);
        if (v.size() != ambient_dim)
            throw ParseError("vector length does not match ambient dimension", vec_pos);
        entries.insert(entries.end(), v.begin(), v.end());
        ++count;
        pos = skip_space(body, pos);
        if (pos < body.size() && body[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < body.size() && body[pos] == '}' && pos + 1 == body.size())
            break;
        throw ParseError("expected ',' or closing '}'", pos);
    }
    // entries are vector-major; transpose into columns.
    return Subspace::span_of(ExactMatrix(count, ambient_dim, std::move(entries)).transpose());
}

bool SubspaceLess::operator()(const Subspace& a, const Subspace& b) const {
    if (a.ambient_dim() != b.ambient_dim())
        return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    return to_string(a) < to_string(b);
}

}  // namespace qlat
