#pragma once

#include "qlat/exactlin.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace qlat {

/// A (closed) complex-linear subspace of C^n.
///
/// The basis is stored in reduced column-echelon form: each column has a
/// leading 1 in its pivot row, every other column is zero in that row, and
/// columns are ordered by pivot row. Two subspaces are therefore equal exactly
/// when their basis matrices are equal entry-wise.
class Subspace {
public:
    /// {0} in C^n.
    static Subspace zero(std::size_t ambient_dim);
    /// C^n itself.
    static Subspace full(std::size_t ambient_dim);
    /// Canonical span of the columns of `m` (may be dependent or zero).
    static Subspace span_of(const ExactMatrix& m);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const ExactMatrix& basis() const noexcept { return basis_; }

    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient_dim, ExactMatrix basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    std::size_t ambient_dim_ = 0;
    ExactMatrix basis_;
};

/// A nonzero column vector, the carrier of a prepared state.
class StateVector {
public:
    explicit StateVector(ExactMatrix components);
    StateVector(std::initializer_list<GaussianRational> components);

    std::size_t ambient_dim() const noexcept { return components_.rows(); }
    const ExactMatrix& components() const noexcept { return components_; }

private:
    ExactMatrix components_;
};

/// Column space of `m`.
Subspace image(const ExactMatrix& m);

bool leq(const Subspace& s, const Subspace& t);
Subspace meet(const Subspace& s, const Subspace& t);
Subspace orthocomplement(const Subspace& s);

/// Least upper bound, computed as (s⊥ ∧ t⊥)⊥ and checked against the span of
/// the stacked bases. A disagreement throws std::logic_error.
Subspace join(const Subspace& s, const Subspace& t);

/// Orthogonal projector B (B*B)^-1 B* onto `s`.
ExactMatrix projector_of(const Subspace& s);

bool contains_vector(const Subspace& s, const StateVector& v);
bool contains_vector(const Subspace& s, const ExactMatrix& column);

/// True iff p maps every vector of s back into s.
bool maps_into(const ExactMatrix& p, const Subspace& s);

/// "{0}", "C^n" or "span{[..], [..]}" using the canonical basis columns.
std::string to_string(const Subspace& s);
/// Inverse of to_string. The result is re-canonicalized, so any spanning set
/// is accepted inside `span{...}`.
Subspace parse_span(std::string_view text, std::size_t ambient_dim);

/// Orders subspaces by dimension, then by canonical text. Used for stable
/// catalogues and map keys.
struct SubspaceLess {
    bool operator()(const Subspace& a, const Subspace& b) const;
};

}  // namespace qlat
