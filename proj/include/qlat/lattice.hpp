#pragma once

#include "qlat/subspace.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlat {

class ClosureCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ClosureOptions {
    std::size_t element_cap = 256;
};

/// A finite lattice of subspaces with precomputed order, meet and join tables.
///
/// Elements are sorted by dimension; within a dimension they keep the order in
/// which the closure first produced them. Index 0 is {0} and the last index is
/// the ambient space. Tables hold element indices, so law checks never touch
/// the underlying linear algebra.
class FiniteLattice {
public:
    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return elements_.size() - 1; }

    const std::vector<Subspace>& elements() const noexcept { return elements_; }
    const Subspace& element(std::size_t i) const { return elements_.at(i); }
    std::string label(std::size_t i) const { return to_string(element(i)); }

    bool leq(std::size_t a, std::size_t b) const { return order_[a * size() + b] != 0; }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }

    std::optional<std::size_t> index_of(const Subspace& s) const;
    bool contains(const Subspace& s) const { return index_of(s).has_value(); }
    /// Index of the orthocomplement when it is an element.
    std::optional<std::size_t> complement(std::size_t i) const { return complement_[i]; }

    /// b covers a: a < b with nothing strictly in between.
    bool covers(std::size_t a, std::size_t b) const;

    friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.elements_ == b.elements_;
    }

private:
    friend FiniteLattice close_and_build(const std::vector<Subspace>&, std::size_t, ClosureOptions);

    std::size_t ambient_dim_ = 0;
    std::vector<Subspace> elements_;
    std::vector<char> order_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
    std::vector<std::optional<std::size_t>> complement_;
};

/// Smallest set containing the seeds, {0} and C^n that is closed under meet
/// and join. Throws DimensionError if a seed lives elsewhere and
/// ClosureCapExceeded once more than `element_cap` elements appear.
FiniteLattice close_and_build(const std::vector<Subspace>& seeds, std::size_t ambient_dim, ClosureOptions options = {});

/// Same set of elements, irrespective of ordering.
bool same_elements(const FiniteLattice& a, const FiniteLattice& b);

struct Violation {
    std::vector<std::size_t> elements;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
};

struct LawReport {
    std::string law;
    std::size_t cases_checked = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> examples;

    bool holds() const noexcept { return violation_count == 0; }
};

struct LawOptions {
    std::size_t max_examples = 10;
};

/// (k ∨ m) ∧ o = (k ∧ o) ∨ (m ∧ o) over all ordered triples (k, m, o).
LawReport check_distributive(const FiniteLattice& l, LawOptions options = {});
/// a ≤ c  ⇒  a ∨ (b ∧ c) = (a ∨ b) ∧ c over all triples (a, b, c).
LawReport check_modular(const FiniteLattice& l, LawOptions options = {});
/// a ≤ b  ⇒  b = a ∨ (a' ∧ b) over all pairs (a, b).
LawReport check_orthomodular(const FiniteLattice& l, const std::function<std::size_t(std::size_t)>& complement,
                             LawOptions options = {});
/// Uses the subspace orthocomplement; throws std::invalid_argument when some
/// element's complement is missing from the lattice.
LawReport check_orthomodular(const FiniteLattice& l, LawOptions options = {});

/// Partial order, commutativity, associativity, idempotence, absorption and
/// the order/meet/join consistency, each as its own report.
std::vector<LawReport> check_lattice_axioms(const FiniteLattice& l, LawOptions options = {});

bool is_distributive(const FiniteLattice& l);

/// Elements covering the bottom.
std::vector<std::size_t> atoms(const FiniteLattice& l);

/// Covering pairs (lower, upper) in index order.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FiniteLattice& l);

/// Hasse diagram as a DOT digraph, edges pointing upward.
std::string to_dot(const FiniteLattice& l, const std::string& graph_name = "lattice");

}  // namespace qlat
