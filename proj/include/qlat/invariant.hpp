#pragma once

// Invariant-subspace lattices, generated operator algebras and the
// registry of per-context lattices.

#include "qlat/filters.hpp"
#include "qlat/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qlat {

/// Elements of `universe` mapped into themselves by the projector `p`,
/// rebuilt as a lattice. Throws std::invalid_argument for non-projectors.
FiniteLattice invariant_sublattice(const ExactMatrix& p, const FiniteLattice& universe);

/// Elements of `universe` invariant under every operator in `ops`.
/// An empty list leaves the universe unchanged.
FiniteLattice common_invariant_sublattice(const std::vector<ExactMatrix>& ops, const FiniteLattice& universe);

struct AlgebraBasis {
    std::size_t side = 0;
    std::vector<ExactMatrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Basis of the unital algebra generated by `generators`. Throws
/// std::invalid_argument for an empty list or non-square / mismatched sides.
AlgebraBasis algebra_span(const std::vector<ExactMatrix>& generators);

struct IrreducibilityReport {
    AlgebraBasis algebra;
    std::size_t full_dim = 0;  // side^2
    bool irreducible = false;
    /// Closure of the generators' images and kernels.
    FiniteLattice universe;
    FiniteLattice common_invariants;
};

/// Full algebra dimension certifies irreducibility; the common invariant
/// subspaces over the generated universe must then be trivial, otherwise
/// std::logic_error is thrown.
IrreducibilityReport analyze_irreducibility(const std::vector<ExactMatrix>& generators);
bool is_irreducible(const std::vector<ExactMatrix>& generators);

/// Named lattices over one ambient space, iterated in name order.
class LatticeRegistry {
public:
    /// Throws std::invalid_argument on a duplicate name or ambient mismatch.
    void add(const std::string& name, FiniteLattice lattice);

    std::size_t size() const noexcept { return lattices_.size(); }
    bool empty() const noexcept { return lattices_.empty(); }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    const std::map<std::string, FiniteLattice>& lattices() const noexcept { return lattices_; }
    const FiniteLattice& at(const std::string& name) const { return lattices_.at(name); }

private:
    std::size_t ambient_dim_ = 0;
    std::map<std::string, FiniteLattice> lattices_;
};

/// True iff one registered lattice holds both x and y.
bool meet_defined(const Subspace& x, const Subspace& y, const LatticeRegistry& registry);

struct AtomChoice {
    std::size_t atom = 0;
    std::vector<std::uint8_t> paper_values;
    std::vector<std::uint8_t> standard_values;
    /// Atoms of the other lattices that cannot be met with this one.
    std::vector<Subspace> excluded;
};

struct LatticeValuations {
    std::string name;
    std::vector<Subspace> elements;
    std::vector<AtomChoice> choices;
    /// Full homomorphisms {meet, join, top ↦ 1, bottom ↦ 0} on this lattice.
    std::vector<std::vector<std::uint8_t>> homomorphisms;
};

struct ContextualReport {
    std::vector<LatticeValuations> lattices;
    /// Union of all registered elements, in first-seen order.
    std::vector<Subspace> domain;
    /// Maps on `domain` that are homomorphisms on every registered lattice
    /// separately and make exactly one atom per lattice true.
    std::size_t joint_context_maps = 0;
    /// Meet/join closure of `domain`, and its full homomorphisms.
    FiniteLattice union_lattice;
    std::size_t global_homomorphisms = 0;
};

/// Throws std::invalid_argument when two registered lattices share anything
/// besides {0} and the ambient space, or when the registry is empty.
ContextualReport contextual_valuation_report(const LatticeRegistry& registry);

}  // namespace qlat
