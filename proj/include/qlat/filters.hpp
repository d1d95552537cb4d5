#pragma once

// Filters, ideals and two-valued maps on finite subspace lattices.
//
// Two conventions run side by side:
//   paper_literal  a "filter" is any downward-directed subset, and the
//                  homomorphism sends the removed element (the ideal) to
//                  truth and every filter member to falsity;
//   standard       filters are nonempty proper up-sets closed under meets,
//                  and filter members are true.

#include "qlat/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlat {

enum class Convention { paper_literal, standard };

std::string to_string(Convention c);

/// A set of element indices of a host lattice. The host must outlive it.
class LatticeSubset {
public:
    LatticeSubset(const FiniteLattice& host, const std::vector<std::size_t>& members);

    static LatticeSubset all(const FiniteLattice& host);
    static LatticeSubset none(const FiniteLattice& host);

    const FiniteLattice& host() const noexcept { return *host_; }
    bool contains(std::size_t i) const { return flags_.at(i); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<std::size_t> members() const;

    friend bool operator==(const LatticeSubset& a, const LatticeSubset& b) {
        return a.host_ == b.host_ && a.flags_ == b.flags_;
    }

private:
    const FiniteLattice* host_;
    std::vector<bool> flags_;
};

/// Every element except `w`. Throws std::invalid_argument when `w` is the
/// bottom or the top.
LatticeSubset coatom_complement_filter(const FiniteLattice& l, std::size_t w);

/// x, y in s  ⇒  x ∧ y in s.
bool is_downward_directed(const LatticeSubset& s);

struct UpwardClosure {
    bool holds = true;
    /// First (x, y) found with x in s, x ≤ y and y not in s.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

UpwardClosure is_upward_closed(const LatticeSubset& s);

/// For every element x and every removed element w (not in s):
/// x ∨ w in s  ⇒  x in s.
bool is_prime_paper(const LatticeSubset& s);

enum class Verdict { holds, fails, not_applicable };

std::string to_string(Verdict v);

/// Nonempty, proper, upward closed and closed under meets.
bool is_standard_filter(const LatticeSubset& s);

/// not_applicable unless s is a standard filter; otherwise whether
/// a ∨ b in s  ⇒  a in s or b in s over all pairs.
Verdict is_prime_standard(const LatticeSubset& s);

/// host \ s.
LatticeSubset ideal_complement(const LatticeSubset& s);

/// A total map from the host's elements to {0, 1}.
class Bivaluation {
public:
    Bivaluation(const FiniteLattice& host, std::vector<std::uint8_t> values, Convention convention);

    const FiniteLattice& host() const noexcept { return *host_; }
    Convention convention() const noexcept { return convention_; }
    int value(std::size_t i) const { return values_.at(i); }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }
    /// Bit i holds value(i).
    std::uint64_t bits() const;
    std::vector<std::size_t> true_elements() const;

    friend bool operator==(const Bivaluation& a, const Bivaluation& b) {
        return a.host_ == b.host_ && a.values_ == b.values_ && a.convention_ == b.convention_;
    }

private:
    const FiniteLattice* host_;
    std::vector<std::uint8_t> values_;
    Convention convention_;
};

/// Valuation induced by F = host \ {w}.
///   paper_literal: v(w) = 1, every member of F gets 0.
///   standard:      v(x) = 1 iff w⊥ ≤ x, i.e. truth on the principal filter
///                  complementary to the prime ideal generated by w inside
///                  w's context.
/// Throws std::invalid_argument when f is not of that form, or (standard)
/// when w⊥ is not an element.
Bivaluation homomorphism_from_filter(const LatticeSubset& f, Convention convention);

/// The same assignment seen on a lattice whose elements all occur in v's host.
Bivaluation restrict_to(const Bivaluation& v, const FiniteLattice& sub);

/// Unordered pairs (x, x⊥) with x < x⊥ as indices and v(x) + v(x⊥) = 1.
std::vector<std::pair<std::size_t, std::size_t>> complement_law_pairs(const Bivaluation& v);

enum class StateValue { one, zero, indeterminate };

std::string to_string(StateValue v);

/// 1 if psi lies in ran(p), 0 if it lies in ran(1 - p), indeterminate
/// otherwise. Throws std::invalid_argument unless p is a projector.
StateValue state_valuation(const ExactMatrix& p, const StateVector& psi);

struct ValuationLaws {
    bool meet_hom = false;
    bool join_hom = false;
    bool complement_law = false;
    bool top_one = false;
    bool bottom_zero = false;

    /// meet-hom, join-hom, top ↦ 1, bottom ↦ 0.
    static ValuationLaws homomorphism() { return {true, true, false, true, true}; }
    /// Comma-separated law names in a fixed order, "none" when empty.
    std::string to_string() const;
};

class EnumerationTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t max_enumeration_elements = 24;

/// Whether a full assignment obeys every selected law. The complement law is
/// checked on each element whose orthocomplement is in the lattice.
bool satisfies(const FiniteLattice& l, const std::vector<std::uint8_t>& values, ValuationLaws laws);

/// Every {0,1}-map satisfying the selected laws, sorted by bits(). Assigns
/// bottom, top and the atoms first and propagates values the laws force.
/// Throws EnumerationTooLarge above max_enumeration_elements elements.
std::vector<Bivaluation> search_bivaluations(const FiniteLattice& l, ValuationLaws laws);

}  // namespace qlat
