#pragma once

// The Pauli-axis projector family on C^2.
//
//   P(q, n) = 1/2 [ 1 + s(d0 - d3)     s(-d1 + i d2) ]
//                 [ s(-d1 - i d2)      1 + s(d0 + d3) ]
//
// with s = (-1)^n and dq = [q == Q]. q = 0 gives the trivial pair
// (n = 1: zero, n = 2: identity); q = 1, 2, 3 give the two spectral
// projectors of the x, y and z axes.

#include "qlat/exactlin.hpp"
#include "qlat/subspace.hpp"

#include <array>
#include <string>
#include <vector>

namespace qlat::qubit {

class ProjectorId {
public:
    /// Throws std::out_of_range unless q in {0..3} and n in {1, 2}.
    ProjectorId(int q, int n);

    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    bool is_trivial() const noexcept { return q_ == 0; }

    /// "P(q,n)".
    std::string label() const;

    friend bool operator==(const ProjectorId&, const ProjectorId&) = default;

private:
    int q_;
    int n_;
};

ExactMatrix projector(ProjectorId id);

/// 1 - p. Throws std::invalid_argument unless p is Hermitian and idempotent.
ExactMatrix negation(const ExactMatrix& p);
ExactMatrix negation(ProjectorId id);

/// All eight ids in (q, n) order.
std::vector<ProjectorId> all_ids();
/// The six ids with q in {1, 2, 3}.
std::vector<ProjectorId> nontrivial_ids();

/// Images of the six nontrivial projectors in nontrivial_ids() order.
std::vector<Subspace> nontrivial_images();

struct ContextSet {
    int label;  // W in {1, 2, 3}
    std::array<ProjectorId, 2> ids;
    std::array<ExactMatrix, 2> members;
};

/// Throws std::out_of_range unless w in {1, 2, 3}.
ContextSet context(int w);
std::vector<ContextSet> full_sigma();
/// The six nontrivial projectors, flattened in context order.
std::vector<ExactMatrix> sigma_projectors();

}  // namespace qlat::qubit
