#include "qlat/qubit.hpp"

#include <stdexcept>

namespace qlat::qubit {

ProjectorId::ProjectorId(int q, int n) : q_(q), n_(n) {
    if (q < 0 || q > 3 || n < 1 || n > 2)
        throw std::out_of_range("projector id out of range: q=" + std::to_string(q) + ", n=" + std::to_string(n));
}

std::string ProjectorId::label() const { return "P(" + std::to_string(q_) + "," + std::to_string(n_) + ")"; }

ExactMatrix projector(ProjectorId id) {
    const auto delta = [&](int k) -> long long { return id.q() == k ? 1 : 0; };
    const GaussianRational sign = id.n() % 2 == 0 ? 1 : -1;
    const GaussianRational i = GaussianRational::i();
    const GaussianRational half = GaussianRational::fraction(1, 2);

    ExactMatrix p(2, 2);
    p(0, 0) = GaussianRational(1) + sign * GaussianRational(delta(0) - delta(3));
    p(0, 1) = sign * (GaussianRational(-delta(1)) + i * GaussianRational(delta(2)));
    p(1, 0) = sign * (GaussianRational(-delta(1)) - i * GaussianRational(delta(2)));
    p(1, 1) = GaussianRational(1) + sign * GaussianRational(delta(0) + delta(3));
    return p * half;
}

ExactMatrix negation(const ExactMatrix& p) {
    if (!is_hermitian(p))
        throw std::invalid_argument("negation: operator is not Hermitian");
    if (!is_idempotent(p))
        throw std::invalid_argument("negation: operator is not idempotent");
    return ExactMatrix::identity(p.rows()) - p;
}

ExactMatrix negation(ProjectorId id) { return negation(projector(id)); }

std::vector<ProjectorId> all_ids() {
    std::vector<ProjectorId> out;
    for (int q = 0; q <= 3; ++q)
        for (int n = 1; n <= 2; ++n)
            out.emplace_back(q, n);
    return out;
}

std::vector<ProjectorId> nontrivial_ids() {
    std::vector<ProjectorId> out;
    for (int q = 1; q <= 3; ++q)
        for (int n = 1; n <= 2; ++n)
            out.emplace_back(q, n);
    return out;
}

std::vector<Subspace> nontrivial_images() {
    std::vector<Subspace> out;
    for (ProjectorId id : nontrivial_ids())
        out.push_back(image(projector(id)));
    return out;
}

ContextSet context(int w) {
    if (w < 1 || w > 3)
        throw std::out_of_range("context label out of range: " + std::to_string(w));
    const ProjectorId first(w, 1);
    const ProjectorId second(w, 2);
    return {w, {first, second}, {projector(first), projector(second)}};
}

std::vector<ContextSet> full_sigma() { return {context(1), context(2), context(3)}; }

std::vector<ExactMatrix> sigma_projectors() {
    std::vector<ExactMatrix> out;
    for (const ContextSet& c : full_sigma())
        out.insert(out.end(), c.members.begin(), c.members.end());
    return out;
}

}  // namespace qlat::qubit
