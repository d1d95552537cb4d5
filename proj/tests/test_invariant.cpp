#include "oracle.hpp"
#include "qlat/invariant.hpp"
#include "qlat/qubit.hpp"

#include <doctest.h>

using namespace qlat;

namespace {
const GaussianRational I = GaussianRational::i();
Subspace line(GaussianRational a, GaussianRational b) { return image(ExactMatrix::column({a, b})); }
FiniteLattice qubit_lattice() { return close_and_build(qubit::nontrivial_images(), 2); }

std::vector<ExactMatrix> members(int w) {
    const qubit::ContextSet c = qubit::context(w);
    return {c.members[0], c.members[1]};
}

LatticeRegistry qubit_registry() {
    const FiniteLattice l = qubit_lattice();
    LatticeRegistry r;
    for (int w = 1; w <= 3; ++w)
        r.add("L" + std::to_string(w), common_invariant_sublattice(members(w), l));
    return r;
}
}  // namespace

TEST_SUITE("invariant") {

TEST_CASE("invariant lattices of each context") {
    const FiniteLattice l = qubit_lattice();
    const std::vector<std::pair<Subspace, Subspace>> expected = {
        {line(1, 1), line(1, -1)}, {line(1, I), line(I, 1)}, {line(1, 0), line(0, 1)}};
    for (int w = 1; w <= 3; ++w) {
        CAPTURE(w);
        const FiniteLattice both = common_invariant_sublattice(members(w), l);
        CHECK(both.size() == 4);
        CHECK(both.contains(expected[w - 1].first));
        CHECK(both.contains(expected[w - 1].second));
        for (const ExactMatrix& p : members(w))
            CHECK(same_elements(invariant_sublattice(p, l), both));
    }
}

TEST_CASE("sigma has only trivial common invariants") {
    const FiniteLattice l = qubit_lattice();
    const FiniteLattice common = common_invariant_sublattice(qubit::sigma_projectors(), l);
    CHECK(common.size() == 2);
    CHECK(same_elements(common_invariant_sublattice({}, l), l));
    CHECK_THROWS_AS(invariant_sublattice(ExactMatrix{{1, 1}, {0, 0}}, l), std::invalid_argument);
}

TEST_CASE("generated algebras") {
    const AlgebraBasis sigma = algebra_span(qubit::sigma_projectors());
    CHECK(sigma.side == 2);
    CHECK(sigma.dim() == 4);
    CHECK(algebra_span(members(1)).dim() == 2);
    CHECK(algebra_span({qubit::projector({0, 2})}).dim() == 1);
    CHECK(algebra_span({qubit::projector({1, 1}), qubit::projector({3, 1})}).dim() == 4);
    // The basis is independent: the vectorized matrices have full rank.
    ExactMatrix stacked(4, sigma.dim());
    for (std::size_t k = 0; k < sigma.dim(); ++k)
        for (std::size_t e = 0; e < 4; ++e)
            stacked(e, k) = sigma.basis[k].entries()[e];
    CHECK(oracle::rank_by_minors(stacked) == 4);
    CHECK_THROWS_AS(algebra_span({}), std::invalid_argument);
    CHECK_THROWS_AS(algebra_span({ExactMatrix::identity(2), ExactMatrix::identity(3)}), std::invalid_argument);
    CHECK_THROWS_AS(algebra_span({ExactMatrix(2, 3)}), std::invalid_argument);
}

TEST_CASE("irreducibility") {
    const IrreducibilityReport r = analyze_irreducibility(qubit::sigma_projectors());
    CHECK(r.full_dim == 4);
    CHECK(r.irreducible);
    CHECK(r.universe.size() == 8);
    CHECK(r.common_invariants.size() == 2);
    CHECK_FALSE(is_irreducible(members(2)));
    const ExactMatrix upper{{1, 1}, {0, 1}};
    CHECK_FALSE(is_irreducible({upper}));
}

TEST_CASE("registry") {
    LatticeRegistry r = qubit_registry();
    CHECK(r.size() == 3);
    CHECK(r.ambient_dim() == 2);
    CHECK(r.at("L2").contains(line(1, I)));
    CHECK_THROWS_AS(r.add("L1", qubit_lattice()), std::invalid_argument);
    CHECK_THROWS_AS(r.add("X", close_and_build({}, 3)), std::invalid_argument);
}

TEST_CASE("meet is defined only inside a context") {
    const LatticeRegistry r = qubit_registry();
    CHECK(meet_defined(line(1, 1), line(1, -1), r));
    CHECK(meet_defined(line(1, 0), Subspace::full(2), r));
    CHECK_FALSE(meet_defined(line(1, 1), line(1, 0), r));
    CHECK_FALSE(meet_defined(line(1, I), line(0, 1), r));
}

TEST_CASE("contextual valuation report") {
    const ContextualReport rep = contextual_valuation_report(qubit_registry());
    REQUIRE(rep.lattices.size() == 3);
    for (const LatticeValuations& lv : rep.lattices) {
        CHECK(lv.homomorphisms.size() == 2);
        CHECK(lv.choices.size() == 2);
        for (const AtomChoice& c : lv.choices) {
            CHECK(c.paper_values[c.atom] == 1);
            CHECK(c.standard_values[c.atom] == 0);
            CHECK(c.standard_values.back() == 1);
            CHECK(c.excluded.size() == 4);
        }
    }
    CHECK(rep.domain.size() == 8);
    CHECK(rep.joint_context_maps == 8);
    CHECK(rep.union_lattice.size() == 8);
    CHECK(rep.global_homomorphisms == 0);
    CHECK(rep.global_homomorphisms == oracle::homomorphisms_by_enumeration(rep.union_lattice).size());
}

TEST_CASE("contextual report preconditions") {
    CHECK_THROWS_AS(contextual_valuation_report(LatticeRegistry{}), std::invalid_argument);
    LatticeRegistry overlapping;
    overlapping.add("a", close_and_build({line(1, 0)}, 2));
    overlapping.add("b", close_and_build({line(1, 0), line(1, 1)}, 2));
    CHECK_THROWS_AS(contextual_valuation_report(overlapping), std::invalid_argument);
}

}  // TEST_SUITE
