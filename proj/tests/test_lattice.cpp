#include "oracle.hpp"
#include "qlat/lattice.hpp"
#include "qlat/qubit.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qlat;

namespace {
const GaussianRational I = GaussianRational::i();
Subspace line(GaussianRational a, GaussianRational b) { return image(ExactMatrix::column({a, b})); }
FiniteLattice qubit_lattice() { return close_and_build(qubit::nontrivial_images(), 2); }
}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("closure of the six lines") {
    const FiniteLattice l = qubit_lattice();
    REQUIRE(l.size() == 8);
    CHECK(l.element(l.bottom()).is_zero());
    CHECK(l.element(l.top()).is_full());
    CHECK(l.label(1) == "span{[1, 1]}");
    CHECK(l.label(4) == "span{[1, -i]}");
    for (std::size_t k = 1; k + 1 < l.size(); ++k)
        CHECK(l.element(k).dim() == 1);
    CHECK(l.contains(line(I, 1)));
    CHECK_FALSE(l.contains(line(1, 2)));
    CHECK(l.index_of(line(1, 0)) == std::optional<std::size_t>(5));
}

TEST_CASE("tables agree with subspace operations") {
    const FiniteLattice l = qubit_lattice();
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b) {
            CHECK(l.element(l.meet(a, b)) == meet(l.element(a), l.element(b)));
            CHECK(l.element(l.join(a, b)) == join(l.element(a), l.element(b)));
            CHECK(l.leq(a, b) == leq(l.element(a), l.element(b)));
        }
    for (std::size_t a = 0; a < l.size(); ++a) {
        REQUIRE(l.complement(a).has_value());
        CHECK(l.element(*l.complement(a)) == orthocomplement(l.element(a)));
    }
}

TEST_CASE("closure adds missing meets and joins") {
    const Subspace a = image(ExactMatrix{{1, 0}, {0, 1}, {0, 0}});
    const Subspace b = image(ExactMatrix{{0, 0}, {1, 0}, {0, 1}});
    const FiniteLattice l = close_and_build({a, b}, 3);
    CHECK(l.size() == 5);
    CHECK(l.contains(image(ExactMatrix::column({0, 1, 0}))));
    CHECK(close_and_build({}, 2).size() == 2);
}

TEST_CASE("closure errors") {
    CHECK_THROWS_AS(close_and_build({Subspace::full(3)}, 2), DimensionError);
    CHECK_THROWS_AS(close_and_build(qubit::nontrivial_images(), 2, ClosureOptions{5}), ClosureCapExceeded);
}

TEST_CASE("element order is stable") {
    std::vector<Subspace> seeds = qubit::nontrivial_images();
    std::reverse(seeds.begin(), seeds.end());
    const FiniteLattice reversed = close_and_build(seeds, 2);
    const FiniteLattice forward = qubit_lattice();
    CHECK(same_elements(reversed, forward));
    CHECK_FALSE(reversed == forward);
    CHECK(reversed.label(1) == "span{[0, 1]}");
}

TEST_CASE("distributivity fails on the full lattice") {
    const FiniteLattice l = qubit_lattice();
    const LawReport r = check_distributive(l, {1000});
    CHECK_FALSE(r.holds());
    CHECK(r.cases_checked == 512);
    CHECK(r.violation_count == oracle::distributive_violations(l));
    CHECK(r.violation_count == 120);
    CHECK(r.examples.size() == 120);
    const std::vector<std::size_t> kmo{1, 2, 5};
    const auto hit = std::find_if(r.examples.begin(), r.examples.end(),
                                  [&](const Violation& v) { return v.elements == kmo; });
    REQUIRE(hit != r.examples.end());
    CHECK(hit->lhs == 5);
    CHECK(hit->rhs == 0);
    CHECK(check_distributive(l).examples.size() == 10);
    CHECK_FALSE(is_distributive(l));
}

TEST_CASE("context lattices are distributive") {
    for (int q = 1; q <= 3; ++q) {
        const FiniteLattice l = close_and_build({image(qubit::projector({q, 1})), image(qubit::projector({q, 2}))}, 2);
        CHECK(l.size() == 4);
        CHECK(check_distributive(l).holds());
        CHECK(oracle::distributive_violations(l) == 0);
    }
}

TEST_CASE("modular and orthomodular laws hold") {
    const FiniteLattice l = qubit_lattice();
    CHECK(check_modular(l).holds());
    const LawReport om = check_orthomodular(l);
    CHECK(om.holds());
    // Only comparable pairs count: 8 reflexive, 12 through an atom, bottom <= top.
    CHECK(om.cases_checked == 21);
    const FiniteLattice partial = close_and_build({line(1, 1)}, 2);
    CHECK_THROWS_AS(check_orthomodular(partial), std::invalid_argument);
    const auto bad_complement = [](std::size_t i) { return i; };
    CHECK_FALSE(check_orthomodular(l, bad_complement).holds());
}

TEST_CASE("axioms") {
    const std::vector<LawReport> reports = check_lattice_axioms(qubit_lattice());
    CHECK(reports.size() == 9);
    for (const LawReport& r : reports) {
        INFO(r.law);
        CHECK(r.holds());
        CHECK(r.cases_checked > 0);
    }
}

TEST_CASE("atoms and Hasse diagram") {
    const FiniteLattice l = qubit_lattice();
    CHECK(atoms(l) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
    const auto edges = hasse_edges(l);
    CHECK(edges.size() == 12);
    CHECK(l.covers(0, 3));
    CHECK_FALSE(l.covers(0, 7));
    CHECK_FALSE(l.covers(3, 3));
    const FiniteLattice two = close_and_build({}, 2);
    CHECK(atoms(two) == std::vector<std::size_t>{1});
}

TEST_CASE("dot output") {
    const FiniteLattice l = qubit_lattice();
    const std::string dot = to_dot(l, "qubit");
    CHECK(dot.rfind("digraph qubit {", 0) == 0);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("n4 [label=\"span{[1, -i]}\"]") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("n6 -> n7") != std::string::npos);
    CHECK(dot.find("n0 -> n7") == std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 12);
    CHECK(dot == to_dot(qubit_lattice(), "qubit"));
}

}  // TEST_SUITE
