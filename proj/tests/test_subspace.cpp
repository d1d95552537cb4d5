#include "oracle.hpp"
#include "qlat/subspace.hpp"

#include <doctest.h>

using namespace qlat;

namespace {
const GaussianRational I = GaussianRational::i();
Subspace line(GaussianRational a, GaussianRational b) { return image(ExactMatrix::column({a, b})); }
}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("spans are canonical") {
    CHECK(line(2, 2) == line(1, 1));
    CHECK(line(I, 1) == line(1, -I));
    CHECK(to_string(line(I, 1)) == "span{[1, -i]}");
    CHECK(to_string(line(0, 5)) == "span{[0, 1]}");
    CHECK(to_string(Subspace::zero(2)) == "{0}");
    CHECK(to_string(Subspace::full(2)) == "C^2");
    CHECK(image(ExactMatrix{{1, 1}, {1, 1}}) == line(1, 1));
    CHECK(image(ExactMatrix::zero(2, 2)).is_zero());
    CHECK(image(ExactMatrix{{1, 1}, {0, 1}}).is_full());
}

TEST_CASE("parse_span inverts to_string") {
    for (const Subspace& s : {Subspace::zero(3), Subspace::full(3), image(ExactMatrix{{1, 0}, {I, 1}, {0, 2}}),
                              image(ExactMatrix::column({1, 0, -I}))})
        CHECK(parse_span(to_string(s), 3) == s);
    CHECK(parse_span("span{[2, 2], [1, 1]}", 2) == line(1, 1));
    CHECK_THROWS(parse_span("span{[1, 1, 1]}", 2));
    CHECK_THROWS(parse_span("lines{[1, 1]}", 2));
}

TEST_CASE("meet and join of lines in C^2") {
    const Subspace k = line(1, 1), m = line(1, -1), o = line(1, 0);
    CHECK(meet(k, m).is_zero());
    CHECK(join(k, m).is_full());
    CHECK(meet(k, k) == k);
    CHECK(join(k, Subspace::zero(2)) == k);
    CHECK(meet(join(k, m), o) == o);
    CHECK(join(meet(k, o), meet(m, o)).is_zero());
    CHECK(leq(k, Subspace::full(2)));
    CHECK_FALSE(leq(k, m));
}

TEST_CASE("meet in C^3") {
    const Subspace a = image(ExactMatrix{{1, 0}, {0, 1}, {0, 0}});
    const Subspace b = image(ExactMatrix{{0, 0}, {1, 0}, {0, 1}});
    CHECK(meet(a, b) == image(ExactMatrix::column({0, 1, 0})));
    CHECK(join(a, b).is_full());
    CHECK(meet(a, b).dim() + join(a, b).dim() == a.dim() + b.dim());
}

TEST_CASE("orthocomplement matches the C^2 formula") {
    for (const auto& [a, b] : std::vector<std::pair<GaussianRational, GaussianRational>>{
             {1, 1}, {1, -1}, {1, I}, {I, 1}, {1, 0}, {0, 1}, {GaussianRational::fraction(1, 2), 3 + I}}) {
        const ExactMatrix u = ExactMatrix::column({a, b});
        const Subspace perp = orthocomplement(image(u));
        REQUIRE(perp.dim() == 1);
        CHECK(oracle::same_line(perp.basis(), oracle::orthogonal_line(u)));
    }
    CHECK(orthocomplement(Subspace::zero(2)).is_full());
    CHECK(orthocomplement(Subspace::full(2)).is_zero());
}

TEST_CASE("projector_of is the orthogonal projector") {
    const Subspace s = line(1, I);
    const ExactMatrix p = projector_of(s);
    CHECK(is_projector(p));
    CHECK(image(p) == s);
    CHECK(p == ExactMatrix{{GaussianRational::fraction(1, 2), GaussianRational::fraction(-1, 2) * I},
                           {GaussianRational::fraction(1, 2) * I, GaussianRational::fraction(1, 2)}});
    CHECK(projector_of(Subspace::zero(2)).is_zero());
    CHECK(projector_of(Subspace::full(2)) == ExactMatrix::identity(2));
}

TEST_CASE("vectors and invariance") {
    CHECK(contains_vector(line(1, 1), StateVector{3, 3}));
    CHECK_FALSE(contains_vector(line(1, 1), StateVector{1, 0}));
    CHECK(contains_vector(Subspace::full(2), ExactMatrix::column({1, 0})));
    CHECK_THROWS(StateVector{0, 0});
    CHECK_THROWS(StateVector(ExactMatrix{{1, 0}, {0, 1}}));
    const ExactMatrix pz{{1, 0}, {0, 0}};
    CHECK(maps_into(pz, line(0, 1)));
    CHECK_FALSE(maps_into(pz, line(1, 1)));
}

TEST_CASE("dimension mismatches throw") {
    CHECK_THROWS_AS(meet(Subspace::full(2), Subspace::full(3)), DimensionError);
    CHECK_THROWS_AS(join(Subspace::full(2), Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(leq(Subspace::full(2), Subspace::zero(3)), DimensionError);
}

TEST_CASE("ordering is by dimension then text") {
    SubspaceLess less;
    CHECK(less(Subspace::zero(2), line(1, 1)));
    CHECK(less(line(1, 1), Subspace::full(2)));
    CHECK_FALSE(less(line(1, 1), line(1, 1)));
}

}  // TEST_SUITE
