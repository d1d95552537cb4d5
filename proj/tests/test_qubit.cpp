#include "oracle.hpp"
#include "qlat/qubit.hpp"

#include <doctest.h>

using namespace qlat;
using qubit::ProjectorId;

namespace {
const GaussianRational I = GaussianRational::i();
const GaussianRational H = GaussianRational::fraction(1, 2);
}  // namespace

TEST_SUITE("qubit") {

TEST_CASE("ids are range checked") {
    CHECK_NOTHROW(ProjectorId(0, 1));
    CHECK_NOTHROW(ProjectorId(3, 2));
    CHECK_THROWS_AS(ProjectorId(4, 1), std::out_of_range);
    CHECK_THROWS_AS(ProjectorId(1, 0), std::out_of_range);
    CHECK_THROWS_AS(ProjectorId(-1, 2), std::out_of_range);
    CHECK(ProjectorId(2, 1).label() == "P(2,1)");
    CHECK(qubit::all_ids().size() == 8);
    CHECK(qubit::nontrivial_ids().size() == 6);
}

TEST_CASE("explicit matrices") {
    CHECK(qubit::projector({0, 1}).is_zero());
    CHECK(qubit::projector({0, 2}) == ExactMatrix::identity(2));
    CHECK(qubit::projector({1, 1}) == ExactMatrix{{H, H}, {H, H}});
    CHECK(qubit::projector({1, 2}) == ExactMatrix{{H, -H}, {-H, H}});
    CHECK(qubit::projector({2, 1}) == ExactMatrix{{H, -H * I}, {H * I, H}});
    CHECK(qubit::projector({2, 2}) == ExactMatrix{{H, H * I}, {-H * I, H}});
    CHECK(qubit::projector({3, 1}) == ExactMatrix{{1, 0}, {0, 0}});
    CHECK(qubit::projector({3, 2}) == ExactMatrix{{0, 0}, {0, 1}});
}

TEST_CASE("pairs are complementary and orthogonal") {
    for (int q = 1; q <= 3; ++q) {
        const ExactMatrix a = qubit::projector({q, 1});
        const ExactMatrix b = qubit::projector({q, 2});
        CHECK(a + b == ExactMatrix::identity(2));
        CHECK((a * b).is_zero());
        CHECK(qubit::negation(ProjectorId(q, 1)) == b);
        CHECK(orthocomplement(image(a)) == image(b));
    }
    CHECK_THROWS_AS(qubit::negation(ExactMatrix{{1, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(qubit::negation(ExactMatrix{{2, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("images are the six listed lines") {
    const std::vector<Subspace> images = qubit::nontrivial_images();
    REQUIRE(images.size() == 6);
    const std::vector<ExactMatrix> expected = {
        ExactMatrix::column({1, 1}), ExactMatrix::column({1, -1}), ExactMatrix::column({1, I}),
        ExactMatrix::column({I, 1}), ExactMatrix::column({1, 0}),  ExactMatrix::column({0, 1})};
    for (std::size_t k = 0; k < 6; ++k) {
        REQUIRE(images[k].dim() == 1);
        CHECK(oracle::same_line(images[k].basis(), expected[k]));
    }
}

TEST_CASE("contexts") {
    CHECK_THROWS_AS(qubit::context(0), std::out_of_range);
    CHECK_THROWS_AS(qubit::context(4), std::out_of_range);
    const qubit::ContextSet y = qubit::context(2);
    CHECK(y.label == 2);
    CHECK(y.ids[0] == ProjectorId(2, 1));
    CHECK(y.members[1] == qubit::projector({2, 2}));
    CHECK(qubit::full_sigma().size() == 3);
    CHECK(qubit::sigma_projectors().size() == 6);
    CHECK(commutes(y.members[0], y.members[1]));
    CHECK_FALSE(commutes(qubit::context(1).members[0], y.members[0]));
}

}  // TEST_SUITE
