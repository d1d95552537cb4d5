// Randomized and exhaustive law checks. Pass --seed=N (or --seed N) to vary
// the random cases; everything else goes to doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include "oracle.hpp"
#include "qlat/lattice.hpp"
#include "qlat/qubit.hpp"

#include <doctest.h>

#include <cstring>
#include <iostream>
#include <random>
#include <string>

using namespace qlat;

namespace {

std::uint64_t g_seed = 20240611;
constexpr int random_cases = 1000;

class Generator {
public:
    explicit Generator(std::uint64_t salt) : rng_(g_seed ^ (salt * 0x9e3779b97f4a7c15ull)) {}

    GaussianRational entry() {
        static const GaussianRational pool[] = {
            0, 1, -1, GaussianRational::fraction(1, 2), GaussianRational::fraction(-1, 2),
            GaussianRational::fraction(1, 2) * GaussianRational::i(),
            GaussianRational::fraction(-1, 2) * GaussianRational::i()};
        return pool[pick(std::size(pool))];
    }

    GaussianRational scalar() {
        std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
        return GaussianRational(Rational(num(rng_), den(rng_)), Rational(num(rng_), den(rng_)));
    }

    ExactMatrix matrix(std::size_t rows, std::size_t cols) {
        ExactMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = entry();
        return m;
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
    std::mt19937_64 rng_;
};

FiniteLattice qubit_lattice() { return close_and_build(qubit::nontrivial_images(), 2); }

}  // namespace

TEST_SUITE("property") {

TEST_CASE("scalar text round-trips") {
    Generator gen(1);
    for (int k = 0; k < random_cases; ++k) {
        const GaussianRational z = k % 2 ? gen.scalar() : gen.entry();
        CAPTURE(to_string(z));
        CHECK(parse_scalar(to_string(z)) == z);
    }
}

TEST_CASE("field laws") {
    Generator gen(2);
    for (int k = 0; k < random_cases; ++k) {
        const GaussianRational a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * b).norm() == a.norm() * b.norm());
        if (!a.is_zero())
            CHECK(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("rank laws") {
    Generator gen(3);
    for (int k = 0; k < random_cases; ++k) {
        const std::size_t rows = 1 + gen.pick(4), cols = 1 + gen.pick(4);
        const ExactMatrix m = gen.matrix(rows, cols);
        const std::size_t r = rank(m);
        CAPTURE(to_string(m));
        CHECK(r == oracle::rank_by_minors(m));
        CHECK(r == rank(m.transpose()));
        CHECK(r == rank(conjugate_transpose(m)));
        CHECK(r + kernel_basis(m).cols() == cols);
        CHECK((m * kernel_basis(m)).is_zero());
        const ExactMatrix other = gen.matrix(cols, 1 + gen.pick(4));
        CHECK(rank(m * other) <= std::min(r, rank(other)));
    }
}

TEST_CASE("subspace meet/join laws on random subspaces of C^3") {
    Generator gen(4);
    for (int k = 0; k < random_cases / 4; ++k) {
        const Subspace s = image(gen.matrix(3, gen.pick(3)));
        const Subspace t = image(gen.matrix(3, gen.pick(3)));
        CHECK(meet(s, t).dim() + join(s, t).dim() == s.dim() + t.dim());
        CHECK(orthocomplement(join(s, t)) == meet(orthocomplement(s), orthocomplement(t)));
        CHECK(orthocomplement(meet(s, t)) == join(orthocomplement(s), orthocomplement(t)));
        CHECK(orthocomplement(orthocomplement(s)) == s);
        CHECK(parse_span(to_string(s), 3) == s);
        CHECK(is_projector(projector_of(s)));
    }
}

TEST_CASE("De Morgan and the dimension law over all 64 pairs") {
    const FiniteLattice l = qubit_lattice();
    REQUIRE(l.size() == 8);
    std::size_t pairs = 0;
    for (const Subspace& s : l.elements())
        for (const Subspace& t : l.elements()) {
            CHECK(orthocomplement(join(s, t)) == meet(orthocomplement(s), orthocomplement(t)));
            CHECK(orthocomplement(meet(s, t)) == join(orthocomplement(s), orthocomplement(t)));
            CHECK(meet(s, t).dim() + join(s, t).dim() == s.dim() + t.dim());
            ++pairs;
        }
    CHECK(pairs == 64);
}

TEST_CASE("lattice axioms over all pairs and triples") {
    const FiniteLattice l = qubit_lattice();
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            CHECK(l.meet(a, b) == l.meet(b, a));
            CHECK(l.join(a, b) == l.join(b, a));
            CHECK(l.meet(a, l.join(a, b)) == a);
            CHECK(l.join(a, l.meet(a, b)) == a);
            CHECK(l.leq(a, b) == (l.meet(a, b) == a));
            for (std::size_t c = 0; c < n; ++c) {
                CHECK(l.meet(l.meet(a, b), c) == l.meet(a, l.meet(b, c)));
                CHECK(l.join(l.join(a, b), c) == l.join(a, l.join(b, c)));
            }
        }
    for (const LawReport& r : check_lattice_axioms(l))
        CHECK(r.holds());
}

TEST_CASE("every projector id is Hermitian and idempotent") {
    std::size_t count = 0;
    for (qubit::ProjectorId id : qubit::all_ids()) {
        const ExactMatrix p = qubit::projector(id);
        CHECK(is_hermitian(p));
        CHECK(p * p == p);
        CHECK(conjugate_transpose(p) == p);
        ++count;
    }
    CHECK(count == 8);
}

TEST_CASE("random projectors onto lines") {
    Generator gen(5);
    for (int k = 0; k < random_cases / 4; ++k) {
        ExactMatrix v = gen.matrix(2, 1);
        if (v.is_zero())
            continue;
        const Subspace s = image(v);
        const ExactMatrix p = projector_of(s);
        CHECK(is_projector(p));
        CHECK(image(p) == s);
        CHECK(image(ExactMatrix::identity(2) - p) == orthocomplement(s));
        CHECK(oracle::same_line(orthocomplement(s).basis(), oracle::orthogonal_line(v)));
    }
}

}  // TEST_SUITE

int main(int argc, char** argv) {
    std::vector<char*> rest;
    for (int k = 0; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg.rfind("--seed=", 0) == 0) {
            g_seed = std::stoull(arg.substr(7));
        } else if (arg == "--seed" && k + 1 < argc) {
            g_seed = std::stoull(argv[++k]);
        } else {
            rest.push_back(argv[k]);
        }
    }
    std::cout << "property seed: " << g_seed << '\n';
    doctest::Context context;
    context.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return context.run();
}
