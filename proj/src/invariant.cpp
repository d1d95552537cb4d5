#include "qlat/invariant.hpp"

#include <stdexcept>

namespace qlat {

namespace {

FiniteLattice rebuild(const std::vector<Subspace>& members, const FiniteLattice& universe) {
    FiniteLattice out = close_and_build(members, universe.ambient_dim());
    // Invariant subspaces are closed under intersection and sum, so the
    // closure must not add anything.
    if (out.size() != members.size())
        throw std::logic_error("invariant subspaces of the universe are not closed under meet and join");
    return out;
}

ExactMatrix vectorize(const ExactMatrix& m) { return {1, m.rows() * m.cols(), m.entries()}; }

class IndependentSet {
public:
    // Adds m if it is independent of what is already held.
    bool add(const ExactMatrix& m) {
        const ExactMatrix row = vectorize(m);
        ExactMatrix candidate = stack_.rows() == 0 ? row : vstack(stack_, row);
        if (rank(candidate) == members_.size())
            return false;
        stack_ = std::move(candidate);
        members_.push_back(m);
        return true;
    }

    const std::vector<ExactMatrix>& members() const { return members_; }

private:
    ExactMatrix stack_;
    std::vector<ExactMatrix> members_;
};

}  // namespace

FiniteLattice invariant_sublattice(const ExactMatrix& p, const FiniteLattice& universe) {
    if (!is_projector(p))
        throw std::invalid_argument("invariant_sublattice: operator is not a projector");
    return common_invariant_sublattice({p}, universe);
}

FiniteLattice common_invariant_sublattice(const std::vector<ExactMatrix>& ops, const FiniteLattice& universe) {
    std::vector<Subspace> members;
    for (const Subspace& s : universe.elements()) {
        bool invariant = true;
        for (const ExactMatrix& op : ops)
            if (!maps_into(op, s)) {
                invariant = false;
                break;
            }
        if (invariant)
            members.push_back(s);
    }
    return rebuild(members, universe);
}

AlgebraBasis algebra_span(const std::vector<ExactMatrix>& generators) {
    if (generators.empty())
        throw std::invalid_argument("algebra_span: no generators");
    const std::size_t n = generators.front().rows();
    for (const ExactMatrix& g : generators)
        if (!g.is_square() || g.rows() != n)
            throw std::invalid_argument("algebra_span: generators must be square with a common side");

    IndependentSet set;
    set.add(ExactMatrix::identity(n));
    for (const ExactMatrix& g : generators)
        set.add(g);

    // Each productive round raises the dimension, which is at most n^2.
    for (std::size_t round = 0;; ++round) {
        if (round > n * n)
            throw std::logic_error("algebra_span: dimension did not stabilise within n^2 rounds");
        const std::vector<ExactMatrix> current = set.members();
        bool grew = false;
        for (const ExactMatrix& a : current)
            for (const ExactMatrix& b : current)
                grew = set.add(a * b) || grew;
        if (!grew)
            break;
    }
    return {n, set.members()};
}

IrreducibilityReport analyze_irreducibility(const std::vector<ExactMatrix>& generators) {
    IrreducibilityReport report;
    report.algebra = algebra_span(generators);
    const std::size_t n = report.algebra.side;
    report.full_dim = n * n;
    report.irreducible = report.algebra.dim() == report.full_dim;

    std::vector<Subspace> seeds;
    for (const ExactMatrix& g : generators) {
        seeds.push_back(image(g));
        seeds.push_back(Subspace::span_of(kernel_basis(g)));
    }
    report.universe = close_and_build(seeds, n);
    report.common_invariants = common_invariant_sublattice(generators, report.universe);
    if (report.irreducible && report.common_invariants.size() != 2)
        throw std::logic_error("full operator algebra but a nontrivial common invariant subspace was found");
    return report;
}

bool is_irreducible(const std::vector<ExactMatrix>& generators) { return analyze_irreducibility(generators).irreducible; }

void LatticeRegistry::add(const std::string& name, FiniteLattice lattice) {
    if (lattices_.count(name))
        throw std::invalid_argument("duplicate lattice name '" + name + "'");
    if (!lattices_.empty() && lattice.ambient_dim() != ambient_dim_)
        throw std::invalid_argument("lattice '" + name + "' lives in a different ambient space");
    ambient_dim_ = lattice.ambient_dim();
    lattices_.emplace(name, std::move(lattice));
}

bool meet_defined(const Subspace& x, const Subspace& y, const LatticeRegistry& registry) {
    for (const auto& [name, l] : registry.lattices())
        if (l.contains(x) && l.contains(y))
            return true;
    return false;
}

ContextualReport contextual_valuation_report(const LatticeRegistry& registry) {
    if (registry.empty())
        throw std::invalid_argument("contextual_valuation_report: empty registry");
    const auto& lattices = registry.lattices();
    for (auto a = lattices.begin(); a != lattices.end(); ++a)
        for (auto b = std::next(a); b != lattices.end(); ++b)
            for (const Subspace& s : a->second.elements())
                if (!s.is_zero() && !s.is_full() && b->second.contains(s))
                    throw std::invalid_argument("lattices '" + a->first + "' and '" + b->first + "' share " +
                                                to_string(s));

    ContextualReport report;
    for (const auto& [name, l] : lattices) {
        LatticeValuations lv;
        lv.name = name;
        lv.elements = l.elements();
        for (std::size_t w : atoms(l)) {
            if (w == l.top())
                continue;
            AtomChoice choice;
            choice.atom = w;
            const LatticeSubset f = coatom_complement_filter(l, w);
            choice.paper_values = homomorphism_from_filter(f, Convention::paper_literal).values();
            choice.standard_values = homomorphism_from_filter(f, Convention::standard).values();
            for (const auto& [other_name, other] : lattices) {
                if (other_name == name)
                    continue;
                for (std::size_t a : atoms(other))
                    if (!meet_defined(l.element(w), other.element(a), registry))
                        choice.excluded.push_back(other.element(a));
            }
            lv.choices.push_back(std::move(choice));
        }
        for (const Bivaluation& v : search_bivaluations(l, ValuationLaws::homomorphism()))
            lv.homomorphisms.push_back(v.values());
        report.lattices.push_back(std::move(lv));
    }

    for (const auto& [name, l] : lattices)
        for (const Subspace& s : l.elements()) {
            bool seen = false;
            for (const Subspace& d : report.domain)
                if (d == s) {
                    seen = true;
                    break;
                }
            if (!seen)
                report.domain.push_back(s);
        }

    // Enumerate truth values of the nontrivial domain elements with the
    // bottom false and the top true.
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < report.domain.size(); ++k)
        if (!report.domain[k].is_zero() && !report.domain[k].is_full())
            free.push_back(k);
    if (free.size() > max_enumeration_elements)
        throw EnumerationTooLarge("contextual valuation domain is too large to enumerate");

    std::vector<std::vector<std::size_t>> positions;  // per lattice: domain index of each element
    for (const auto& [name, l] : lattices) {
        std::vector<std::size_t> pos;
        for (const Subspace& s : l.elements())
            for (std::size_t k = 0; k < report.domain.size(); ++k)
                if (report.domain[k] == s) {
                    pos.push_back(k);
                    break;
                }
        positions.push_back(std::move(pos));
    }

    std::vector<std::uint8_t> values(report.domain.size(), 0);
    for (std::size_t k = 0; k < report.domain.size(); ++k)
        values[k] = report.domain[k].is_full() ? 1 : 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
        for (std::size_t k = 0; k < free.size(); ++k)
            values[free[k]] = static_cast<std::uint8_t>((bits >> k) & 1);
        bool ok = true;
        std::size_t index = 0;
        for (const auto& [name, l] : lattices) {
            std::vector<std::uint8_t> local;
            for (std::size_t p : positions[index])
                local.push_back(values[p]);
            ++index;
            std::size_t true_atoms = 0;
            for (std::size_t a : atoms(l))
                true_atoms += local[a];
            if (true_atoms != 1 || !satisfies(l, local, ValuationLaws::homomorphism())) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++report.joint_context_maps;
    }

    report.union_lattice = close_and_build(report.domain, registry.ambient_dim());
    report.global_homomorphisms = search_bivaluations(report.union_lattice, ValuationLaws::homomorphism()).size();
    return report;
}

}  // namespace qlat
