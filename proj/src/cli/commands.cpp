#include "qlat/cli/commands.hpp"

#include "qlat/invariant.hpp"
#include "qlat/qubit.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlat::cli {

namespace {

std::string join_strings(const std::vector<std::string>& parts, const std::string& sep = "; ") {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            out += sep;
        out += parts[k];
    }
    return out;
}

std::string labels_of(const FiniteLattice& l, const std::vector<std::size_t>& indices) {
    std::vector<std::string> parts;
    for (std::size_t k : indices)
        parts.push_back(l.label(k));
    return join_strings(parts);
}

std::string labels_of(const std::vector<Subspace>& subspaces) {
    std::vector<std::string> parts;
    for (const Subspace& s : subspaces)
        parts.push_back(to_string(s));
    return join_strings(parts);
}

std::vector<std::size_t> all_indices(const FiniteLattice& l) {
    std::vector<std::size_t> out(l.size());
    for (std::size_t k = 0; k < l.size(); ++k)
        out[k] = k;
    return out;
}

std::string bit_string(const std::vector<std::uint8_t>& values) {
    std::string out;
    for (std::uint8_t v : values)
        out += v ? '1' : '0';
    return out;
}

void catalogue(Report& r, const std::string& prefix, const FiniteLattice& l) {
    r.record(prefix + ".size", l.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
        r.line("  [" + std::to_string(k) + "] " + l.label(k));
        r.record(prefix + ".element." + std::to_string(k), l.label(k));
    }
}

void index_table(Report& r, const std::string& title, const std::string& key, const FiniteLattice& l,
                 const std::function<std::string(std::size_t, std::size_t)>& cell) {
    r.line(title);
    std::string header = "      ";
    for (std::size_t b = 0; b < l.size(); ++b) {
        std::ostringstream h;
        h << std::setw(3) << b;
        header += h.str();
    }
    r.line(header);
    for (std::size_t a = 0; a < l.size(); ++a) {
        std::ostringstream row;
        row << "  " << std::setw(3) << a << " ";
        std::vector<std::string> cells;
        for (std::size_t b = 0; b < l.size(); ++b) {
            row << std::setw(3) << cell(a, b);
            cells.push_back(cell(a, b));
        }
        r.line(row.str());
        r.record(key + "." + std::to_string(a), join_strings(cells, " "));
    }
}

void law_report(Report& r, const std::string& key, const FiniteLattice& l, const LawReport& law) {
    r.record(key + ".holds", law.holds());
    r.record(key + ".checked", law.cases_checked);
    r.record(key + ".violations", law.violation_count);
    r.line("  " + law.law + ": " + (law.holds() ? "holds" : "FAILS") + " (" + std::to_string(law.violation_count) +
           " violations in " + std::to_string(law.cases_checked) + " cases)");
    for (std::size_t k = 0; k < law.examples.size(); ++k) {
        const Violation& v = law.examples[k];
        const std::string text = "(" + labels_of(l, v.elements) + ") lhs=" + l.label(v.lhs) + " rhs=" + l.label(v.rhs);
        r.line("    " + text);
        r.record(key + ".example." + std::to_string(k), text);
    }
}

Subspace named_subspace(const InputDocument& doc, const std::string& name) {
    if (const NamedRay* ray = doc.find_ray(name))
        return image(ray->vector);
    if (const NamedProjector* p = doc.find_projector(name))
        return image(p->matrix);
    throw std::invalid_argument("no ray or projector named '" + name + "'");
}

}  // namespace

ValuationLaws parse_laws(std::string_view list) {
    ValuationLaws laws;
    std::string item;
    std::istringstream in{std::string(list)};
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item == "meet-hom")
            laws.meet_hom = true;
        else if (item == "join-hom")
            laws.join_hom = true;
        else if (item == "complement")
            laws.complement_law = true;
        else if (item == "top")
            laws.top_one = true;
        else if (item == "bottom")
            laws.bottom_zero = true;
        else if (item == "hom") {
            laws.meet_hom = laws.join_hom = laws.top_one = laws.bottom_zero = true;
        } else if (item == "all") {
            laws = {true, true, true, true, true};
        } else if (item != "none" && !item.empty())
            throw std::invalid_argument("unknown valuation law '" + item + "'");
    }
    return laws;
}

Convention parse_convention(std::string_view name) {
    if (name == "paper")
        return Convention::paper_literal;
    if (name == "standard")
        return Convention::standard;
    throw std::invalid_argument("unknown convention '" + std::string(name) + "' (expected paper or standard)");
}

FiniteLattice document_lattice(const InputDocument& doc, ClosureOptions options) {
    return close_and_build(doc.seeds(), doc.ambient_dim, options);
}

std::vector<std::pair<std::string, ExactMatrix>> resolve_ops(const InputDocument& doc,
                                                             const std::vector<std::string>& names) {
    std::vector<std::pair<std::string, ExactMatrix>> out;
    if (names.empty()) {
        for (const auto& p : doc.projectors)
            out.emplace_back(p.name, p.matrix);
        return out;
    }
    for (const std::string& name : names) {
        if (const NamedProjector* p = doc.find_projector(name)) {
            out.emplace_back(p->name, p->matrix);
        } else if (const NamedContext* c = doc.find_context(name)) {
            for (const std::string& m : c->members)
                out.emplace_back(m, doc.find_projector(m)->matrix);
        } else {
            throw std::invalid_argument("no projector or context named '" + name + "'");
        }
    }
    return out;
}

Report lattice_command(const InputDocument& doc) {
    const FiniteLattice l = document_lattice(doc);
    Report r;
    r.line("Lattice of " + std::to_string(l.size()) + " subspaces of C^" + std::to_string(l.ambient_dim()) + ":");
    catalogue(r, "lattice", l);
    r.record("lattice.atoms", labels_of(l, atoms(l)));
    r.line();
    index_table(r, "Order (1 = row <= column):", "lattice.order", l,
                [&](std::size_t a, std::size_t b) { return std::string(l.leq(a, b) ? "1" : "0"); });
    r.line();
    index_table(r, "Meet table:", "lattice.meet", l,
                [&](std::size_t a, std::size_t b) { return std::to_string(l.meet(a, b)); });
    r.line();
    index_table(r, "Join table:", "lattice.join", l,
                [&](std::size_t a, std::size_t b) { return std::to_string(l.join(a, b)); });
    return r;
}

Report laws_command(const InputDocument& doc, std::size_t max_examples) {
    const FiniteLattice l = document_lattice(doc);
    const LawOptions options{max_examples};
    Report r;
    r.line("Law checks on " + std::to_string(l.size()) + " elements:");
    catalogue(r, "lattice", l);
    law_report(r, "laws.distributive", l, check_distributive(l, options));
    law_report(r, "laws.modular", l, check_modular(l, options));
    bool complemented = true;
    for (std::size_t k = 0; k < l.size(); ++k)
        complemented = complemented && l.complement(k).has_value();
    if (complemented) {
        law_report(r, "laws.orthomodular", l, check_orthomodular(l, options));
    } else {
        r.line("  orthomodular: skipped (lattice is not closed under orthocomplement)");
        r.record("laws.orthomodular.holds", "n/a");
    }
    for (const LawReport& axiom : check_lattice_axioms(l, options))
        law_report(r, "axioms." + axiom.law, l, axiom);
    return r;
}

Report filters_command(const InputDocument& doc, const std::string& remove, Convention convention) {
    const FiniteLattice l = document_lattice(doc);
    const Subspace target = named_subspace(doc, remove);
    const auto w = l.index_of(target);
    if (!w)
        throw std::invalid_argument("'" + remove + "' is not an element of the lattice");

    const LatticeSubset f = coatom_complement_filter(l, *w);
    const LatticeSubset ideal = ideal_complement(f);
    const UpwardClosure up = is_upward_closed(f);
    const Bivaluation v = homomorphism_from_filter(f, convention);

    Report r;
    r.record("filter.removed", l.label(*w));
    r.record("filter.convention", to_string(convention));
    r.record("filter.members", labels_of(l, f.members()));
    r.record("filter.downward_directed", is_downward_directed(f));
    r.record("filter.upward_closed", up.holds);
    if (up.witness)
        r.record("filter.upward_witness", l.label(up.witness->first) + " <= " + l.label(up.witness->second));
    r.record("filter.prime_paper", is_prime_paper(f));
    r.record("filter.prime_standard", to_string(is_prime_standard(f)));
    r.record("ideal.members", labels_of(l, ideal.members()));

    r.line("Filter F = L \\ {" + l.label(*w) + "} (" + std::to_string(f.size()) + " members)");
    r.line("  downward directed:        " + std::string(is_downward_directed(f) ? "yes" : "no"));
    r.line("  upward closed:            " +
           std::string(up.holds ? "yes" : "no, " + l.label(up.witness->first) + " <= " + l.label(up.witness->second)));
    r.line("  prime (literal clause):   " + std::string(is_prime_paper(f) ? "yes" : "no"));
    r.line("  prime (standard):         " + to_string(is_prime_standard(f)));
    r.line("Ideal I = {" + labels_of(l, ideal.members()) + "}");

    r.line("Valuation (" + to_string(convention) + " convention):");
    for (std::size_t k = 0; k < l.size(); ++k) {
        r.line("  v(" + l.label(k) + ") = " + std::to_string(v.value(k)));
        r.record("valuation." + std::to_string(k), std::to_string(v.value(k)));
    }
    r.record("valuation.bits", bit_string(v.values()));
    std::vector<std::string> pairs;
    for (const auto& [x, y] : complement_law_pairs(v))
        pairs.push_back(l.label(x) + " / " + l.label(y));
    r.record("valuation.complement_law_pairs", join_strings(pairs));
    r.line("  complement law v(x) + v(x') = 1 holds for: " + (pairs.empty() ? std::string("none") : join_strings(pairs)));
    const bool hom = satisfies(l, v.values(), ValuationLaws::homomorphism());
    r.record("valuation.homomorphism", hom);
    r.line("  lattice homomorphism onto {0,1}: " + std::string(hom ? "yes" : "no"));
    return r;
}

Report valuations_command(const InputDocument& doc, ValuationLaws laws) {
    const FiniteLattice l = document_lattice(doc);
    const std::vector<Bivaluation> found = search_bivaluations(l, laws);
    Report r;
    r.record("valuations.laws", laws.to_string());
    r.record("valuations.elements", l.size());
    r.record("valuations.count", found.size());
    r.line("Elements:");
    for (std::size_t k = 0; k < l.size(); ++k)
        r.line("  [" + std::to_string(k) + "] " + l.label(k));
    r.line(std::to_string(found.size()) + " valuations found (laws: " + laws.to_string() + ")");
    for (std::size_t k = 0; k < found.size(); ++k) {
        const std::string bits = bit_string(found[k].values());
        r.line("  " + bits + "  true on: " + labels_of(l, found[k].true_elements()));
        r.record("valuations." + std::to_string(k), bits);
    }
    return r;
}

Report invariant_command(const InputDocument& doc, const std::vector<std::string>& ops) {
    const FiniteLattice universe = document_lattice(doc);
    const auto resolved = resolve_ops(doc, ops);
    Report r;
    r.record("invariant.universe.size", universe.size());
    std::vector<ExactMatrix> matrices;
    for (const auto& [name, p] : resolved) {
        const FiniteLattice inv = invariant_sublattice(p, universe);
        r.line("Invariant under " + name + ": {" + labels_of(inv, all_indices(inv)) + "}");
        r.record("invariant." + name + ".size", inv.size());
        r.record("invariant." + name + ".elements", labels_of(inv, all_indices(inv)));
        matrices.push_back(p);
    }
    const FiniteLattice common = common_invariant_sublattice(matrices, universe);
    r.line("Common invariants: {" + labels_of(common, all_indices(common)) + "}");
    r.record("invariant.common.size", common.size());
    r.record("invariant.common.elements", labels_of(common, all_indices(common)));
    r.record("invariant.common.distributive", is_distributive(common));
    return r;
}

Report burnside_command(const InputDocument& doc, const std::vector<std::string>& ops) {
    const auto resolved = resolve_ops(doc, ops);
    if (resolved.empty())
        throw std::invalid_argument("burnside: no operators selected");
    std::vector<ExactMatrix> matrices;
    std::vector<std::string> names;
    for (const auto& [name, p] : resolved) {
        matrices.push_back(p);
        names.push_back(name);
    }
    const IrreducibilityReport rep = analyze_irreducibility(matrices);
    const FiniteLattice universe = document_lattice(doc);
    const FiniteLattice common = common_invariant_sublattice(matrices, universe);

    Report r;
    r.record("burnside.ops", join_strings(names, ","));
    r.record("burnside.algebra_dim", rep.algebra.dim());
    r.record("burnside.full_dim", rep.full_dim);
    r.record("burnside.irreducible", rep.irreducible);
    r.record("burnside.common_invariants", labels_of(common, all_indices(common)));
    r.line("Operators: " + join_strings(names, ", "));
    r.line("Generated unital algebra: dim " + std::to_string(rep.algebra.dim()) + " of " +
           std::to_string(rep.full_dim));
    r.line(std::string("Irreducible: ") + (rep.irreducible ? "yes" : "no"));
    r.line("Common invariant subspaces in the document lattice: {" + labels_of(common, all_indices(common)) + "}");
    return r;
}

Report contexts_command(const InputDocument& doc) {
    if (doc.contexts.empty())
        throw std::invalid_argument("contexts: the document declares no contexts");
    const FiniteLattice universe = document_lattice(doc);
    LatticeRegistry registry;
    for (const NamedContext& c : doc.contexts) {
        std::vector<ExactMatrix> ops;
        for (const std::string& m : c.members)
            ops.push_back(doc.find_projector(m)->matrix);
        registry.add(c.name, common_invariant_sublattice(ops, universe));
    }

    Report r;
    r.line("Context lattices:");
    for (const auto& [name, l] : registry.lattices()) {
        r.line("  " + name + ": {" + labels_of(l, all_indices(l)) + "}");
        r.record("contexts.lattice." + name, labels_of(l, all_indices(l)));
    }

    r.line();
    r.line("Meet defined (1 = some context holds both):");
    catalogue(r, "contexts.universe", universe);
    for (std::size_t a = 0; a < universe.size(); ++a) {
        std::string row;
        for (std::size_t b = 0; b < universe.size(); ++b)
            row += meet_defined(universe.element(a), universe.element(b), registry) ? '1' : '0';
        r.line("  [" + std::to_string(a) + "] " + row);
        r.record("contexts.meet_defined." + std::to_string(a), row);
    }

    const ContextualReport rep = contextual_valuation_report(registry);
    r.line();
    for (const LatticeValuations& lv : rep.lattices) {
        r.line("Context " + lv.name + ": " + std::to_string(lv.homomorphisms.size()) + " homomorphisms onto {0,1}");
        r.record("contexts." + lv.name + ".homomorphisms", lv.homomorphisms.size());
        for (const AtomChoice& choice : lv.choices) {
            const std::string atom = to_string(lv.elements[choice.atom]);
            r.line("  removing " + atom + ": paper v=" + bit_string(choice.paper_values) +
                   ", standard v=" + bit_string(choice.standard_values));
            r.line("    undefined on: " + (choice.excluded.empty() ? std::string("nothing") : labels_of(choice.excluded)));
            const std::string key = "contexts." + lv.name + ".choice." + std::to_string(choice.atom);
            r.record(key + ".atom", atom);
            r.record(key + ".paper", bit_string(choice.paper_values));
            r.record(key + ".standard", bit_string(choice.standard_values));
            r.record(key + ".excluded", labels_of(choice.excluded));
        }
    }
    r.line("Maps homomorphic on every context separately: " + std::to_string(rep.joint_context_maps));
    r.line("Homomorphisms on the joined lattice (" + std::to_string(rep.union_lattice.size()) +
           " elements): " + std::to_string(rep.global_homomorphisms));
    r.record("contexts.joint_context_maps", rep.joint_context_maps);
    r.record("contexts.union.size", rep.union_lattice.size());
    r.record("contexts.global_homomorphisms", rep.global_homomorphisms);
    return r;
}

std::string dot_command(const InputDocument& doc) { return to_dot(document_lattice(doc)); }

std::vector<std::string> check_assertions(const Report& report, const std::vector<std::string>& assertions) {
    std::vector<std::string> failures;
    for (const std::string& a : assertions) {
        const std::size_t eq = a.find('=');
        if (eq == std::string::npos) {
            failures.push_back("malformed assertion '" + a + "' (expected key=value)");
            continue;
        }
        const std::string key = a.substr(0, eq);
        const std::string expected = a.substr(eq + 1);
        const auto actual = report.find(key);
        if (!actual)
            failures.push_back("assertion " + key + ": no such record");
        else if (*actual != expected)
            failures.push_back("assertion " + key + ": expected '" + expected + "', got '" + *actual + "'");
    }
    return failures;
}

namespace {

class Demo {
public:
    void check(const std::string& name, bool ok) {
        result_.report.record("demo.check." + name, ok ? "pass" : "FAIL");
        if (!ok) {
            result_.failures.push_back(name);
            line("  !! expectation failed: " + name);
        }
    }

    void line(std::string text = {}) { result_.report.line(std::move(text)); }
    Report& report() { return result_.report; }

    DemoResult finish() {
        result_.report.record("demo.failures", result_.failures.size());
        result_.report.record("demo.status", result_.failures.empty() ? "ok" : "fail");
        line(result_.failures.empty() ? "All expectations met."
                                      : std::to_string(result_.failures.size()) + " expectation(s) failed.");
        return std::move(result_);
    }

private:
    DemoResult result_;
};

Subspace ray(std::initializer_list<GaussianRational> v) { return image(ExactMatrix::column(std::vector<GaussianRational>(v))); }

}  // namespace

DemoResult demo_qubit() {
    using qubit::ProjectorId;
    Demo d;
    const GaussianRational i = GaussianRational::i();

    // The six rays in catalogue order, with the parameter a = 1.
    const std::vector<std::pair<std::string, Subspace>> listed = {
        {"[a, a]", ray({1, 1})},  {"[a, -a]", ray({1, -1})}, {"[ia, a]", ray({i, 1})},
        {"[a, ia]", ray({1, i})}, {"[a, 0]", ray({1, 0})},   {"[0, a]", ray({0, 1})},
    };

    // Projector family.
    d.line("== Projector family ==");
    bool family_ok = true;
    for (ProjectorId id : qubit::all_ids()) {
        const ExactMatrix p = qubit::projector(id);
        family_ok = family_ok && is_hermitian(p) && is_idempotent(p);
        d.line("  " + id.label() + " = " + to_string(p) + "  ran = " + to_string(image(p)));
        d.report().record("demo.projector." + std::to_string(id.q()) + std::to_string(id.n()), to_string(p));
    }
    d.check("projectors_hermitian_idempotent", family_ok);
    d.check("p01_is_zero", qubit::projector({0, 1}).is_zero());
    d.check("p02_is_identity", qubit::projector({0, 2}) == ExactMatrix::identity(2));

    // Catalogue.
    d.line();
    d.line("== Closed subspaces of C^2 ==");
    const FiniteLattice full = close_and_build(qubit::nontrivial_images(), 2);
    catalogue(d.report(), "demo.catalogue", full);
    bool listing_ok = full.size() == 8;
    for (const auto& [ray_text, s] : listed) {
        listing_ok = listing_ok && full.contains(s);
        d.line("  " + ray_text + " -> " + to_string(s));
    }
    d.check("catalogue_size_8", full.size() == 8);
    d.check("catalogue_matches_listing", listing_ok);
    bool round_trip = true;
    for (std::size_t k = 0; k < full.size(); ++k) {
        const Subspace parsed = parse_span(full.label(k), 2);
        round_trip = round_trip && parsed == full.element(k) && to_string(parsed) == full.label(k);
    }
    d.check("labels_round_trip", round_trip);
    d.check("dot_8_nodes_12_edges", hasse_edges(full).size() == 12);

    // Invariant-subspace lattices.
    d.line();
    d.line("== Invariant-subspace lattices ==");
    std::vector<FiniteLattice> contexts;
    for (int w = 1; w <= 3; ++w) {
        const qubit::ContextSet ctx = qubit::context(w);
        const FiniteLattice lw1 = invariant_sublattice(ctx.members[0], full);
        const FiniteLattice lw2 = invariant_sublattice(ctx.members[1], full);
        const FiniteLattice lw =
            common_invariant_sublattice({ctx.members[0], ctx.members[1]}, full);
        const std::string name = "L" + std::to_string(w);
        d.line("  " + name + " = {" + labels_of(lw, all_indices(lw)) + "}");
        d.report().record("demo.invariant." + name, labels_of(lw, all_indices(lw)));
        const Subspace& a = listed[2 * (w - 1)].second;
        const Subspace& b = listed[2 * (w - 1) + 1].second;
        d.check("invariant_" + name + "_matches_listing", lw.size() == 4 && lw.contains(a) && lw.contains(b));
        d.check("invariant_" + name + "_k_independent", same_elements(lw1, lw2) && same_elements(lw1, lw));
        d.check("invariant_" + name + "_distributive", is_distributive(lw));
        contexts.push_back(lw);
    }
    const FiniteLattice common = common_invariant_sublattice(qubit::sigma_projectors(), full);
    d.line("  L = {" + labels_of(common, all_indices(common)) + "}");
    d.check("common_invariants_trivial", common.size() == 2);

    // Distributivity.
    d.line();
    d.line("== Distributive law on the full lattice ==");
    const std::size_t k_idx = *full.index_of(listed[0].second);
    const std::size_t m_idx = *full.index_of(listed[1].second);
    const std::size_t o_idx = *full.index_of(listed[4].second);
    const std::size_t lhs = full.meet(full.join(k_idx, m_idx), o_idx);
    const std::size_t rhs = full.join(full.meet(k_idx, o_idx), full.meet(m_idx, o_idx));
    d.line("  K = " + full.label(k_idx) + ", M = " + full.label(m_idx) + ", O = " + full.label(o_idx));
    d.line("  (K v M) ^ O = " + full.label(lhs) + ",  (K ^ O) v (M ^ O) = " + full.label(rhs));
    d.report().record("demo.distributive.lhs", full.label(lhs));
    d.report().record("demo.distributive.rhs", full.label(rhs));
    const LawReport dist = check_distributive(full, {full.size() * full.size() * full.size()});
    bool triple_found = false;
    for (const Violation& v : dist.examples)
        triple_found = triple_found || v.elements == std::vector<std::size_t>{k_idx, m_idx, o_idx};
    d.report().record("demo.distributive.violations", dist.violation_count);
    d.line("  " + std::to_string(dist.violation_count) + " violating triples in total");
    d.check("distributive_counterexample", lhs == o_idx && rhs == full.bottom() && triple_found);
    d.check("modular_full", check_modular(full).holds());
    d.check("orthomodular_full", check_orthomodular(full).holds());

    // Burnside.
    d.line();
    d.line("== Generated algebra ==");
    const IrreducibilityReport burnside = analyze_irreducibility(qubit::sigma_projectors());
    d.line("  dim A(Sigma) = " + std::to_string(burnside.algebra.dim()) + ", irreducible: " +
           (burnside.irreducible ? "yes" : "no"));
    d.report().record("demo.burnside.algebra_dim", burnside.algebra.dim());
    d.report().record("demo.burnside.irreducible", burnside.irreducible);
    d.check("burnside_full_algebra", burnside.algebra.dim() == 4 && burnside.irreducible);
    d.check("burnside_common_invariants_trivial", burnside.common_invariants.size() == 2);
    bool context_algebras = true;
    for (const qubit::ContextSet& ctx : qubit::full_sigma())
        context_algebras = context_algebras && algebra_span({ctx.members[0], ctx.members[1]}).dim() == 2;
    d.check("context_algebras_dim_2", context_algebras);

    // Literal filters and valuations.
    d.line();
    d.line("== Filters F(w) = L \\ {w} ==");
    bool filters_ok = true;
    for (std::size_t w : atoms(full)) {
        const LatticeSubset f = coatom_complement_filter(full, w);
        const UpwardClosure up = is_upward_closed(f);
        const Bivaluation paper = homomorphism_from_filter(f, Convention::paper_literal);
        const Bivaluation standard = homomorphism_from_filter(f, Convention::standard);
        const auto pairs = complement_law_pairs(paper);
        const std::size_t w_perp = *full.complement(w);

        bool ok = is_downward_directed(f) && is_prime_paper(f) && !up.holds &&
                  up.witness == std::make_pair(full.bottom(), w);
        ok = ok && paper.true_elements() == std::vector<std::size_t>{w};
        ok = ok && pairs == std::vector<std::pair<std::size_t, std::size_t>>{{std::min(w, w_perp), std::max(w, w_perp)}};
        ok = ok && standard.value(full.top()) == 1 && standard.value(w) == 0;
        for (const FiniteLattice& lw : contexts)
            if (lw.contains(full.element(w)))
                ok = ok && satisfies(lw, restrict_to(standard, lw).values(), ValuationLaws::homomorphism());
        filters_ok = filters_ok && ok;

        d.line("  w = " + full.label(w) + ": directed, literal-prime, up-closure witness " +
               full.label(up.witness->first) + " <= " + full.label(up.witness->second) +
               "; paper v = " + bit_string(paper.values()) + ", standard v = " + bit_string(standard.values()));
        d.report().record("demo.filter." + std::to_string(w) + ".paper", bit_string(paper.values()));
        d.report().record("demo.filter." + std::to_string(w) + ".standard", bit_string(standard.values()));
    }
    d.check("literal_filter_battery", filters_ok);

    // Valuation search.
    d.line();
    d.line("== Two-valued homomorphisms ==");
    const std::size_t full_count = search_bivaluations(full, ValuationLaws::homomorphism()).size();
    d.line("  full lattice: " + std::to_string(full_count));
    d.report().record("demo.valuations.full", full_count);
    d.check("no_valuation_on_full_lattice", full_count == 0);
    for (std::size_t w = 0; w < contexts.size(); ++w) {
        const std::size_t n = search_bivaluations(contexts[w], ValuationLaws::homomorphism()).size();
        const std::string name = "L" + std::to_string(w + 1);
        d.line("  " + name + ": " + std::to_string(n));
        d.report().record("demo.valuations." + name, n);
        d.check("two_valuations_on_" + name, n == 2);
    }

    // State valuation.
    d.line();
    d.line("== State valuation with P(1,1) ==");
    const ExactMatrix p11 = qubit::projector({1, 1});
    const StateValue s1 = state_valuation(p11, {1, 1});
    const StateValue s2 = state_valuation(p11, {1, -1});
    const StateValue s3 = state_valuation(p11, {1, 0});
    d.line("  [1, 1] -> " + to_string(s1) + ", [1, -1] -> " + to_string(s2) + ", [1, 0] -> " + to_string(s3));
    d.report().record("demo.state", to_string(s1) + " " + to_string(s2) + " " + to_string(s3));
    d.check("state_valuation", s1 == StateValue::one && s2 == StateValue::zero && s3 == StateValue::indeterminate);

    // Contexts.
    d.line();
    d.line("== Contexts ==");
    LatticeRegistry registry;
    for (std::size_t w = 0; w < contexts.size(); ++w)
        registry.add("L" + std::to_string(w + 1), contexts[w]);
    const bool same_context = meet_defined(listed[0].second, listed[1].second, registry);
    const bool cross_context = meet_defined(listed[0].second, listed[4].second, registry);
    d.line(std::string("  meet defined for [a, a], [a, -a]: ") + (same_context ? "yes" : "no") +
           "; for [a, a], [a, 0]: " + (cross_context ? "yes" : "no"));
    d.check("meet_defined_within_context", same_context && !cross_context);
    const ContextualReport rep = contextual_valuation_report(registry);
    bool per_lattice = true;
    for (const LatticeValuations& lv : rep.lattices)
        per_lattice = per_lattice && lv.homomorphisms.size() == 2;
    d.line("  per-context homomorphisms: 2 each; joint per-context maps: " + std::to_string(rep.joint_context_maps) +
           "; homomorphisms on the joined lattice: " + std::to_string(rep.global_homomorphisms));
    d.report().record("demo.contexts.joint_context_maps", rep.joint_context_maps);
    d.report().record("demo.contexts.global_homomorphisms", rep.global_homomorphisms);
    d.check("contextual_valuations", per_lattice && rep.joint_context_maps == 8 && rep.global_homomorphisms == 0);

    d.line();
    return d.finish();
}

}  // namespace qlat::cli
