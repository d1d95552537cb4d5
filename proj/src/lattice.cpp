#include "qlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qlat {

namespace {

class LawScan {
public:
    LawScan(std::string law, LawOptions options) : options_(options) { report_.law = std::move(law); }

    void check(bool ok, std::vector<std::size_t> elements, std::size_t lhs, std::size_t rhs) {
        ++report_.cases_checked;
        if (ok)
            return;
        ++report_.violation_count;
        if (report_.examples.size() < options_.max_examples)
            report_.examples.push_back({std::move(elements), lhs, rhs});
    }

    LawReport take() { return std::move(report_); }

private:
    LawOptions options_;
    LawReport report_;
};

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::optional<std::size_t> FiniteLattice::index_of(const Subspace& s) const {
    for (std::size_t k = 0; k < elements_.size(); ++k)
        if (elements_[k] == s)
            return k;
    return std::nullopt;
}

bool FiniteLattice::covers(std::size_t a, std::size_t b) const {
    if (a == b || !leq(a, b))
        return false;
    for (std::size_t k = 0; k < size(); ++k)
        if (k != a && k != b && leq(a, k) && leq(k, b))
            return false;
    return true;
}

FiniteLattice close_and_build(const std::vector<Subspace>& seeds, std::size_t ambient_dim, ClosureOptions options) {
    std::vector<Subspace> found;
    std::map<std::string, std::size_t> index;
    const auto add = [&](const Subspace& s) -> std::size_t {
        if (s.ambient_dim() != ambient_dim)
            throw DimensionError("close_and_build: seed " + to_string(s) + " is not in C^" + std::to_string(ambient_dim));
        auto [it, inserted] = index.emplace(to_string(s), found.size());
        if (inserted) {
            if (found.size() >= options.element_cap)
                throw ClosureCapExceeded("lattice closure exceeded " + std::to_string(options.element_cap) + " elements");
            found.push_back(s);
        }
        return it->second;
    };

    add(Subspace::zero(ambient_dim));
    add(Subspace::full(ambient_dim));
    for (const Subspace& s : seeds)
        add(s);

    // Each unordered pair is combined exactly once; elements discovered along
    // the way are appended and paired with everything before them later.
    std::vector<std::vector<std::size_t>> meet_raw, join_raw;
    for (std::size_t k = 0; k < found.size(); ++k) {
        meet_raw.emplace_back(k + 1);
        join_raw.emplace_back(k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            const Subspace a = found[k];
            const Subspace b = found[j];
            const std::size_t m = add(meet(a, b));
            const std::size_t jn = add(join(a, b));
            meet_raw[k][j] = m;
            join_raw[k][j] = jn;
        }
    }

    const std::size_t n = found.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return found[a].dim() < found[b].dim(); });
    std::vector<std::size_t> rank_of(n);
    for (std::size_t k = 0; k < n; ++k)
        rank_of[order[k]] = k;

    FiniteLattice l;
    l.ambient_dim_ = ambient_dim;
    for (std::size_t k : order)
        l.elements_.push_back(found[k]);
    l.order_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t hi = std::max(a, b), lo = std::min(a, b);
            const std::size_t na = rank_of[a], nb = rank_of[b];
            l.meet_[na * n + nb] = rank_of[meet_raw[hi][lo]];
            l.join_[na * n + nb] = rank_of[join_raw[hi][lo]];
            l.order_[na * n + nb] = leq(found[a], found[b]) ? 1 : 0;
        }
    l.complement_.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        l.complement_[k] = l.index_of(orthocomplement(l.elements_[k]));
    return l;
}

bool same_elements(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size() || a.ambient_dim() != b.ambient_dim())
        return false;
    for (const Subspace& s : a.elements())
        if (!b.contains(s))
            return false;
    return true;
}

LawReport check_distributive(const FiniteLattice& l, LawOptions options) {
    LawScan scan("distributive", options);
    const std::size_t n = l.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t o = 0; o < n; ++o) {
                const std::size_t lhs = l.meet(l.join(k, m), o);
                const std::size_t rhs = l.join(l.meet(k, o), l.meet(m, o));
                scan.check(lhs == rhs, {k, m, o}, lhs, rhs);
            }
    return scan.take();
}

LawReport check_modular(const FiniteLattice& l, LawOptions options) {
    LawScan scan("modular", options);
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            if (!l.leq(a, c))
                continue;
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t lhs = l.join(a, l.meet(b, c));
                const std::size_t rhs = l.meet(l.join(a, b), c);
                scan.check(lhs == rhs, {a, b, c}, lhs, rhs);
            }
        }
    return scan.take();
}

LawReport check_orthomodular(const FiniteLattice& l, const std::function<std::size_t(std::size_t)>& complement,
                             LawOptions options) {
    LawScan scan("orthomodular", options);
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t a_perp = complement(a);
        for (std::size_t b = 0; b < n; ++b) {
            if (!l.leq(a, b))
                continue;
            const std::size_t rhs = l.join(a, l.meet(a_perp, b));
            scan.check(b == rhs, {a, b}, b, rhs);
        }
    }
    return scan.take();
}

LawReport check_orthomodular(const FiniteLattice& l, LawOptions options) {
    for (std::size_t k = 0; k < l.size(); ++k)
        if (!l.complement(k))
            throw std::invalid_argument("check_orthomodular: orthocomplement of " + l.label(k) +
                                        " is not an element of the lattice");
    return check_orthomodular(l, [&](std::size_t k) { return *l.complement(k); }, options);
}

std::vector<LawReport> check_lattice_axioms(const FiniteLattice& l, LawOptions options) {
    const std::size_t n = l.size();
    LawScan reflexive("order-reflexive", options), antisymmetric("order-antisymmetric", options),
        transitive("order-transitive", options), commutative("commutative", options),
        associative("associative", options), idempotent("idempotent", options), absorption("absorption", options),
        consistency("order-meet-join", options), bounds("bounds", options);

    for (std::size_t a = 0; a < n; ++a) {
        reflexive.check(l.leq(a, a), {a}, a, a);
        idempotent.check(l.meet(a, a) == a && l.join(a, a) == a, {a}, l.meet(a, a), l.join(a, a));
        bounds.check(l.leq(l.bottom(), a) && l.leq(a, l.top()), {a}, l.bottom(), l.top());
        for (std::size_t b = 0; b < n; ++b) {
            antisymmetric.check(!(l.leq(a, b) && l.leq(b, a)) || a == b, {a, b}, a, b);
            commutative.check(l.meet(a, b) == l.meet(b, a) && l.join(a, b) == l.join(b, a), {a, b}, l.meet(a, b),
                              l.meet(b, a));
            absorption.check(l.meet(a, l.join(a, b)) == a && l.join(a, l.meet(a, b)) == a, {a, b},
                             l.meet(a, l.join(a, b)), l.join(a, l.meet(a, b)));
            const bool by_order = l.leq(a, b);
            consistency.check(by_order == (l.meet(a, b) == a) && by_order == (l.join(a, b) == b), {a, b}, l.meet(a, b),
                              l.join(a, b));
            for (std::size_t c = 0; c < n; ++c) {
                transitive.check(!(l.leq(a, b) && l.leq(b, c)) || l.leq(a, c), {a, b, c}, a, c);
                const std::size_t m1 = l.meet(l.meet(a, b), c), m2 = l.meet(a, l.meet(b, c));
                const std::size_t j1 = l.join(l.join(a, b), c), j2 = l.join(a, l.join(b, c));
                associative.check(m1 == m2 && j1 == j2, {a, b, c}, m1 == m2 ? j1 : m1, m1 == m2 ? j2 : m2);
            }
        }
    }
    std::vector<LawReport> out;
    for (LawScan* s : {&reflexive, &antisymmetric, &transitive, &commutative, &associative, &idempotent, &absorption,
                       &consistency, &bounds})
        out.push_back(s->take());
    return out;
}

bool is_distributive(const FiniteLattice& l) { return check_distributive(l, {0}).holds(); }

std::vector<std::size_t> atoms(const FiniteLattice& l) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < l.size(); ++k)
        if (l.covers(l.bottom(), k))
            out.push_back(k);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FiniteLattice& l) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b)
            if (l.covers(a, b))
                out.emplace_back(a, b);
    return out;
}

std::string to_dot(const FiniteLattice& l, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (std::size_t k = 0; k < l.size(); ++k)
        os << "  n" << k << " [label=\"" << dot_escape(l.label(k)) << "\"];\n";
    for (const auto& [lo, hi] : hasse_edges(l))
        os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qlat
