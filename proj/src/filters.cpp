#include "qlat/filters.hpp"

#include <algorithm>

namespace qlat {

std::string to_string(Convention c) { return c == Convention::paper_literal ? "paper" : "standard"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

std::string to_string(StateValue v) {
    switch (v) {
        case StateValue::one: return "1";
        case StateValue::zero: return "0";
        case StateValue::indeterminate: return "indeterminate";
    }
    return "?";
}

LatticeSubset::LatticeSubset(const FiniteLattice& host, const std::vector<std::size_t>& members)
    : host_(&host), flags_(host.size(), false) {
    for (std::size_t m : members) {
        if (m >= host.size())
            throw std::out_of_range("subset member " + std::to_string(m) + " is not an element index");
        flags_[m] = true;
    }
}

LatticeSubset LatticeSubset::all(const FiniteLattice& host) {
    std::vector<std::size_t> members(host.size());
    for (std::size_t k = 0; k < host.size(); ++k)
        members[k] = k;
    return {host, members};
}

LatticeSubset LatticeSubset::none(const FiniteLattice& host) { return {host, {}}; }

std::size_t LatticeSubset::size() const { return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), true)); }

std::vector<std::size_t> LatticeSubset::members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < flags_.size(); ++k)
        if (flags_[k])
            out.push_back(k);
    return out;
}

LatticeSubset coatom_complement_filter(const FiniteLattice& l, std::size_t w) {
    if (w >= l.size())
        throw std::out_of_range("element index out of range");
    if (w == l.bottom() || w == l.top())
        throw std::invalid_argument("the removed element must be nontrivial, got " + l.label(w));
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < l.size(); ++k)
        if (k != w)
            members.push_back(k);
    return {l, members};
}

bool is_downward_directed(const LatticeSubset& s) {
    const FiniteLattice& l = s.host();
    for (std::size_t x : s.members())
        for (std::size_t y : s.members())
            if (!s.contains(l.meet(x, y)))
                return false;
    return true;
}

UpwardClosure is_upward_closed(const LatticeSubset& s) {
    const FiniteLattice& l = s.host();
    for (std::size_t x : s.members())
        for (std::size_t y = 0; y < l.size(); ++y)
            if (l.leq(x, y) && !s.contains(y))
                return {false, std::make_pair(x, y)};
    return {};
}

bool is_prime_paper(const LatticeSubset& s) {
    const FiniteLattice& l = s.host();
    for (std::size_t w = 0; w < l.size(); ++w) {
        if (s.contains(w))
            continue;
        for (std::size_t x = 0; x < l.size(); ++x)
            if (s.contains(l.join(x, w)) && !s.contains(x))
                return false;
    }
    return true;
}

bool is_standard_filter(const LatticeSubset& s) {
    const std::size_t n = s.size();
    return n > 0 && n < s.host().size() && is_upward_closed(s).holds && is_downward_directed(s);
}

Verdict is_prime_standard(const LatticeSubset& s) {
    if (!is_standard_filter(s))
        return Verdict::not_applicable;
    const FiniteLattice& l = s.host();
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b)
            if (s.contains(l.join(a, b)) && !s.contains(a) && !s.contains(b))
                return Verdict::fails;
    return Verdict::holds;
}

LatticeSubset ideal_complement(const LatticeSubset& s) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < s.host().size(); ++k)
        if (!s.contains(k))
            members.push_back(k);
    return {s.host(), members};
}

Bivaluation::Bivaluation(const FiniteLattice& host, std::vector<std::uint8_t> values, Convention convention)
    : host_(&host), values_(std::move(values)), convention_(convention) {
    if (values_.size() != host.size())
        throw std::invalid_argument("bivaluation must assign every element");
    for (std::uint8_t v : values_)
        if (v > 1)
            throw std::invalid_argument("bivaluation values must be 0 or 1");
}

std::uint64_t Bivaluation::bits() const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k])
            out |= std::uint64_t{1} << k;
    return out;
}

std::vector<std::size_t> Bivaluation::true_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k])
            out.push_back(k);
    return out;
}

Bivaluation homomorphism_from_filter(const LatticeSubset& f, Convention convention) {
    const FiniteLattice& l = f.host();
    const std::vector<std::size_t> removed = ideal_complement(f).members();
    if (removed.size() != 1 || removed[0] == l.bottom() || removed[0] == l.top())
        throw std::invalid_argument("filter is not the complement of a single nontrivial element");
    const std::size_t w = removed[0];

    std::vector<std::uint8_t> values(l.size(), 0);
    if (convention == Convention::paper_literal) {
        values[w] = 1;
    } else {
        const auto w_perp = l.complement(w);
        if (!w_perp)
            throw std::invalid_argument("orthocomplement of " + l.label(w) + " is not an element");
        for (std::size_t x = 0; x < l.size(); ++x)
            values[x] = l.leq(*w_perp, x) ? 1 : 0;
    }
    return {l, std::move(values), convention};
}

Bivaluation restrict_to(const Bivaluation& v, const FiniteLattice& sub) {
    std::vector<std::uint8_t> values;
    for (const Subspace& s : sub.elements()) {
        const auto k = v.host().index_of(s);
        if (!k)
            throw std::invalid_argument("restrict_to: " + to_string(s) + " is not in the valuation's domain");
        values.push_back(static_cast<std::uint8_t>(v.value(*k)));
    }
    return {sub, std::move(values), v.convention()};
}

std::vector<std::pair<std::size_t, std::size_t>> complement_law_pairs(const Bivaluation& v) {
    const FiniteLattice& l = v.host();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < l.size(); ++x) {
        const auto c = l.complement(x);
        if (c && x < *c && v.value(x) + v.value(*c) == 1)
            out.emplace_back(x, *c);
    }
    return out;
}

StateValue state_valuation(const ExactMatrix& p, const StateVector& psi) {
    if (!is_projector(p))
        throw std::invalid_argument("state_valuation: operator is not a projector");
    if (contains_vector(image(p), psi))
        return StateValue::one;
    if (contains_vector(image(ExactMatrix::identity(p.rows()) - p), psi))
        return StateValue::zero;
    return StateValue::indeterminate;
}

std::string ValuationLaws::to_string() const {
    std::string out;
    const auto add = [&](bool on, const char* name) {
        if (!on)
            return;
        if (!out.empty())
            out += ",";
        out += name;
    };
    add(meet_hom, "meet-hom");
    add(join_hom, "join-hom");
    add(complement_law, "complement");
    add(top_one, "top");
    add(bottom_zero, "bottom");
    return out.empty() ? "none" : out;
}

bool satisfies(const FiniteLattice& l, const std::vector<std::uint8_t>& values, ValuationLaws laws) {
    const std::size_t n = l.size();
    if (laws.top_one && values[l.top()] != 1)
        return false;
    if (laws.bottom_zero && values[l.bottom()] != 0)
        return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (laws.complement_law) {
            const auto c = l.complement(a);
            if (c && values[a] + values[*c] != 1)
                return false;
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (laws.meet_hom && values[l.meet(a, b)] != (values[a] & values[b]))
                return false;
            if (laws.join_hom && values[l.join(a, b)] != (values[a] | values[b]))
                return false;
        }
    }
    return true;
}

namespace {

// Depth-first assignment with forced-value propagation. `values` holds -1 for
// unassigned elements.
class ValuationSearch {
public:
    ValuationSearch(const FiniteLattice& l, ValuationLaws laws) : l_(l), laws_(laws), values_(l.size(), -1) {
        order_.push_back(l.bottom());
        order_.push_back(l.top());
        for (std::size_t a : atoms(l))
            if (a != l.top())
                order_.push_back(a);
        std::vector<bool> queued(l.size(), false);
        for (std::size_t k : order_)
            queued[k] = true;
        for (std::size_t k = 0; k < l.size(); ++k)
            if (!queued[k])
                order_.push_back(k);
    }

    std::vector<std::uint64_t> run() {
        descend(0);
        std::sort(found_.begin(), found_.end());
        return found_;
    }

private:
    bool assigned(std::size_t k) const { return values_[k] >= 0; }

    // The value the laws force on e from already-assigned elements: 0 or 1,
    // -1 if unconstrained, -2 on conflict.
    int forced(std::size_t e) const {
        int f = -1;
        const auto force = [&](int v) {
            if (f == -2)
                return;
            f = (f == -1 || f == v) ? v : -2;
        };
        if (laws_.top_one && e == l_.top())
            force(1);
        if (laws_.bottom_zero && e == l_.bottom())
            force(0);
        if (laws_.complement_law) {
            const auto c = l_.complement(e);
            if (c && *c != e && assigned(*c))
                force(1 - values_[*c]);
        }
        if (laws_.meet_hom || laws_.join_hom)
            for (std::size_t a = 0; a < l_.size(); ++a) {
                if (!assigned(a))
                    continue;
                for (std::size_t b = 0; b < l_.size(); ++b) {
                    if (!assigned(b))
                        continue;
                    if (laws_.meet_hom && l_.meet(a, b) == e)
                        force(values_[a] & values_[b]);
                    if (laws_.join_hom && l_.join(a, b) == e)
                        force(values_[a] | values_[b]);
                }
            }
        return f;
    }

    // Laws whose operands include e and whose result is already assigned.
    bool consistent(std::size_t e) const {
        if (laws_.complement_law) {
            const auto c = l_.complement(e);
            if (c && (*c == e || (assigned(*c) && values_[e] + values_[*c] != 1)))
                return false;
        }
        for (std::size_t a = 0; a < l_.size(); ++a) {
            if (!assigned(a))
                continue;
            const std::size_t m = l_.meet(a, e);
            if (laws_.meet_hom && assigned(m) && values_[m] != (values_[a] & values_[e]))
                return false;
            const std::size_t j = l_.join(a, e);
            if (laws_.join_hom && assigned(j) && values_[j] != (values_[a] | values_[e]))
                return false;
        }
        return true;
    }

    void descend(std::size_t depth) {
        if (depth == order_.size()) {
            std::uint64_t bits = 0;
            for (std::size_t k = 0; k < values_.size(); ++k)
                if (values_[k])
                    bits |= std::uint64_t{1} << k;
            found_.push_back(bits);
            return;
        }
        const std::size_t e = order_[depth];
        const int f = forced(e);
        if (f == -2)
            return;
        for (int v = 0; v <= 1; ++v) {
            if (f >= 0 && v != f)
                continue;
            values_[e] = static_cast<signed char>(v);
            if (consistent(e))
                descend(depth + 1);
            values_[e] = -1;
        }
    }

    const FiniteLattice& l_;
    ValuationLaws laws_;
    std::vector<signed char> values_;
    std::vector<std::size_t> order_;
    std::vector<std::uint64_t> found_;
};

}  // namespace

std::vector<Bivaluation> search_bivaluations(const FiniteLattice& l, ValuationLaws laws) {
    if (l.size() > max_enumeration_elements)
        throw EnumerationTooLarge("valuation search is limited to " + std::to_string(max_enumeration_elements) +
                                  " elements, lattice has " + std::to_string(l.size()));
    std::vector<Bivaluation> out;
    for (std::uint64_t bits : ValuationSearch(l, laws).run()) {
        std::vector<std::uint8_t> values(l.size());
        for (std::size_t k = 0; k < l.size(); ++k)
            values[k] = static_cast<std::uint8_t>((bits >> k) & 1);
        out.emplace_back(l, std::move(values), Convention::standard);
    }
    return out;
}

}  // namespace qlat
