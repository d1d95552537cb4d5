#pragma once

// Reference computations that avoid the library's elimination code: ranks
// from minors, lines of C^2 from 2x2 determinants, valuations and law
// violations by brute force over raw tables.

#include "qlat/lattice.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using qlat::ExactMatrix;
using qlat::GaussianRational;

/// Laplace expansion along the first row.
inline GaussianRational determinant(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    GaussianRational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, j = 0; k < n; ++k)
                if (k != c)
                    minor(r - 1, j++) = m(r, k);
        const GaussianRational term = m(0, c) * determinant(minor);
        det = c % 2 == 0 ? det + term : det - term;
    }
    return det;
}

/// Largest k with a nonzero k x k minor. Exponential; small matrices only.
inline std::size_t rank_by_minors(const ExactMatrix& m) {
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::size_t best = 0;
    std::vector<std::size_t> rows, cols;
    std::function<bool(std::size_t, std::size_t, std::size_t)> pick_cols;
    std::function<bool(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t k) -> bool {
        if (rows.size() == k)
            return pick_cols(0, k, 0);
        for (std::size_t r = start; r < m.rows(); ++r) {
            rows.push_back(r);
            const bool found = pick_rows(r + 1, k);
            rows.pop_back();
            if (found)
                return true;
        }
        return false;
    };
    pick_cols = [&](std::size_t start, std::size_t k, std::size_t) -> bool {
        if (cols.size() == k) {
            ExactMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    sub(a, b) = m(rows[a], cols[b]);
            return !determinant(sub).is_zero();
        }
        for (std::size_t c = start; c < m.cols(); ++c) {
            cols.push_back(c);
            const bool found = pick_cols(c + 1, k, 0);
            cols.pop_back();
            if (found)
                return true;
        }
        return false;
    };
    for (std::size_t k = 1; k <= limit; ++k)
        if (pick_rows(0, k))
            best = k;
        else
            break;
    return best;
}

/// u and v (nonzero columns of C^2) span the same line.
inline bool same_line(const ExactMatrix& u, const ExactMatrix& v) {
    return (u(0, 0) * v(1, 0) - u(1, 0) * v(0, 0)).is_zero();
}

/// The line orthogonal to span{[a, b]} in C^2 is span{[-conj(b), conj(a)]}.
inline ExactMatrix orthogonal_line(const ExactMatrix& u) {
    return ExactMatrix{{-u(1, 0).conj()}, {u(0, 0).conj()}};
}

/// Every one of the 2^n maps, checked against the raw tables.
inline std::vector<std::vector<std::uint8_t>> homomorphisms_by_enumeration(const qlat::FiniteLattice& l) {
    const std::size_t n = l.size();
    std::vector<std::vector<std::uint8_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::uint8_t> v(n);
        for (std::size_t k = 0; k < n; ++k)
            v[k] = (mask >> k) & 1u;
        bool ok = v[l.bottom()] == 0 && v[l.top()] == 1;
        for (std::size_t a = 0; ok && a < n; ++a)
            for (std::size_t b = 0; ok && b < n; ++b)
                ok = v[l.meet(a, b)] == (v[a] & v[b]) && v[l.join(a, b)] == (v[a] | v[b]);
        if (ok)
            out.push_back(v);
    }
    return out;
}

inline std::size_t distributive_violations(const qlat::FiniteLattice& l) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < l.size(); ++k)
        for (std::size_t m = 0; m < l.size(); ++m)
            for (std::size_t o = 0; o < l.size(); ++o)
                if (l.meet(l.join(k, m), o) != l.join(l.meet(k, o), l.meet(m, o)))
                    ++count;
    return count;
}

}  // namespace oracle
