#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "prunres/linalg.hpp"
#include "prunres/monomial.hpp"
#include "prunres/pruning.hpp"
#include "prunres/taylor.hpp"

namespace prunres {

class InvalidMatchingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Cell {
    FaceMask face = 0;
    Monomial degree;
};

/// d_i[row, col] = coefficient * monomial, row indexing F_{i-1} and col indexing F_i.
struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t coefficient = 0;
    Monomial monomial;
};

/// Free modules F_0, F_1, ... with bases of critical cells (F_i holds the cells with
/// i vertices, F_0 the empty face) and sparse differentials d_i : F_i -> F_{i-1}.
struct ChainComplex {
    std::size_t variables = 0;
    std::vector<std::vector<Cell>> cells;
    /// differentials[i] is d_i; differentials[0] stays empty.
    std::vector<std::vector<Entry>> differentials;
    bool has_differentials = false;

    std::size_t length() const noexcept { return cells.empty() ? 0 : cells.size() - 1; }
    std::size_t rank(std::size_t i) const noexcept { return i < cells.size() ? cells[i].size() : 0; }

    std::vector<std::size_t> ranks() const {
        std::vector<std::size_t> out;
        for (const auto& level : cells) out.push_back(level.size());
        return out;
    }
};

namespace detail {

inline void require_usable(const MatchingReport& rep, bool need_homogeneous) {
    if (!rep.is_matching) throw InvalidMatchingError("edges are not vertex-disjoint");
    if (!rep.is_acyclic) throw InvalidMatchingError("matching is not acyclic");
    if (need_homogeneous && !rep.is_homogeneous)
        throw InvalidMatchingError("matching is not homogeneous");
}

inline ChainComplex collect_cells(const TaylorComplex& taylor, const Matching& m) {
    ChainComplex c;
    c.variables = taylor.variables();
    c.cells.resize(taylor.generators() + 1);
    for (FaceMask f : survivors(m).faces) c.cells[cardinality(f)].push_back({f, taylor.multidegree(f)});
    while (c.cells.size() > 1 && c.cells.back().empty()) c.cells.pop_back();
    c.differentials.resize(c.cells.size());
    return c;
}

}  // namespace detail

/// Basis of the complex supported on the critical cells of `m`; differentials unset.
inline ChainComplex critical_complex(const TaylorComplex& taylor, const Matching& m) {
    detail::require_usable(verify_matching(m, taylor), false);
    return detail::collect_cells(taylor, m);
}

/// Complex on the critical cells with the discrete Morse differential: the
/// coefficient of a critical facet-level cell in d(sigma) is the signed count of
/// gradient paths from the facets of sigma, accumulated in topological order.
inline ChainComplex morse_differential(const TaylorComplex& taylor, const Matching& m) {
    detail::require_usable(verify_matching(m, taylor), true);
    ChainComplex c = detail::collect_cells(taylor, m);
    const std::size_t r = taylor.generators();
    const FaceMask n = bit(r);

    constexpr FaceMask kNone = ~FaceMask{0};
    std::vector<FaceMask> partner(n, kNone);  // set on lower endpoints only
    std::vector<char> critical(n, 1);
    for (const auto& e : m.edges) {
        partner[e.lower] = e.upper();
        critical[e.lower] = critical[e.upper()] = 0;
    }

    // gradient flow rho -> rho' whenever rho' != rho is a facet of partner(rho)
    auto for_each_flow = [&](FaceMask rho, auto&& visit) {
        const FaceMask tau = partner[rho];
        if (tau == kNone) return;
        for (FaceMask rest = tau; rest; rest &= rest - 1) {
            const FaceMask facet = tau ^ (rest & (~rest + 1));
            if (facet != rho) visit(tau, facet);
        }
    };
    std::vector<std::uint32_t> indegree(n, 0);
    for (FaceMask f = 0; f < n; ++f)
        for_each_flow(f, [&](FaceMask, FaceMask head) { ++indegree[head]; });
    std::vector<std::uint64_t> topo(n, 0);
    std::vector<FaceMask> ready;
    for (FaceMask f = 0; f < n; ++f)
        if (indegree[f] == 0) ready.push_back(f);
    std::uint64_t position = 0;
    while (!ready.empty()) {
        const FaceMask f = ready.back();
        ready.pop_back();
        topo[f] = position++;
        for_each_flow(f, [&](FaceMask, FaceMask head) {
            if (--indegree[head] == 0) ready.push_back(head);
        });
    }
    if (position != n) throw std::logic_error("gradient flow has a cycle");

    std::vector<std::size_t> index_of(n, 0);
    for (const auto& level : c.cells)
        for (std::size_t k = 0; k < level.size(); ++k) index_of[level[k].face] = k;

    std::vector<std::int64_t> coef(n, 0);
    std::vector<char> queued(n, 0);
    using Item = std::pair<std::uint64_t, FaceMask>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    auto add = [&](FaceMask target, std::int64_t amount) {
        if (__builtin_add_overflow(coef[target], amount, &coef[target]))
            throw std::overflow_error("Morse coefficient overflow");
        if (!queued[target]) {
            queued[target] = 1;
            heap.emplace(topo[target], target);
        }
    };

    for (std::size_t i = 1; i < c.cells.size(); ++i) {
        for (std::size_t col = 0; col < c.cells[i].size(); ++col) {
            const Cell& sigma = c.cells[i][col];
            for (FaceMask rest = sigma.face; rest; rest &= rest - 1) {
                const FaceMask facet = sigma.face ^ (rest & (~rest + 1));
                add(facet, incidence(sigma.face, facet));
            }
            while (!heap.empty()) {
                const FaceMask rho = heap.top().second;
                heap.pop();
                const std::int64_t value = coef[rho];
                coef[rho] = 0;
                queued[rho] = 0;
                if (value == 0) continue;
                if (critical[rho]) {
                    c.differentials[i].push_back({index_of[rho], col, value,
                                                  quotient(sigma.degree, taylor.multidegree(rho))});
                    continue;
                }
                if (partner[rho] == kNone) continue;  // upper endpoint: path dies
                const FaceMask tau = partner[rho];
                const std::int64_t up = -incidence(tau, rho);
                for_each_flow(rho, [&](FaceMask, FaceMask next) {
                    add(next, value * up * incidence(tau, next));
                });
            }
        }
        auto& d = c.differentials[i];
        std::sort(d.begin(), d.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
    }
    c.has_differentials = true;
    return c;
}

inline ChainComplex morse_differential(const MonomialIdeal& ideal, const Matching& m) {
    return morse_differential(TaylorComplex(ideal), m);
}

/// Exact polynomial check that every d_{i-1} d_i vanishes.
inline bool check_d_squared(const ChainComplex& c) {
    if (!c.has_differentials) throw std::invalid_argument("complex has no differentials");
    for (std::size_t i = 2; i < c.differentials.size(); ++i) {
        std::vector<std::vector<const Entry*>> by_col(c.rank(i - 1));
        for (const auto& e : c.differentials[i - 1]) by_col[e.col].push_back(&e);
        std::map<std::tuple<std::size_t, std::size_t, Monomial>, std::int64_t> sum;
        for (const auto& e : c.differentials[i]) {
            for (const Entry* f : by_col[e.row]) {
                sum[{f->row, e.col, product(f->monomial, e.monomial)}] += f->coefficient * e.coefficient;
            }
        }
        for (const auto& [key, v] : sum)
            if (v != 0) return false;
    }
    return true;
}

/// Distinct multidegrees m_sigma over all faces of the Taylor complex.
inline std::vector<Monomial> lcm_lattice(const TaylorComplex& taylor) {
    std::unordered_set<Monomial> seen;
    std::vector<Monomial> out;
    for (FaceMask f = 0; f < taylor.face_count(); ++f) {
        if (seen.insert(taylor.multidegree(f)).second) out.push_back(taylor.multidegree(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Homology dimensions of the alpha-strand of c: degree 0 holds the cokernel
/// at F_0, degree i >= 1 the homology at F_i.
inline std::vector<std::size_t> strand_homology(const ChainComplex& c, const Monomial& alpha,
                                                Field field) {
    const std::size_t levels = c.cells.size();
    std::vector<std::vector<std::size_t>> strand_index(levels);
    std::vector<std::size_t> dim(levels, 0);
    constexpr std::size_t kOut = ~std::size_t{0};
    for (std::size_t i = 0; i < levels; ++i) {
        strand_index[i].assign(c.cells[i].size(), kOut);
        for (std::size_t k = 0; k < c.cells[i].size(); ++k)
            if (divides(c.cells[i][k].degree, alpha)) strand_index[i][k] = dim[i]++;
    }
    std::vector<std::size_t> ranks(levels + 1, 0);
    for (std::size_t i = 1; i < levels; ++i) {
        if (dim[i] == 0 || dim[i - 1] == 0) continue;
        std::vector<SparseRow> rows(dim[i]);
        for (const auto& e : c.differentials[i]) {
            const auto col = strand_index[i][e.col];
            const auto row = strand_index[i - 1][e.row];
            if (col == kOut || row == kOut) continue;
            rows[col].emplace_back(row, e.coefficient);
        }
        for (auto& row : rows) std::sort(row.begin(), row.end());
        ranks[i] = rank(rows, dim[i - 1], field);
    }
    std::vector<std::size_t> h(levels, 0);
    for (std::size_t i = 0; i < levels; ++i) h[i] = dim[i] - ranks[i] - ranks[i + 1];
    return h;
}

}  // namespace detail

/// Whether c resolves R/I over `field`: every strand at an lcm-lattice degree
/// alpha is acyclic in degrees >= 1 and has cokernel k or 0 in degree 0
/// according to whether x^alpha lies outside or inside I.
inline bool check_exactness(const TaylorComplex& taylor, const ChainComplex& c, Field field) {
    if (!c.has_differentials) throw std::invalid_argument("complex has no differentials");
    if (c.cells.empty() || c.cells[0].size() != 1) return false;
    for (const auto& alpha : lcm_lattice(taylor)) {
        const auto h = detail::strand_homology(c, alpha, field);
        if (h[0] != (taylor.ideal().contains(alpha) ? 0u : 1u)) return false;
        for (std::size_t i = 1; i < h.size(); ++i)
            if (h[i] != 0) return false;
    }
    return true;
}

/// No differential entry is a unit: monomial part 1 with coefficient nonzero in `field`.
inline bool check_minimal(const ChainComplex& c, Field field = Field{}) {
    if (!c.has_differentials) throw std::invalid_argument("complex has no differentials");
    for (const auto& d : c.differentials)
        for (const auto& e : d)
            if (e.monomial.is_one() && field.nonzero(e.coefficient)) return false;
    return true;
}

/// Degree-only minimality test: no two critical cells of adjacent dimension carry
/// the same multidegree, so no differential entry can be a unit.
inline bool syntactic_minimality(const TaylorComplex& taylor, const Matching& m) {
    const auto crit = survivors(m);
    std::vector<std::unordered_set<Monomial>> by_level(taylor.generators() + 1);
    for (FaceMask f : crit.faces) by_level[cardinality(f)].insert(taylor.multidegree(f));
    for (std::size_t i = 1; i < by_level.size(); ++i)
        for (const auto& deg : by_level[i])
            if (by_level[i - 1].count(deg)) return false;
    return true;
}

/// `F<i>: <k> cells` per degree followed by `d<i>[<row>,<col>] = <+-c>*<monomial>` lines.
inline std::string format_complex(const ChainComplex& c, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        out += "F" + std::to_string(i) + ": " + std::to_string(c.cells[i].size()) + " cells\n";
        if (i == 0 || !c.has_differentials) continue;
        for (const auto& e : c.differentials[i]) {
            out += "d" + std::to_string(i) + "[" + std::to_string(e.row) + "," +
                   std::to_string(e.col) + "] = " + (e.coefficient >= 0 ? "+" : "-") +
                   std::to_string(e.coefficient >= 0 ? e.coefficient : -e.coefficient) + "*" +
                   to_string(e.monomial, names) + "\n";
        }
    }
    return out;
}

}  // namespace prunres
