#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prunres/monomial.hpp"
#include "prunres/taylor.hpp"

namespace prunres {

/// The pruned edge lower -> lower + e_generator.
struct PrunedEdge {
    FaceMask lower = 0;
    std::size_t generator = 0;  // 0-based

    FaceMask upper() const noexcept { return lower | bit(generator); }
    friend bool operator==(const PrunedEdge&, const PrunedEdge&) = default;
    friend auto operator<=>(const PrunedEdge&, const PrunedEdge&) = default;
};

struct TraceRecord {
    std::size_t sweep = 1;  // 1-based sweep (or pass) number
    std::size_t step = 1;   // 1-based step j
    PrunedEdge edge;
    Monomial degree;  // m_lower
};

/// A set of pruned edges on the Taylor complex of `generators` vertices together
/// with the order in which they were pruned.
struct Matching {
    std::size_t generators = 0;
    std::vector<PrunedEdge> edges;
    std::vector<TraceRecord> trace;
    /// Number of sweeps that pruned at least one edge.
    std::size_t productive_sweeps = 0;
    /// Set for matchings that are not homogeneous (degree-shift pass); such
    /// matchings give cell counts only, never a resolution.
    bool approximation = false;

    bool contains(const PrunedEdge& e) const {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }
};

/// The critical cells of a matching, ascending.
struct SurvivorSet {
    std::size_t generators = 0;
    std::vector<FaceMask> faces;

    bool contains(FaceMask f) const { return std::binary_search(faces.begin(), faces.end(), f); }
    friend bool operator==(const SurvivorSet&, const SurvivorSet&) = default;
};

class EmptyPartError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline SurvivorSet survivors(const Matching& m) {
    std::vector<char> alive(bit(m.generators), 1);
    for (const auto& e : m.edges) alive[e.lower] = alive[e.upper()] = 0;
    SurvivorSet out{m.generators, {}};
    for (FaceMask f = 0; f < alive.size(); ++f)
        if (alive[f]) out.faces.push_back(f);
    return out;
}

namespace detail {

/// Live cells during a pruning run.
class Pool {
public:
    explicit Pool(std::size_t r) : alive_(bit(r), 1) {}
    bool alive(FaceMask f) const { return alive_[f] != 0; }
    void remove(FaceMask f) { alive_[f] = 0; }
    FaceMask size() const { return alive_.size(); }

private:
    std::vector<char> alive_;
};

/// One pass j = 1..r over the pool. `rule(lower, j)` is consulted only when both
/// endpoints are alive. Returns the number of edges pruned.
template <class Rule>
std::size_t sweep(const TaylorComplex& taylor, Pool& pool, Matching& out, std::size_t sweep_no,
                  Rule&& rule) {
    const std::size_t r = taylor.generators();
    std::size_t pruned = 0;
    for (std::size_t j = 0; j < r; ++j) {
        const FaceMask ej = bit(j);
        for (FaceMask lower = 0; lower < pool.size(); ++lower) {
            if (lower & ej) continue;
            const FaceMask upper = lower | ej;
            if (!pool.alive(lower) || !pool.alive(upper)) continue;
            if (!rule(lower, j)) continue;
            // the pairs {sigma, sigma + e_j} of one step are pairwise disjoint, so
            // removing this pair cannot invalidate another candidate of step j
            pool.remove(lower);
            pool.remove(upper);
            out.edges.push_back({lower, j});
            out.trace.push_back({sweep_no, j + 1, {lower, j}, taylor.multidegree(lower)});
            ++pruned;
        }
    }
    if (pruned) ++out.productive_sweeps;
    return pruned;
}

inline void require_face_universe(std::size_t r) {
    if (r > 30) {
        throw std::length_error("pruning enumerates all 2^r faces; r = " + std::to_string(r) +
                                " is too large");
    }
}

}  // namespace detail

/// Caller filter for the generic partial pruning hook: (lower, 0-based step) -> allow.
using EdgeFilter = std::function<bool(FaceMask, std::size_t)>;

/// Pruning with a filter on the homogeneous candidates: the edge lower -> lower + e_j
/// is pruned at step j when both cells survive, m_lower = m_upper, and `allow` agrees.
inline Matching prune_filtered(const TaylorComplex& taylor, const EdgeFilter& allow) {
    detail::require_face_universe(taylor.generators());
    Matching m{taylor.generators(), {}, {}, 0, false};
    detail::Pool pool(taylor.generators());
    detail::sweep(taylor, pool, m, 1, [&](FaceMask lower, std::size_t j) {
        return taylor.same_degree(lower, lower | bit(j)) && allow(lower, j);
    });
    return m;
}

inline Matching prune_taylor(const TaylorComplex& taylor) {
    return prune_filtered(taylor, [](FaceMask, std::size_t) { return true; });
}

inline Matching prune_taylor(const MonomialIdeal& ideal) { return prune_taylor(TaylorComplex(ideal)); }

/// At step j the part of `lower` above j must already be divisible by m_j. Asking
/// for lower to avoid 1..j altogether leaves faces such as {1, 5, 6} with
/// m_3 | lcm(m_5, m_6) unpruned, and the survivors then exceed the Lyubeznik complex.
inline Matching prune_lyubeznik(const TaylorComplex& taylor) {
    return prune_filtered(taylor, [&](FaceMask lower, std::size_t j) {
        const FaceMask above = lower & ~full_face(j + 1);
        return above != 0 && divides(taylor.ideal()[j], taylor.multidegree(above));
    });
}

inline Matching prune_lyubeznik(const MonomialIdeal& ideal) {
    return prune_lyubeznik(TaylorComplex(ideal));
}

/// Pruning that keeps the survivors a simplicial complex: lower -> lower + e_j is
/// pruned only if no other coface of `lower` survives. Sweeps repeat on the
/// surviving complex until one prunes nothing (or `max_sweeps` is reached).
inline Matching prune_simplicial(const TaylorComplex& taylor,
                                 std::optional<std::size_t> max_sweeps = std::nullopt) {
    const std::size_t r = taylor.generators();
    detail::require_face_universe(r);
    Matching m{r, {}, {}, 0, false};
    detail::Pool pool(r);
    // survivors stay closed under subsets, so a surviving strict superface of
    // `lower` other than the partner implies a surviving coface lower + e_k
    auto rule = [&](FaceMask lower, std::size_t j) {
        if (!taylor.same_degree(lower, lower | bit(j))) return false;
        for (std::size_t k = 0; k < r; ++k) {
            if (k == j || contains(lower, k)) continue;
            if (pool.alive(lower | bit(k))) return false;
        }
        return true;
    };
    const std::size_t cap = max_sweeps.value_or(static_cast<std::size_t>(bit(r)));
    for (std::size_t s = 1;; ++s) {
        if (s > cap) {
            if (max_sweeps) break;
            throw std::logic_error("simplicial pruning did not reach a fixpoint");
        }
        if (detail::sweep(taylor, pool, m, s, rule) == 0) break;
    }
    return m;
}

inline Matching prune_simplicial(const MonomialIdeal& ideal,
                                 std::optional<std::size_t> max_sweeps = std::nullopt) {
    return prune_simplicial(TaylorComplex(ideal), max_sweeps);
}

/// Pruned matching followed by a degree-shift pass on the survivors: lower -> upper
/// is pruned when |m_lower| = |m_upper| - 1 and no gradient path already leads from
/// upper back to lower. The empty face is never a lower endpoint. The result is
/// flagged as an approximation.
inline Matching nu_prune(const TaylorComplex& taylor) {
    Matching m = prune_taylor(taylor);
    const FaceMask n = bit(taylor.generators());
    constexpr FaceMask kNone = ~FaceMask{0};
    std::vector<FaceMask> partner(n, kNone);  // set on lower endpoints only
    detail::Pool pool(taylor.generators());
    for (const auto& e : m.edges) {
        pool.remove(e.lower);
        pool.remove(e.upper());
        partner[e.lower] = e.upper();
    }
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    std::vector<FaceMask> stack;
    // depth-first search along facet arrows and reversed matched arrows
    auto reaches = [&](FaceMask from, FaceMask to) {
        ++stamp;
        stack.clear();
        auto push = [&](FaceMask f) {
            if (seen[f] != stamp) seen[f] = stamp, stack.push_back(f);
        };
        push(from);
        while (!stack.empty()) {
            const FaceMask f = stack.back();
            stack.pop_back();
            if (f == to) return true;
            if (partner[f] != kNone) push(partner[f]);
            for (FaceMask rest = f; rest; rest &= rest - 1) {
                const FaceMask facet = f & ~(rest & -rest);
                if (partner[facet] != f) push(facet);
            }
        }
        return false;
    };
    detail::sweep(taylor, pool, m, 2, [&](FaceMask lower, std::size_t j) {
        const FaceMask upper = lower | bit(j);
        if (lower == 0 ||
            taylor.multidegree(lower).total_degree() + 1 != taylor.multidegree(upper).total_degree())
            return false;
        // with upper -> lower reversed, a path back from upper closes a cycle
        partner[lower] = upper;
        const bool cyclic = reaches(upper, lower);
        if (cyclic) partner[lower] = kNone;
        return !cyclic;
    });
    m.approximation = true;
    return m;
}

inline Matching nu_prune(const MonomialIdeal& ideal) { return nu_prune(TaylorComplex(ideal)); }

/// Faces {i_0 < ... < i_s} such that no m_j with j < i_t divides
/// lcm(m_{i_t}, ..., m_{i_s}), for every tail t = 0..s.
inline SurvivorSet lyubeznik_direct(const MonomialIdeal& ideal) {
    const std::size_t r = ideal.size();
    detail::require_face_universe(r);
    SurvivorSet out{r, {}};
    for (FaceMask face = 0; face < bit(r); ++face) {
        auto idx = members(face);
        bool keep = true;
        Monomial tail(ideal.ambient());
        for (std::size_t t = idx.size(); t-- > 0 && keep;) {
            tail = lcm(tail, ideal[idx[t]]);
            for (std::size_t j = 0; j < idx[t] && keep; ++j) keep = !divides(ideal[j], tail);
        }
        if (keep) out.faces.push_back(face);
    }
    return out;
}

/// Partial pruning of the Taylor complex of J cap K, generated by the pairwise lcms
/// m_{i,k} = lcm(m_i, m_k) in the order m_{1,s+1}, ..., m_{s,s+1}, m_{1,s+2}, ...
struct PartialPruning {
    MonomialIdeal intersection;
    /// pairs[j] = (i, k): 0-based indices into I = J + K of the pair behind vertex j.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Matching matching;

    /// Generators of I whose lcm-pairs appear in `face`.
    FaceMask involved(FaceMask face) const {
        FaceMask out = 0;
        for (auto j : members(face)) out |= bit(pairs[j].first) | bit(pairs[j].second);
        return out;
    }
};

inline PartialPruning partial_prune_intersection(const MonomialIdeal& J, const MonomialIdeal& K) {
    if (J.size() == 0 || K.size() == 0) {
        throw EmptyPartError("both parts of the splitting need at least one generator");
    }
    if (J.ambient() != K.ambient()) throw AmbientDimensionError("J and K live in different rings");
    const std::size_t s = J.size();
    PartialPruning out;
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < K.size(); ++k) {
        for (std::size_t i = 0; i < s; ++i) {
            gens.push_back(lcm(J[i], K[k]));
            out.pairs.emplace_back(i, s + k);
        }
    }
    out.intersection = J.with_generators(std::move(gens));
    TaylorComplex taylor(out.intersection);
    detail::require_face_universe(taylor.generators());
    out.matching = Matching{taylor.generators(), {}, {}, 0, false};
    detail::Pool pool(taylor.generators());
    detail::sweep(taylor, pool, out.matching, 1, [&](FaceMask lower, std::size_t j) {
        const auto [i, k] = out.pairs[j];
        const FaceMask need = bit(i) | bit(k);
        return (out.involved(lower) & need) == need;
    });
    return out;
}

struct MatchingReport {
    bool is_matching = false;
    bool is_homogeneous = false;
    bool is_acyclic = false;

    bool ok() const noexcept { return is_matching && is_homogeneous && is_acyclic; }
};

namespace detail {

/// Kahn's algorithm on the Hasse diagram with matched arrows reversed. Arrows
/// joining faces of different multidegree are skipped when `within_classes`.
inline bool reversed_graph_acyclic(const TaylorComplex& taylor,
                                   const std::vector<FaceMask>& reversed_at, bool within_classes) {
    const std::size_t r = taylor.generators();
    const FaceMask n = bit(r);
    auto for_each_arrow = [&](auto&& visit) {
        // arrow tail -> head
        for (FaceMask face = 1; face < n; ++face) {
            for (FaceMask rest = face; rest; rest &= rest - 1) {
                const auto k = static_cast<std::size_t>(std::countr_zero(rest));
                const FaceMask facet = face ^ bit(k);
                if (within_classes && !taylor.same_degree(face, facet)) continue;
                if (contains(reversed_at[facet], k)) {
                    visit(facet, face);
                } else {
                    visit(face, facet);
                }
            }
        }
    };
    std::vector<std::uint32_t> indegree(n, 0);
    for_each_arrow([&](FaceMask, FaceMask head) { ++indegree[head]; });
    std::vector<std::vector<FaceMask>> out(n);
    for_each_arrow([&](FaceMask tail, FaceMask head) { out[tail].push_back(head); });
    std::vector<FaceMask> ready;
    for (FaceMask f = 0; f < n; ++f)
        if (indegree[f] == 0) ready.push_back(f);
    FaceMask seen = 0;
    while (!ready.empty()) {
        const FaceMask f = ready.back();
        ready.pop_back();
        ++seen;
        for (auto h : out[f])
            if (--indegree[h] == 0) ready.push_back(h);
    }
    return seen == n;
}

}  // namespace detail

/// Matching, homogeneity and acyclicity of `m` on the Taylor complex of `ideal`.
/// For homogeneous matchings cycles can only live inside one multidegree class,
/// so the search is restricted to arrows within a class.
inline MatchingReport verify_matching(const Matching& m, const TaylorComplex& taylor) {
    MatchingReport rep;
    const std::size_t r = taylor.generators();
    detail::require_face_universe(r);
    const FaceMask universe = full_face(r);
    bool well_formed = m.generators == r;
    std::vector<char> used(bit(r), 0);
    bool disjoint = true;
    for (const auto& e : m.edges) {
        if (e.generator >= r || contains(e.lower, e.generator) || !is_subset(e.lower, universe)) {
            well_formed = false;
            continue;
        }
        if (used[e.lower]++ || used[e.upper()]++) disjoint = false;
    }
    rep.is_matching = well_formed && disjoint;
    rep.is_homogeneous =
        well_formed && std::all_of(m.edges.begin(), m.edges.end(), [&](const PrunedEdge& e) {
            return taylor.same_degree(e.lower, e.upper());
        });
    if (!well_formed) return rep;
    std::vector<FaceMask> reversed_at(bit(r), 0);
    for (const auto& e : m.edges) reversed_at[e.lower] |= bit(e.generator);
    rep.is_acyclic = detail::reversed_graph_acyclic(taylor, reversed_at, rep.is_homogeneous);
    return rep;
}

inline MatchingReport verify_matching(const Matching& m, const MonomialIdeal& ideal) {
    return verify_matching(m, TaylorComplex(ideal));
}

/// One line per pruned edge: `step=<j> sigma=<characteristic vector> j=<j> deg=<monomial>`.
inline std::string format_trace(const Matching& m, const std::vector<std::string>& names) {
    std::string out;
    for (const auto& t : m.trace) {
        out += "step=" + std::to_string(t.step) +
               " sigma=" + characteristic_vector(t.edge.lower, m.generators) +
               " j=" + std::to_string(t.edge.generator + 1) + " deg=" + to_string(t.degree, names) +
               "\n";
    }
    return out;
}

}  // namespace prunres
