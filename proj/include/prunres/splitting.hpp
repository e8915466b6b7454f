#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prunres/betti.hpp"
#include "prunres/monomial.hpp"
#include "prunres/morse.hpp"
#include "prunres/pruning.hpp"

namespace prunres {

/// Which part of the Taylor complex of J + K a face belongs to, with
/// J = first s generators and K = the rest.
enum class Region { J, K, Cross };

inline const char* region_name(Region r) {
    switch (r) {
        case Region::J: return "X_J";
        case Region::K: return "X_K";
        case Region::Cross: return "X'";
    }
    return "?";
}

/// The empty face is filed under X_J.
inline Region classify_region(std::size_t r, std::size_t s, FaceMask face) {
    const FaceMask j_part = full_face(s);
    const FaceMask k_part = full_face(r) & ~j_part;
    if (is_subset(face, j_part)) return Region::J;
    if (is_subset(face, k_part)) return Region::K;
    return Region::Cross;
}

/// lcm(m_i, m_k) for every i in J, k in K, ordered m_{1,s+1}, ..., m_{s,s+1}, m_{1,s+2}, ...
inline MonomialIdeal intersection_ideal(const MonomialIdeal& J, const MonomialIdeal& K) {
    if (J.ambient() != K.ambient()) throw AmbientDimensionError("J and K live in different rings");
    std::vector<Monomial> gens;
    for (const auto& k : K.generators())
        for (const auto& j : J.generators()) gens.push_back(lcm(j, k));
    return J.with_generators(std::move(gens));
}

/// Ranks of the pruned resolution.
inline BettiTable pruned_betti(const MonomialIdeal& ideal) {
    TaylorComplex taylor(ideal);
    return betti_of_complex(critical_complex(taylor, prune_taylor(taylor)));
}

struct EdgeRegions {
    PrunedEdge edge;
    Region lower = Region::J;
    Region upper = Region::J;
};

inline constexpr std::size_t kPairwiseCheckLimit = 16;

struct SplitReport {
    std::size_t split = 0;
    bool is_pruned_splitting = false;
    std::vector<EdgeRegions> edges;
    /// beta(I) - beta(J) - beta(K) - beta(J cap K) shifted, in R/I homological
    /// indexing for degrees >= 1; only nonzero entries are stored.
    std::map<std::pair<std::size_t, Monomial>, std::int64_t> residuals;
    /// Pruned ranks of J cap K agree between the pairwise-lcm and minimal generating
    /// sets; only compared while the pairwise set has at most kPairwiseCheckLimit members.
    std::optional<bool> intersection_consistent;

    bool residuals_zero() const noexcept { return residuals.empty(); }
};

namespace detail {

inline std::map<std::pair<std::size_t, Monomial>, std::int64_t> splitting_residuals(
    const BettiTable& whole, const BettiTable& j, const BettiTable& k, const BettiTable& meet) {
    std::map<std::pair<std::size_t, Monomial>, std::int64_t> res;
    auto accumulate = [&](const BettiTable& t, std::int64_t sign, std::size_t shift) {
        for (const auto& [key, count] : t.multigraded()) {
            const std::size_t i = key.first + shift;
            if (i == 0 || (shift == 1 && key.first == 0)) continue;
            res[{i, key.second}] += sign * static_cast<std::int64_t>(count);
        }
    };
    accumulate(whole, 1, 0);
    accumulate(j, -1, 0);
    accumulate(k, -1, 0);
    accumulate(meet, -1, 1);
    std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
    return res;
}

}  // namespace detail

/// Labels every edge of the pruned matching of I by the regions of its endpoints;
/// edges staying inside one region make I = J + K a pruned Betti splitting.
inline SplitReport check_pruned_splitting(const MonomialIdeal& ideal, std::size_t s) {
    const std::size_t r = ideal.size();
    if (s < 1 || s + 1 > r) throw EmptyPartError("split point must satisfy 1 <= s <= r-1");
    SplitReport rep;
    rep.split = s;
    TaylorComplex taylor(ideal);
    const Matching m = prune_taylor(taylor);
    rep.is_pruned_splitting = true;
    for (const auto& e : m.edges) {
        EdgeRegions er{e, classify_region(r, s, e.lower), classify_region(r, s, e.upper())};
        rep.is_pruned_splitting = rep.is_pruned_splitting && er.lower == er.upper;
        rep.edges.push_back(er);
    }
    const auto J = ideal.slice(0, s);
    const auto K = ideal.slice(s, r);
    const auto meet = intersection_ideal(J, K);
    const auto meet_betti = pruned_betti(minimal_generators(meet));
    if (meet.size() <= kPairwiseCheckLimit) rep.intersection_consistent = meet_betti == pruned_betti(meet);
    rep.residuals = detail::splitting_residuals(betti_of_complex(critical_complex(taylor, m)),
                                                pruned_betti(J), pruned_betti(K), meet_betti);
    return rep;
}

/// No prune happened at the last step; then splitting off the last generator is a
/// pruned Betti splitting.
inline bool check_last_generator(const MonomialIdeal& ideal) {
    if (ideal.size() < 2) throw std::invalid_argument("need at least two generators");
    const Matching m = prune_taylor(ideal);
    for (const auto& t : m.trace)
        if (t.step == ideal.size()) return false;
    return true;
}

/// Edge ideal of a graph reordered as J + K around vertex v: J collects the edges
/// avoiding v, K those through v. Both keep their relative order.
struct OrderedSplit {
    MonomialIdeal ideal;
    std::size_t split = 0;
};

inline OrderedSplit vertex_split(const MonomialIdeal& edge_ideal, std::size_t vertex) {
    std::vector<Monomial> away, through;
    for (const auto& g : edge_ideal.generators()) (g[vertex] ? through : away).push_back(g);
    const std::size_t s = away.size();
    away.insert(away.end(), through.begin(), through.end());
    return {edge_ideal.with_generators(std::move(away)), s};
}

}  // namespace prunres
