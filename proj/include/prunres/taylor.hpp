#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "prunres/monomial.hpp"

namespace prunres {

/// A face of the Taylor simplex: bit k set means generator k (0-based) is a member.
/// Faces are canonically ordered by the integer value of the mask.
using FaceMask = std::uint64_t;

inline constexpr std::size_t kMaxGenerators = 62;

class FaceError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class IncidenceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr FaceMask bit(std::size_t k) noexcept { return FaceMask{1} << k; }
constexpr bool contains(FaceMask face, std::size_t k) noexcept { return (face >> k) & 1u; }
constexpr std::size_t cardinality(FaceMask face) noexcept {
    return static_cast<std::size_t>(std::popcount(face));
}
constexpr FaceMask full_face(std::size_t r) noexcept { return r == 64 ? ~FaceMask{0} : bit(r) - 1; }
constexpr bool is_subset(FaceMask a, FaceMask b) noexcept { return (a & ~b) == 0; }

inline std::vector<std::size_t> members(FaceMask face) {
    std::vector<std::size_t> out;
    out.reserve(cardinality(face));
    while (face) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(face)));
        face &= face - 1;
    }
    return out;
}

/// `(1,0,1,0)` with generator 1 first.
inline std::string characteristic_vector(FaceMask face, std::size_t r) {
    std::string out = "(";
    for (std::size_t k = 0; k < r; ++k) {
        if (k) out += ',';
        out += contains(face, k) ? '1' : '0';
    }
    return out + ")";
}

/// Simplicial boundary sign [face : face \ {k}] = (-1)^(number of members below k).
inline int incidence(FaceMask face, FaceMask facet) {
    const FaceMask removed = face ^ facet;
    if (!is_subset(facet, face) || cardinality(removed) != 1) {
        throw IncidenceError("not a codimension-one face pair");
    }
    return cardinality(face & (removed - 1)) % 2 == 0 ? 1 : -1;
}

/// Cofaces of `face` with exactly one more generator, in increasing generator order.
inline std::vector<FaceMask> edge_targets(FaceMask face, std::size_t r) {
    std::vector<FaceMask> out;
    for (std::size_t j = 0; j < r; ++j)
        if (!contains(face, j)) out.push_back(face | bit(j));
    return out;
}

/// The Taylor complex of an ordered generator list. Multidegrees m_sigma are
/// precomputed for all 2^r faces when r <= precompute_cap and memoized lazily
/// otherwise; lookups are safe from several threads.
class TaylorComplex {
public:
    explicit TaylorComplex(MonomialIdeal ideal, std::size_t precompute_cap = 20)
        : ideal_(std::move(ideal)), memo_(std::make_unique<Memo>()) {
        if (ideal_.size() > kMaxGenerators) {
            throw std::length_error("Taylor complex supports at most " +
                                    std::to_string(kMaxGenerators) + " generators");
        }
        if (ideal_.size() <= precompute_cap) precompute();
    }

    const MonomialIdeal& ideal() const noexcept { return ideal_; }
    std::size_t generators() const noexcept { return ideal_.size(); }
    std::size_t variables() const noexcept { return ideal_.ambient(); }
    FaceMask face_count() const noexcept { return bit(ideal_.size()); }

    const Monomial& multidegree(FaceMask face) const {
        if (!is_subset(face, full_face(generators()))) {
            throw FaceError("face " + std::to_string(face) + " has members beyond generator " +
                            std::to_string(generators()));
        }
        if (!dense_.empty()) return dense_[face];
        {
            std::shared_lock lock(memo_->mutex);
            if (auto it = memo_->degrees.find(face); it != memo_->degrees.end()) return it->second;
        }
        Monomial m(variables());
        for (auto k : members(face)) m = lcm(m, ideal_[k]);
        std::unique_lock lock(memo_->mutex);
        return memo_->degrees.try_emplace(face, std::move(m)).first->second;
    }

    bool same_degree(FaceMask a, FaceMask b) const { return multidegree(a) == multidegree(b); }

private:
    struct Memo {
        std::shared_mutex mutex;
        std::unordered_map<FaceMask, Monomial> degrees;
    };

    void precompute() {
        dense_.resize(face_count());
        dense_[0] = Monomial(variables());
        for (FaceMask face = 1; face < face_count(); ++face) {
            const auto low = static_cast<std::size_t>(std::countr_zero(face));
            dense_[face] = lcm(dense_[face & (face - 1)], ideal_[low]);
        }
    }

    MonomialIdeal ideal_;
    std::vector<Monomial> dense_;
    std::unique_ptr<Memo> memo_;
};

inline Monomial face_multidegree(const MonomialIdeal& ideal, FaceMask face) {
    if (!is_subset(face, full_face(ideal.size()))) {
        throw FaceError("face refers to a generator beyond " + std::to_string(ideal.size()));
    }
    Monomial m(ideal.ambient());
    for (auto k : members(face)) m = lcm(m, ideal[k]);
    return m;
}

}  // namespace prunres
