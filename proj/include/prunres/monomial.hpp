#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prunres {

/// Raised when two exponent vectors live in rings of different dimension.
class AmbientDimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Exponent = std::uint32_t;

/// A monomial x^a stored as its exponent vector. All arithmetic is positional;
/// variable names live in MonomialIdeal.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t variables) : exps_(variables, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    std::size_t variables() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t total_degree() const noexcept {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_squarefree() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

namespace detail {

inline void require_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.variables() != b.variables()) {
        throw AmbientDimensionError("monomials in rings of dimension " +
                                    std::to_string(a.variables()) + " and " +
                                    std::to_string(b.variables()));
    }
}

}  // namespace detail

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    detail::require_same_ambient(a, b);
    std::vector<Exponent> out(a.variables());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
    return Monomial(std::move(out));
}

/// True iff a | b.
inline bool divides(const Monomial& a, const Monomial& b) {
    detail::require_same_ambient(a, b);
    for (std::size_t i = 0; i < a.variables(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// x^{b-a}; requires a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    detail::require_same_ambient(a, b);
    std::vector<Exponent> out(a.variables());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (a[i] > b[i]) throw std::domain_error("quotient of non-divisible monomials");
        out[i] = b[i] - a[i];
    }
    return Monomial(std::move(out));
}

inline Monomial product(const Monomial& a, const Monomial& b) {
    detail::require_same_ambient(a, b);
    std::vector<Exponent> out(a.variables());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Monomial(std::move(out));
}

/// An ordered list of monomial generators over named variables. Generator order
/// is significant for every pruning algorithm, so nothing here reorders.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
        : variables_(std::move(variables)), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            if (g.variables() != variables_.size()) {
                throw AmbientDimensionError("generator has " + std::to_string(g.variables()) +
                                            " exponents, ring has " +
                                            std::to_string(variables_.size()) + " variables");
            }
        }
    }

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<Monomial>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    std::size_t ambient() const noexcept { return variables_.size(); }
    const Monomial& operator[](std::size_t i) const { return generators_[i]; }

    bool is_squarefree() const noexcept {
        return std::all_of(generators_.begin(), generators_.end(),
                           [](const Monomial& m) { return m.is_squarefree(); });
    }

    /// Membership of x^a in the ideal.
    bool contains(const Monomial& m) const {
        return std::any_of(generators_.begin(), generators_.end(),
                           [&](const Monomial& g) { return divides(g, m); });
    }

    /// Same ring, generators [first, last).
    MonomialIdeal slice(std::size_t first, std::size_t last) const {
        return MonomialIdeal(variables_, {generators_.begin() + static_cast<std::ptrdiff_t>(first),
                                          generators_.begin() + static_cast<std::ptrdiff_t>(last)});
    }

    MonomialIdeal with_generators(std::vector<Monomial> gens) const {
        return MonomialIdeal(variables_, std::move(gens));
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<Monomial> generators_;
};

/// Keeps generators divisible by no other distinct generator, in their original
/// order. Repeated generators collapse onto their first occurrence.
inline MonomialIdeal minimal_generators(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < gens.size() && !redundant; ++k) {
            if (k == i || !divides(gens[k], gens[i])) continue;
            // equal generators: only later copies are redundant
            redundant = gens[k] != gens[i] || k < i;
        }
        if (!redundant) kept.push_back(gens[i]);
    }
    return ideal.with_generators(std::move(kept));
}

struct Polarization {
    MonomialIdeal ideal;
    /// origin[v] = index of the original variable that new variable v descends from.
    std::vector<std::size_t> origin;
};

/// Replaces x_i^a by x_{i,1}...x_{i,a}. Variables that never appear with exponent
/// above one keep their name and stay a single variable, so a squarefree ideal
/// comes back unchanged with the identity mapping.
inline Polarization polarize(const MonomialIdeal& ideal) {
    const std::size_t n = ideal.ambient();
    std::vector<Exponent> max_exp(n, 0);
    for (const auto& g : ideal.generators())
        for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], g[i]);

    std::vector<std::string> names;
    std::vector<std::size_t> origin;
    std::vector<std::size_t> first_copy(n);
    for (std::size_t i = 0; i < n; ++i) {
        first_copy[i] = names.size();
        if (max_exp[i] <= 1) {
            names.push_back(ideal.variables()[i]);
            origin.push_back(i);
            continue;
        }
        for (Exponent c = 1; c <= max_exp[i]; ++c) {
            names.push_back(ideal.variables()[i] + "_" + std::to_string(c));
            origin.push_back(i);
        }
    }

    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) {
        std::vector<Exponent> e(names.size(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (Exponent c = 0; c < g[i]; ++c) e[first_copy[i] + c] = 1;
        gens.emplace_back(std::move(e));
    }
    return {MonomialIdeal(std::move(names), std::move(gens)), std::move(origin)};
}

/// Renders `x1^2*x3`; the unit monomial renders as `1`.
inline std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.variables(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace prunres

template <>
struct std::hash<prunres::Monomial> {
    std::size_t operator()(const prunres::Monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto e : m.exponents()) {
            h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
