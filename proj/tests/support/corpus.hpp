#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "prunres/prunres.hpp"

namespace prunres::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// seed from PRUNRES_SEED when set, so a failing corpus can be replayed
inline std::uint64_t corpus_seed() {
    if (const char* s = std::getenv("PRUNRES_SEED")) return std::stoull(s);
    return kDefaultSeed;
}

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    // rng_() % k rather than a std distribution: the latter is not
    // reproducible across standard libraries
    std::size_t below(std::size_t k) { return static_cast<std::size_t>(rng_() % k); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    Monomial monomial(std::size_t n, Exponent max_exp) {
        for (;;) {
            std::vector<Exponent> e(n);
            for (auto& x : e) x = static_cast<Exponent>(below(max_exp + 1));
            Monomial m(std::move(e));
            if (!m.is_one()) return m;
        }
    }

    MonomialIdeal ideal(std::size_t max_vars, std::size_t max_gens, Exponent max_exp) {
        const std::size_t n = between(1, max_vars);
        const std::size_t r = between(1, max_gens);
        std::vector<Monomial> gens;
        for (std::size_t k = 0; k < r; ++k) gens.push_back(monomial(n, max_exp));
        return MonomialIdeal(numbered_variables(n), std::move(gens));
    }

    MonomialIdeal squarefree_ideal(std::size_t max_vars, std::size_t max_gens) {
        return ideal(max_vars, max_gens, 1);
    }

    // Inserts 1..3 multiples of existing generators at random positions.
    MonomialIdeal pad(const MonomialIdeal& ideal) {
        auto gens = ideal.generators();
        const std::size_t extra = between(1, 3);
        for (std::size_t k = 0; k < extra; ++k) {
            const Monomial base = gens[below(gens.size())];
            std::vector<Exponent> e(base.exponents().begin(), base.exponents().end());
            for (auto& x : e) x += static_cast<Exponent>(below(2));
            gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(below(gens.size() + 1)), Monomial(std::move(e)));
        }
        return ideal.with_generators(std::move(gens));
    }

    MonomialIdeal graph(std::size_t n, double density) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (static_cast<double>(below(1000)) < density * 1000) edges.emplace_back(u, v);
        if (edges.empty()) edges.emplace_back(0, 1);
        return edge_ideal(n, edges);
    }

private:
    std::mt19937_64 rng_;
};

// gens over x1..xn, e.g. ideal_of(3, "x1*x2, x2*x3")
inline MonomialIdeal ideal_of(std::size_t n, const std::string& gens) {
    std::string ring = "ring";
    for (const auto& v : numbered_variables(n)) ring += " " + v;
    return parse_ideal(ring + "\ngens " + gens);
}

inline Monomial mono(std::size_t n, const std::string& text) { return ideal_of(n, text)[0]; }

// 1-based member list to a face mask
inline FaceMask face(std::initializer_list<std::size_t> members) {
    FaceMask f = 0;
    for (auto m : members) f |= bit(m - 1);
    return f;
}

struct Named {
    std::string name;
    MonomialIdeal ideal;
};

inline std::vector<Named> builtins() {
    return {{"path5", path_ideal(5)},
            {"cycle5", cycle_ideal(5)},
            {"rp2", rp2_ideal()},
            {"example-4-1", example_4_1_ideal()}};
}

// n <= 6 variables, r <= 7 generators, exponents <= 3, no unit generators
inline std::vector<Named> random_corpus(std::uint64_t seed, std::size_t count = 200) {
    Generator g(seed);
    std::vector<Named> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back({"random#" + std::to_string(k), g.ideal(6, 7, 3)});
    return out;
}

inline std::vector<Named> full_corpus(std::uint64_t seed) {
    auto out = builtins();
    for (auto& x : random_corpus(seed)) out.push_back(std::move(x));
    return out;
}

}  // namespace prunres::testing
