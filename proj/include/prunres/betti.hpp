#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prunres/linalg.hpp"
#include "prunres/monomial.hpp"
#include "prunres/morse.hpp"
#include "prunres/taylor.hpp"

namespace prunres {

class SquarefreeRequiredError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Multigraded counts beta_{i,alpha} with homological degree i counted for R/I.
/// The graded view keys on (i, |alpha|); the diagram prints beta_{i,i+j} in row j.
class BettiTable {
public:
    using Key = std::pair<std::size_t, Monomial>;

    void add(std::size_t i, const Monomial& alpha, std::size_t count = 1) {
        if (count == 0) return;
        multigraded_[{i, alpha}] += count;
    }

    const std::map<Key, std::size_t>& multigraded() const noexcept { return multigraded_; }

    std::size_t at(std::size_t i, const Monomial& alpha) const {
        auto it = multigraded_.find({i, alpha});
        return it == multigraded_.end() ? 0 : it->second;
    }

    /// (i, internal degree) -> count.
    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded() const {
        std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> out;
        for (const auto& [key, count] : multigraded_) out[{key.first, key.second.total_degree()}] += count;
        return out;
    }

    std::size_t graded_at(std::size_t i, std::uint64_t degree) const {
        const auto g = graded();
        auto it = g.find({i, degree});
        return it == g.end() ? 0 : it->second;
    }

    std::vector<std::size_t> totals() const {
        std::vector<std::size_t> out;
        for (const auto& [key, count] : multigraded_) {
            if (out.size() <= key.first) out.resize(key.first + 1, 0);
            out[key.first] += count;
        }
        return out;
    }

    /// Every entry of *this is at least the matching entry of `other`.
    bool dominates(const BettiTable& other) const {
        return std::all_of(other.multigraded_.begin(), other.multigraded_.end(),
                           [&](const auto& kv) { return at(kv.first.first, kv.first.second) >= kv.second; });
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, std::size_t> multigraded_;
};

/// Ranks of the free modules of a complex, by multidegree.
inline BettiTable betti_of_complex(const ChainComplex& c) {
    BettiTable t;
    for (std::size_t i = 0; i < c.cells.size(); ++i)
        for (const auto& cell : c.cells[i]) t.add(i, cell.degree);
    return t;
}

/// True Betti numbers from the Taylor complex tensored with the field: beta_{i,alpha}
/// is the homology of the faces with m_sigma = alpha under the equal-degree part of
/// the simplicial boundary.
inline BettiTable tor_betti(const TaylorComplex& taylor, Field field) {
    std::unordered_map<Monomial, std::vector<FaceMask>> classes;
    for (FaceMask f = 0; f < taylor.face_count(); ++f) classes[taylor.multidegree(f)].push_back(f);

    BettiTable t;
    // deterministic order of the lattice degrees
    std::vector<const Monomial*> alphas;
    for (const auto& kv : classes) alphas.push_back(&kv.first);
    std::sort(alphas.begin(), alphas.end(), [](auto a, auto b) { return *a < *b; });

    for (const Monomial* alpha : alphas) {
        const auto& faces = classes.at(*alpha);
        const std::size_t top = taylor.generators();
        std::vector<std::vector<FaceMask>> level(top + 2);
        for (FaceMask f : faces) level[cardinality(f)].push_back(f);
        std::unordered_map<FaceMask, std::size_t> position;
        for (const auto& lv : level)
            for (std::size_t k = 0; k < lv.size(); ++k) position[lv[k]] = k;

        std::vector<std::size_t> ranks(top + 2, 0);
        for (std::size_t i = 1; i <= top; ++i) {
            if (level[i].empty() || level[i - 1].empty()) continue;
            std::vector<SparseRow> rows;
            rows.reserve(level[i].size());
            for (FaceMask f : level[i]) {
                SparseRow row;
                for (FaceMask rest = f; rest; rest &= rest - 1) {
                    const FaceMask facet = f ^ (rest & (~rest + 1));
                    auto it = position.find(facet);
                    if (it == position.end() || cardinality(facet) != i - 1) continue;
                    row.emplace_back(it->second, incidence(f, facet));
                }
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
            ranks[i] = rank(rows, level[i - 1].size(), field);
        }
        for (std::size_t i = 0; i <= top; ++i) {
            const std::size_t h = level[i].size() - ranks[i] - ranks[i + 1];
            t.add(i, *alpha, h);
        }
    }
    return t;
}

inline BettiTable tor_betti(const MonomialIdeal& ideal, Field field) {
    return tor_betti(TaylorComplex(ideal), field);
}

/// Betti numbers of a squarefree ideal from reduced homology of the restrictions
/// of its Stanley-Reisner complex: beta_{i,W} = dim H~_{|W|-i-1}(Delta|W).
inline BettiTable hochster_betti(const MonomialIdeal& ideal, Field field) {
    if (!ideal.is_squarefree()) {
        throw SquarefreeRequiredError("Hochster's formula needs a squarefree ideal; polarize first");
    }
    const std::size_t n = ideal.ambient();
    if (n > 24) throw std::length_error("too many variables for the Stanley-Reisner enumeration");
    const FaceMask subsets = bit(n);

    std::vector<FaceMask> gen_support;
    for (const auto& g : ideal.generators()) {
        FaceMask s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (g[v]) s |= bit(v);
        gen_support.push_back(s);
    }
    std::vector<char> in_delta(subsets, 1);
    for (FaceMask f = 0; f < subsets; ++f)
        for (FaceMask s : gen_support)
            if (is_subset(s, f)) {
                in_delta[f] = 0;
                break;
            }

    BettiTable t;
    for (FaceMask w = 0; w < subsets; ++w) {
        const std::size_t size = cardinality(w);
        std::vector<std::vector<FaceMask>> level(size + 2);
        // all subsets of w, each one a candidate face
        for (FaceMask f = w;; f = (f - 1) & w) {
            if (in_delta[f]) level[cardinality(f)].push_back(f);
            if (f == 0) break;
        }
        std::unordered_map<FaceMask, std::size_t> position;
        for (auto& lv : level) {
            std::sort(lv.begin(), lv.end());
            for (std::size_t k = 0; k < lv.size(); ++k) position[lv[k]] = k;
        }
        std::vector<std::size_t> ranks(size + 2, 0);
        for (std::size_t c = 1; c <= size; ++c) {
            if (level[c].empty()) continue;
            std::vector<SparseRow> rows;
            for (FaceMask f : level[c]) {
                SparseRow row;
                for (FaceMask rest = f; rest; rest &= rest - 1) {
                    const FaceMask facet = f ^ (rest & (~rest + 1));
                    row.emplace_back(position.at(facet), incidence(f, facet));
                }
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
            ranks[c] = rank(rows, level[c - 1].size(), field);
        }
        std::vector<Exponent> e(n, 0);
        for (std::size_t v = 0; v < n; ++v) e[v] = contains(w, v) ? 1 : 0;
        const Monomial alpha(std::move(e));
        for (std::size_t c = 0; c <= size; ++c) {
            const std::size_t h = level[c].size() - ranks[c] - ranks[c + 1];
            t.add(size - c, alpha, h);
        }
    }
    return t;
}

/// Macaulay2-style Betti diagram: column i, row j holds beta_{i,i+j}, zeros as `.`.
inline std::string render_betti(const BettiTable& t) {
    const auto graded = t.graded();
    std::size_t columns = 1, rows = 1;
    for (const auto& [key, count] : graded) {
        columns = std::max(columns, key.first + 1);
        rows = std::max<std::size_t>(rows, static_cast<std::size_t>(key.second - key.first) + 1);
    }
    auto totals = t.totals();
    totals.resize(columns, 0);

    std::vector<std::vector<std::string>> grid(rows + 2, std::vector<std::string>(columns + 1));
    grid[0][0] = "";
    grid[1][0] = "total:";
    for (std::size_t i = 0; i < columns; ++i) {
        grid[0][i + 1] = std::to_string(i);
        grid[1][i + 1] = std::to_string(totals[i]);
    }
    for (std::size_t j = 0; j < rows; ++j) {
        grid[j + 2][0] = std::to_string(j) + ":";
        for (std::size_t i = 0; i < columns; ++i) {
            auto it = graded.find({i, i + j});
            grid[j + 2][i + 1] = it == graded.end() ? "." : std::to_string(it->second);
        }
    }
    std::vector<std::size_t> width(columns + 1, 0);
    for (const auto& line : grid)
        for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());

    std::string out;
    for (const auto& line : grid) {
        std::string text;
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (k) text += ' ';
            text += std::string(width[k] - line[k].size(), ' ') + line[k];
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out += text + "\n";
    }
    return out;
}

}  // namespace prunres
