#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prunres {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficient field: characteristic 0 (the rationals) or a prime p.
class Field {
public:
    constexpr Field() = default;

    static Field of(std::uint32_t characteristic) {
        if (characteristic != 0 && !is_prime(characteristic)) {
            throw FieldError("field characteristic must be 0 or prime, got " +
                             std::to_string(characteristic));
        }
        Field f;
        f.p_ = characteristic;
        return f;
    }

    constexpr std::uint32_t characteristic() const noexcept { return p_; }
    constexpr bool rational() const noexcept { return p_ == 0; }

    /// Whether the integer c is nonzero in this field.
    constexpr bool nonzero(std::int64_t c) const noexcept {
        return p_ == 0 ? c != 0 : c % static_cast<std::int64_t>(p_) != 0;
    }

    friend constexpr bool operator==(Field, Field) = default;

private:
    static constexpr bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t p_ = 0;
};

/// A sparse integer row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

namespace detail {

struct Overflow {};

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
}
inline std::int64_t abs_value(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}

using BigInt = boost::multiprecision::cpp_int;
inline BigInt mul_checked(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub_checked(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt abs_value(const BigInt& a) { return boost::multiprecision::abs(a); }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class Int>
using Row = std::vector<std::pair<std::size_t, Int>>;

/// a_lead * row - row_lead * pivot, cancelling the leading column.
template <class Int>
Row<Int> combine(const Row<Int>& row, const Row<Int>& pivot) {
    const Int a = pivot.front().second;
    const Int b = row.front().second;
    Row<Int> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, k = 1;
    while (i < row.size() || k < pivot.size()) {
        if (k == pivot.size() || (i < row.size() && row[i].first < pivot[k].first)) {
            out.emplace_back(row[i].first, mul_checked(a, row[i].second));
            ++i;
        } else if (i == row.size() || pivot[k].first < row[i].first) {
            out.emplace_back(pivot[k].first, sub_checked(Int{0}, mul_checked(b, pivot[k].second)));
            ++k;
        } else {
            Int v = sub_checked(mul_checked(a, row[i].second), mul_checked(b, pivot[k].second));
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++k;
        }
    }
    Int g{0};
    for (const auto& [c, v] : out) g = gcd_of(g, abs_value(v));
    if (g > 1)
        for (auto& [c, v] : out) v /= g;
    return out;
}

/// Fraction-free elimination over the integers: rank over Q.
template <class Int>
std::size_t rational_rank(const std::vector<SparseRow>& rows, std::size_t columns) {
    std::vector<std::optional<Row<Int>>> pivots(columns);
    std::size_t rank = 0;
    for (const auto& src : rows) {
        Row<Int> row;
        row.reserve(src.size());
        for (const auto& [c, v] : src)
            if (v != 0) row.emplace_back(c, Int{v});
        while (!row.empty()) {
            auto& p = pivots[row.front().first];
            if (!p) {
                p = std::move(row);
                ++rank;
                break;
            }
            row = combine<Int>(row, *p);
        }
    }
    return rank;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, exp = p - 2;
    a %= p;
    while (exp) {
        if (exp & 1) result = result * a % p;
        a = a * a % p;
        exp >>= 1;
    }
    return result;
}

inline std::size_t modular_rank(const std::vector<SparseRow>& rows, std::size_t columns,
                                std::uint64_t p) {
    using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
    std::vector<std::optional<ModRow>> pivots(columns);
    std::size_t rank = 0;
    const auto sp = static_cast<std::int64_t>(p);
    for (const auto& src : rows) {
        ModRow row;
        for (const auto& [c, v] : src) {
            const auto m = static_cast<std::uint64_t>(((v % sp) + sp) % sp);
            if (m) row.emplace_back(c, m);
        }
        while (!row.empty()) {
            auto& piv = pivots[row.front().first];
            if (!piv) {
                const std::uint64_t inv = inverse_mod(row.front().second, p);
                for (auto& [c, v] : row) v = v * inv % p;
                piv = std::move(row);
                ++rank;
                break;
            }
            // pivot rows are monic
            const std::uint64_t f = row.front().second;
            ModRow next;
            next.reserve(row.size() + piv->size());
            std::size_t i = 1, k = 1;
            while (i < row.size() || k < piv->size()) {
                if (k == piv->size() || (i < row.size() && row[i].first < (*piv)[k].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || (*piv)[k].first < row[i].first) {
                    next.emplace_back((*piv)[k].first, (p - f * (*piv)[k].second % p) % p);
                    ++k;
                } else {
                    const std::uint64_t v = (row[i].second + p - f * (*piv)[k].second % p) % p;
                    if (v) next.emplace_back(row[i].first, v);
                    ++i;
                    ++k;
                }
            }
            row = std::move(next);
        }
    }
    return rank;
}

}  // namespace detail

/// Exact rank of an integer matrix over `field`. Rows must be sorted by column
/// and every column index must be below `columns`.
inline std::size_t rank(const std::vector<SparseRow>& rows, std::size_t columns, Field field) {
    if (rows.empty() || columns == 0) return 0;
    if (!field.rational()) return detail::modular_rank(rows, columns, field.characteristic());
    try {
        return detail::rational_rank<std::int64_t>(rows, columns);
    } catch (const detail::Overflow&) {
        return detail::rational_rank<detail::BigInt>(rows, columns);
    }
}

}  // namespace prunres
