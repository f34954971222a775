#pragma once

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fatpoints {

/// Row-major dense matrix tagged with the field its entries live in.
/// Prime-field matrices use std::uint64_t residues, rational ones use Rational.
template <typename T>
class DenseMatrix {
public:
    using value_type = T;

    DenseMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
        : rows_(rows), cols_(cols), entries_(rows * cols, T(0)), field_(field) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries, FieldSpec field)
        : rows_(rows), cols_(cols), entries_(std::move(entries)), field_(field) {
        if (entries_.size() != rows_ * cols_) {
            throw Error(ErrorKind::invalid_input, "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                                                      std::to_string(rows_ * cols_));
        }
    }

    static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows, FieldSpec field) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        std::vector<T> entries;
        entries.reserve(rows.size() * cols);
        for (const auto& row : rows) {
            if (row.size() != cols) throw Error(ErrorKind::invalid_input, "ragged matrix rows");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return DenseMatrix(rows.size(), cols, std::move(entries), field);
    }

    static DenseMatrix identity(std::size_t n, FieldSpec field) {
        DenseMatrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }

    T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const T> entries() const noexcept { return entries_; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;
    FieldSpec field_;
};

using ModMatrix = DenseMatrix<std::uint64_t>;
using RationalMatrix = DenseMatrix<Rational>;

/// Rank over F_p by Gaussian elimination with first-nonzero pivoting on a copy.
inline std::size_t rank_modp(const ModMatrix& m) {
    if (!m.field().is_prime()) throw Error(ErrorKind::invalid_input, "rank_modp needs a prime-field matrix");
    const PrimeField f(m.field());
    const std::uint64_t p = f.modulus();
    for (auto v : m.entries()) {
        if (v >= p) throw Error(ErrorKind::invalid_input, "entry " + std::to_string(v) + " is not a residue mod " + std::to_string(p));
    }

    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        }
        const std::uint64_t inv = f.inv(at(rank, c));
        for (std::size_t j = c; j < cols; ++j) at(rank, j) = f.mul(at(rank, j), inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t factor = at(r, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                at(r, j) = f.sub(at(r, j), f.mul(factor, at(rank, j)));
            }
        }
        ++rank;
    }
    return rank;
}

namespace detail {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input, so each division is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    Integer previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const Integer& piv = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Integer factor = a[r][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = (piv * a[r][j] - factor * a[rank][j]) / previous;
            }
            a[r][c] = 0;
        }
        previous = piv;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Rank over Q. Rows are scaled by the lcm of their denominators and reduced
/// with fraction-free elimination.
inline std::size_t rank_exact(const RationalMatrix& m) {
    if (m.field().is_prime()) throw Error(ErrorKind::invalid_input, "rank_exact needs an exact-rational matrix");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;

    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (const auto& v : m.row(r)) scale = boost::multiprecision::lcm(scale, Integer(denominator(v)));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& v = m(r, c);
            rows[r][c] = numerator(v) * (scale / denominator(v));
        }
    }
    return detail::bareiss_rank(std::move(rows));
}

}  // namespace fatpoints
