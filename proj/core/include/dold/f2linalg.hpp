#pragma once

#include <cstdint>
#include <vector>

namespace dold {

/// Bit vector over the two-element field, packed into 64-bit blocks.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t bits) : bits_(bits), blocks_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool get(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            blocks_[i >> 6] |= mask;
        else
            blocks_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void xor_with(const F2Vector& other);
    bool is_zero() const;
    /// Index of the first set bit, or size() when zero.
    std::size_t leading_bit() const;

    bool operator==(const F2Vector& other) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> blocks_;
};

/// Dense F2 matrix, rows of F2Vector.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
    const F2Vector& row(std::size_t r) const { return rows_[r]; }
    F2Vector& row(std::size_t r) { return rows_[r]; }

    bool is_zero() const;
    std::size_t rank() const;
    F2Matrix multiplied_by(const F2Matrix& rhs) const;  // this * rhs
    F2Vector apply(const F2Vector& v) const;            // v (row) * this

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

/// Row space held in reduced row-echelon form. Pivot positions are the
/// smallest coordinate of each row; insertion order does not affect the final
/// reduced basis of a given span.
class F2RowSpace {
public:
    explicit F2RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<F2Vector>& rows() const { return rows_; }

    /// Reduces `v` by the current rows; inserts the residue when nonzero.
    /// Returns true when the dimension grew.
    bool insert(F2Vector v);

    /// Residue of `v` after elimination by the row space.
    F2Vector reduce(F2Vector v) const;

    bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }

private:
    std::size_t cols_;
    std::vector<F2Vector> rows_;     // sorted by pivot
    std::vector<std::size_t> pivots_;
};

/// Basis of { c : sum_i c_i rows[i] = 0 }, the left kernel of the stacked rows.
std::vector<F2Vector> combination_kernel(const std::vector<F2Vector>& rows, std::size_t cols);

}  // namespace dold
