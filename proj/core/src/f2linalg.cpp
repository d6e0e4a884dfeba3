#include "dold/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dold {

void F2Vector::xor_with(const F2Vector& other) {
    if (other.bits_ != bits_) throw std::logic_error("F2Vector size mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= other.blocks_[i];
}

bool F2Vector::is_zero() const {
    for (std::uint64_t b : blocks_)
        if (b != 0) return false;
    return true;
}

std::size_t F2Vector::leading_bit() const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i] != 0) {
            std::size_t bit = (i << 6) + static_cast<std::size_t>(std::countr_zero(blocks_[i]));
            return bit < bits_ ? bit : bits_;
        }
    }
    return bits_;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols) {
    rows_.assign(rows, F2Vector(cols));
}

bool F2Matrix::is_zero() const {
    for (const F2Vector& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

std::size_t F2Matrix::rank() const {
    F2RowSpace space(cols_);
    for (const F2Vector& r : rows_) space.insert(r);
    return space.dim();
}

F2Matrix F2Matrix::multiplied_by(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::logic_error("F2Matrix shape mismatch");
    F2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (rows_[r].get(k)) out.rows_[r].xor_with(rhs.rows_[k]);
    return out;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
    if (v.size() != rows()) throw std::logic_error("F2Matrix apply mismatch");
    F2Vector out(cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        if (v.get(r)) out.xor_with(rows_[r]);
    return out;
}

bool F2RowSpace::insert(F2Vector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    std::size_t pivot = v.leading_bit();
    // clear this pivot from existing rows, then insert keeping pivot order
    for (F2Vector& row : rows_)
        if (row.get(pivot)) row.xor_with(v);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t index = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(index), std::move(v));
    return true;
}

F2Vector F2RowSpace::reduce(F2Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v.xor_with(rows_[i]);
    return v;
}

std::vector<F2Vector> combination_kernel(const std::vector<F2Vector>& rows, std::size_t cols) {
    const std::size_t n = rows.size();
    // augmented rows [value | tag]; eliminate on value part only
    struct Augmented {
        F2Vector value;
        F2Vector tag;
    };
    std::vector<Augmented> pool;
    pool.reserve(n);
    std::vector<std::size_t> pivots;
    std::vector<F2Vector> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        Augmented a{rows[i], F2Vector(n)};
        a.tag.set(i, true);
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (a.value.get(pivots[j])) {
                a.value.xor_with(pool[j].value);
                a.tag.xor_with(pool[j].tag);
            }
        }
        if (a.value.is_zero()) {
            kernel.push_back(std::move(a.tag));
        } else {
            pivots.push_back(a.value.leading_bit());
            pool.push_back(std::move(a));
        }
    }
    (void)cols;
    return kernel;
}

}  // namespace dold
