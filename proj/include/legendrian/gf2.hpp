#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace legendrian::gf2 {

// Dense matrix over Z2, rows packed into 64-bit words.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * stride_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    bool is_zero() const {
        for (auto w : data_)
            if (w) return false;
        return true;
    }

    // Row-reduces a copy; returns the rank.
    std::size_t rank() const {
        std::vector<std::uint64_t> a = data_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            const std::size_t wi = c / 64;
            const std::uint64_t bit = std::uint64_t{1} << (c % 64);
            std::size_t piv = rank;
            while (piv < rows_ && !(a[piv * stride_ + wi] & bit)) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (std::size_t k = 0; k < stride_; ++k)
                    std::swap(a[piv * stride_ + k], a[rank * stride_ + k]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || !(a[r * stride_ + wi] & bit)) continue;
                for (std::size_t k = 0; k < stride_; ++k) a[r * stride_ + k] ^= a[rank * stride_ + k];
            }
            ++rank;
        }
        return rank;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a.get(i, k))
                    for (std::size_t w = 0; w < b.stride_; ++w)
                        p.data_[i * p.stride_ + w] ^= b.data_[k * b.stride_ + w];
        return p;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace legendrian::gf2
