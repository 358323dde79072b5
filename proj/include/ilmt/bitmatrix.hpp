#ifndef ILMT_BITMATRIX_HPP
#define ILMT_BITMATRIX_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace ilmt {

// Square bit matrix with rows padded to whole 64-bit words. Row i holds the
// out-neighborhood of node i; trailing bits of the last word are kept zero so
// popcounts over raw words need no masking.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    bool get(int i, int j) const {
        return (bits_[idx(i) + static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j) {
        bits_[idx(i) + static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
    void reset(int i, int j) {
        bits_[idx(i) + static_cast<std::size_t>(j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
    }

    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + idx(i), static_cast<std::size_t>(words_)};
    }
    std::span<std::uint64_t> row(int i) {
        return {bits_.data() + idx(i), static_cast<std::size_t>(words_)};
    }

    // Mask of valid bits in the last word of a row (all ones when n % 64 == 0).
    std::uint64_t tail_mask() const {
        int r = n_ & 63;
        return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    }

    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t idx(int i) const { return static_cast<std::size_t>(i) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline std::size_t popcount_row(std::span<const std::uint64_t> a) {
    std::size_t c = 0;
    for (std::uint64_t w : a) c += std::popcount(w);
    return c;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] & b[k]);
    return c;
}

inline std::size_t popcount_and3(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b,
                                 std::span<const std::uint64_t> c) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < a.size(); ++k) n += std::popcount(a[k] & b[k] & c[k]);
    return n;
}

// dst |= src << shift, where shift is a bit offset into dst. src and dst may
// have different lengths; bits shifted past dst are dropped.
void or_shifted(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, int shift);

// Iterate set bits of a row, calling fn(index) for each.
template <typename Fn>
inline void for_each_bit(std::span<const std::uint64_t> row, Fn&& fn) {
    for (std::size_t k = 0; k < row.size(); ++k) {
        std::uint64_t w = row[k];
        while (w) {
            fn(static_cast<int>(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

} // namespace ilmt

#endif
