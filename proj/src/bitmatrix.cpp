#include "ilmt/bitmatrix.hpp"

namespace ilmt {

namespace {

// In-place transpose of a 64x64 bit block (rows given as 64 words, bit 0 of a
// row is column 0). At each scale, the high half of a low row swaps with the
// low half of the paired high row.
void transpose64(std::uint64_t a[64]) {
    std::uint64_t m = 0x00000000FFFFFFFFull;
    for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
        for (int k = 0; k < 64; k = (k + j + 1) & ~j) {
            std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

} // namespace

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(n_);
    std::uint64_t block[64];
    for (int bi = 0; bi < words_; ++bi) {
        for (int bj = 0; bj < words_; ++bj) {
            int rows = std::min(64, n_ - bi * 64);
            for (int r = 0; r < rows; ++r) block[r] = row(bi * 64 + r)[bj];
            for (int r = rows; r < 64; ++r) block[r] = 0;
            transpose64(block);
            int cols = std::min(64, n_ - bj * 64);
            for (int c = 0; c < cols; ++c)
                if (block[c]) out.row(bj * 64 + c)[bi] = block[c];
        }
    }
    return out;
}

void or_shifted(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, int shift) {
    const int word = shift >> 6;
    const int off = shift & 63;
    if (off == 0) {
        for (std::size_t k = 0; k < src.size() && word + k < dst.size(); ++k)
            dst[word + k] |= src[k];
        return;
    }
    for (std::size_t k = 0; k < src.size(); ++k) {
        if (src[k] == 0) continue;
        std::size_t lo = word + k;
        if (lo < dst.size()) dst[lo] |= src[k] << off;
        if (lo + 1 < dst.size()) dst[lo + 1] |= src[k] >> (64 - off);
    }
}

} // namespace ilmt
