#pragma once

// Square matrices over the Boolean semiring ({0,1}, OR, AND).
//
// Rows are packed bitsets: row i is the successor set of vertex i when the
// matrix is an adjacency matrix, so the product a*b ORs together the rows
// of b selected by the set bits of each row of a.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gperiod/digraph.hpp"

namespace gperiod {

class BoolMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    explicit BoolMatrix(std::size_t n)
        : n_(n), words_((n + word_bits - 1) / word_bits), bits_(n * words_, 0) {}

    static BoolMatrix identity(std::size_t n) {
        BoolMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / word_bits] >> (j % word_bits)) & 1U;
    }

    bool at(std::size_t i, std::size_t j) const {
        check(i, j);
        return get(i, j);
    }

    void set(std::size_t i, std::size_t j, bool value = true) {
        check(i, j);
        Word& w = bits_[i * words_ + j / word_bits];
        const Word mask = Word{1} << (j % word_bits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<const Word> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
    std::span<Word> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool all_ones() const noexcept { return count() == n_ * n_; }
    bool is_zero() const noexcept { return count() == 0; }

    bool operator==(const BoolMatrix&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
            out.push_back('\n');
        }
        return out;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_) throw std::out_of_range("BoolMatrix index out of range");
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<Word> bits_;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Entrywise positivity pattern of a nonnegative integer matrix.
inline BoolMatrix chi(const IntMatrix& a) {
    const std::size_t n = a.size();
    BoolMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("chi: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] < 0) throw std::invalid_argument("chi: negative entry");
            if (a[i][j] > 0) out.set(i, j);
        }
    }
    return out;
}

inline BoolMatrix bmm(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("bmm: dimension mismatch");
    const std::size_t n = a.size();
    const std::size_t words = a.words_per_row();
    BoolMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto dst = out.row(i);
        const auto src = a.row(i);
        for (std::size_t w = 0; w < words; ++w) {
            BoolMatrix::Word bits = src[w];
            while (bits != 0) {
                const std::size_t k = w * BoolMatrix::word_bits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const auto rk = b.row(k);
                for (std::size_t x = 0; x < words; ++x) dst[x] |= rk[x];
            }
        }
    }
    return out;
}

inline BoolMatrix adjacency(const Digraph& g) {
    BoolMatrix m(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v : g.successors(u)) m.set(u, v);
    }
    return m;
}

// a^e by repeated squaring; a^0 is the identity.
inline BoolMatrix power(const BoolMatrix& a, std::uint64_t e) {
    BoolMatrix result = BoolMatrix::identity(a.size());
    BoolMatrix base = a;
    while (e > 0) {
        if (e & 1U) result = bmm(result, base);
        e >>= 1;
        if (e > 0) base = bmm(base, base);
    }
    return result;
}

// Ordinary integer product, for checking chi against the real semiring.
inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("int_multiply: dimension mismatch");
    IntMatrix out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

}  // namespace gperiod
