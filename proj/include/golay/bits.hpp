#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace golay {

// Binary digits of an index n in 0..2^N-1. Bits are numbered 1..N with
// bit 1 the least significant, so n = sum_k bit(n,k) * 2^(k-1).
inline int bit(std::uint64_t n, int k, int n_bits) {
    if (n_bits < 1 || n_bits > 63)
        throw std::invalid_argument("bit: N must be in 1..63");
    if (k < 1 || k > n_bits)
        throw std::invalid_argument("bit: index k out of range 1..N");
    if (n >= (std::uint64_t{1} << n_bits))
        throw std::invalid_argument("bit: n out of range 0..2^N-1");
    return static_cast<int>((n >> (k - 1)) & 1u);
}

// Walsh function W_l(n) = (-1)^(sum_k l_k n_k) as +1/-1. Pure integer parity,
// no floating point involved.
inline int walsh_sign(std::uint64_t l, std::uint64_t n, int n_bits) {
    if (n_bits < 1 || n_bits > 63)
        throw std::invalid_argument("walsh: N must be in 1..63");
    const std::uint64_t lim = std::uint64_t{1} << n_bits;
    if (l >= lim || n >= lim)
        throw std::invalid_argument("walsh: l or n out of range 0..2^N-1");
    return (std::popcount(l & n) & 1) ? -1 : 1;
}

// Bijection on {1..N}, stored with its inverse. Validated once at
// construction so evaluation loops can stay check-free.
class Permutation {
public:
    Permutation() = default;  // size 0, for the length-1 degenerate case

    explicit Permutation(std::vector<int> images) : fwd_(std::move(images)) {
        const int n = static_cast<int>(fwd_.size());
        inv_.assign(n, 0);
        for (int k = 1; k <= n; ++k) {
            const int v = fwd_[k - 1];
            if (v < 1 || v > n)
                throw std::invalid_argument("permutation: image " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
            if (inv_[v - 1] != 0)
                throw std::invalid_argument("permutation: duplicate image " + std::to_string(v));
            inv_[v - 1] = k;
        }
    }

    static Permutation identity(int n) {
        if (n < 0) throw std::invalid_argument("permutation: negative size");
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    // Accepts "2,1,3" (1-based images) or the literal "identity".
    static Permutation parse(const std::string& text, int n) {
        if (text == "identity") return identity(n);
        std::vector<int> v;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int val;
            try {
                val = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("permutation: bad token '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size())
                throw std::invalid_argument("permutation: bad token '" + tok + "'");
            v.push_back(val);
        }
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("permutation: expected " + std::to_string(n) +
                                        " entries, got " + std::to_string(v.size()));
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(fwd_.size()); }

    int operator()(int k) const {
        if (k < 1 || k > size())
            throw std::invalid_argument("permutation: k out of range 1..N");
        return fwd_[k - 1];
    }

    int inverse(int k) const {
        if (k < 1 || k > size())
            throw std::invalid_argument("permutation: k out of range 1..N");
        return inv_[k - 1];
    }

    const std::vector<int>& forward() const { return fwd_; }

    std::string str() const {
        std::string out;
        for (int i = 0; i < size(); ++i) {
            if (i) out += ',';
            out += std::to_string(fwd_[i]);
        }
        return out;
    }

    bool operator==(const Permutation& o) const { return fwd_ == o.fwd_; }

private:
    std::vector<int> fwd_;
    std::vector<int> inv_;
};

// Extended bit vector around n: position 0 carries r, positions 1..N carry the
// permuted digits of n, position N+1 carries s.
inline int extended_bit(std::uint64_t n, int k, const Permutation& perm, int r, int s) {
    const int nb = perm.size();
    if (r < 0 || r > 1 || s < 0 || s > 1)
        throw std::invalid_argument("extended_bit: r and s must be 0 or 1");
    if (k < 0 || k > nb + 1)
        throw std::invalid_argument("extended_bit: k out of range 0..N+1");
    if (n >= (std::uint64_t{1} << nb))
        throw std::invalid_argument("extended_bit: n out of range 0..2^N-1");
    if (k == 0) return r;
    if (k == nb + 1) return s;
    return static_cast<int>((n >> (perm(k) - 1)) & 1u);
}

}  // namespace golay
