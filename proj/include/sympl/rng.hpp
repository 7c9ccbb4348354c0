#pragma once

#include "sympl/matrix.hpp"

#include <cstdint>

namespace sympl {

// Deterministic splitmix64 stream. Fixed seed => identical draws on every
// platform, which the CLI relies on for byte-identical reports.
class RatRng {
public:
    explicit RatRng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    // Small-denominator rational; keeps exact kernels from blowing up.
    Rat small_rat(long num_max = 2, long den_max = 3) {
        long num = range(-num_max, num_max);
        long den = range(1, den_max);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    std::vector<Rat> rat_vec(int n, long num_max = 2, long den_max = 3) {
        std::vector<Rat> v(n);
        for (auto& x : v) x = small_rat(num_max, den_max);
        return v;
    }

    // Random element of Sp(2n, Q) as a product of elementary generators:
    // [[I, S], [0, I]], [[I, 0], [S', I]] with S, S' symmetric, and the
    // block rotation [[0, I], [-I, 0]].
    Mat random_symplectomorphism(int n, int factors = 4) {
        Mat a = Mat::identity(2 * n);
        for (int f = 0; f < factors; ++f) {
            Mat s(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    Rat v = small_rat(1, 2);
                    s.at(i, j) = v;
                    s.at(j, i) = v;
                }
            Mat g(2 * n, 2 * n);
            switch (next_u64() % 3) {
                case 0:
                    g = Mat::identity(2 * n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) g.at(i, n + j) = s.at(i, j);
                    break;
                case 1:
                    g = Mat::identity(2 * n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) g.at(n + i, j) = s.at(i, j);
                    break;
                default:
                    for (int i = 0; i < n; ++i) {
                        g.at(i, n + i) = 1;
                        g.at(n + i, i) = -1;
                    }
            }
            a = a * g;
        }
        return a;
    }

private:
    uint64_t state_;
};

} // namespace sympl
