#pragma once

#include <cstdint>

#include "rotabaxter/linalg.hpp"

namespace rb {

// splitmix64: tiny, portable, and stable across platforms, which keeps the
// seeded evidence suites reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Modulo bias is irrelevant here.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar scalar(const Field& f, int magnitude = 9) {
        if (f.kind == FieldKind::Prime) return Scalar::from_int(f, uniform(0, f.prime - 1));
        return Scalar::make(f, BigInt(uniform(-magnitude, magnitude)), BigInt(uniform(1, 4)));
    }

    Scalar nonzero_scalar(const Field& f, int magnitude = 9) {
        for (;;) {
            Scalar s = scalar(f, magnitude);
            if (!s.is_zero()) return s;
        }
    }

    Vec vector(const Field& f, int n, int magnitude = 9) {
        Vec v = vec_zero(f, n);
        for (auto& x : v) x = scalar(f, magnitude);
        return v;
    }

    Matrix matrix(const Field& f, int rows, int cols, int magnitude = 9) {
        Matrix m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = scalar(f, magnitude);
        return m;
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240915ULL;

}  // namespace rb
