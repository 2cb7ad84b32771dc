#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "leb/shapespace.hpp"

namespace leb {

// Deterministic rational samplers for property tests and sweeps. Points are
// random rationals a/B + (b/B) i with d = 1, filtered by an exact predicate.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long denom = 1024) : state_(seed ? seed : 1), denom_(denom) {}

    std::uint64_t next_u64() {
        // xorshift64*
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    long next_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Uniform rational point in the bounding box of D, rejected until it lies
    // in D and satisfies `keep`.
    ShapePoint point_in(const std::function<bool(const ShapePoint&)>& keep, int max_tries = 100000) {
        for (int t = 0; t < max_tries; ++t) {
            long a = next_in(1, denom_ / 2);
            long b = next_in(1, (denom_ * 7) / 8);
            ShapePoint z(make_rat(a, denom_), make_rat(b, denom_), 1);
            if (z.in_domain() && keep(z)) return z;
        }
        throw input_error("sampler failed to hit the requested region");
    }

    ShapePoint point_in_region(Region r, int max_tries = 100000) {
        return point_in([&](const ShapePoint& z) { return classify(z) == r; }, max_tries);
    }

    std::vector<ShapePoint> points_in_region(Region r, int count) {
        std::vector<ShapePoint> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) out.push_back(point_in_region(r));
        return out;
    }

private:
    std::uint64_t state_;
    long denom_;
};

}  // namespace leb
