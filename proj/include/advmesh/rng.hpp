#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "advmesh/vec.hpp"

namespace advmesh {

// FNV-1a; stable across platforms, unlike std::hash.
inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    // splitmix64 finalizer
    uint64_t z = seed + 0x9e3779b97f4a7c15ull + salt;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic RNG. All randomness in the project flows through named
// substreams of one top-level seed so stages are independently reproducible.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    static Rng substream(uint64_t seed, std::string_view name) {
        return Rng(mix_seed(seed, fnv1a(name)));
    }

    Rng fork(std::string_view name) { return Rng(mix_seed(gen_(), fnv1a(name))); }
    Rng fork(uint64_t salt) { return Rng(mix_seed(gen_(), salt)); }

    uint64_t next_u64() { return gen_(); }

    // [0, 1), 53-bit resolution. Hand-rolled so results do not depend on the
    // standard library's distribution implementations.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [lo, hi] inclusive
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0, u2 = 0.0;
        do { u1 = uniform(); } while (u1 <= 1e-300);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

    Vec3 unit_vector() {
        double z = uniform(-1.0, 1.0);
        double a = uniform(0.0, 2.0 * kPi);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(a), r * std::sin(a), z};
    }

    // Uniform (solid angle) direction within a cone of given half-angle
    // around `axis`. axis must be nonzero.
    Vec3 cone(const Vec3& axis, double half_angle_deg) {
        Vec3 w = normalized(axis);
        double cos_min = std::cos(deg2rad(half_angle_deg));
        double cz = uniform(cos_min, 1.0);
        double a = uniform(0.0, 2.0 * kPi);
        double r = std::sqrt(std::max(0.0, 1.0 - cz * cz));
        // build an orthonormal basis around w
        Vec3 h = std::fabs(w.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 u = normalized(cross(h, w));
        Vec3 v = cross(w, u);
        return u * (r * std::cos(a)) + v * (r * std::sin(a)) + w * cz;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = gen_() % i;
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace advmesh
