#ifndef WAMR_CORE_HPP
#define WAMR_CORE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wamr {

using real = double;

/// Thrown when a caller violates a documented precondition.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when halos are read after a topology change without a fresh exchange.
struct StaleHalos : ContractError {
    using ContractError::ContractError;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

/// floor division, exact for negative numerators
constexpr int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr int64_t mod_floor(int64_t a, int64_t b) {
    int64_t r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? r + b : r;
}

/// Half-open integer box [lo, hi) on a 3D lattice.
struct Box3i {
    std::array<int64_t, 3> lo{0, 0, 0};
    std::array<int64_t, 3> hi{0, 0, 0};

    bool empty() const {
        return hi[0] <= lo[0] || hi[1] <= lo[1] || hi[2] <= lo[2];
    }
    int64_t volume() const {
        if (empty()) return 0;
        return (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
    }
    bool contains(int64_t x, int64_t y, int64_t z) const {
        return x >= lo[0] && x < hi[0] && y >= lo[1] && y < hi[1] && z >= lo[2] && z < hi[2];
    }
    Box3i intersect(const Box3i& o) const {
        Box3i r;
        for (int a = 0; a < 3; ++a) {
            r.lo[a] = std::max(lo[a], o.lo[a]);
            r.hi[a] = std::min(hi[a], o.hi[a]);
        }
        return r;
    }
    Box3i shifted(const std::array<int64_t, 3>& s) const {
        return {{lo[0] + s[0], lo[1] + s[1], lo[2] + s[2]},
                {hi[0] + s[0], hi[1] + s[1], hi[2] + s[2]}};
    }
};

/// Pairwise-tree sum over an index range; deterministic regardless of
/// the number of workers that produced the terms.
inline real pairwise_sum(const std::vector<real>& v, size_t lo, size_t hi) {
    size_t n = hi - lo;
    if (n == 0) return 0.0;
    if (n <= 8) {
        real s = 0.0;
        for (size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline real pairwise_sum(const std::vector<real>& v) { return pairwise_sum(v, 0, v.size()); }

}  // namespace wamr

#endif
