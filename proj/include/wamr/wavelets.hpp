#ifndef WAMR_WAVELETS_HPP
#define WAMR_WAVELETS_HPP

#include <stdexcept>
#include <vector>

#include "wamr/core.hpp"

namespace wamr {

struct UnsupportedWavelet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Interpolating wavelet family N.Ñ: N = interpolation order (vanishing
/// moments of the scaling function), Ñ = vanishing moments of the wavelet.
struct WaveletSpec {
    int n = 4;       // N, even, in {2, 4, 6}
    int ntilde = 0;  // Ñ, even, in {0, 2}, Ñ <= N

    bool lifted() const { return ntilde > 0; }
    void validate() const;
};

/// 1D filter with taps over an inclusive offset range [lo, lo+size-1].
/// Offsets are expressed in the interleaved fine-index frame: Ha/Js are
/// centered on even (scaling) slots, Ga/Ks on odd (detail) slots.
struct Filter {
    int lo = 0;
    std::vector<real> w;

    int hi() const { return lo + static_cast<int>(w.size()) - 1; }
    real at(int off) const {
        return (off >= lo && off <= hi()) ? w[off - lo] : 0.0;
    }
    /// largest |offset| with a (structurally) nonzero tap
    int reach() const { return std::max(-lo, hi()); }
};

/// Ghost-point requirements of one wavelet family (3D columns of the
/// requirements table). front = low-index side, back = high-index side.
struct GhostRequirement {
    int coarsen_front = 0, coarsen_back = 0;
    int coarse_ext_front = 0, coarse_ext_back = 0;  // index-space distances
    int update_front = 0, update_back = 0;
    int refine_front = 0, refine_back = 0;

    int max_any() const {
        int m = 0;
        for (int v : {coarsen_front, coarsen_back, coarse_ext_front, coarse_ext_back,
                      update_front, update_back, refine_front, refine_back})
            m = std::max(m, v);
        return m;
    }
};

/// All filters of one family, materialized once from exact rationals so
/// every module sees bit-identical coefficients.
struct FilterBank {
    WaveletSpec spec;

    Filter ha;  // analysis low-pass, centered on even fine indices
    Filter ga;  // analysis detail, centered on odd fine indices, ga[0] == 1
    Filter js;  // synthesis, even outputs, on the interleaved (λ, γ) array
    Filter ks;  // synthesis, odd outputs, on the interleaved (λ, γ) array

    /// dual-lifting coefficients S̃, index i in [1-N/2, N/2] (coarse offsets)
    Filter stilde;
    /// primal-lifting coefficients S = -S̃^(Ñ)/2, index j in [-Ñ/2, Ñ/2-1]
    Filter s;

    /// interpolation weights predicting the odd fine point 2m+1 from coarse
    /// samples m+i, i in [1-N/2, N/2]; equals the odd-slot taps of Ks with
    /// zero details
    Filter prediction;

    GhostRequirement req;

    /// halo width serving every phase for this family combined with a
    /// finite-difference stencil of half-width fd_halfwidth
    int halo_width(int fd_halfwidth) const {
        return std::max(req.max_any(), fd_halfwidth);
    }
    /// coarse-scratch halo width needed to predict fine ghosts of width ng
    int coarse_halo_width(int ng) const {
        return static_cast<int>((ng + spec.n - 1 + 1) / 2);
    }
};

/// Exact dual-lifting coefficients for interpolation order n (symmetric,
/// length n). These are the negated Deslauriers-Dubuc weights.
std::vector<real> dual_lift_coefficients(int n);

/// Build the full filter bank of a family. Throws UnsupportedWavelet for
/// (N, Ñ) outside {2,4,6} x {0,2}.
FilterBank build_filter_bank(const WaveletSpec& spec);

/// 3D ghost-point requirements of a family.
GhostRequirement ghost_requirements(const WaveletSpec& spec);

}  // namespace wamr

#endif
