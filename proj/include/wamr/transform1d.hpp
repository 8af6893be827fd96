#ifndef WAMR_TRANSFORM1D_HPP
#define WAMR_TRANSFORM1D_HPP

#include <vector>

#include "wamr/core.hpp"
#include "wamr/wavelets.hpp"

namespace wamr {

enum class Boundary1D {
    Periodic,
    Extended,  // polynomial extrapolation of order N at the ends
};

/// 1D fine-level signal in the interleaved frame: slots of parity
/// `scaling_parity` hold (future) scaling coefficients, the others details.
struct InterleavedSignal {
    std::vector<real> values;
    int scaling_parity = 0;
    Boundary1D boundary = Boundary1D::Periodic;
};

/// Result of a forward transform. In Extended mode both arrays carry
/// `margin` extra coefficients on each end (coarse index k = slot - margin),
/// computed from the extrapolated signal; the inverse consumes them so the
/// round-trip is exact on the core samples.
struct Decomposition {
    std::vector<real> scalings;
    std::vector<real> details;
    int margin = 0;
    int scaling_parity = 0;
    Boundary1D boundary = Boundary1D::Periodic;

    int core_size() const { return static_cast<int>(scalings.size()) - 2 * margin; }
};

/// margin (in coarse indices) carried by Extended-mode decompositions
int coeff_margin(const FilterBank& bank, Boundary1D boundary);

/// Analysis: scalings via Ha centered on scaling slots, details via Ga
/// centered on detail slots. Signal length must be even.
Decomposition forward(const InterleavedSignal& signal, const FilterBank& bank);

/// Same decomposition computed step by step (split, dual lifting, primal
/// lifting); oracle for the composite Ha/Ga filters.
Decomposition forward_lifting_steps(const InterleavedSignal& signal, const FilterBank& bank);

/// Synthesis via Js (outputs on scaling slots) and Ks (detail slots).
InterleavedSignal inverse(const Decomposition& dec, const FilterBank& bank);

/// Refinement: synthesis of `scalings` (no margins) with all details zero.
/// Returns the fine samples, twice as many as the inputs.
std::vector<real> predict_refine(const std::vector<real>& scalings, const FilterBank& bank,
                                 Boundary1D boundary = Boundary1D::Periodic);

/// Overwrite the samples at the given detail slots so the details computed
/// there afterwards vanish (inverse dual lifting in 1D).
std::vector<real> substitute_1d(const std::vector<real>& fine, const FilterBank& bank,
                                const std::vector<int>& positions,
                                Boundary1D boundary = Boundary1D::Periodic);

/// Evaluate at x the polynomial through (xs[i], ys[i]) by Neville's scheme.
real neville(const std::vector<real>& xs, const std::vector<real>& ys, real x);

}  // namespace wamr

#endif
