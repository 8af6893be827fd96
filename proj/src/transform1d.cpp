#include "wamr/transform1d.hpp"

#include <algorithm>

namespace wamr {

real neville(const std::vector<real>& xs, const std::vector<real>& ys, real x) {
    std::vector<real> p = ys;
    const int n = static_cast<int>(p.size());
    for (int lvl = 1; lvl < n; ++lvl) {
        for (int i = 0; i < n - lvl; ++i) {
            p[i] = ((x - xs[i + lvl]) * p[i] + (xs[i] - x) * p[i + 1]) / (xs[i] - xs[i + lvl]);
        }
    }
    return p[0];
}

namespace {

// signal accessor with boundary handling; extrapolation uses the N nearest
// samples of the respective end
struct ExtView {
    const std::vector<real>& u;
    Boundary1D boundary;
    int order;

    real operator()(int i) const {
        const int n = static_cast<int>(u.size());
        if (i >= 0 && i < n) return u[i];
        if (boundary == Boundary1D::Periodic) return u[mod_floor(i, n)];
        std::vector<real> xs(order), ys(order);
        const int base = (i < 0) ? 0 : n - order;
        for (int t = 0; t < order; ++t) {
            xs[t] = static_cast<real>(base + t);
            ys[t] = u[base + t];
        }
        return neville(xs, ys, static_cast<real>(i));
    }
};

int widest_support(const FilterBank& bank) {
    int w = 0;
    for (const Filter* f : {&bank.ha, &bank.ga, &bank.js, &bank.ks}) w = std::max(w, f->reach());
    return w;
}

}  // namespace

int coeff_margin(const FilterBank& bank, Boundary1D boundary) {
    if (boundary == Boundary1D::Periodic) return 0;
    const int syn_reach = std::max(bank.js.reach(), bank.ks.reach());
    return (syn_reach + 1) / 2;
}

Decomposition forward(const InterleavedSignal& signal, const FilterBank& bank) {
    const int n = static_cast<int>(signal.values.size());
    check(n % 2 == 0, "forward: signal length must be even");
    if (signal.boundary == Boundary1D::Periodic)
        check(n >= 2 * widest_support(bank), "forward: signal too short for the filter support");
    else
        check(n >= bank.spec.n, "forward: signal too short to extrapolate at order N");

    const int k = n / 2;
    const int p = signal.scaling_parity;
    const int m = coeff_margin(bank, signal.boundary);
    const ExtView u{signal.values, signal.boundary, bank.spec.n};

    Decomposition dec;
    dec.margin = m;
    dec.scaling_parity = p;
    dec.boundary = signal.boundary;
    dec.scalings.resize(k + 2 * m);
    dec.details.resize(k + 2 * m);
    for (int i = -m; i < k + m; ++i) {
        const int cs = 2 * i + p;      // scaling slot
        const int cd = 2 * i + 1 - p;  // detail slot
        real lam = 0.0, gam = 0.0;
        for (int o = bank.ha.lo; o <= bank.ha.hi(); ++o) lam += bank.ha.w[o - bank.ha.lo] * u(cs + o);
        for (int o = bank.ga.lo; o <= bank.ga.hi(); ++o) gam += bank.ga.w[o - bank.ga.lo] * u(cd + o);
        dec.scalings[i + m] = lam;
        dec.details[i + m] = gam;
    }
    return dec;
}

Decomposition forward_lifting_steps(const InterleavedSignal& signal, const FilterBank& bank) {
    const int n = static_cast<int>(signal.values.size());
    check(n % 2 == 0, "forward_lifting_steps: signal length must be even");
    const int k = n / 2;
    const int p = signal.scaling_parity;
    const int m = coeff_margin(bank, signal.boundary);
    const ExtView u{signal.values, signal.boundary, bank.spec.n};

    // split: λ_i = u[2i+p], γ_i = u[2i+1+p], over the margin-extended range
    const int lo = -m - bank.spec.n;  // slack so lifting stencils stay inside
    const int hi = k + m + bank.spec.n;
    const int len = hi - lo;
    std::vector<real> lam(len), gam(len);
    for (int i = lo; i < hi; ++i) {
        lam[i - lo] = u(2 * i + p);
        gam[i - lo] = u(2 * i + 1 - p);
    }
    // dual lifting: γ_i += Σ S̃_j λ_{i+j}, over every index the primal step reads
    const int dl_reach = std::max(-bank.stilde.lo, bank.stilde.hi());
    std::vector<real> gam2 = gam;
    for (int i = lo + dl_reach; i < hi - dl_reach; ++i) {
        real acc = gam[i - lo];
        for (int j = bank.stilde.lo; j <= bank.stilde.hi(); ++j)
            acc += bank.stilde.w[j - bank.stilde.lo] * lam[i + j - lo];
        gam2[i - lo] = acc;
    }
    // primal lifting: λ_i += Σ S_j γ_{i+j}
    Decomposition dec;
    dec.margin = m;
    dec.scaling_parity = p;
    dec.boundary = signal.boundary;
    dec.scalings.resize(k + 2 * m);
    dec.details.resize(k + 2 * m);
    for (int i = -m; i < k + m; ++i) {
        real acc = lam[i - lo];
        for (int j = bank.s.lo; j <= bank.s.hi(); ++j)
            acc += bank.s.w[j - bank.s.lo] * gam2[i + j - lo];
        dec.scalings[i + m] = acc;
        dec.details[i + m] = gam2[i - lo];
    }
    return dec;
}

InterleavedSignal inverse(const Decomposition& dec, const FilterBank& bank) {
    check(dec.scalings.size() == dec.details.size(), "inverse: length mismatch");
    const int m = dec.margin;
    const int k = static_cast<int>(dec.scalings.size()) - 2 * m;
    check(k > 0, "inverse: empty decomposition");
    const int p = dec.scaling_parity;

    // interleaved coefficient array over fine indices [-2m, 2k+2m)
    const int ivlo = -2 * m;
    std::vector<real> iv(2 * k + 4 * m);
    for (int i = -m; i < k + m; ++i) {
        iv[2 * i + p - ivlo] = dec.scalings[i + m];
        iv[2 * i + 1 - p - ivlo] = dec.details[i + m];
    }
    auto at = [&](int j) -> real {
        if (dec.boundary == Boundary1D::Periodic) return iv[mod_floor(j, 2 * k) - ivlo];
        return iv[j - ivlo];
    };

    InterleavedSignal out;
    out.scaling_parity = p;
    out.boundary = dec.boundary;
    out.values.resize(2 * k);
    for (int j = 0; j < 2 * k; ++j) {
        const bool scaling_slot = ((j & 1) == p);
        const Filter& f = scaling_slot ? bank.js : bank.ks;
        real acc = 0.0;
        for (int o = f.lo; o <= f.hi(); ++o) acc += f.w[o - f.lo] * at(j + o);
        out.values[j] = acc;
    }
    return out;
}

std::vector<real> predict_refine(const std::vector<real>& scalings, const FilterBank& bank,
                                 Boundary1D boundary) {
    const int k = static_cast<int>(scalings.size());
    check(k > 0, "predict_refine: empty input");
    const ExtView lam{scalings, boundary, bank.spec.n};

    std::vector<real> fine(2 * k);
    for (int i = 0; i < k; ++i) {
        fine[2 * i] = lam(i);  // Js reduces to the identity when details vanish
        real acc = 0.0;
        for (int t = bank.prediction.lo; t <= bank.prediction.hi(); ++t)
            acc += bank.prediction.w[t - bank.prediction.lo] * lam(i + t);
        fine[2 * i + 1] = acc;
    }
    return fine;
}

std::vector<real> substitute_1d(const std::vector<real>& fine, const FilterBank& bank,
                                const std::vector<int>& positions, Boundary1D boundary) {
    const int n = static_cast<int>(fine.size());
    std::vector<real> out = fine;
    const ExtView u{fine, boundary, bank.spec.n};
    for (int pos : positions) {
        check(pos >= 0 && pos < n, "substitute_1d: position out of range");
        check(pos % 2 == 1, "substitute_1d: positions must be detail (odd) slots");
        real acc = 0.0;
        for (int o = bank.ga.lo; o <= bank.ga.hi(); ++o) {
            if (o == 0) continue;
            acc += bank.ga.w[o - bank.ga.lo] * u(pos + o);
        }
        out[pos] = -acc;  // Ga center tap is 1
    }
    return out;
}

}  // namespace wamr
