#include "wamr/wavelets.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

namespace wamr {

namespace {

// Exact rational arithmetic for filter construction. All coefficients here
// have denominators that are small powers of two, so int64 never overflows.
struct Rat {
    int64_t num = 0, den = 1;

    Rat() = default;
    Rat(int64_t n, int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(std::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator-() const { return Rat(-num, den); }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// sparse filter over integer offsets
using RatFilter = std::map<int, Rat>;

Filter materialize(const RatFilter& f) {
    Filter out;
    if (f.empty()) return out;
    out.lo = f.begin()->first;
    int hi = f.rbegin()->first;
    out.w.assign(hi - out.lo + 1, 0.0);
    for (const auto& [off, r] : f) out.w[off - out.lo] = r.value();
    return out;
}

// Dual-lifting rows S̃_i, i in [1-N/2, N/2] (symmetric).
std::vector<Rat> stilde_rational(int n) {
    switch (n) {
        case 2: return {Rat(-1, 2), Rat(-1, 2)};
        case 4: return {Rat(1, 16), Rat(-9, 16), Rat(-9, 16), Rat(1, 16)};
        case 6:
            return {Rat(-3, 256), Rat(25, 256), Rat(-75, 128),
                    Rat(-75, 128), Rat(25, 256), Rat(-3, 256)};
        default: throw UnsupportedWavelet("dual-lifting coefficients: N must be 2, 4 or 6");
    }
}

}  // namespace

void WaveletSpec::validate() const {
    if (!(n == 2 || n == 4 || n == 6) || !(ntilde == 0 || ntilde == 2) || ntilde > n)
        throw UnsupportedWavelet("wavelet " + std::to_string(n) + "." + std::to_string(ntilde) +
                                 " is not supported (N in {2,4,6}, Ñ in {0,2}, Ñ <= N)");
}

std::vector<real> dual_lift_coefficients(int n) {
    std::vector<real> out;
    for (const Rat& r : stilde_rational(n)) out.push_back(r.value());
    return out;
}

FilterBank build_filter_bank(const WaveletSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const int nt = spec.ntilde;

    // S̃ over coarse offsets i in [1-N/2, N/2]; S = -S̃^(Ñ)/2 over j in [-Ñ/2, Ñ/2-1]
    const std::vector<Rat> st = stilde_rational(n);
    const int st_lo = 1 - n / 2;
    std::vector<Rat> sl;
    int sl_lo = 0;
    if (nt > 0) {
        for (const Rat& r : stilde_rational(nt)) sl.push_back(-(r * Rat(1, 2)));
        sl_lo = -nt / 2;
    }

    // Ga = δ_0 + Σ_i S̃_i δ_(2i-1): detail at odd fine index 2m+1 from the
    // split + dual-lifting steps
    RatFilter ga;
    ga[0] = Rat(1);
    for (size_t i = 0; i < st.size(); ++i) ga[2 * (st_lo + static_cast<int>(i)) - 1] = st[i];

    // Ha = δ_0 + Σ_j S_j Ga(· - (2j+1)): primal lifting folded onto the fine signal
    RatFilter ha;
    ha[0] = Rat(1);
    for (size_t j = 0; j < sl.size(); ++j) {
        const int shift = 2 * (sl_lo + static_cast<int>(j)) + 1;
        for (const auto& [off, r] : ga) ha[shift + off] = ha[shift + off] + sl[j] * r;
    }

    // Js: even synthesis output λ^{L+1}_{2k} = λ_k - Σ_j S_j γ_{k+j}
    RatFilter js;
    js[0] = Rat(1);
    for (size_t j = 0; j < sl.size(); ++j) js[2 * (sl_lo + static_cast<int>(j)) + 1] = -sl[j];

    // Ks: odd synthesis output λ^{L+1}_{2m+1} = γ_m + Σ_i (-S̃_i) λ'_{m+i},
    // with λ' the inverse-primal-lifted scalings
    RatFilter ks;
    ks[0] = Rat(1);
    for (size_t i = 0; i < st.size(); ++i) {
        const int li = 2 * (st_lo + static_cast<int>(i)) - 1;  // slot of λ_{m+i}
        ks[li] = ks[li] + (-st[i]);
        for (size_t j = 0; j < sl.size(); ++j) {
            const int off = li + 2 * (sl_lo + static_cast<int>(j)) + 1;
            ks[off] = ks[off] + st[i] * sl[j];
        }
    }

    // drop exact zeros produced by cancellation at the support ends
    for (auto* f : {&ha, &ga, &js, &ks}) {
        for (auto it = f->begin(); it != f->end();) {
            if (it->second.num == 0 && (it->first == f->begin()->first || it->first == f->rbegin()->first))
                it = f->erase(it);
            else
                ++it;
        }
    }

    FilterBank bank;
    bank.spec = spec;
    bank.ha = materialize(ha);
    bank.ga = materialize(ga);
    bank.js = materialize(js);
    bank.ks = materialize(ks);

    bank.stilde.lo = st_lo;
    for (const Rat& r : st) bank.stilde.w.push_back(r.value());
    bank.s.lo = sl_lo;
    for (const Rat& r : sl) bank.s.w.push_back(r.value());

    // prediction weights = -S̃ (Deslauriers-Dubuc interpolation)
    bank.prediction.lo = st_lo;
    for (const Rat& r : st) bank.prediction.w.push_back((-r).value());

    bank.req = ghost_requirements(spec);
    return bank;
}

GhostRequirement ghost_requirements(const WaveletSpec& spec) {
    spec.validate();
    GhostRequirement r;
    const int key = spec.n * 10 + spec.ntilde;
    switch (key) {
        case 20: r = {0, 0, 0, 1, 0, 1, 0, 1}; break;
        case 22: r = {2, 1, 1, 2, 2, 3, 0, 1}; break;
        case 40: r = {0, 0, 2, 3, 4, 5, 1, 2}; break;
        case 42: r = {4, 3, 3, 4, 6, 7, 1, 2}; break;
        case 60: r = {0, 0, 4, 5, 8, 9, 2, 3}; break;
        case 62: r = {6, 5, 5, 6, 10, 11, 2, 3}; break;
        default: throw UnsupportedWavelet("no ghost requirement row for this family");
    }
    return r;
}

}  // namespace wamr
