#pragma once

#include "skewsym/normal_form.hpp"
#include "skewsym/skew_product.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace skewsym {

enum class PhiStatus { Converged, Degenerate, Truncated };

struct PhiResult {
    double value = 0.0;
    PhiStatus status = PhiStatus::Converged;
    int terms_used = 0;
};

struct FiberGreen {
    double value = 0.0;
    bool phi_degenerate = false; // base orbit came near a root of b_d
};

/// Floating-point evaluator for the Green functions of a skew product:
/// G_p on the base, the fiberwise G_z, the series Phi and the fiberwise
/// Bottcher coordinate. Immutable after construction, safe to share.
class GreenEvaluator {
public:
    explicit GreenEvaluator(const SkewProduct& f, int n_max = 256, double tol = 1e-12)
        : f_(f), n_max_(n_max), tol_(tol) {
        delta_ = f.delta;
        d_ = f.d;
        a_lead_ = f.p.leading().to_complex();
        // escape radius for the base: past this, |p| at least doubles
        double sum = 0.0;
        for (auto& [j, c] : f.p.terms()) sum += std::abs(c.to_complex());
        base_escape_ = std::max(2.0, 2.0 * (1.0 + sum) / std::abs(a_lead_));
        // base orbits of Julia-set points lose all radial accuracy after
        // roughly delta^n * eps ~ 1: degeneracy seen past this index is
        // indistinguishable from float drift and is not flagged
        trust_horizon_ = std::max(8, int(40.0 / std::log(double(delta_))));
    }

    const SkewProduct& map() const { return f_; }
    int iteration_cap() const { return n_max_; }
    double tolerance() const { return tol_; }
    double base_escape_radius() const { return base_escape_; }

    /// Escape radius for the fiber over z: |w| beyond it guarantees
    /// |q_z(w)| >= 2|w|.
    double fiber_escape_radius(const Cplx& z) const {
        double lead = std::abs(f_.b[d_].evaluate(z));
        double sum = 0.0;
        for (int j = 0; j < d_; ++j) sum += std::abs(f_.b[j].evaluate(z));
        if (lead < 1e-300) return 1e300;
        double r = (2.0 + sum) / lead;
        if (d_ > 2) r = std::pow(r, 1.0 / double(d_ - 1));
        return std::max(2.0, r);
    }

    /// G_p(z) = lim delta^{-n} log+ |p^n(z)|.
    double green_base(Cplx z) const {
        double scale = 1.0;
        for (int n = 0; n < 4 * n_max_; ++n) {
            double az = std::abs(z);
            if (az > 1e12) {
                // G_p = log|z| + log|a_delta|/(delta-1) + O(1/z) out here
                return (std::log(az) + std::log(std::abs(a_lead_)) / double(delta_ - 1)) * scale;
            }
            if (n >= n_max_ && az <= base_escape_) return 0.0;
            z = f_.p.evaluate(z);
            scale /= double(delta_);
        }
        return 0.0;
    }

    /// G_z(w) = lim d^{-n} log+ |Q_z^n(w)|, with the tail of the
    /// telescoped series bounded by the observed size of log|b_d| along
    /// the base orbit.
    FiberGreen green_fiber(Cplx z, Cplx w) const {
        FiberGreen out;
        int k = 0;
        bool escaped = false;
        for (; k < n_max_; ++k) {
            double bd = std::abs(f_.b[d_].evaluate(z));
            if (bd < 1e-13 && k <= trust_horizon_) out.phi_degenerate = true;
            // past 1e10 the neglected lower-order terms contribute less
            // than ~1e-9 to the telescoped series
            if (std::abs(w) > 1e10 && std::abs(w) > fiber_escape_radius(z)) {
                escaped = true;
                break;
            }
            w = f_.q.evaluate(z, w);
            z = f_.p.evaluate(z);
        }
        if (!escaped) return out; // bounded at cap: G = 0
        double dk = std::pow(double(d_), double(-k));
        double acc = dk * std::log(std::abs(w));
        // tail: sum_{j>=k} d^{-(j+1)} log|b_d(z_j)|
        double weight = dk / double(d_);
        double bmax = 1e-6;
        for (int j = 0; j < 8 * n_max_; ++j) {
            double bd = std::abs(f_.b[d_].evaluate(z));
            if (bd < 1e-13) {
                if (k + j <= trust_horizon_) out.phi_degenerate = true;
                break;
            }
            double lb = std::log(bd);
            bmax = std::max(bmax, std::abs(lb));
            acc += weight * lb;
            weight /= double(d_);
            if (weight * bmax * double(d_) / double(d_ - 1) < tol_) break;
            z = f_.p.evaluate(z);
            if (std::abs(z) > 1e100) break;
        }
        out.value = std::max(0.0, acc);
        return out;
    }

    /// Phi(z) = sum d^{-(n+1)} log |b_d(p^n(z))|.
    PhiResult phi_sum(Cplx z, int cap = 0) const {
        if (cap <= 0) cap = 8 * n_max_;
        PhiResult out;
        double weight = 1.0 / double(d_);
        double acc = 0.0;
        double bmax = 1e-6;
        int n = 0;
        for (; n < cap; ++n) {
            double bd = std::abs(f_.b[d_].evaluate(z));
            if (bd == 0.0 && n <= trust_horizon_) {
                out.value = -std::numeric_limits<double>::infinity();
                out.status = PhiStatus::Degenerate;
                out.terms_used = n + 1;
                return out;
            }
            if (bd == 0.0) break;
            if (bd < 1e-13 && n <= trust_horizon_) out.status = PhiStatus::Degenerate;
            double lb = std::log(bd);
            bmax = std::max(bmax, std::abs(lb));
            acc += weight * lb;
            weight /= double(d_);
            if (weight * bmax * double(d_) / double(d_ - 1) < tol_) {
                out.value = acc;
                if (out.status != PhiStatus::Degenerate) out.status = PhiStatus::Converged;
                out.terms_used = n + 1;
                return out;
            }
            z = f_.p.evaluate(z);
            if (std::abs(z) > 1e100) break;
        }
        out.value = acc;
        if (out.status != PhiStatus::Degenerate) out.status = PhiStatus::Truncated;
        out.terms_used = n;
        return out;
    }

    /// Fiberwise Bottcher coordinate phi_z(w), by the telescoping product
    ///   phi_z(w) = w * prod_n (1 + r_n)^{1/d^{n+1}},
    /// where q_{z_n}(w_n) = b_d(z_n) w_n^d (1 + r_n). Each factor takes the
    /// principal branch; r_n is computed from 1/w_n so nothing overflows.
    Cplx bottcher_fiber(Cplx z, Cplx w) const {
        Cplx log_acc = 0.0;
        Cplx u = 1.0 / w; // 1/w_n
        double weight = 1.0 / double(d_);
        for (int n = 0; n < 4 * n_max_; ++n) {
            Cplx bd = f_.b[d_].evaluate(z);
            if (std::abs(bd) < 1e-13 && n <= trust_horizon_) throw error("phi-degenerate orbit");
            if (std::abs(bd) < 1e-300) break;
            Cplx r = 0.0;
            Cplx upow = u; // u^{d-j} for j = d-1 down to 0
            for (int j = d_ - 1; j >= 0; --j) {
                r += f_.b[j].evaluate(z) / bd * upow;
                upow *= u;
            }
            if (std::abs(r) > 0.5) throw error("shrink to larger |w|");
            if (std::abs(r) < 1e-18) break;
            log_acc += weight * std::log(Cplx(1.0) + r);
            weight /= double(d_);
            u = (u * u) * ((d_ > 2) ? my_pow(u, d_ - 2) : Cplx(1.0)) / (bd * (Cplx(1.0) + r));
            z = f_.p.evaluate(z);
        }
        return w * std::exp(log_acc);
    }

private:
    static Cplx my_pow(Cplx v, int e) {
        Cplx r = 1.0;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    }

    SkewProduct f_;
    int n_max_;
    double tol_;
    int delta_ = 0, d_ = 0;
    Cplx a_lead_;
    double base_escape_ = 2.0;
    int trust_horizon_ = 40;
};

} // namespace skewsym
