#include "risradar/snr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "risradar/error.hpp"

namespace risradar {

namespace {

void require_split(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw ConfigError("power split must lie in [0, 1]");
    }
}

double worst_case_pd_b(double snr0, double k_st, const FluctuationModel& model, double gamma, double epsilon) {
    const WorstCaseSnrs s = worst_case_snrs_widely(DetectionCase::B, snr0, k_st, model, epsilon);
    return pd_dual_exponential(s.snr1, s.snr2, gamma);
}

}  // namespace

void FluctuationModel::validate() const {
    if (!(sigma_mean > 0.0) || !(sigma_s_mean > 0.0)) {
        throw ConfigError("mean RCS values must be positive");
    }
    if (!(sigma_bounds.min > 0.0) || !(sigma_s_bounds.min > 0.0) || sigma_bounds.min > sigma_bounds.max ||
        sigma_s_bounds.min > sigma_s_bounds.max) {
        throw ConfigError("RCS bounds must be non-empty positive intervals");
    }
    if (!sigma_bounds.contains(sigma_mean) || !sigma_s_bounds.contains(sigma_s_mean)) {
        throw ConfigError("mean RCS outside its bounds");
    }
}

double SnrReport::total() const {
    return std::accumulate(snr_values.begin(), snr_values.end(), 0.0);
}

double snr0(double alpha, double sigma_mean, double noise_power) {
    if (!(noise_power > 0.0)) {
        throw DomainError("noise power must be positive");
    }
    return alpha * alpha * sigma_mean / noise_power;
}

GainFactors gains(const LinkBudget& budget) {
    if (!(budget.alpha > 0.0)) {
        throw DomainError("direct amplitude is zero; gains undefined");
    }
    const double sr = budget.alpha_sr_sum() / budget.alpha;
    const double st = budget.alpha_st_sum() / budget.alpha;
    return {sr * sr, st * st};
}

GainFactors gains_from_geometry(const Scene& scene, const LinkBudget& budget) {
    const DerivedGeometry& d = scene.derived;
    if (!(budget.gain_target > 0.0)) {
        throw DomainError("radar gain toward the target is zero; gains undefined");
    }
    double sum_sr = 0.0;
    double sum_st = 0.0;
    for (std::size_t l = 0; l < d.d_r_l.size(); ++l) {
        sum_sr += std::sqrt(budget.gain_ris[l] * budget.rcs_sr[l]) / d.d_r_l[l];
        sum_st += std::sqrt(budget.gain_ris[l] * budget.rcs_st[l]) / d.d_r_l[l];
    }
    const double scale = d.rho * d.rho / (4.0 * kPi * d.d_t * d.d_t * budget.gain_target);
    return {scale * sum_sr * sum_sr, scale * sum_st * sum_st};
}

SnrReport snr_closely(DetectionCase c, double snr0, const GainFactors& k, double epsilon) {
    require_split(epsilon);
    SnrReport r;
    r.snr0 = snr0;
    r.detection_case = c;
    r.regime = SpacingRegime::Closely;
    r.epsilon = epsilon;
    switch (c) {
        case DetectionCase::A:
            r.epsilon = 1.0;
            r.snr_values = {snr0, snr0 * k.k_sr};
            break;
        case DetectionCase::B:
            r.snr_values = {epsilon * snr0, (1.0 - epsilon) * snr0 * k.k_st};
            break;
        case DetectionCase::C: {
            const double amp = std::sqrt(epsilon) + std::sqrt(k.k_st) * std::sqrt(1.0 - epsilon);
            r.snr_values = {snr0 * amp * amp};
            break;
        }
    }
    return r;
}

double optimal_split_closely(DetectionCase c, double k_st) {
    if (!(k_st >= 0.0)) {
        throw DomainError("K_st must be non-negative");
    }
    switch (c) {
        case DetectionCase::A: throw ConfigError("Case a has a single transmit beam; there is no power split");
        case DetectionCase::B: return k_st <= 1.0 ? 1.0 : 0.0;
        case DetectionCase::C: return 1.0 / (1.0 + k_st);
    }
    throw ConfigError("unknown case");
}

SnrReport snr_widely(DetectionCase c, double snr0, const GainFactors& k, double epsilon, double sigma_mean,
                     double sigma_s_mean) {
    require_split(epsilon);
    if (!(sigma_mean > 0.0)) {
        throw DomainError("mean radar-side RCS must be positive");
    }
    const double ratio = sigma_s_mean / sigma_mean;
    SnrReport r;
    r.snr0 = snr0;
    r.detection_case = c;
    r.regime = SpacingRegime::Widely;
    r.epsilon = epsilon;
    switch (c) {
        case DetectionCase::A:
            r.epsilon = 1.0;
            r.snr_values = {snr0, snr0 * k.k_sr * ratio};
            break;
        case DetectionCase::B:
            r.snr_values = {epsilon * snr0, (1.0 - epsilon) * snr0 * k.k_st * ratio};
            break;
        case DetectionCase::C:
            // Independent uniform phases make the cross term vanish in expectation.
            r.snr_values = {epsilon * snr0 + (1.0 - epsilon) * snr0 * k.k_st * ratio};
            break;
    }
    return r;
}

WorstCaseSnrs worst_case_snrs_widely(DetectionCase c, double snr0, double k_st, const FluctuationModel& model,
                                     double epsilon) {
    require_split(epsilon);
    // snr0 is quoted at the nominal mean; rescale to the lower bounds.
    const double per_sigma = snr0 / model.sigma_mean;
    const double s1 = epsilon * per_sigma * model.sigma_bounds.min;
    const double s2 = (1.0 - epsilon) * per_sigma * k_st * model.sigma_s_bounds.min;
    if (c == DetectionCase::C) {
        return {s1 + s2, 0.0};
    }
    return {s1, s2};
}

double optimal_split_widely(DetectionCase c, double snr0, double k_st, const FluctuationModel& model,
                            double gamma) {
    model.validate();
    if (!(k_st >= 0.0)) {
        throw DomainError("K_st must be non-negative");
    }
    switch (c) {
        case DetectionCase::A:
            throw ConfigError("Case a has a single transmit beam; there is no power split");
        case DetectionCase::C:
            return k_st * model.sigma_s_bounds.min / model.sigma_bounds.min <= 1.0 ? 1.0 : 0.0;
        case DetectionCase::B:
            break;
    }
    if (model.law != FluctuationLaw::Exponential) {
        throw UnsupportedError("worst-case Case-b split needs the dual-observation closed form (exponential law only)");
    }
    const auto objective = [&](double e) { return worst_case_pd_b(snr0, k_st, model, gamma, e); };

    constexpr int kGrid = 1000;
    double best_eps = 0.0;
    double best = objective(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        const double e = static_cast<double>(i) / kGrid;
        const double v = objective(e);
        if (v > best) {
            best = v;
            best_eps = e;
        }
    }

    // Golden-section refinement inside the neighbouring grid cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::max(0.0, best_eps - 1.0 / kGrid);
    double hi = std::min(1.0, best_eps + 1.0 / kGrid);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    for (int iter = 0; iter < 60; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }
    const double refined = 0.5 * (lo + hi);
    return objective(refined) > best + 1e-14 ? refined : best_eps;
}

double snr_c_widely_at_optimum(double snr0, double k_st, const FluctuationModel& model) {
    const double test = k_st * model.sigma_s_bounds.min / model.sigma_bounds.min;
    const double low = test <= 1.0 ? 1.0 : 0.0;
    const double high = test >= 1.0 ? 1.0 : 0.0;
    if (low > 0.0 && high > 0.0) {
        // Both indicators fire on the boundary; either split gives the same worst case.
        return snr0;
    }
    return snr0 * (low + high * k_st * model.sigma_s_mean / model.sigma_mean);
}

ApproximationInputs approximation_inputs(const Scene& scene, const SquareArrayAntenna& toward_ris) {
    const ScenarioGeometry& g = scene.geometry;
    const DerivedGeometry& d = scene.derived;
    const double count = static_cast<double>(g.element_count());
    const double half = g.wavelength / 2.0;
    const AzEl radar = direction_angles(g.ris_frame, g.radar_position - g.ris_center);
    const AzEl target = d.angles_target;
    ApproximationInputs in;
    in.a_sr = count * half * half * std::cos(radar.azimuth) * std::cos(radar.elevation);
    in.g_st = count * kPi * std::cos(target.azimuth) * std::cos(target.elevation);
    in.a_rs = footprint_area(toward_ris, d.d_r);
    return in;
}

double approx_gain(double rho, double d_t, double gain_target, const ApproximationInputs& in) {
    if (!(in.a_sr > 0.0) || !(in.a_rs > 0.0)) {
        throw DomainError("approximation areas must be positive");
    }
    if (!(d_t > 0.0) || !(gain_target > 0.0)) {
        throw DomainError("d_t and G_rt must be positive");
    }
    const double fill = std::min(in.a_sr / in.a_rs, in.a_rs / in.a_sr);
    return rho * rho * in.g_st / (d_t * d_t * gain_target) * fill;
}

double indirect_radar_equation_snr(double transmit_power, double gain_target, double gain_ris_target,
                                   double wavelength, double rho, double d_t, double sigma_mean,
                                   double noise_power) {
    const double four_pi = 4.0 * kPi;
    return transmit_power * gain_target * gain_ris_target * wavelength * wavelength * sigma_mean /
           (four_pi * four_pi * four_pi * rho * rho * d_t * d_t * noise_power);
}

double to_db(double linear) {
    return 10.0 * std::log10(linear);
}

double from_db(double db) {
    return std::pow(10.0, db / 10.0);
}

}  // namespace risradar
