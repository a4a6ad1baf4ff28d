#include "ncqm/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ncqm {

void OscillatorSpec::validate() const {
    if (!(omega > 0.0)) throw std::invalid_argument("oscillator omega must be > 0");
}

void LandauSpec::validate() const {
    if (!(charge * b_field > 0.0)) throw std::invalid_argument("Landau problem requires e*B > 0");
}

Frequencies oscillator_frequencies(const NCParams& p, const OscillatorSpec& s) {
    s.validate();
    const Region reg = classify_region(p);
    if (reg == Region::Critical) throw CriticalRegionError();
    const double mw2 = p.mu * p.mu * s.omega * s.omega;          // mu^2 omega^2
    const double hw2 = 4.0 * mw2 * p.hbar * p.hbar;              // 4 mu^2 omega^2 hbar^2
    const double denom = 2.0 * p.mu * p.hbar;
    if (reg == Region::SuperCritical) {
        const double sum = p.kappa + p.theta * mw2;
        const double gap = std::sqrt((p.kappa - p.theta * mw2) * (p.kappa - p.theta * mw2) + hw2);
        return {(sum + gap) / denom, (sum - gap) / denom};
    }
    if (reg == Region::NegativeKappa) {
        const double ak = -p.kappa;
        const double d = std::abs(ak - p.theta * mw2);
        const double sum = std::sqrt((ak - p.theta * mw2) * (ak - p.theta * mw2) +
                                     (1.0 + ak * p.theta / (p.hbar * p.hbar)) * hw2);
        return {(sum + d) / denom, (sum - d) / denom};
    }
    // SubCritical and the kappa -> 0 limit
    const double sum = p.kappa + p.theta * mw2;
    const double big = std::sqrt(sum * sum + hw2 * (1.0 - p.ratio()));
    return {(big + sum) / denom, (big - sum) / denom};
}

double oscillator_level(const NCParams& p, const OscillatorSpec& s, QuantaPair q) {
    if (q.n_plus < 0 || q.n_minus < 0) throw std::invalid_argument("quanta must be nonnegative");
    const Frequencies f = oscillator_frequencies(p, s);
    return p.hbar * (f.plus * (q.n_plus + 0.5) + f.minus * (q.n_minus + 0.5));
}

std::vector<OscillatorLevel> oscillator_spectrum_irrep(const NCParams& p, const OscillatorSpec& s,
                                                       const IrrepLabel& irrep, int count) {
    s.validate();
    const Region reg = classify_region(p);
    if (!irrep.admissible_for(reg)) throw IrrepRegionMismatchError();
    const double mw2 = p.mu * p.mu * s.omega * s.omega;
    std::vector<OscillatorLevel> out;
    const int l = irrep.l();
    if (irrep.family == IrrepLabel::Family::Su2) {
        const int dim = irrep.twice_label + 1;
        const int n = std::min(count, dim);
        const double gap = std::sqrt((p.kappa - p.theta * mw2) * (p.kappa - p.theta * mw2) +
                                     4.0 * mw2 * p.hbar * p.hbar);
        const double shift = (p.kappa + p.theta * mw2) / (2.0 * p.mu) * (irrep.twice_label + 1);
        for (int i = 0; i < n; ++i) {
            OscillatorLevel lv;
            lv.twice_m = -irrep.twice_label + 2 * i;
            lv.energy = 0.5 * lv.twice_m / p.mu * gap + shift;
            lv.quanta = {(irrep.twice_label + lv.twice_m) / 2, (irrep.twice_label - lv.twice_m) / 2};
            out.push_back(lv);
        }
        return out;
    }
    // Sl2 families: m = k, k+1, ...
    const bool neg = reg == Region::NegativeKappa;
    const double ak = std::abs(p.kappa);
    double slope, shift;
    int sfrak = +1;  // pairing sign between (n+ - n-) and l
    if (neg) {
        slope = std::sqrt((ak - p.theta * mw2) * (ak - p.theta * mw2) +
                          (1.0 + p.hbar * p.hbar / (p.theta * ak)) * 4.0 * ak * p.theta * mw2) / p.mu;
        shift = (ak - p.theta * mw2) / (2.0 * p.mu) * l;
        sfrak = (ak - p.theta * mw2) >= 0.0 ? +1 : -1;
    } else {
        slope = std::sqrt((p.kappa + p.theta * mw2) * (p.kappa + p.theta * mw2) +
                          4.0 * mw2 * p.hbar * p.hbar * (1.0 - p.ratio())) / p.mu;
        shift = -(p.kappa + p.theta * mw2) / (2.0 * p.mu) * l;
        sfrak = -1;
    }
    for (int i = 0; i < count; ++i) {
        OscillatorLevel lv;
        lv.twice_m = irrep.twice_label + 2 * i;
        lv.energy = 0.5 * lv.twice_m * slope + shift;
        lv.quanta = {(lv.twice_m + sfrak * l - 1) / 2, (lv.twice_m - sfrak * l - 1) / 2};
        out.push_back(lv);
    }
    return out;
}

double landau_effective_field(const NCParams& p, const LandauSpec& s) {
    s.validate();
    const double eb = s.eb();
    return s.b_field + (eb * eb * p.theta + 4.0 * p.kappa) / (4.0 * s.charge * p.hbar);
}

namespace {

double landau_gap_numerator(const NCParams& p, const LandauSpec& s) {
    const double eb = s.eb();
    return 4.0 * eb * p.hbar + eb * eb * p.theta + 4.0 * p.kappa;
}

}  // namespace

std::vector<LandauLevel> landau_spectrum(const NCParams& p, const LandauSpec& s, int level_count) {
    s.validate();
    if (classify_region(p) == Region::Critical) throw CriticalRegionError();
    const double coef = std::abs(landau_gap_numerator(p, s)) / (4.0 * p.mu);
    std::vector<LandauLevel> out;
    for (int n = 0; n < level_count; ++n) out.push_back({n, coef * (n + 0.5), "countably-infinite"});
    return out;
}

DensityOfStates landau_density_of_states(const NCParams& p, const LandauSpec& s) {
    s.validate();
    const double denom = p.hbar * p.hbar - p.theta * p.kappa;
    if (denom == 0.0) return {std::numeric_limits<double>::infinity(), true};
    return {std::abs(landau_gap_numerator(p, s) / (8.0 * std::numbers::pi * denom)), false};
}

double mean_square_radius(const NCParams& p, const LandauSpec& s, const IrrepLabel& irrep, int twice_m) {
    s.validate();
    const Region reg = classify_region(p);
    if (!irrep.admissible_for(reg)) throw IrrepRegionMismatchError();
    if (irrep.family == IrrepLabel::Family::Su2) {
        if (twice_m < -irrep.twice_label || twice_m > irrep.twice_label || (twice_m + irrep.twice_label) % 2 != 0)
            throw std::invalid_argument("m out of range for su2 irrep");
    } else if (twice_m < irrep.twice_label || (twice_m - irrep.twice_label) % 2 != 0) {
        throw std::invalid_argument("m out of range for sl2 irrep (m = k, k+1, ...)");
    }
    const double eb = s.eb();
    const double d = eb * eb * p.theta + 4.0 * eb * p.hbar + 4.0 * p.kappa;
    const double num = eb * eb * p.theta * p.theta + 4.0 * eb * p.theta * p.hbar -
                       4.0 * p.theta * p.kappa + 8.0 * p.hbar * p.hbar;
    return twice_m * num / d - p.theta * irrep.l();
}

}  // namespace ncqm
