#pragma once

#include <string>
#include <vector>

#include "ncqm/irreps.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

struct OscillatorSpec {
    double omega = 1.0;  // > 0
    void validate() const;
};

struct LandauSpec {
    double b_field = 1.0;  // magnetic field B
    double charge = 1.0;   // e; convention e*B > 0
    void validate() const;
    double eb() const { return charge * b_field; }
};

struct QuantaPair {
    int n_plus = 0;
    int n_minus = 0;
    friend bool operator==(const QuantaPair&, const QuantaPair&) = default;
};

struct Frequencies {
    double plus = 0.0;   // Omega_+ >= Omega_- > 0
    double minus = 0.0;
};

// Normal-mode frequencies of the isotropic oscillator; the spectrum is that of
// two uncoupled oscillators E = hbar O+ (n+ + 1/2) + hbar O- (n- + 1/2).
Frequencies oscillator_frequencies(const NCParams& p, const OscillatorSpec& s);

double oscillator_level(const NCParams& p, const OscillatorSpec& s, QuantaPair q);

struct OscillatorLevel {
    int twice_m = 0;      // eigenvalue of G0/G3 within the irrep, doubled
    double energy = 0.0;
    QuantaPair quanta;
};

// Spectrum inside one irrep, lowest `count` values of m (Su2: capped at 2j+1).
// Energies come from the per-region closed forms; quanta from the bijections.
std::vector<OscillatorLevel> oscillator_spectrum_irrep(const NCParams& p, const OscillatorSpec& s,
                                                       const IrrepLabel& irrep, int count);

// B + (B^2 e^2 theta + 4 kappa)/(4 e hbar)
double landau_effective_field(const NCParams& p, const LandauSpec& s);

struct LandauLevel {
    int n = 0;
    double energy = 0.0;
    std::string degeneracy = "countably-infinite";
};

// E_n = |4 B e hbar + B^2 e^2 theta + 4 kappa| / (4 mu) * (n + 1/2)
std::vector<LandauLevel> landau_spectrum(const NCParams& p, const LandauSpec& s, int level_count);

struct DensityOfStates {
    double value = 0.0;
    bool divergent = false;  // critical point: reported, not an error
};

// rho = |(4 B e hbar + B^2 e^2 theta + 4 kappa)/(8 pi (hbar^2 - theta kappa))|
DensityOfStates landau_density_of_states(const NCParams& p, const LandauSpec& s);

// <x^2> in the Landau eigenvector labeled by (irrep, m):
//   2m (B^2 e^2 theta^2 + 4 B e theta hbar - 4 theta kappa + 8 hbar^2)/D - theta*l,
//   D = B^2 e^2 theta + 4 B e hbar + 4 kappa.
// One rational expression covers every region (grows linearly in j resp. k
// within a fixed Landau level).
double mean_square_radius(const NCParams& p, const LandauSpec& s, const IrrepLabel& irrep, int twice_m);

}  // namespace ncqm
