#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncqm/fock.hpp"
#include "ncqm/irreps.hpp"
#include "ncqm/models.hpp"
#include "ncqm/solver.hpp"
#include "ncqm/wells.hpp"

namespace ncqm {

using Json = nlohmann::json;

// shortest round-trip decimal, '.'-separated, locale-free
std::string format_double(double v);

Json to_json(const IrrepLabel& irrep);           // {"family","j"|"k" as "p/2","l"}
IrrepLabel irrep_from_json(const Json& j);

Json to_json(const ResidualCheck& check);
Json to_json(const NCParams& p);

struct SpectrumRow {
    std::string region;
    IrrepLabel irrep;
    int twice_m = 0;
    QuantaPair quanta;
    double energy = 0.0;
    friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

struct WellRow {
    std::string region;
    IrrepLabel irrep;
    int index = 0;
    double energy = 0.0;
    std::string kind = "bound";  // bound | continuum-marker
    friend bool operator==(const WellRow&, const WellRow&) = default;
};

Json to_json(const SpectrumRow& row);
SpectrumRow spectrum_row_from_json(const Json& j);
Json to_json(const WellRow& row);
WellRow well_row_from_json(const Json& j);

// per-irrep solver result: irrep, truncation, eigenvalues, converged flags
Json to_json(const SpectrumResult& res);

// fixed-width terminal rendering of a well/spectrum table
std::string render_well_table(const std::vector<WellRow>& rows);

std::string csv_spectrum(const std::vector<SpectrumRow>& rows);
std::string csv_wells(const std::vector<WellRow>& rows);
std::string csv_checks(const std::vector<ResidualCheck>& rows);
std::string csv_xy(const std::vector<std::pair<double, double>>& rows, const std::string& xname,
                   const std::string& yname);

// single object with "schema_version": 1
Json document(const std::string& command, const NCParams& p, Json rows);

void write_file(const std::string& path, const std::string& content);  // IoError on failure

}  // namespace ncqm
