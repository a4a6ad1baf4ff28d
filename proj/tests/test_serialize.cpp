#include <doctest.h>

#include "ncqm/serialize.hpp"

using namespace ncqm;

TEST_CASE("irrep labels round-trip through json with p/2 labels") {
    for (const IrrepLabel& ir : {IrrepLabel::sl2(1, +1), IrrepLabel::sl2(4, -1), IrrepLabel::sl2(3, +1),
                                 IrrepLabel::su2(0), IrrepLabel::su2(5)}) {
        const Json j = to_json(ir);
        CHECK(irrep_from_json(j) == ir);
    }
    const Json half = to_json(IrrepLabel::sl2(3, -1));
    CHECK(half.at("k") == "3/2");
    CHECK(half.at("l") == -2);
    const Json whole = to_json(IrrepLabel::su2(4));
    CHECK(whole.at("j") == "2");
    CHECK(whole.at("l") == -5);
}

TEST_CASE("spectrum and well rows round-trip") {
    SpectrumRow s{"sub-critical", IrrepLabel::sl2(2, -1), 5, {1, 2}, 3.25};
    CHECK(spectrum_row_from_json(to_json(s)) == s);
    WellRow w{"super-critical", IrrepLabel::su2(3), 2, 0.75, "bound"};
    CHECK(well_row_from_json(to_json(w)) == w);
}

TEST_CASE("csv output shape") {
    const std::string csv = csv_spectrum({{"zero-kappa", IrrepLabel::sl2(1, +1), 1, {0, 0}, 1.0}});
    CHECK(csv.substr(0, csv.find('\n')) == "region,irrep,m,n_plus,n_minus,energy");
    // exactly six fields per row: the irrep string must not embed commas
    const std::string rowline = csv.substr(csv.find('\n') + 1);
    CHECK(std::count(rowline.begin(), rowline.end(), ',') == 5);
    CHECK(csv_wells({}).find("region,k_or_j,s,l,index,energy,kind") == 0);
    CHECK(csv_checks({}).find("check,region,cutoff,residual,tolerance,pass") == 0);
}

TEST_CASE("format_double is locale-free shortest round-trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("document envelope carries the schema version") {
    const Json doc = document("landau", {1.0, 0.5, 1.0, 1.0}, Json::array());
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("params").at("kappa") == 0.5);
}

TEST_CASE("well table renderer") {
    const std::string table = render_well_table(
        {{"sub-critical", IrrepLabel::sl2(1, +1), 0, 0.5857864376269049, "bound"},
         {"sub-critical", IrrepLabel::sl2(1, +1), 1, 3.4142135623730945, "bound"}});
    CHECK(table.find("sl2(k=1/2;l=0)") != std::string::npos);
    CHECK(table.find("0.585786") != std::string::npos);
    CHECK(table.find("bound") != std::string::npos);
}
