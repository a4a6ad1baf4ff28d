#include "ncqm/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ncqm {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string half_string(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

int parse_half(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        const double v = std::stod(s);
        const double tw = 2.0 * v;
        if (std::abs(tw - std::llround(tw)) > 1e-9)
            throw std::invalid_argument("label must be an integer or half-integer: " + s);
        return int(std::llround(tw));
    }
    const int num = std::stoi(s.substr(0, slash));
    const int den = std::stoi(s.substr(slash + 1));
    if (den == 2) return num;
    if (den == 1) return 2 * num;
    throw std::invalid_argument("label denominator must be 1 or 2: " + s);
}

}  // namespace

Json to_json(const IrrepLabel& irrep) {
    Json j;
    if (irrep.family == IrrepLabel::Family::Su2) {
        j["family"] = "su2";
        j["j"] = half_string(irrep.twice_label);
    } else {
        j["family"] = "sl2";
        j["k"] = half_string(irrep.twice_label);
    }
    j["l"] = irrep.l();
    return j;
}

IrrepLabel irrep_from_json(const Json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "su2") return IrrepLabel::su2(parse_half(j.at("j").get<std::string>()));
    if (family != "sl2") throw std::invalid_argument("unknown irrep family: " + family);
    const int twice_k = parse_half(j.at("k").get<std::string>());
    const int l = j.at("l").get<int>();
    return IrrepLabel::sl2(twice_k, l >= 0 ? +1 : -1);
}

Json to_json(const ResidualCheck& c) {
    return Json{{"check", c.check},     {"region", c.region},       {"cutoff", c.cutoff},
                {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

Json to_json(const NCParams& p) {
    return Json{{"theta", p.theta}, {"kappa", p.kappa}, {"hbar", p.hbar}, {"mu", p.mu}};
}

Json to_json(const SpectrumRow& r) {
    return Json{{"region", r.region},      {"irrep", to_json(r.irrep)},
                {"m", half_string(r.twice_m)}, {"n_plus", r.quanta.n_plus},
                {"n_minus", r.quanta.n_minus}, {"energy", r.energy}};
}

SpectrumRow spectrum_row_from_json(const Json& j) {
    SpectrumRow r;
    r.region = j.at("region").get<std::string>();
    r.irrep = irrep_from_json(j.at("irrep"));
    r.twice_m = parse_half(j.at("m").get<std::string>());
    r.quanta = {j.at("n_plus").get<int>(), j.at("n_minus").get<int>()};
    r.energy = j.at("energy").get<double>();
    return r;
}

Json to_json(const WellRow& r) {
    const bool su2 = r.irrep.family == IrrepLabel::Family::Su2;
    return Json{{"region", r.region},
                {"k_or_j", half_string(r.irrep.twice_label)},
                {"s", su2 ? 0 : r.irrep.sign},
                {"l", r.irrep.l()},
                {"index", r.index},
                {"energy", r.energy},
                {"kind", r.kind}};
}

WellRow well_row_from_json(const Json& j) {
    WellRow r;
    r.region = j.at("region").get<std::string>();
    const int twice = parse_half(j.at("k_or_j").get<std::string>());
    const int s = j.at("s").get<int>();
    r.irrep = s == 0 ? IrrepLabel::su2(twice) : IrrepLabel::sl2(twice, s);
    r.index = j.at("index").get<int>();
    r.energy = j.at("energy").get<double>();
    r.kind = j.at("kind").get<std::string>();
    return r;
}

Json to_json(const SpectrumResult& res) {
    Json j;
    j["irrep"] = to_json(res.irrep);
    j["truncation"] = res.truncation;
    j["eigenvalues"] = res.eigenvalues;
    j["converged"] = res.converged;
    return j;
}

std::string render_well_table(const std::vector<WellRow>& rows) {
    std::ostringstream out;
    out << "  irrep              l    #   energy                 kind\n";
    for (const WellRow& r : rows) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %-18s %-4d %-3d %-22s %s\n", r.irrep.str().c_str(),
                      r.irrep.l(), r.index, format_double(r.energy).c_str(), r.kind.c_str());
        out << buf;
    }
    return out.str();
}

std::string csv_spectrum(const std::vector<SpectrumRow>& rows) {
    std::ostringstream out;
    out << "region,irrep,m,n_plus,n_minus,energy\n";
    for (const SpectrumRow& r : rows)
        out << r.region << ',' << r.irrep.str() << ',' << half_string(r.twice_m) << ','
            << r.quanta.n_plus << ',' << r.quanta.n_minus << ',' << format_double(r.energy) << '\n';
    return out.str();
}

std::string csv_wells(const std::vector<WellRow>& rows) {
    std::ostringstream out;
    out << "region,k_or_j,s,l,index,energy,kind\n";
    for (const WellRow& r : rows) {
        const bool su2 = r.irrep.family == IrrepLabel::Family::Su2;
        out << r.region << ',' << half_string(r.irrep.twice_label) << ',' << (su2 ? 0 : r.irrep.sign)
            << ',' << r.irrep.l() << ',' << r.index << ',' << format_double(r.energy) << ',' << r.kind
            << '\n';
    }
    return out.str();
}

std::string csv_checks(const std::vector<ResidualCheck>& rows) {
    std::ostringstream out;
    out << "check,region,cutoff,residual,tolerance,pass\n";
    for (const ResidualCheck& c : rows)
        out << c.check << ',' << c.region << ',' << c.cutoff << ',' << format_double(c.residual) << ','
            << format_double(c.tolerance) << ',' << (c.pass ? 1 : 0) << '\n';
    return out.str();
}

std::string csv_xy(const std::vector<std::pair<double, double>>& rows, const std::string& xname,
                   const std::string& yname) {
    std::ostringstream out;
    out << xname << ',' << yname << '\n';
    for (const auto& [x, y] : rows) out << format_double(x) << ',' << format_double(y) << '\n';
    return out.str();
}

Json document(const std::string& command, const NCParams& p, Json rows) {
    Json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["params"] = to_json(p);
    doc["rows"] = std::move(rows);
    return doc;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace ncqm
