#include "wigner/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wigner/version.hpp"

namespace wigner {

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("fmt_double: conversion failed");
    return std::string(buf, ptr);
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json tool_meta() {
    return json{{"tool", kToolName}, {"version", kToolVersion}};
}

json spectrum_to_json(const SpectrumClass& c, int round_digits) {
    json arr = json::array();
    for (double v : c.spectrum()) arr.push_back(round_to(v, round_digits));
    return arr;
}

json representative_to_json(const SpectrumClass& c, int dim) {
    if (!c.has_representative) return nullptr;
    return json(PointOperatorIndex::from_linear(c.representative_index, dim).select);
}

json number_or_null(double x) {
    if (std::isnan(x)) return nullptr;
    return x;
}

}  // namespace

double round_to(double x, int digits) {
    if (digits < 0 || digits > 15) throw std::invalid_argument("round_to: digits out of range");
    const double scale = std::pow(10.0, digits);
    const double r = std::round(x * scale) / scale;
    return r == 0.0 ? 0.0 : r;  // avoid -0.0 in output
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::runtime_error("read failed: " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

json mub_to_json(const MubSet& m) {
    json bases = json::array();
    for (const auto& basis : m.bases) {
        json b = json::array();
        for (const CVec& v : basis) {
            json vec = json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i) vec.push_back(complex_to_json(v(i)));
            b.push_back(std::move(vec));
        }
        bases.push_back(std::move(b));
    }
    json j = tool_meta();
    j["dimension"] = m.dim;
    j["source"] = m.source;
    j["bases"] = std::move(bases);
    return j;
}

void save_mub(const MubSet& m, const std::string& path) {
    write_text_file(path, mub_to_json(m).dump(2) + "\n");
}

MubSet mub_from_json(const json& j) {
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw std::invalid_argument("MUB file: missing integer field 'dimension'");
    if (!j.contains("bases") || !j["bases"].is_array())
        throw std::invalid_argument("MUB file: missing array field 'bases'");
    const int d = j["dimension"].get<int>();
    if (d < 2) throw std::invalid_argument("MUB file: dimension must be at least 2");

    MubSet m;
    m.dim = d;
    m.source = "file";
    for (const json& jb : j["bases"]) {
        if (!jb.is_array() || jb.size() != static_cast<std::size_t>(d))
            throw std::invalid_argument("MUB file: each basis needs d vectors");
        std::vector<CVec> basis;
        basis.reserve(static_cast<std::size_t>(d));
        for (const json& jv : jb) {
            if (!jv.is_array() || jv.size() != static_cast<std::size_t>(d))
                throw std::invalid_argument("MUB file: each vector needs d components");
            CVec v(d);
            for (int i = 0; i < d; ++i) v(i) = complex_from_json(jv[static_cast<std::size_t>(i)]);
            basis.push_back(std::move(v));
        }
        m.bases.push_back(std::move(basis));
    }
    require_valid_mub(m, 1e-8);
    return m;
}

MubSet load_mub(const std::string& path) {
    return mub_from_json(json::parse(read_text_file(path)));
}

DensityMatrix state_from_json(const json& j) {
    if (j.contains("vector")) {
        const json& jv = j["vector"];
        if (!jv.is_array() || jv.empty())
            throw std::invalid_argument("state file: 'vector' must be a nonempty array");
        CVec v(static_cast<Eigen::Index>(jv.size()));
        for (std::size_t i = 0; i < jv.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = complex_from_json(jv[i]);
        return DensityMatrix::pure(v);
    }
    if (j.contains("density")) {
        const json& jm = j["density"];
        if (!jm.is_array() || jm.empty())
            throw std::invalid_argument("state file: 'density' must be a nonempty array");
        const auto n = jm.size();
        CMat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r) {
            if (!jm[r].is_array() || jm[r].size() != n)
                throw std::invalid_argument("state file: 'density' must be a square matrix");
            for (std::size_t c = 0; c < n; ++c)
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    complex_from_json(jm[r][c]);
        }
        return DensityMatrix::from_matrix(m, 1e-8);
    }
    throw std::invalid_argument("state file: expected a 'vector' or 'density' field");
}

DensityMatrix load_state(const std::string& path) {
    return state_from_json(json::parse(read_text_file(path)));
}

json geometry_to_json(const PhaseSpace& ps, const AxiomReport& axioms) {
    json j = tool_meta();
    j["dim"] = ps.dim();
    j["p"] = ps.field().p();
    j["n"] = ps.field().n();
    j["modulus"] = ps.field().modulus_string();
    j["point_count"] = ps.point_count();
    j["line_count"] = ps.line_count();
    j["striation_count"] = static_cast<int>(ps.striations().size());
    j["axioms"] = {
        {"unique_line_per_point_pair", axioms.unique_line_per_point_pair},
        {"unique_parallel_through_point", axioms.unique_parallel_through_point},
        {"nonparallel_lines_meet_once", axioms.nonparallel_lines_meet_once},
        {"all_pass", axioms.all_pass()},
    };
    return j;
}

json census_to_json(const CensusReport& rep, int round_digits) {
    json classes = json::array();
    for (const SpectrumClass& c : rep.classes) {
        classes.push_back({
            {"spectrum", spectrum_to_json(c, round_digits)},
            {"count", c.count},
            {"representative", representative_to_json(c, rep.dim)},
        });
    }
    json j = tool_meta();
    j["dim"] = rep.dim;
    j["mub_source"] = rep.mub_source;
    j["classes"] = std::move(classes);
    j["class_count"] = rep.classes.size();
    j["lambda_min"] = rep.lambda_min;
    j["lambda_max"] = rep.lambda_max;
    j["sum_lambda_max"] = rep.sum_lambda_max;
    j["total_operators"] = rep.total_operators;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    j["workers"] = rep.workers;
    j["spot_checks"] = {{"count", rep.stats.spot_checks},
                        {"max_trace_dev", rep.stats.max_trace_dev},
                        {"max_hermiticity_dev", rep.stats.max_hermiticity_dev}};
    return j;
}

std::string census_to_csv(const CensusReport& rep, int round_digits) {
    std::ostringstream out;
    out << "# " << kToolName << " " << kToolVersion << "\n";
    out << "# dim=" << rep.dim << " mub_source=" << rep.mub_source
        << " total_operators=" << rep.total_operators
        << " lambda_min=" << fmt_double(rep.lambda_min)
        << " lambda_max=" << fmt_double(rep.lambda_max)
        << " elapsed_seconds=" << fmt_double(rep.elapsed_seconds) << "\n";
    out << "spectrum,count,representative\n";
    for (const SpectrumClass& c : rep.classes) {
        bool first = true;
        for (double v : c.spectrum()) {
            if (!first) out << ";";
            out << fmt_double(round_to(v, round_digits));
            first = false;
        }
        out << "," << c.count << ",";
        if (c.has_representative) {
            first = true;
            for (int s : PointOperatorIndex::from_linear(c.representative_index, rep.dim).select) {
                if (!first) out << ";";
                out << s;
                first = false;
            }
        }
        out << "\n";
    }
    return out.str();
}

json extrema_to_json(const ExtremaReport& rep) {
    const DwfExtrema w = dwf_extrema(rep);
    json j = tool_meta();
    j["dim"] = rep.dim;
    j["mub_source"] = rep.mub_source;
    j["lambda_min"] = rep.lambda_min;
    j["lambda_max"] = rep.lambda_max;
    j["w_min"] = w.w_min;
    j["w_max"] = w.w_max;
    j["argmin"] = PointOperatorIndex::from_linear(rep.argmin_index, rep.dim).select;
    j["argmax"] = PointOperatorIndex::from_linear(rep.argmax_index, rep.dim).select;
    j["sum_lambda_max"] = rep.sum_lambda_max;
    j["total_operators"] = rep.total_operators;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    j["workers"] = rep.workers;
    return j;
}

json qrac_to_json(const QracReport& rep) {
    json j = tool_meta();
    j["d"] = rep.d;
    j["p_q_exact"] = number_or_null(rep.p_q_exact);
    j["p_q_empirical"] = number_or_null(rep.p_q_empirical);
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["mub_source"] = rep.mub_source;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    j["workers"] = rep.workers;
    return j;
}

std::string dwf_map_to_csv(const DwfMap& w) {
    const int d = w.dim;
    if (w.values.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d))
        throw std::invalid_argument("dwf_map_to_csv: value count does not match dim");
    std::ostringstream out;
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            if (y > 0) out << ",";
            out << fmt_double(w.values[static_cast<std::size_t>(d * x + y)]);
        }
        out << "\n";
    }
    return out.str();
}

json dwf_map_to_json(const DwfMap& w) {
    json j = tool_meta();
    j["dim"] = w.dim;
    j["values"] = w.values;
    j["sum"] = w.sum();
    j["min"] = w.min();
    j["max"] = w.max();
    return j;
}

}  // namespace wigner
