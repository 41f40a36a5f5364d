#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wigner/census.hpp"
#include "wigner/dwf.hpp"
#include "wigner/finite_field.hpp"
#include "wigner/mub.hpp"
#include "wigner/pauli.hpp"
#include "wigner/phase_space.hpp"
#include "wigner/qrac.hpp"
#include "wigner/report_io.hpp"
#include "wigner/version.hpp"

namespace {

using nlohmann::json;
using namespace wigner;

constexpr std::uint64_t kHeavyScanThreshold = 10'000'000;

std::string format_with_commas(std::uint64_t v) {
    std::string digits = std::to_string(v);
    std::string out;
    int since_sep = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (since_sep == 3) {
            out.push_back(',');
            since_sep = 0;
        }
        out.push_back(*it);
        ++since_sep;
    }
    return std::string(out.rbegin(), out.rend());
}

std::vector<int> parse_modulus(const std::string& csv) {
    std::vector<int> coeffs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(std::stoi(item));
    return coeffs;
}

FieldSpec field_from_flags(int dim, int p, int n, const std::string& modulus) {
    if (dim > 0) return field_of_order(dim);
    if (p > 0) {
        if (modulus.empty()) return FieldSpec(p, n);
        return FieldSpec(p, n, parse_modulus(modulus));
    }
    throw std::invalid_argument("specify --dim or --p (with optional --n, --modulus)");
}

MubSet make_mub(int d, const std::string& selector) {
    if (selector == "default") return default_mub(d);
    if (selector == "ivanovic") return ivanovic_mub(d);
    if (selector == "pauli-table") {
        if (d == 2) return qubit_mub();
        if (d == 4) return mub_from_pauli_table(standard_two_qubit_partition());
        if (d == 8) return mub_from_pauli_table(standard_three_qubit_partition());
        throw std::invalid_argument("pauli-table construction covers d = 2, 4, 8 only");
    }
    std::string path = selector;
    if (path.rfind("file:", 0) == 0) path = path.substr(5);
    MubSet m = load_mub(path);
    if (m.dim != d)
        throw std::invalid_argument("MUB file has dimension " + std::to_string(m.dim) +
                                    ", expected " + std::to_string(d));
    return m;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

int refuse_heavy(const std::string& what, std::uint64_t total) {
    std::cerr << "error: " << what << " enumerates " << format_with_commas(total)
              << " operators; pass --heavy to run it anyway\n";
    return 1;
}

ScanOptions scan_options(int workers, std::uint64_t rep_cap, bool progress) {
    ScanOptions opts;
    opts.workers = workers;
    opts.representative_cap = rep_cap;
    if (progress) {
        opts.progress = [](std::uint64_t done, std::uint64_t total) {
            std::cerr << "\r" << done << "/" << total << " ("
                      << (100.0 * static_cast<double>(done) / static_cast<double>(total))
                      << "%)" << (done == total ? "\n" : "") << std::flush;
        };
    }
    return opts;
}

struct Options {
    int dim = 0;
    int p = 0;
    int n = 1;
    std::string modulus;
    std::string mub = "default";
    int workers = 1;
    std::string out;
    std::string format = "json";
    int round_digits = 5;
    std::uint64_t rep_cap = 200000;
    bool heavy = false;
    bool progress = false;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::string state = "maximally-mixed";
    std::string net = "canonical";
    std::uint64_t net_seed = 0;
    std::string dwf_format = "csv";
};

int run_geometry(const Options& o) {
    const FieldSpec f = field_from_flags(o.dim, o.p, o.n, o.modulus);
    const PhaseSpace ps = PhaseSpace::build(f);
    const AxiomReport axioms = verify_axioms(ps);
    emit_json(geometry_to_json(ps, axioms), o.out);
    return axioms.all_pass() ? 0 : 1;
}

int run_mub(const Options& o) {
    if (o.dim <= 0) throw std::invalid_argument("mub: --dim is required");
    const MubSet m = make_mub(o.dim, o.mub);
    const MubCheck check = verify_mub(m);
    json j = mub_to_json(m);
    j["check"] = {{"max_orthonormality_dev", check.max_orthonormality_dev},
                  {"max_unbiasedness_dev", check.max_unbiasedness_dev},
                  {"pass", check.pass(1e-10)}};
    emit_json(j, o.out);
    return check.pass(1e-10) ? 0 : 1;
}

int run_census(const Options& o) {
    if (o.dim <= 0) throw std::invalid_argument("census: --dim is required");
    const std::uint64_t total = total_point_operators(o.dim);
    if (total > kHeavyScanThreshold && !o.heavy)
        return refuse_heavy("census of d=" + std::to_string(o.dim), total);
    const MubSet m = make_mub(o.dim, o.mub);
    const CensusReport rep = census(m, scan_options(o.workers, o.rep_cap, o.progress));
    if (o.format == "csv")
        emit(census_to_csv(rep, o.round_digits), o.out);
    else
        emit_json(census_to_json(rep, o.round_digits), o.out);
    return 0;
}

int run_extrema(const Options& o) {
    if (o.dim <= 0) throw std::invalid_argument("extrema: --dim is required");
    const std::uint64_t total = total_point_operators(o.dim);
    if (total > kHeavyScanThreshold && !o.heavy)
        return refuse_heavy("extrema scan of d=" + std::to_string(o.dim), total);
    const MubSet m = make_mub(o.dim, o.mub);
    const ExtremaReport rep =
        extremal_eigenvalues(m, scan_options(o.workers, o.rep_cap, o.progress));
    emit_json(extrema_to_json(rep), o.out);
    return 0;
}

int run_dwf(const Options& o) {
    const FieldSpec f = field_from_flags(o.dim, o.p, o.n, o.modulus);
    const PhaseSpace ps = PhaseSpace::build(f);
    const int d = ps.dim();
    const MubSet m = make_mub(d, o.mub);

    DensityMatrix rho = (o.state == "maximally-mixed") ? DensityMatrix::maximally_mixed(d)
                                                       : load_state(o.state);
    if (rho.dim() != d) throw std::invalid_argument("dwf: state dimension does not match --dim");

    QuantumNet net = QuantumNet::canonical(d);
    if (o.net == "random")
        net = QuantumNet::random(d, o.net_seed);
    else if (o.net != "canonical")
        throw std::invalid_argument("dwf: --net must be canonical or random");

    const DwfMap w = evaluate(rho, m, ps, net);
    if (o.dwf_format == "csv") {
        emit(dwf_map_to_csv(w), o.out);
    } else {
        json j = dwf_map_to_json(w);
        j["mub_source"] = m.source;
        j["state"] = o.state;
        j["net"] = o.net;
        if (o.net == "random") j["net_seed"] = o.net_seed;
        j["line_sums"] = line_sums(w, ps);
        emit_json(j, o.out);
    }
    return 0;
}

int run_qrac(const Options& o) {
    if (o.dim <= 0) throw std::invalid_argument("qrac: --dim is required");
    const std::uint64_t total = total_point_operators(o.dim);
    if (total > kHeavyScanThreshold && !o.heavy)
        return refuse_heavy("qrac rate for d=" + std::to_string(o.dim), total);
    const MubSet m = make_mub(o.dim, o.mub);
    QracReport rep = qrac_rate(m, scan_options(o.workers, o.rep_cap, o.progress));
    if (o.trials > 0) {
        const QracReport sim = simulate(QracCode(m), o.trials, o.seed, o.workers);
        rep.p_q_empirical = sim.p_q_empirical;
        rep.trials = sim.trials;
        rep.seed = sim.seed;
        rep.elapsed_seconds += sim.elapsed_seconds;
    }
    emit_json(qrac_to_json(rep), o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Wigner functions over finite-field phase space"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    Options o;

    auto add_field_flags = [&](CLI::App* cmd) {
        auto* dim = cmd->add_option("--dim", o.dim, "field order d (prime power)");
        auto* p = cmd->add_option("--p", o.p, "field characteristic");
        cmd->add_option("--n", o.n, "extension degree (with --p)");
        cmd->add_option("--modulus", o.modulus,
                        "irreducible modulus coefficients, ascending, e.g. 1,1,0,1");
        dim->excludes(p);
        p->excludes(dim);
    };
    auto add_mub_flag = [&](CLI::App* cmd) {
        cmd->add_option("--mub", o.mub, "default | ivanovic | pauli-table | file:PATH");
    };
    auto add_out_flag = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "output path (default: stdout)");
    };
    auto add_scan_flags = [&](CLI::App* cmd) {
        cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--heavy", o.heavy, "acknowledge a very large enumeration (d=8)");
        cmd->add_flag("--progress", o.progress, "report scan progress on stderr");
    };

    CLI::App* geometry = app.add_subcommand("geometry", "build the phase space, verify the affine-plane axioms");
    add_field_flags(geometry);
    add_out_flag(geometry);

    CLI::App* mub = app.add_subcommand("mub", "construct and verify a MUB set");
    mub->add_option("--dim", o.dim, "dimension")->required();
    add_mub_flag(mub);
    add_out_flag(mub);

    CLI::App* census_cmd = app.add_subcommand("census", "full spectrum census of all d^(d+1) point operators");
    census_cmd->add_option("--dim", o.dim, "dimension")->required();
    add_mub_flag(census_cmd);
    add_scan_flags(census_cmd);
    add_out_flag(census_cmd);
    census_cmd->add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    census_cmd->add_option("--round", o.round_digits, "displayed spectrum decimals")
        ->check(CLI::Range(0, 15));
    census_cmd->add_option("--rep-cap", o.rep_cap, "max stored class representatives");

    CLI::App* extrema = app.add_subcommand("extrema", "extremal eigenvalues and DWF extrema");
    extrema->add_option("--dim", o.dim, "dimension")->required();
    add_mub_flag(extrema);
    add_scan_flags(extrema);
    add_out_flag(extrema);

    CLI::App* dwf = app.add_subcommand("dwf", "evaluate a discrete Wigner function");
    add_field_flags(dwf);
    add_mub_flag(dwf);
    add_out_flag(dwf);
    dwf->add_option("--state", o.state, "state file (vector or density JSON) or maximally-mixed");
    dwf->add_option("--net", o.net, "canonical | random");
    dwf->add_option("--net-seed", o.net_seed, "seed for --net random");
    dwf->add_option("--format", o.dwf_format, "csv | json (default: csv grid)")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* qrac = app.add_subcommand("qrac", "QRAC rate, optional Monte Carlo run");
    qrac->add_option("--dim", o.dim, "dimension")->required();
    add_mub_flag(qrac);
    add_scan_flags(qrac);
    add_out_flag(qrac);
    qrac->add_option("--simulate", o.trials, "Monte Carlo trials");
    qrac->add_option("--seed", o.seed, "simulation seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (geometry->parsed()) return run_geometry(o);
        if (mub->parsed()) return run_mub(o);
        if (census_cmd->parsed()) return run_census(o);
        if (extrema->parsed()) return run_extrema(o);
        if (dwf->parsed()) return run_dwf(o);
        if (qrac->parsed()) return run_qrac(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
