#ifndef WIGNER_REPORT_IO_HPP
#define WIGNER_REPORT_IO_HPP

#include <string>

#include "json.hpp"
#include "wigner/census.hpp"
#include "wigner/dwf.hpp"
#include "wigner/mub.hpp"
#include "wigner/phase_space.hpp"
#include "wigner/qrac.hpp"

namespace wigner {

/// x rounded to the given number of decimal digits.
double round_to(double x, int digits);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// {dimension, bases: [[[re,im],...],...]} with full-precision components.
nlohmann::json mub_to_json(const MubSet& m);
void save_mub(const MubSet& m, const std::string& path);
/// Parses, re-verifies (deviations <= 1e-8) and tags source = "file".
MubSet mub_from_json(const nlohmann::json& j);
MubSet load_mub(const std::string& path);

/// State file: either {vector: [[re,im],...]} (normalized on load) or
/// {density: [[[re,im],...],...]} (validated at 1e-8).
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix load_state(const std::string& path);

nlohmann::json geometry_to_json(const PhaseSpace& ps, const AxiomReport& axioms);

nlohmann::json census_to_json(const CensusReport& rep, int round_digits = 5);
std::string census_to_csv(const CensusReport& rep, int round_digits = 5);

nlohmann::json extrema_to_json(const ExtremaReport& rep);

nlohmann::json qrac_to_json(const QracReport& rep);

/// d x d grid, row = x index, column = y index.
std::string dwf_map_to_csv(const DwfMap& w);
nlohmann::json dwf_map_to_json(const DwfMap& w);

}  // namespace wigner

#endif
