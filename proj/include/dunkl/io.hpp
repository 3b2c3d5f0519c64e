#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dunkl/coeffs.hpp"
#include "dunkl/fits.hpp"
#include "dunkl/regions.hpp"
#include "dunkl/spectra.hpp"

namespace dunkl {

using json = nlohmann::json;

constexpr int json_schema_version = 1;

// (key, value) pairs written into the CSV comment header.
using ParamList = std::vector<std::pair<std::string, std::string>>;

json to_json(const CoeffMatrix& m);
json to_json(const FitReport& r);
json to_json(const RegionReport& r);
json to_json(const VHypotheses& h);
json to_json(const OperatorSpec& spec);
json to_json(const RitzResult& r);
json to_json(const BoundCheck& c);
json to_json(const SandwichReport& r);
json to_json(const IndicialRoot& r);
json to_json(const WittenModel& m);
json to_json(const WittenComponentSpectrum& s);
json to_json(const PairingReport& p);

// {"schema": 1, "command": ..., "params": ..., "result": ...}
json envelope(const std::string& command, const ParamList& params, json result);

// Pretty-printed with a trailing newline.
std::string dump_json(const json& j);

std::string csv_header(const ParamList& params);
// k,l,value over every entry.
std::string coeff_csv(const CoeffMatrix& m, const ParamList& params);
// k,lambda_k,gap,converged; gap is against unperturbed_eigenvalue.
std::string spectrum_csv(const RitzResult& r, const OperatorSpec& spec, const ParamList& params);

// Shortest round-trip decimal text for a double.
std::string format_double(double x);

}  // namespace dunkl
