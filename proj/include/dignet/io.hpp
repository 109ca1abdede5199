#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dignet/net.hpp"
#include "dignet/wep.hpp"

namespace dignet {

/// Net file: one object with "b" (integer) or "group" (list of cyclic
/// orders), "s", "m", optional "n" (default m), and either "matrices"
/// (s row-major n x m integer matrices) or "generators" (m s x n matrices).
DigitalNet net_from_json(const nlohmann::json& j);
DigitalNet load_net(const std::string& path);

/// Raw point-set file: same header fields plus "points", a list of s x n
/// digit matrices (|points| must be b^m).
struct PointSetInput {
    GroupSpec spec;
    int s = 0;
    int m = 0;
    int n = 0;
    std::vector<DigitMatrix> points;
};
PointSetInput points_from_json(const nlohmann::json& j);
PointSetInput load_points(const std::string& path);

nlohmann::json net_to_json(const DigitalNet& net);
nlohmann::json points_to_json(const GroupSpec& spec, int s, int m, int n,
                              const std::vector<DigitMatrix>& points);

/// Enumerator serialization. Coefficients are decimal strings (arbitrary
/// precision). divide_out = true emits N_a with scale "1"; otherwise the
/// scaled integers with scale b^m.
nlohmann::json wep_to_json(const WeightEnumerator& w, bool divide_out);
std::string wep_to_csv(const WeightEnumerator& w, bool divide_out);

std::string read_file(const std::string& path);

}  // namespace dignet
