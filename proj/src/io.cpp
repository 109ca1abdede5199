#include "dignet/io.hpp"

#include <fstream>
#include <sstream>

#include "dignet/error.hpp"

namespace dignet {

namespace {

using nlohmann::json;

GroupSpec spec_from_json(const json& j) {
    if (j.contains("group")) {
        auto factors = j.at("group").get<std::vector<std::uint32_t>>();
        return GroupSpec(std::move(factors));
    }
    if (j.contains("b")) return GroupSpec::cyclic(j.at("b").get<std::uint32_t>());
    throw_input("net file needs either \"b\" or \"group\"");
}

DigitMatrix matrix_from_json(const json& j, int rows, int cols, std::uint32_t b, const char* what) {
    if (!j.is_array() || int(j.size()) != rows) throw_input(std::string(what) + ": wrong row count");
    DigitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[std::size_t(r)];
        if (!row.is_array() || int(row.size()) != cols) throw_input(std::string(what) + ": wrong column count");
        for (int c = 0; c < cols; ++c) {
            const std::int64_t v = row[std::size_t(c)].get<std::int64_t>();
            if (v < 0 || v >= std::int64_t(b)) throw_input(std::string(what) + ": entry out of range");
            m.at(r, c) = std::uint16_t(v);
        }
    }
    return m;
}

}  // namespace

DigitalNet net_from_json(const nlohmann::json& j) {
    try {
        GroupSpec spec = spec_from_json(j);
        const int s = j.at("s").get<int>();
        const int m = j.at("m").get<int>();
        const int n = j.value("n", m);
        if (s < 1 || m < 1 || n < m) throw_input("net file needs s >= 1, m >= 1, n >= m");

        if (j.contains("matrices")) {
            const json& mats = j.at("matrices");
            if (!mats.is_array() || int(mats.size()) != s) throw_input("\"matrices\" must list s matrices");
            std::vector<std::vector<std::vector<std::uint16_t>>> c;
            c.reserve(std::size_t(s));
            for (int i = 0; i < s; ++i) {
                DigitMatrix mm = matrix_from_json(mats[std::size_t(i)], n, m, spec.order(), "generating matrix");
                std::vector<std::vector<std::uint16_t>> rows(std::size_t(n),
                                                             std::vector<std::uint16_t>(std::size_t(m), 0));
                for (int r = 0; r < n; ++r)
                    for (int k = 0; k < m; ++k) rows[std::size_t(r)][std::size_t(k)] = mm.at(r, k);
                c.push_back(std::move(rows));
            }
            return net_from_matrices(std::move(spec), c, m, n);
        }
        if (j.contains("generators")) {
            const json& gens = j.at("generators");
            if (!gens.is_array() || int(gens.size()) != m) throw_input("\"generators\" must list m matrices");
            std::vector<DigitMatrix> g;
            g.reserve(std::size_t(m));
            for (int i = 0; i < m; ++i)
                g.push_back(matrix_from_json(gens[std::size_t(i)], s, n, spec.order(), "generator"));
            return net_from_generators(std::move(spec), std::move(g), n);
        }
        throw_input("net file needs \"matrices\" or \"generators\"");
    } catch (const nlohmann::json::exception& e) {
        throw_input(std::string("malformed net file: ") + e.what());
    }
}

PointSetInput points_from_json(const nlohmann::json& j) {
    try {
        PointSetInput in{spec_from_json(j), 0, 0, 0, {}};
        in.s = j.at("s").get<int>();
        in.m = j.at("m").get<int>();
        in.n = j.value("n", in.m);
        if (in.s < 1 || in.m < 1 || in.n < in.m) throw_input("point file needs s >= 1, m >= 1, n >= m");
        const json& pts = j.at("points");
        if (!pts.is_array()) throw_input("\"points\" must be a list");
        std::uint64_t expect = 1;
        for (int i = 0; i < in.m; ++i) expect *= in.spec.order();
        if (pts.size() != expect) throw_input("point file must hold exactly b^m points");
        in.points.reserve(pts.size());
        for (const auto& p : pts)
            in.points.push_back(matrix_from_json(p, in.s, in.n, in.spec.order(), "point"));
        return in;
    } catch (const nlohmann::json::exception& e) {
        throw_input(std::string("malformed point file: ") + e.what());
    }
}

DigitalNet load_net(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return net_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw_input(path + ": " + e.what());
    }
}

PointSetInput load_points(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return points_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw_input(path + ": " + e.what());
    }
}

nlohmann::json net_to_json(const DigitalNet& net) {
    json j;
    if (net.spec().factors().size() == 1)
        j["b"] = net.spec().factors().front();
    else
        j["group"] = net.spec().factors();
    j["s"] = net.s();
    j["m"] = net.m();
    j["n"] = net.n();
    json gens = json::array();
    for (const auto& g : net.generators()) {
        json rows = json::array();
        for (int i = 0; i < g.rows; ++i) {
            json row = json::array();
            for (int c = 0; c < g.cols; ++c) row.push_back(g.at(i, c));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    j["generators"] = std::move(gens);
    return j;
}

nlohmann::json points_to_json(const GroupSpec& spec, int s, int m, int n,
                              const std::vector<DigitMatrix>& points) {
    json j;
    if (spec.factors().size() == 1)
        j["b"] = spec.factors().front();
    else
        j["group"] = spec.factors();
    j["s"] = s;
    j["m"] = m;
    j["n"] = n;
    json pts = json::array();
    for (const auto& p : points) {
        json rows = json::array();
        for (int i = 0; i < p.rows; ++i) {
            json row = json::array();
            for (int c = 0; c < p.cols; ++c) row.push_back(p.at(i, c));
            rows.push_back(std::move(row));
        }
        pts.push_back(std::move(rows));
    }
    j["points"] = std::move(pts);
    return j;
}

nlohmann::json wep_to_json(const WeightEnumerator& w, bool divide_out) {
    json j;
    json coeffs = json::array();
    const int top = w.valid_to;
    for (int a = 0; a <= top; ++a)
        coeffs.push_back(divide_out ? to_decimal(w.unscaled(a)) : to_decimal(w.scaled.coeff(a)));
    j["scale"] = divide_out ? "1" : to_decimal(w.scale);
    j["coeffs"] = std::move(coeffs);
    j["valid_to"] = w.valid_to;
    return j;
}

std::string wep_to_csv(const WeightEnumerator& w, bool divide_out) {
    std::ostringstream out;
    out << "degree,coefficient\n";
    for (int a = 0; a <= w.valid_to; ++a)
        out << a << ',' << (divide_out ? to_decimal(w.unscaled(a)) : to_decimal(w.scaled.coeff(a))) << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_input("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace dignet
