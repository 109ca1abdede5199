#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dignet/error.hpp"
#include "dignet/io.hpp"
#include "dignet/oracle.hpp"
#include "dignet/sobol.hpp"
#include "dignet/tval.hpp"
#include "dignet/wep.hpp"

namespace py = pybind11;
using namespace dignet;

namespace {

py::object to_pyint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(py::str(to_decimal(v)));
}

py::list coeff_list(const WeightEnumerator& w, bool divide_out) {
    py::list out;
    for (int a = 0; a <= w.valid_to; ++a)
        out.append(to_pyint(divide_out ? w.unscaled(a) : w.scaled.coeff(a)));
    return out;
}

DigitMatrix matrix_from_rows(const std::vector<std::vector<std::uint16_t>>& rows) {
    if (rows.empty()) throw_input("matrix needs at least one row");
    DigitMatrix m(int(rows.size()), int(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) throw_input("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<std::uint16_t>> matrix_to_rows(const DigitMatrix& m) {
    std::vector<std::vector<std::uint16_t>> rows(std::size_t(m.rows));
    for (int i = 0; i < m.rows; ++i) rows[std::size_t(i)].assign(m.row(i), m.row(i) + m.cols);
    return rows;
}

GroupSpec spec_from_args(std::optional<std::uint32_t> b, std::optional<std::vector<std::uint32_t>> group) {
    if (b && group) throw_input("pass either b or group, not both");
    if (group) return GroupSpec(*group);
    if (b) return GroupSpec::cyclic(*b);
    throw_input("pass b (cyclic base) or group (cyclic factor list)");
}

int resolve_t(const DigitalNet& net, const std::string& method, int threads) {
    if (method == "alg1") return t_from_wep(truncated_wep(net, net.m(), threads), net.m());
    if (method == "alg2") return t_value_alg2(net, threads).t;
    if (method == "oracle") return t_by_intervals(all_points(net), net.base(), net.m());
    if (method == "both") {
        const int t1 = t_from_wep(truncated_wep(net, net.m(), threads), net.m());
        const int t2 = t_value_alg2(net, threads).t;
        if (t1 != t2) throw error(errc::disagreement, "algorithms disagree");
        return t1;
    }
    throw_input("method must be alg1 | alg2 | both | oracle");
}

}  // namespace

PYBIND11_MODULE(_dignet, mod) {
    mod.doc() = "Exact weight enumerators and t-values of digital nets over finite abelian groups";

    py::register_exception<error>(mod, "DignetError");

    py::class_<GroupSpec>(mod, "GroupSpec")
        .def(py::init<std::vector<std::uint32_t>>(), py::arg("factors"))
        .def_static("cyclic", &GroupSpec::cyclic, py::arg("order"))
        .def_property_readonly("order", &GroupSpec::order)
        .def_property_readonly("exponent", &GroupSpec::exponent)
        .def_property_readonly("factors", &GroupSpec::factors)
        .def("__repr__", [](const GroupSpec& g) {
            std::string s = "GroupSpec([";
            for (std::size_t i = 0; i < g.factors().size(); ++i)
                s += (i ? ", " : "") + std::to_string(g.factors()[i]);
            return s + "])";
        });

    py::class_<DigitalNet>(mod, "Net")
        .def_property_readonly("b", &DigitalNet::base)
        .def_property_readonly("s", &DigitalNet::s)
        .def_property_readonly("m", &DigitalNet::m)
        .def_property_readonly("n", &DigitalNet::n)
        .def_property_readonly("point_count", &DigitalNet::point_count)
        .def("point", [](const DigitalNet& net, std::uint64_t l) { return matrix_to_rows(net.point_at(l)); },
             py::arg("l"), "digit matrix of the l-th point (rows = coordinates, msb first)")
        .def("points",
             [](const DigitalNet& net) {
                 if (net.point_count() > (1u << 20)) throw_resource("too many points to materialize");
                 std::vector<std::vector<std::vector<std::uint16_t>>> out;
                 out.reserve(net.point_count());
                 for (const auto& p : all_points(net)) out.push_back(matrix_to_rows(p));
                 return out;
             })
        .def("project", [](const DigitalNet& net, const std::vector<int>& u) { return project(net, u); },
             py::arg("u"), "restriction to the 1-based coordinates in u")
        .def("__repr__", [](const DigitalNet& net) {
            return "Net(b=" + std::to_string(net.base()) + ", s=" + std::to_string(net.s()) +
                   ", m=" + std::to_string(net.m()) + ", n=" + std::to_string(net.n()) + ")";
        });

    mod.def(
        "net_from_matrices",
        [](const std::vector<std::vector<std::vector<std::uint16_t>>>& matrices,
           std::optional<std::uint32_t> b, std::optional<std::vector<std::uint32_t>> group,
           std::optional<int> m, std::optional<int> n) {
            if (matrices.empty()) throw_input("need at least one matrix");
            const int rows = int(matrices.front().size());
            const int cols = rows ? int(matrices.front().front().size()) : 0;
            const int mm = m.value_or(cols);
            return net_from_matrices(spec_from_args(b, group), matrices, mm, n.value_or(rows));
        },
        py::arg("matrices"), py::kw_only(), py::arg("b") = std::nullopt, py::arg("group") = std::nullopt,
        py::arg("m") = std::nullopt, py::arg("n") = std::nullopt,
        "net from s generating matrices (n rows x m columns each)");

    mod.def(
        "net_from_generators",
        [](const std::vector<std::vector<std::vector<std::uint16_t>>>& gens, std::optional<std::uint32_t> b,
           std::optional<std::vector<std::uint32_t>> group, std::optional<int> n) {
            std::vector<DigitMatrix> g;
            for (const auto& rows : gens) g.push_back(matrix_from_rows(rows));
            const int depth = n.value_or(g.empty() ? 0 : g.front().cols);
            return net_from_generators(spec_from_args(b, group), std::move(g), depth);
        },
        py::arg("generators"), py::kw_only(), py::arg("b") = std::nullopt, py::arg("group") = std::nullopt,
        py::arg("n") = std::nullopt);

    mod.def("load_net", &load_net, py::arg("path"), "load a net file (json)");

    mod.def(
        "t_value",
        [](const DigitalNet& net, const std::string& method, int threads) {
            return resolve_t(net, method, threads);
        },
        py::arg("net"), py::arg("method") = "both", py::arg("threads") = 1,
        "exact t of the net; method alg1 | alg2 | both | oracle");

    mod.def(
        "weight_enumerator",
        [](const DigitalNet& net, bool full, std::optional<int> ell, int threads) {
            WeightEnumerator w =
                full ? full_wep(net, threads) : truncated_wep(net, ell.value_or(net.m()), threads);
            py::dict out;
            out["coeffs"] = coeff_list(w, true);
            out["scale"] = to_pyint(w.scale);
            out["valid_to"] = w.valid_to;
            out["full"] = w.full;
            return out;
        },
        py::arg("net"), py::kw_only(), py::arg("full") = false, py::arg("ell") = std::nullopt,
        py::arg("threads") = 1, "N_a coefficients of the dual's weight enumerator");

    mod.def(
        "lower_bound",
        [](const std::vector<std::vector<std::vector<std::uint16_t>>>& points,
           std::optional<std::uint32_t> b, std::optional<std::vector<std::uint32_t>> group, int m,
           int threads) {
            std::vector<DigitMatrix> pts;
            pts.reserve(points.size());
            for (const auto& rows : points) pts.push_back(matrix_from_rows(rows));
            return general_lower_bound(pts, spec_from_args(b, group), m, threads).bound;
        },
        py::arg("points"), py::kw_only(), py::arg("b") = std::nullopt, py::arg("group") = std::nullopt,
        py::arg("m"), py::arg("threads") = 1,
        "lower bound on t for an arbitrary multiset of b^m digit matrices");

    mod.def(
        "oracle_t",
        [](const std::vector<std::vector<std::vector<std::uint16_t>>>& points, std::uint32_t b, int m) {
            std::vector<DigitMatrix> pts;
            pts.reserve(points.size());
            for (const auto& rows : points) pts.push_back(matrix_from_rows(rows));
            return t_by_intervals(pts, b, m);
        },
        py::arg("points"), py::arg("b"), py::arg("m"), "exact t by elementary-interval counting");

    mod.def(
        "dual_minimum_weight",
        [](const DigitalNet& net) { return min_nrt(dual_enumerate(net)); }, py::arg("net"),
        "minimum NRT weight of the brute-forced dual (small nets only)");

    mod.def(
        "worst_projection",
        [](const DigitalNet& net, int s_prime) {
            auto wp = worst_projection_search(net, s_prime);
            return py::make_tuple(wp.support, wp.t);
        },
        py::arg("net"), py::arg("s_prime"),
        "(coordinates, t) of the worst projection onto at most s_prime coordinates");

    mod.def(
        "sobol_net",
        [](const std::string& path, int s, int m) {
            return sobol_net(parse_direction_file(read_file(path)), s, m);
        },
        py::arg("direction_file"), py::arg("s"), py::arg("m"),
        "binary net from the first s dimensions of a direction-number table");
}
