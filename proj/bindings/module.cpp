#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "qmcut/graph.hpp"
#include "qmcut/json_io.hpp"
#include "qmcut/lr.hpp"
#include "qmcut/oracle.hpp"
#include "qmcut/partition.hpp"
#include "qmcut/solver.hpp"

namespace py = pybind11;
using namespace qmcut;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null:
        return py::none();
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& item : j)
            out.append(json_to_py(item));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default:
        return py::none();
    }
}

Partition part(const std::vector<int>& parts) { return Partition(parts); }

std::vector<Partition> parts_list(const std::vector<std::vector<int>>& factors) {
    std::vector<Partition> out;
    out.reserve(factors.size());
    for (const auto& f : factors)
        out.push_back(part(f));
    return out;
}

Graph graph_from(int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact quantum max-d-cut values for complete multipartite graphs, "
              "with an exact-diagonalization oracle";

    // partition combinatorics
    m.def(
        "enumerate_partitions",
        [](int n, int max_height) {
            std::vector<std::vector<int>> out;
            for (const auto& p : enumerate_partitions(n, max_height))
                out.push_back(p.parts());
            return out;
        },
        py::arg("n"), py::arg("max_height"));
    m.def("content_sum", [](const std::vector<int>& p) { return content_sum(part(p)); });
    m.def("eta_contents", [](const std::vector<int>& p) { return eta_contents(part(p)); });
    m.def("eta_rows", [](const std::vector<int>& p, int d) { return eta_rows(part(p), d); },
          py::arg("partition"), py::arg("d"));
    m.def("dim_irrep", [](const std::vector<int>& p) { return dim_irrep(part(p)); });
    m.def("weyl_dim", [](const std::vector<int>& p, int d) { return weyl_dim(part(p), d); },
          py::arg("partition"), py::arg("d"));
    m.def("is_subpartition", [](const std::vector<int>& mu, const std::vector<int>& lam) {
        return is_subpartition(part(mu), part(lam));
    });
    m.def("balanced_partition",
          [](int n, int h) { return balanced_partition(n, h).parts(); }, py::arg("n"), py::arg("h"));

    // Littlewood-Richardson machinery
    m.def("lr_coefficient",
          [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
              return lr_coefficient(part(lam), part(mu), part(nu));
          });
    m.def("iterated_lr",
          [](const std::vector<int>& lam, const std::vector<std::vector<int>>& factors) {
              return iterated_lr(part(lam), parts_list(factors));
          });
    m.def("iterated_lr_direct",
          [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu,
             const std::vector<int>& zeta) {
              return iterated_lr_direct(part(lam), part(mu), part(nu), part(zeta));
          });
    m.def(
        "valid_tuples",
        [](int p, int q, int r, int d) {
            py::list out;
            for (const auto& t : valid_tuples(p, q, r, d))
                out.append(json_to_py(to_json(t)));
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("d"));
    m.def(
        "minimal_lr_filling",
        [](const std::vector<int>& outer, const std::vector<int>& inner) -> py::object {
            auto t = minimal_lr_filling(SkewShape(part(outer), part(inner)));
            if (!t)
                return py::none();
            return py::cast(t->rows());
        },
        py::arg("outer"), py::arg("inner"));
    m.def(
        "is_lr_filling",
        [](const std::vector<int>& outer, const std::vector<int>& inner,
           const std::vector<std::vector<int>>& rows) {
            return is_lr_filling(LRTableau(SkewShape(part(outer), part(inner)), rows));
        },
        py::arg("outer"), py::arg("inner"), py::arg("rows"));

    // solver
    m.def("xi", [](const std::vector<int>& lam, const std::vector<int>& mu,
                   const std::vector<int>& nu, const std::vector<int>& zeta) {
        return xi(part(lam), part(mu), part(nu), part(zeta));
    });
    m.def(
        "solve",
        [](std::vector<int> parts, int d) {
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            QmcSolution sol = parts.size() == 3 && parts.back() >= 1
                                  ? solve_search({d, parts})
                                  : solve_multipartite(parts, d);
            return json_to_py(to_json(sol));
        },
        py::arg("parts"), py::arg("d"));
    m.def(
        "closed_form",
        [](int d, int p, int q, int r) {
            if (d == 1)
                return closed_form_d1(p, q, r);
            if (d == 2)
                return closed_form_d2(p, q, r);
            if (d == 3)
                return closed_form_d3(p, q, r);
            throw std::domain_error("closed forms exist for d = 1, 2, 3 only");
        },
        py::arg("d"), py::arg("p"), py::arg("q"), py::arg("r"));
    m.def("clique_block_eigenvalue",
          [](const std::vector<int>& lam, int d) { return clique_block_eigenvalue(part(lam), d); });

    // exact-diagonalization oracle
    m.def(
        "max_eigenvalue",
        [](const std::vector<int>& parts, int d, double tol, long max_iters, std::uint64_t seed) {
            return max_eigenvalue(HamiltonianOperator(complete_multipartite(parts), d), tol,
                                  max_iters, seed);
        },
        py::arg("parts"), py::arg("d"), py::arg("tol") = 1e-9, py::arg("max_iters") = 200000,
        py::arg("seed") = 42);
    m.def(
        "max_eigenvalue_graph",
        [](int n, const std::vector<std::pair<int, int>>& edges, int d, double tol, long max_iters,
           std::uint64_t seed) {
            return max_eigenvalue(HamiltonianOperator(graph_from(n, edges), d), tol, max_iters,
                                  seed);
        },
        py::arg("n"), py::arg("edges"), py::arg("d"), py::arg("tol") = 1e-9,
        py::arg("max_iters") = 200000, py::arg("seed") = 42);
    m.def(
        "full_spectrum",
        [](const std::vector<int>& parts, int d) {
            return full_spectrum(HamiltonianOperator(complete_multipartite(parts), d));
        },
        py::arg("parts"), py::arg("d"));
    m.def(
        "full_spectrum_graph",
        [](int n, const std::vector<std::pair<int, int>>& edges, int d) {
            return full_spectrum(HamiltonianOperator(graph_from(n, edges), d));
        },
        py::arg("n"), py::arg("edges"), py::arg("d"));
    m.def("verify_clique_spectrum", &verify_clique_spectrum, py::arg("n"), py::arg("d"));
    m.def("verify_complement_identity", &verify_complement_identity, py::arg("parts"), py::arg("d"),
          py::arg("trials") = 5, py::arg("seed") = 42);

    m.attr("__version__") = "0.1.0";
}
