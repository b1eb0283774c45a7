#include "saito/commands.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace saito;

namespace {

// reports cross the boundary as JSON text; the package decodes them
std::string dump(const Report& r) { return r.doc.dump(); }

}  // namespace

PYBIND11_MODULE(_saito_strata, m) {
    m.doc() = "Restricted Saito determinants on Coxeter discriminant strata";
    py::register_exception<InvalidStratum>(m, "InvalidStratum", PyExc_ValueError);

    m.def("predict", [](const std::string& group, const std::string& simple, const std::string& roots, bool raw, bool dump_roots) {
        py::gil_scoped_release nogil;
        return dump(cmd_predict({group, simple, roots, raw}, dump_roots));
    }, py::arg("group"), py::arg("simple") = "", py::arg("roots") = "", py::arg("raw_coords") = false, py::arg("dump_roots") = false);

    m.def("det", [](const std::string& group, const std::string& simple, const std::string& roots, bool raw, const std::string& backend,
                    const std::string& invariants, bool show_basis) {
        py::gil_scoped_release nogil;
        return dump(cmd_det({{group, simple, roots, raw}, backend, invariants, show_basis}));
    }, py::arg("group"), py::arg("simple") = "", py::arg("roots") = "", py::arg("raw_coords") = false,
       py::arg("backend") = "symbolic", py::arg("invariants") = "", py::arg("show_basis") = false);

    m.def("classical", [](const std::string& type, const std::string& mult, int mpow, const std::string& at, int points,
                          std::uint64_t seed, double tol) {
        py::gil_scoped_release nogil;
        return dump(cmd_classical({type, mult, mpow, at, points, seed, tol}));
    }, py::arg("type"), py::arg("mult"), py::arg("m") = 0, py::arg("at") = "", py::arg("points") = 3, py::arg("seed") = 1,
       py::arg("tol") = 1e-8);

    m.def("tables", [](const std::string& which) {
        py::gil_scoped_release nogil;
        return dump(cmd_tables(which));
    }, py::arg("which") = "all");

    m.def("verify", [](const std::string& group, int threads, int gamma_trials, std::uint64_t seed, bool symbolic) {
        py::gil_scoped_release nogil;
        VerifyOptions opt;
        opt.threads = threads;
        opt.gamma_trials = gamma_trials;
        opt.seed = seed;
        opt.symbolic = symbolic;
        return dump(cmd_verify(group, opt));
    }, py::arg("group"), py::arg("threads") = 0, py::arg("gamma_trials") = 3, py::arg("seed") = 7, py::arg("symbolic") = true);

    m.def("default_threads", &default_threads);
    m.def("data_dir", &data_dir);
    m.def("set_data_dir", &set_data_dir, py::arg("dir"));
}
