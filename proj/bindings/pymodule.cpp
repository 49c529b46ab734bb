#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "canoneq/pipeline.hpp"

namespace py = pybind11;
using namespace canoneq;

namespace {

JobConfig config_from_kwargs(const py::kwargs& kw) {
    JobConfig cfg;
    if (kw.contains("out")) cfg.out_dir = py::cast<std::string>(kw["out"]);
    if (kw.contains("seed")) cfg.seed = py::cast<unsigned long>(kw["seed"]);
    if (kw.contains("order"))
        cfg.order = py::cast<std::string>(kw["order"]) == "lex" ? OrderKind::lex
                                                                : OrderKind::grevlex;
    if (kw.contains("smooth"))
        cfg.smooth = py::cast<std::string>(kw["smooth"]) == "exact" ? SmoothMode::exact
                                                                    : SmoothMode::modular;
    if (kw.contains("max_strata")) cfg.max_strata = py::cast<int>(kw["max_strata"]);
    if (kw.contains("max_pairs")) cfg.max_pairs = py::cast<long>(kw["max_pairs"]);
    if (kw.contains("degree_cap")) cfg.degree_cap = py::cast<int>(kw["degree_cap"]);
    if (kw.contains("rep")) cfg.rep_file = py::cast<std::string>(kw["rep"]);
    if (kw.contains("table")) cfg.table_file = py::cast<std::string>(kw["table"]);
    if (kw.contains("genus")) cfg.genus = py::cast<long>(kw["genus"]);
    if (kw.contains("maps")) cfg.maps_file = py::cast<std::string>(kw["maps"]);
    return cfg;
}

py::tuple as_tuple(const CommandResult& r) { return py::make_tuple(r.text, r.exit_code); }

} // namespace

PYBIND11_MODULE(_canoneq, m) {
    m.doc() = "canonical equations of Riemann surfaces with automorphisms";

    m.def("scalar", [](const std::string& text) { return parse_scalar(text).str(); },
          "canonical form of an exact cyclotomic scalar expression");

    m.def(
        "chartable",
        [](const std::string& group_file, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.group_file = group_file;
            return as_tuple(cmd_chartable(cfg));
        },
        py::arg("group_file"));

    m.def(
        "screen",
        [](const std::string& skg_file, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.skg_file = skg_file;
            return as_tuple(cmd_screen(cfg));
        },
        py::arg("skg_file"));

    m.def(
        "characters",
        [](const std::string& skg_file, int d, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.skg_file = skg_file;
            return as_tuple(cmd_characters(cfg, d));
        },
        py::arg("skg_file"), py::arg("d") = 1);

    m.def(
        "candidate",
        [](const std::string& skg_file, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.skg_file = skg_file;
            return as_tuple(cmd_candidate(cfg));
        },
        py::arg("skg_file"));

    m.def(
        "stratify",
        [](const std::string& ideal_file, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.ideal_file = ideal_file;
            return as_tuple(cmd_stratify(cfg));
        },
        py::arg("ideal_file"));

    m.def(
        "verify",
        [](const std::string& ideal_file, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.ideal_file = ideal_file;
            return as_tuple(cmd_verify(cfg));
        },
        py::arg("ideal_file"));

    m.def(
        "pipeline",
        [](const std::string& skg_file, const py::kwargs& kw) {
            JobConfig cfg = config_from_kwargs(kw);
            cfg.skg_file = skg_file;
            return as_tuple(cmd_pipeline(cfg));
        },
        py::arg("skg_file"));

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<error>(m, "Error");
}
