#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "cobordism/classes.hpp"
#include "cobordism/io.hpp"
#include "cobordism/lazard.hpp"

namespace py = pybind11;
using namespace cobordism;

namespace {

VarietySpec spec_of(const std::string& text) { return io::spec_from_json(io::json::parse(text)); }

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = cli::run(args, in, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Formal group laws, algebraic cobordism and fixed-point checks";
    m.def("run", &run_cli, py::arg("args"), py::arg("input") = "",
          "Run the command-line interface; returns (exit code, stdout, stderr).");
    m.def(
        "euler_number", [](const std::string& spec) { return euler_number(spec_of(spec)).get_str(); }, py::arg("spec_json"));
    m.def(
        "additive_chern_number", [](const std::string& spec) { return additive_chern_number(spec_of(spec)).get_str(); },
        py::arg("spec_json"));
    m.def(
        "fundamental_class", [](const std::string& spec) { return io::to_json(fundamental_class(spec_of(spec))).dump(); },
        py::arg("spec_json"));
    m.def(
        "binomial_gcd", [](int n) { return binomial_gcd(n).get_str(); }, py::arg("n"));
}
