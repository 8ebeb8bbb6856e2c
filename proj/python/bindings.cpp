/*
   Copyright 2026 The lwhss Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lwhss/analysis.hpp"
#include "lwhss/codes.hpp"
#include "lwhss/error.hpp"
#include "lwhss/hss.hpp"
#include "lwhss/io.hpp"
#include "lwhss/protocol.hpp"

namespace py = pybind11;
using namespace lwhss;

namespace {

py::tuple ratio(const Rational& r) {
    return py::make_tuple(static_cast<long long>(r.numerator()), static_cast<long long>(r.denominator()));
}

std::vector<std::vector<Code>> rows_of(const Matrix& m) {
    std::vector<std::vector<Code>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r].assign(m.row(r).begin(), m.row(r).end());
    return out;
}

TableKind table_kind(const std::string& name) {
    if (name == "hermitian") return TableKind::Hermitian;
    if (name == "goppa") return TableKind::Goppa;
    if (name == "gv-example") return TableKind::GvExample;
    fail(ErrorKind::ParameterOutOfRange, "unknown table '" + name + "'");
}

TableFormat table_format(const std::string& name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "markdown") return TableFormat::Markdown;
    if (name == "text") return TableFormat::Text;
    fail(ErrorKind::ParameterOutOfRange, "unknown format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_lwhss, m) {
    m.doc() = "Linear homomorphic secret sharing from labelweight codes";

    // Leaked on purpose: the type must outlive every translator call.
    static PyObject* error_type = PyErr_NewException("lwhss._lwhss.LwhssError", PyExc_ValueError, nullptr);
    m.attr("LwhssError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    py::class_<Field>(m, "Field")
        .def_static("make", &Field::make, py::arg("p"), py::arg("k") = 1)
        .def_static("parse", [](const std::string& s) { return Field::parse(s); })
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("modulus", &Field::modulus)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("mul", &Field::mul)
        .def("div", &Field::div)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__str__", &Field::to_string)
        .def("__repr__", [](const Field& f) { return "Field('" + f.to_string() + "')"; });

    py::class_<LabeledCode>(m, "LabeledCode")
        .def_property_readonly("field", &LabeledCode::field)
        .def_property_readonly("length", &LabeledCode::length)
        .def_property_readonly("dimension", &LabeledCode::dimension)
        .def_property_readonly("servers", &LabeledCode::servers)
        .def_property_readonly("rate", [](const LabeledCode& c) { return ratio(c.rate()); })
        .def_property_readonly("generator", [](const LabeledCode& c) { return rows_of(c.generator()); })
        .def_property_readonly("labels", [](const LabeledCode& c) {
            return std::vector<std::size_t>(c.labeling().labels().begin(), c.labeling().labels().end());
        })
        .def("encode", [](const LabeledCode& c, const std::vector<Code>& msg) { return c.encode(msg); })
        .def("labelweight", [](const LabeledCode& c, const std::vector<Code>& w) { return labelweight(c, w); })
        .def("min_labelweight", [](const LabeledCode& c, std::uint64_t budget) { return min_labelweight(c, budget); },
             py::arg("budget") = kLabelweightBudget)
        .def("to_text", [](const LabeledCode& c) { return write_code(c); })
        .def_static("from_text", [](const std::string& s) { return read_code(s); });

    m.def("goppa_code", [](unsigned u, std::size_t r) { return goppa_build(u, r).code; }, py::arg("u"), py::arg("r"));
    m.def("hermitian_code", &hermitian_build, py::arg("q"), py::arg("k"));
    m.def("rs_code", &rs_build, py::arg("q"), py::arg("n"), py::arg("k"));
    m.def("ball_volume",
          [](std::uint64_t s, std::uint64_t w, std::uint64_t q, std::uint64_t r) {
              return py::int_(py::str(ball_volume(s, w, q, r).str()));
          },
          py::arg("s"), py::arg("w"), py::arg("q"), py::arg("r"));

    py::class_<HssScheme>(m, "Scheme")
        .def_property_readonly("code", &HssScheme::code)
        .def_property_readonly("field", &HssScheme::field)
        .def_property_readonly("servers", [](const HssScheme& s) { return s.params().servers; })
        .def_property_readonly("threshold", [](const HssScheme& s) { return s.params().threshold; })
        .def_property_readonly("degree", [](const HssScheme& s) { return s.params().degree; })
        .def_property_readonly("instances", [](const HssScheme& s) { return s.params().instances; })
        .def_property_readonly("variables", [](const HssScheme& s) { return s.params().variables; })
        .def_property_readonly("rate", [](const HssScheme& s) { return ratio(scheme_rate(s)); })
        .def("random_secrets",
             [](const HssScheme& s, std::uint64_t seed) {
                 RandomStream rng(seed);
                 return random_secrets(s, rng);
             },
             py::arg("seed"))
        .def("run",
             [](const HssScheme& s, const std::vector<std::vector<Code>>& secrets, std::uint64_t seed) {
                 const auto r = run_end_to_end(s, secrets, seed);
                 return py::dict(py::arg("outputs") = r.outputs, py::arg("expected") = r.expected,
                                 py::arg("passed") = r.pass);
             },
             py::arg("secrets"), py::arg("seed") = 0)
        .def("simulate",
             [](const HssScheme& s, const std::vector<std::vector<Code>>& secrets, std::uint64_t seed, bool parallel) {
                 SimulationOptions opt;
                 opt.parallel = parallel;
                 const auto r = simulate(s, secrets, seed, opt);
                 return py::dict(py::arg("outputs") = r.outputs, py::arg("passed") = r.pass,
                                 py::arg("frames") = r.transcript.frames.size(),
                                 py::arg("download_symbols") = r.transcript.download_symbols,
                                 py::arg("measured_rate") = ratio(r.transcript.measured_rate()),
                                 py::arg("transcript") = r.transcript.dump());
             },
             py::arg("secrets"), py::arg("seed") = 0, py::arg("parallel") = false)
        .def("to_text", [](const HssScheme& s) { return write_scheme(s); })
        .def_static("from_text", [](const std::string& text) { return read_scheme(text); });

    m.def("synthesize",
          [](const LabeledCode& code, std::size_t t, std::size_t d, std::size_t variables, std::size_t instances) {
              HssParams p{code.servers(), t, d, instances == 0 ? code.dimension() : instances,
                          variables == 0 ? d : variables, {}};
              return synthesize_eval(code, p);
          },
          py::arg("code"), py::arg("t"), py::arg("d"), py::arg("variables") = 0, py::arg("instances") = 0);

    m.def("table",
          [](const std::string& kind, std::uint64_t dt, std::vector<std::uint64_t> servers, const std::string& format,
             double epsilon) {
              const TableKind k = table_kind(kind);
              if (servers.empty()) servers = default_servers(k);
              return emit_table(k, dt, servers, epsilon).render(table_format(format));
          },
          py::arg("kind"), py::arg("dt") = 4, py::arg("servers") = std::vector<std::uint64_t>{},
          py::arg("format") = "csv", py::arg("epsilon") = 0.01);

    m.def("entropy", &entropy_gen, py::arg("q"), py::arg("w"), py::arg("x"));

    m.def("privacy_audit",
          [](std::size_t s, std::size_t t, std::uint32_t q, std::size_t d, std::size_t variables) {
              const auto [p, k] = prime_power(q);
              if (p == 0) fail(ErrorKind::ParameterOutOfRange, "q must be a prime power");
              const auto rep = privacy_audit(t, s, Field::make(p, k), d, variables == 0 ? d : variables);
              return py::dict(py::arg("comparisons") = rep.entries.size(), py::arg("all_equal") = rep.all_equal(),
                              py::arg("randomness_per_secret") = rep.randomness_per_secret);
          },
          py::arg("s"), py::arg("t"), py::arg("q"), py::arg("d") = 1, py::arg("variables") = 0);

    m.def("gv_monte_carlo",
          [](std::uint64_t q, std::uint64_t w, std::uint64_t s, std::int64_t delta_num, std::int64_t delta_den,
             double epsilon, std::uint64_t trials, std::uint64_t seed) {
              const GvConfig cfg{q, w, s, Rational(delta_num, delta_den), epsilon};
              const auto r = gv_monte_carlo(cfg, trials, seed);
              return py::dict(py::arg("k") = r.k, py::arg("n") = r.n, py::arg("trials") = r.trials,
                              py::arg("failures") = r.failures, py::arg("bound") = r.bound,
                              py::arg("threshold") = r.threshold, py::arg("volume_ok") = r.volume_ok,
                              py::arg("passed") = r.pass);
          },
          py::arg("q"), py::arg("w"), py::arg("s"), py::arg("delta_num"), py::arg("delta_den"), py::arg("epsilon"),
          py::arg("trials"), py::arg("seed") = 0);
}
