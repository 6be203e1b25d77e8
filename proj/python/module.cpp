#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermrank/channel.hpp"
#include "hermrank/json_io.hpp"
#include "hermrank/oracle.hpp"
#include "hermrank/simulate.hpp"

namespace py = pybind11;
using namespace hermrank;

namespace {

// Field elements cross the boundary as lists of 2n ints (a_0 first), exactly
// like the JSON files.
using PyWord = std::vector<std::vector<std::uint64_t>>;

PyWord to_py(const Field& f, std::span<const Felt> v) {
  PyWord out;
  for (const Felt& x : v) out.emplace_back(x.c.begin(), x.c.begin() + f.degree());
  return out;
}

std::vector<Felt> from_py(const Field& f, const PyWord& v, std::size_t expected) {
  if (v.size() != expected)
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(expected) + " elements, got " + std::to_string(v.size()));
  std::vector<Felt> out;
  for (const auto& x : v) out.push_back(f.from_coeffs(x));
  return out;
}

ErrorMode parse_mode(const std::string& mode) {
  if (mode == "arbitrary") return ErrorMode::Arbitrary;
  if (mode == "hermitian") return ErrorMode::Hermitian;
  throw py::value_error("mode must be 'arbitrary' or 'hermitian'");
}

py::dict decode_to_py(const CodeParams& p, const DecodeResult& r) {
  py::dict out;
  out["success"] = r.success;
  out["path"] = std::string(to_string(r.diagnostics.path));
  out["bm_length"] = r.diagnostics.bm_length;
  if (r.success) {
    out["message"] = to_py(p.field, r.message);
    out["t"] = r.error_rank;
    out["error_poly"] = to_py(p.field, r.error_poly.coeffs);
  } else {
    out["reason"] = std::string(to_string(r.reason));
    if (r.diagnostics.inner_reason) out["inner_reason"] = std::string(to_string(*r.diagnostics.inner_reason));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximum Hermitian rank-metric codes: encoder, channel, decoder and brute-force oracle";

  py::register_exception<Error>(m, "HermrankError", PyExc_ValueError);

  py::class_<CodeParams>(m, "Code")
      .def(py::init(&build_params), py::arg("q"), py::arg("n"), py::arg("d"))
      .def_static(
          "from_json", [](const std::string& text) { return params_from_json(json::parse(text)); }, py::arg("text"))
      .def("to_json", [](const CodeParams& p) { return params_to_json(p).dump(2); })
      .def_property_readonly("q", [](const CodeParams& p) { return p.field.q(); })
      .def_property_readonly("n", &CodeParams::n)
      .def_readonly("d", &CodeParams::d)
      .def_readonly("m", &CodeParams::m)
      .def_readonly("kappa", &CodeParams::kappa)
      .def_readonly("k", &CodeParams::k)
      .def_property_readonly("radius", &CodeParams::radius)
      .def_property_readonly("basis", [](const CodeParams& p) { return to_py(p.field, p.alpha); })
      .def(
          "random_message",
          [](const CodeParams& p, std::uint64_t seed) {
            Rng rng(seed);
            return to_py(p.field, random_message(p, rng));
          },
          py::arg("seed"))
      .def(
          "encode", [](const CodeParams& p, const PyWord& msg) { return to_py(p.field, encode(p, from_py(p.field, msg, p.k))); },
          py::arg("message"))
      .def(
          "random_error",
          [](const CodeParams& p, unsigned rank, std::uint64_t seed, const std::string& mode) {
            return to_py(p.field, random_rank_error(p, ChannelSpec{rank, parse_mode(mode), seed}));
          },
          py::arg("rank"), py::arg("seed"), py::arg("mode") = "arbitrary")
      .def(
          "corrupt",
          [](const CodeParams& p, const PyWord& c, const PyWord& e) {
            return to_py(p.field, corrupt(p.field, from_py(p.field, c, p.n()), from_py(p.field, e, p.n())));
          },
          py::arg("codeword"), py::arg("error"))
      .def(
          "decode",
          [](const CodeParams& p, const PyWord& r) {
            const auto word = from_py(p.field, r, p.n());
            DecodeResult res;
            {
              py::gil_scoped_release release;
              res = decode(p, word);
            }
            return decode_to_py(p, res);
          },
          py::arg("received"))
      .def(
          "matrix",
          [](const CodeParams& p, const PyWord& c) {
            const Matrix a = codeword_to_matrix(p, from_py(p.field, c, p.n())).entries;
            std::vector<PyWord> rows;
            for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(to_py(p.field, a.row(i)));
            return rows;
          },
          py::arg("word"), "n x n matrix over F_{q^2} with entries Tr(alpha_i^q c_r)")
      .def(
          "is_hermitian",
          [](const CodeParams& p, const PyWord& c) { return codeword_to_matrix(p, from_py(p.field, c, p.n())).is_hermitian(p.field); },
          py::arg("word"))
      .def(
          "rank_distance",
          [](const CodeParams& p, const PyWord& a, const PyWord& b) {
            return rank_distance(p, from_py(p.field, a, p.n()), from_py(p.field, b, p.n()));
          },
          py::arg("a"), py::arg("b"))
      .def("code_size", [](const CodeParams& p) { return code_size(p); }, "q^{n k}, or 0 if it overflows 64 bits")
      .def(
          "min_distance",
          [](const CodeParams& p, std::uint64_t limit) {
            py::gil_scoped_release release;
            return brute_min_distance(p, limit);
          },
          py::arg("limit") = kDefaultEnumerationLimit, "brute-force minimum distance by full enumeration")
      .def(
          "simulate_json",
          [](const CodeParams& p, std::uint64_t trials, std::vector<unsigned> ranks, std::uint64_t seed, unsigned threads,
             const std::string& mode) {
            SimConfig cfg{trials, std::move(ranks), seed, threads, parse_mode(mode)};
            SimReport report;
            {
              py::gil_scoped_release release;
              report = simulate(p, cfg);
            }
            return report_to_json(report, false).dump();
          },
          py::arg("trials"), py::arg("ranks"), py::arg("seed"), py::arg("threads") = 1, py::arg("mode") = "arbitrary");
}
