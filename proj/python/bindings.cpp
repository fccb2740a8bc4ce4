#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabforge/codes.hpp"

namespace py = pybind11;
using namespace stabforge;

namespace {

std::vector<PauliString> parse_pauli_list(const std::vector<std::string>& texts) {
  std::vector<PauliString> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(PauliString::parse(t));
  return out;
}

ErrorClass parse_error_class(const std::string& name) {
  if (name == "all") return ErrorClass::All;
  if (name == "x") return ErrorClass::XOnly;
  if (name == "z") return ErrorClass::ZOnly;
  throw ValidationError("error class must be 'all', 'x', or 'z'");
}

py::dict report_dict(const RoundTripReport& rep) {
  py::dict d;
  d["code"] = rep.code;
  d["logical_input"] = rep.logical_input;
  d["error"] = rep.injected.letters();
  d["syndrome"] = syndrome_bits_str(rep.syndrome);
  d["decimal"] = rep.syndrome_decimal;
  d["deterministic"] = rep.syndrome_deterministic;
  d["uncorrectable"] = rep.uncorrectable;
  d["correction"] = rep.correction;
  d["fidelity"] = rep.fidelity;
  d["pass"] = rep.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_stabforge, m) {
  m.doc() = "stabilizer-code compiler and verifier";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<PauliString>(m, "PauliString")
      .def(py::init<int>(), py::arg("n"))
      .def_static("parse", &PauliString::parse, py::arg("text"))
      .def_property_readonly("n", &PauliString::num_qubits)
      .def("x", &PauliString::x, py::arg("qubit"))
      .def("z", &PauliString::z, py::arg("qubit"))
      .def("letters", &PauliString::letters)
      .def("phase_exponent", &PauliString::phase_exponent)
      .def("weight", &PauliString::weight)
      .def("is_identity", &PauliString::is_identity)
      .def("__mul__", [](const PauliString& a, const PauliString& b) { return multiply(a, b); })
      .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; })
      .def("__str__", &PauliString::str)
      .def("__repr__", [](const PauliString& p) { return "PauliString('" + p.str() + "')"; });

  m.def("parse_pauli", &PauliString::parse, py::arg("text"));
  m.def("symplectic_product", &symplectic_product, py::arg("a"), py::arg("b"));
  m.def("multiply", &multiply, py::arg("a"), py::arg("b"));

  py::class_<CheckMatrix>(m, "CheckMatrix")
      .def_static(
          "from_generators",
          [](const std::vector<std::string>& gens) {
            return CheckMatrix::from_generators(parse_pauli_list(gens));
          },
          py::arg("generators"))
      .def_readonly("n", &CheckMatrix::n)
      .def_readonly("k", &CheckMatrix::k)
      .def("rows", [](const CheckMatrix& h) {
        std::vector<std::string> out;
        for (int i = 0; i < h.num_rows(); ++i) out.push_back(h.row(i).letters());
        return out;
      });

  m.def(
      "css_check_matrix",
      [](const std::vector<std::string>& h1, const std::vector<std::string>& h2) {
        return css_check_matrix(BinMatrix::from_rows(h1), BinMatrix::from_rows(h2));
      },
      py::arg("h1"), py::arg("h2"));

  py::class_<StandardForm>(m, "StandardForm")
      .def_readonly("r", &StandardForm::r)
      .def_readonly("perm", &StandardForm::perm)
      .def_property_readonly("n", [](const StandardForm& sf) { return sf.hs.n; })
      .def_property_readonly("k", [](const StandardForm& sf) { return sf.hs.k; })
      .def("rows",
           [](const StandardForm& sf) {
             std::vector<std::string> out;
             for (int i = 0; i < sf.hs.num_rows(); ++i) out.push_back(sf.hs.row(i).letters());
             return out;
           })
      .def("row_bits",
           [](const StandardForm& sf) {
             std::vector<std::string> out;
             for (int i = 0; i < sf.hs.num_rows(); ++i)
               out.push_back(sf.hs.xblock.row_str(i) + "|" + sf.hs.zblock.row_str(i));
             return out;
           })
      .def("logical_x",
           [](const StandardForm& sf) {
             std::vector<std::string> out;
             for (const PauliString& p : sf.xlogical) out.push_back(p.letters());
             return out;
           })
      .def("logical_z", [](const StandardForm& sf) {
        std::vector<std::string> out;
        for (const PauliString& p : sf.zlogical) out.push_back(p.letters());
        return out;
      });

  m.def("to_standard_form", &to_standard_form, py::arg("check_matrix"));

  py::enum_<GateKind>(m, "GateKind")
      .value("H", GateKind::H)
      .value("S", GateKind::S)
      .value("X", GateKind::X)
      .value("Y", GateKind::Y)
      .value("Z", GateKind::Z)
      .value("CX", GateKind::CX)
      .value("CY", GateKind::CY)
      .value("CZ", GateKind::CZ)
      .value("CCX", GateKind::CCX)
      .value("SWAP", GateKind::SWAP)
      .value("M", GateKind::Measure);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<int, int>(), py::arg("nqubits"), py::arg("ncbits") = 0)
      .def_readonly("nqubits", &Circuit::nqubits)
      .def_readonly("ncbits", &Circuit::ncbits)
      .def("__len__", [](const Circuit& c) { return c.gates.size(); })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__str__", [](const Circuit& c) { return serialize(c); });

  m.def("parse_circuit", &parse_circuit, py::arg("text"));
  m.def("serialize", &serialize, py::arg("circuit"));
  m.def(
      "gate_counts",
      [](const Circuit& c) {
        py::dict out;
        for (const auto& [kind, count] : gate_counts(c)) out[kind_name(kind).c_str()] = count;
        return out;
      },
      py::arg("circuit"));
  m.def(
      "optimize_trivial_z",
      [](const Circuit& c, const std::set<int>& zero_init) {
        return optimize_trivial_z(c, zero_init);
      },
      py::arg("circuit"), py::arg("zero_init"));

  m.def("synth_encoder", &synth_encoder, py::arg("standard_form"));
  m.def(
      "synth_syndrome",
      [](const std::vector<std::string>& gens, int n) {
        return synth_syndrome(parse_pauli_list(gens), n);
      },
      py::arg("generators"), py::arg("n"));

  py::class_<SyndromeTable>(m, "SyndromeTable")
      .def("rows",
           [](const SyndromeTable& t) {
             std::vector<std::tuple<std::string, std::string, unsigned>> out;
             for (const SyndromeEntry& e : t.entries)
               out.emplace_back(e.error.letters(), syndrome_bits_str(e.bits), e.decimal);
             return out;
           })
      .def("lookup",
           [](const SyndromeTable& t, const std::string& bits) -> py::object {
             std::vector<int> vec;
             for (char b : bits) vec.push_back(b == '1');
             const auto hit = correction_lookup(t, vec);
             if (!hit.has_value()) return py::none();
             return py::cast(hit->letters());
           })
      .def("__str__", [](const SyndromeTable& t) { return format_table(t); });

  m.def(
      "syndrome_table",
      [](const std::vector<std::string>& gens, int n, const std::string& klass) {
        return syndrome_table(parse_pauli_list(gens), n, parse_error_class(klass));
      },
      py::arg("generators"), py::arg("n"), py::arg("error_class") = "all");

  py::class_<StateVector>(m, "StateVector")
      .def_readonly("n", &StateVector::n)
      .def("amplitudes", [](const StateVector& s) { return s.amps; })
      .def("norm", &StateVector::norm)
      .def("__str__", [](const StateVector& s) { return dump_state(s); });

  m.def("init_basis", &init_basis, py::arg("n"), py::arg("bits"));
  m.def(
      "run",
      [](const Circuit& c, const StateVector& s0, std::uint64_t seed, double tol) {
        const RunResult res = run(c, s0, seed, tol);
        py::dict out;
        out["state"] = res.final;
        out["cbits"] = res.cbits;
        bool deterministic = true;
        for (const auto& rec : res.transcript) deterministic = deterministic && rec.deterministic;
        out["deterministic"] = deterministic;
        return out;
      },
      py::arg("circuit"), py::arg("state"), py::arg("seed") = 0,
      py::arg("tolerance") = kDefaultTolerance);
  m.def("apply_pauli_error", &apply_pauli_error, py::arg("state"), py::arg("error"));
  m.def(
      "eigencheck",
      [](const StateVector& s, const PauliString& p, double tol) {
        switch (eigencheck(s, p, tol)) {
          case EigenSign::Plus: return 1;
          case EigenSign::Minus: return -1;
          case EigenSign::Indeterminate: break;
        }
        return 0;
      },
      py::arg("state"), py::arg("pauli"), py::arg("tolerance") = kDefaultTolerance);
  m.def("equiv_up_to_phase", &equiv_up_to_phase, py::arg("a"), py::arg("b"),
        py::arg("tolerance") = kDefaultTolerance);
  m.def("dump_state", &dump_state, py::arg("state"));

  py::class_<CouplingGraph>(m, "CouplingGraph")
      .def_readonly("sites", &CouplingGraph::sites)
      .def("adjacent", &CouplingGraph::adjacent)
      .def("diameter", &CouplingGraph::diameter);
  m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"));

  py::class_<Layout>(m, "Layout")
      .def(py::init([](const std::vector<int>& site_of) {
             Layout l;
             l.site_of = site_of;
             return l;
           }),
           py::arg("site_of"))
      .def_readonly("site_of", &Layout::site_of);
  m.def("parse_layout", &parse_layout, py::arg("text"));

  py::class_<RoutedResult>(m, "RoutedResult")
      .def_readonly("circuit", &RoutedResult::circuit)
      .def_readonly("swap_count", &RoutedResult::swap_count)
      .def_property_readonly("final_sites",
                             [](const RoutedResult& r) { return r.final_layout.site_of; });

  m.def("route", &route, py::arg("circuit"), py::arg("graph"), py::arg("layout"));
  m.def("decompose_swaps", &decompose_swaps, py::arg("circuit"));
  m.def("is_compliant", &is_compliant, py::arg("circuit"), py::arg("graph"), py::arg("layout"));
  m.def("to_physical", &to_physical, py::arg("circuit"), py::arg("layout"));

  py::class_<CodeSpec>(m, "CodeSpec")
      .def_readonly("name", &CodeSpec::name)
      .def_readonly("n", &CodeSpec::n)
      .def_readonly("k", &CodeSpec::k)
      .def("generators",
           [](const CodeSpec& spec) {
             std::vector<std::string> out;
             for (const PauliString& g : spec.generators) out.push_back(g.letters());
             return out;
           })
      .def("check_matrix", &CodeSpec::check_matrix);

  m.def("builtin", &builtin, py::arg("name"));
  m.def("builtin_names", &builtin_names);
  m.def("load_code", &load_code, py::arg("text"));
  m.def(
      "verify_roundtrip",
      [](const CodeSpec& spec, const std::string& logical_bits, const std::string& error,
         std::uint64_t seed, double tol) {
        return report_dict(
            verify_roundtrip(spec, logical_bits, PauliString::parse(error), seed, tol));
      },
      py::arg("code"), py::arg("logical_bits"), py::arg("error"), py::arg("seed") = 0,
      py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "shor_figure_roundtrip",
      [](const std::string& error, std::complex<double> a, std::complex<double> b, double tol) {
        return report_dict(shor_figure_roundtrip(PauliString::parse(error), a, b, tol));
      },
      py::arg("error"), py::arg("a"), py::arg("b"), py::arg("tolerance") = kDefaultTolerance);
  m.def("shor_figure_encoder", &shor_figure_encoder);
  m.def("shor_figure_decoder", &shor_figure_decoder);
  m.def(
      "verify_codeword_amplitudes",
      [](const CodeSpec& spec, const std::string& logical_bits) {
        const AmplitudeCheck check = verify_codeword_amplitudes(spec, logical_bits);
        py::dict out;
        out["pass"] = check.pass;
        out["details"] = check.details;
        return out;
      },
      py::arg("code"), py::arg("logical_bits"));
}
