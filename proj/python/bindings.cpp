#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "efpe/analysis.hpp"
#include "efpe/cipher.hpp"
#include "efpe/errors.hpp"
#include "efpe/kat.hpp"

namespace py = pybind11;
using namespace efpe;

namespace {

MasterKey to_key(const py::object& key) {
  if (py::isinstance<MasterKey>(key)) return key.cast<MasterKey>();
  return parse_master_key(key.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_efpe, m) {
  m.doc() = "eFPE format-preserving encryption over even-length decimal strings";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<MalformedKey>(m, "MalformedKey", base.ptr());
  py::register_exception<EntropyError>(m, "EntropyError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<SubkeyPair>(m, "SubkeyPair")
      .def(py::init<Word32, Word32>(), py::arg("k0") = 0, py::arg("k1") = 0)
      .def_readwrite("k0", &SubkeyPair::k0)
      .def_readwrite("k1", &SubkeyPair::k1)
      .def("__eq__", [](const SubkeyPair& a, const SubkeyPair& b) { return a == b; })
      .def("__repr__", [](const SubkeyPair& p) {
        return "SubkeyPair(" + std::to_string(p.k0) + ", " + std::to_string(p.k1) + ")";
      });

  m.def("sub_bytes", &sub_bytes, py::arg("state"));
  m.def("rotate_left_one_byte", &rotate_left_one_byte, py::arg("state"));
  m.def("prf_core", &prf_core, py::arg("input"), py::arg("keys"));
  m.def("prf_wide", &prf_wide, py::arg("limb_lo"), py::arg("limb_hi"), py::arg("round_index"),
        py::arg("keys"));

  py::class_<MasterKey>(m, "MasterKey")
      .def(py::init(&parse_master_key), py::arg("hex"))
      .def_property_readonly("words", [](const MasterKey& k) { return k.words; })
      .def("hex", &format_master_key)
      .def("with_bit_flipped", &MasterKey::with_bit_flipped, py::arg("bit"))
      .def("__eq__", [](const MasterKey& a, const MasterKey& b) { return a == b; });
  m.def("parse_master_key", &parse_master_key, py::arg("hex"));
  m.def("format_master_key", &format_master_key, py::arg("key"));
  m.def(
      "generate_master_key",
      [](std::optional<std::uint64_t> seed) {
        return seed ? generate_master_key_seeded(*seed) : generate_master_key();
      },
      py::arg("seed") = py::none(),
      "Secure random key, or a deterministic NON-SECRET test key when seed is given.");
  m.def(
      "derive_round_keys",
      [](const py::object& key, unsigned rounds) {
        const auto set = derive_round_keys(to_key(key), rounds);
        return std::vector<SubkeyPair>(set.keys().begin(), set.keys().end());
      },
      py::arg("key"), py::arg("rounds") = kDefaultRounds);

  m.def("pow10", &pow10, py::arg("m"));
  m.def(
      "round_f",
      [](std::uint64_t r, SubkeyPair keys, unsigned round_index, unsigned m) {
        return round_f(r, keys, round_index, Modulus(m));
      },
      py::arg("r"), py::arg("keys"), py::arg("round_index"), py::arg("m"));

  m.def("validate_numeric", &validate_numeric, py::arg("text"));
  m.def("is_valid_numeric", &is_valid_numeric, py::arg("text"));
  m.def(
      "split_halves",
      [](std::string_view text) {
        const auto s = split_halves(text);
        return py::make_tuple(s.left, s.right, s.m);
      },
      py::arg("text"));
  m.def(
      "join_halves",
      [](std::uint64_t left, std::uint64_t right, unsigned m) {
        return join_halves({left, right, m});
      },
      py::arg("left"), py::arg("right"), py::arg("m"));

  py::class_<Cipher>(m, "Cipher")
      .def(py::init([](const py::object& key, unsigned rounds) { return Cipher(to_key(key), rounds); }),
           py::arg("key"), py::arg("rounds") = kDefaultRounds)
      .def("encrypt", &Cipher::encrypt, py::arg("plaintext"),
           py::call_guard<py::gil_scoped_release>())
      .def("decrypt", &Cipher::decrypt, py::arg("ciphertext"),
           py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("rounds", &Cipher::rounds);

  auto an = m.def_submodule("analysis", "Security estimates and statistical suites");
  py::class_<analysis::SecurityEstimate>(an, "SecurityEstimate")
      .def_readonly("m", &analysis::SecurityEstimate::m)
      .def_readonly("bits", &analysis::SecurityEstimate::bits)
      .def_readonly("attack_ops", &analysis::SecurityEstimate::attack_ops);
  py::class_<analysis::AdvantageBound>(an, "AdvantageBound")
      .def_readonly("q", &analysis::AdvantageBound::q)
      .def_readonly("m", &analysis::AdvantageBound::m)
      .def_readonly("birthday_term", &analysis::AdvantageBound::birthday_term);
  an.def("security_bits", &analysis::security_bits, py::arg("m"));
  an.def("birthday_bound_advantage", &analysis::birthday_bound_advantage, py::arg("q"),
         py::arg("m"));
  an.def(
      "bijectivity_check",
      [](const py::object& key, std::size_t n) {
        return analysis::render_json(analysis::bijectivity_check(to_key(key), n));
      },
      py::arg("key"), py::arg("n"), "Returns the report as a JSON string.");
  an.def(
      "avalanche_test",
      [](std::size_t trials, std::size_t n, std::uint64_t seed) {
        return analysis::render_json(analysis::avalanche_test({trials, n, seed, false}));
      },
      py::arg("trials"), py::arg("n"), py::arg("seed"));
  an.def(
      "digit_distribution_test",
      [](const py::object& key, std::size_t n, std::size_t samples) {
        return analysis::render_json(analysis::digit_distribution_test(to_key(key), n, samples));
      },
      py::arg("key"), py::arg("n"), py::arg("samples"));
  an.def(
      "round_key_distinctness",
      [](std::size_t keys, std::uint64_t seed, unsigned rounds) {
        return analysis::render_json(analysis::round_key_distinctness(keys, seed, rounds));
      },
      py::arg("sample_keys"), py::arg("seed"), py::arg("rounds") = kDefaultRounds);

  auto vec = m.def_submodule("vectors", "Known-answer test files");
  vec.def(
      "generate",
      [](std::size_t count, std::vector<std::size_t> lengths, std::uint64_t seed) {
        if (lengths.empty()) lengths = kat::all_lengths();
        return kat::serialize(kat::generate_vectors(count, lengths, seed));
      },
      py::arg("count"), py::arg("lengths") = std::vector<std::size_t>{}, py::arg("seed") = 0,
      "Returns the KAT file text.");
  vec.def(
      "verify",
      [](std::string_view text) {
        const auto report = kat::verify_vectors(kat::parse(text));
        return py::make_tuple(report.passed(), report.failing_indices());
      },
      py::arg("text"), "Returns (passed, failing_indices).");
}
