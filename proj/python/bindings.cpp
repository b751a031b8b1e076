#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pnw/analysis.hpp"
#include "pnw/errors.hpp"
#include "pnw/generators.hpp"
#include "pnw/jumbled_index.hpp"

namespace py = pybind11;
using namespace pnw;

namespace {

// Words cross the boundary as "0101" strings; exact rationals as "p/q".

py::object violation_or_none(const PNVerdict& v) {
  if (v.normal()) return py::none();
  const auto& x = *v.violation();
  py::dict d;
  d["start"] = x.factor_start;
  d["length"] = x.factor_length;
  d["ones"] = x.factor_ones;
  d["prefix_ones"] = x.prefix_ones;
  return std::move(d);
}

std::vector<std::uint64_t> to_vec(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

std::string generate(const std::string& name, std::size_t n, const std::string& slope, const std::string& intercept,
                     bool upper, const std::string& seed) {
  StreamPtr s;
  if (name == "fibonacci") {
    s = make_morphic_stream(MorphismSpec::fibonacci());
  } else if (name == "thue-morse") {
    s = make_morphic_stream(MorphismSpec::thue_morse());
  } else if (name == "paperfolding") {
    s = make_paperfolding_stream();
  } else if (name == "champernowne") {
    s = make_champernowne_stream();
  } else if (name == "mechanical") {
    s = make_mechanical_stream(SlopeSpec::parse(slope), Rational::parse(intercept), upper);
  } else if (name == "characteristic") {
    s = make_characteristic_stream(SlopeSpec::parse(slope));
  } else if (name == "flipext-omega") {
    s = make_flipext_stream(FiniteWord::parse(seed));
  } else if (name == "lazy-flipext-omega") {
    s = make_lazy_alpha_flipext_stream(FiniteWord::parse(seed), SlopeSpec::parse(slope));
  } else {
    throw std::invalid_argument("unknown word '" + name + "'");
  }
  return s->prefix(n).to_string();
}

}  // namespace

PYBIND11_MODULE(_pnw, m) {
  m.doc() = "Prefix normal words: generation, analysis and jumbled indexing";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  m.def("generate", &generate, py::arg("name"), py::arg("n"), py::arg("slope") = "", py::arg("intercept") = "0",
        py::arg("upper") = false, py::arg("seed") = "1",
        "First n symbols of a named infinite word.");

  m.def(
      "check", [](const std::string& w, bool zero) {
        auto word = FiniteWord::parse(w);
        return violation_or_none(zero ? is_prefix_normal_0(word) : is_prefix_normal_1(word));
      },
      py::arg("word"), py::arg("zero") = false,
      "None if the word is prefix normal, otherwise the shortest violating factor.");

  m.def(
      "profile", [](const std::string& w) {
        auto p = compute_profile(FiniteWord::parse(w));
        return py::make_tuple(to_vec(p.max_ones_array()), to_vec(p.min_ones_array()));
      },
      py::arg("word"), "(F1, f1): max and min number of 1s over factors of each length 1..n.");

  m.def(
      "pnf", [](const std::string& w) {
        auto p = compute_profile(FiniteWord::parse(w));
        return py::make_tuple(pnf1(p).to_string(), pnf0(p).to_string());
      },
      py::arg("word"), "Both prefix normal forms (PNF1, PNF0).");

  m.def(
      "abelian_complexity", [](const std::string& w) {
        auto p = compute_profile(FiniteWord::parse(w));
        std::vector<std::uint64_t> out;
        for (std::size_t n = 1; n <= p.length(); ++n) out.push_back(abelian_complexity(p, n));
        return out;
      },
      py::arg("word"), "psi(1..n).");

  m.def(
      "min_density", [](const std::string& w) {
        auto r = min_density(FiniteWord::parse(w));
        return py::make_tuple(r.delta.to_string(), r.iota, r.kappa);
      },
      py::arg("word"));

  m.def(
      "min_density_periodic", [](const std::string& u, const std::string& x) {
        return min_density_up(UltimatelyPeriodicWord(FiniteWord::parse(u), FiniteWord::parse(x))).to_string();
      },
      py::arg("preperiod"), py::arg("period"));

  m.def("flipext", [](const std::string& w) { return flipext(FiniteWord::parse(w)).to_string(); }, py::arg("word"));
  m.def(
      "lazy_flipext", [](const std::string& w, const std::string& slope) {
        return lazy_alpha_flipext(FiniteWord::parse(w), SlopeSpec::parse(slope)).to_string();
      },
      py::arg("word"), py::arg("slope"));

  m.def("is_prenecklace", [](const std::string& w) { return is_prenecklace_prefix(FiniteWord::parse(w)); },
        py::arg("word"));
  m.def("max_word", [](const std::string& w, std::size_t n) { return max_word(FiniteWord::parse(w), n).to_string(); },
        py::arg("word"), py::arg("n"));
  m.def("min_word", [](const std::string& w, std::size_t n) { return min_word(FiniteWord::parse(w), n).to_string(); },
        py::arg("word"), py::arg("n"));

  py::class_<JumbledIndex>(m, "JumbledIndex")
      .def_static("build", [](const std::string& w) { return JumbledIndex::build(FiniteWord::parse(w)); },
                  py::arg("word"))
      .def_static(
          "deserialize",
          [](const py::bytes& b) {
            std::string s = b;
            return JumbledIndex::deserialize(
                std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
          },
          py::arg("data"))
      .def("query", &JumbledIndex::query, py::arg("zeros"), py::arg("ones"))
      .def("serialize",
           [](const JumbledIndex& ix) {
             auto v = ix.serialize();
             return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
           })
      .def_property_readonly("min_ones", [](const JumbledIndex& ix) { return to_vec(ix.min_ones()); })
      .def_property_readonly("max_ones", [](const JumbledIndex& ix) { return to_vec(ix.max_ones()); })
      .def("__len__", &JumbledIndex::word_length)
      .def("__eq__", [](const JumbledIndex& a, const JumbledIndex& b) { return a == b; });
}
