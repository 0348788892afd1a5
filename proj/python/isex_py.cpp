#include <memory>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isex/cli.hpp"
#include "isex/decomposition.hpp"
#include "isex/ergodicity.hpp"
#include "isex/error.hpp"
#include "isex/gallery.hpp"
#include "isex/io.hpp"
#include "isex/periods.hpp"

namespace py = pybind11;

namespace {

using namespace isex;

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

py::object to_py(const Rational& r) { return fraction_type()(to_string(r)); }

py::list to_py(const RationalVector& v) {
  py::list out;
  for (const auto& r : v) out.append(to_py(r));
  return out;
}

py::list to_py(const CredalSet& set) {
  py::list out;
  for (const auto& p : set.generators()) out.append(to_py(p.weights()));
  return out;
}

/// Accepts int, str or fractions.Fraction entries.
Rational from_py(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

RationalVector vector_from_py(const py::sequence& seq) {
  RationalVector out;
  for (const auto& v : seq) out.push_back(from_py(v));
  return out;
}

CredalSet credal_from_py(const py::sequence& generators) {
  std::vector<ProbVec> points;
  for (const auto& g : generators) points.emplace_back(vector_from_py(g.cast<py::sequence>()));
  return CredalSet(std::move(points));
}

Observable observable_from_py(const py::sequence& f) { return Observable{vector_from_py(f)}; }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::tuple gallery_to_py(const GallerySystem& g) {
  return py::make_tuple(std::vector<State>(g.map.images().begin(), g.map.images().end()), to_py(g.credal), g.label);
}

/// An invariant system with its memoized components.
class System {
 public:
  System(std::vector<State> map, const py::sequence& generators)
      : table_(std::make_unique<ComponentTable>(InvariantSystem(SystemMap(std::move(map)), credal_from_py(generators)))) {}

  std::size_t n() const { return table_->map().size(); }
  py::list generators() const { return to_py(table_->credal()); }
  std::uint64_t period() const { return period_of(table_->system()); }
  std::uint64_t component_period(std::uint64_t d) const { return period_of_component(*table_, d); }
  py::list theta(std::uint64_t d) const { return to_py(table_->theta(d)); }
  py::object upper(const py::sequence& f) const { return to_py(upper_expectation(table_->credal(), observable_from_py(f))); }

  py::object component_upper(std::uint64_t d, const py::sequence& f, const std::string& method) const {
    const Observable g = observable_from_py(f);
    if (method == "lp") return to_py(e_d_lp(*table_, d, g));
    if (method == "closed") return to_py(e_d_closed_form(*table_, d, g));
    throw Error(ErrorKind::kInvalidArgument, "method must be 'lp' or 'closed'");
  }

  py::object cesaro(std::uint64_t d, const py::sequence& f, std::uint64_t n) const {
    return to_py(cesaro_upper(*table_, d, observable_from_py(f), n));
  }

  bool strongly_ergodic() const { return strong_ergodicity_check(*table_).strongly_ergodic; }

  py::dict time_means(const py::sequence& f) const {
    const ErgodicTheoremCheck c = ergodic_theorem_check(*table_, observable_from_py(f));
    py::dict out;
    out["period"] = c.period;
    out["upper"] = to_py(c.upper);
    out["lower"] = to_py(c.lower);
    out["strongly_ergodic"] = c.hypothesis;
    out["sandwich_holds"] = c.sandwich_holds;
    out["achiever"] = c.achiever ? py::object(to_py(c.achiever->weights())) : py::none();
    out["verdict"] = std::string(to_string(c.verdict));
    return out;
  }

  py::dict periodic_decomposition(const py::sequence& f) const {
    const PeriodicDecompositionCheck c = periodic_decomposition_check(*table_, observable_from_py(f));
    py::dict out;
    out["period"] = c.period;
    out["upper"] = to_py(c.upper);
    out["component_upper"] = to_py(c.component_upper);
    out["holds"] = c.holds;
    return out;
  }

 private:
  std::unique_ptr<ComponentTable> table_;
};

}  // namespace

PYBIND11_MODULE(_isex, m) {
  m.doc() = "Exact periodic decomposition and ergodicity analysis of invariant credal sets";

  static py::exception<Error> error_type(m, "IsexError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<System>(m, "System")
      .def(py::init<std::vector<State>, const py::sequence&>(), py::arg("map"), py::arg("generators"))
      .def_property_readonly("n", &System::n)
      .def_property_readonly("generators", &System::generators, "canonical extreme points")
      .def("period", &System::period)
      .def("component_period", &System::component_period, py::arg("d"))
      .def("theta", &System::theta, py::arg("d"))
      .def("upper", &System::upper, py::arg("f"))
      .def("component_upper", &System::component_upper, py::arg("d"), py::arg("f"), py::arg("method") = "lp")
      .def("cesaro", &System::cesaro, py::arg("d"), py::arg("f"), py::arg("n"))
      .def("strongly_ergodic", &System::strongly_ergodic)
      .def("time_means", &System::time_means, py::arg("f"))
      .def("periodic_decomposition", &System::periodic_decomposition, py::arg("f"));

  m.def("extreme_points", [](const py::sequence& gens) { return to_py(extreme_points(credal_from_py(gens).generators())); },
        py::arg("generators"));
  m.def(
      "check_invariance",
      [](std::vector<State> map, const py::sequence& gens) {
        const CredalSet c = extreme_points(credal_from_py(gens).generators());
        const InvarianceVerdict v = check_invariance(c, SystemMap(std::move(map)));
        return py::make_tuple(v.invariant, v.witness ? py::object(to_py(v.witness->values)) : py::none());
      },
      py::arg("map"), py::arg("generators"));
  m.def("gen_cycle", [](std::size_t q) { return gallery_to_py(gen_cycle(q)); }, py::arg("q"));
  m.def(
      "gen_product_shift",
      [](std::size_t s, std::size_t m, const py::sequence& marginals) {
        std::vector<ProbVec> mus;
        for (const auto& mu : marginals) mus.emplace_back(vector_from_py(mu.cast<py::sequence>()));
        return gallery_to_py(gen_product_shift(s, m, mus));
      },
      py::arg("s"), py::arg("m"), py::arg("marginals"));
  m.def("gen_random_invariant", [](std::size_t n, std::size_t k, std::uint64_t seed) {
    return gallery_to_py(gen_random_invariant(n, k, seed));
  }, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def(
      "run_subcommand",
      [](const std::string& name, std::optional<std::string> document, std::optional<std::string> f,
         std::optional<std::uint64_t> d, std::optional<std::uint64_t> l_max, std::uint64_t seed) {
        CommandOptions o;
        o.input_text = std::move(document);
        o.f = std::move(f);
        o.d = d;
        o.l_max = l_max;
        o.seed = seed;
        const CommandResult r = run_subcommand(name, o);
        return py::make_tuple(json_to_py(r.report), r.exit_code);
      },
      py::arg("name"), py::arg("document") = py::none(), py::arg("f") = py::none(), py::arg("d") = py::none(),
      py::arg("l_max") = py::none(), py::arg("seed") = 0);
}
