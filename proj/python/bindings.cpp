#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lookahead/cli.hpp"
#include "lookahead/harness.hpp"

namespace py = pybind11;
using namespace lookahead;

// Rational <-> fractions.Fraction. Python ints and Fractions are accepted on
// the way in; everything comes back as Fraction.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyBool_Check(src.ptr()) || PyFloat_Check(src.ptr())) return false;
        if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        try {
            const auto num = py::str(src.attr("numerator")).cast<std::string>();
            const auto den = py::str(src.attr("denominator")).cast<std::string>();
            value = Rational(BigInt(num), BigInt(den));
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }

    static handle cast(const Rational& r, return_value_policy, handle) {
        static const py::object fraction = py::module_::import("fractions").attr("Fraction");
        const py::int_ num(py::reinterpret_steal<py::object>(
            PyLong_FromString(r.numerator().str().c_str(), nullptr, 10)));
        const py::int_ den(py::reinterpret_steal<py::object>(
            PyLong_FromString(r.denominator().str().c_str(), nullptr, 10)));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

int default_machines(SchedulerId id, std::optional<int> m) {
    if (m) return *m;
    return id == SchedulerId::three_la1 ? 3 : 2;
}

std::size_t default_lookahead(SchedulerId id, std::optional<std::size_t> k) {
    if (k) return *k;
    return id == SchedulerId::ls ? 0 : 1;
}

py::dict game_dict(const GameTranscript& t) {
    py::dict d;
    d["instance"] = std::vector<Rational>(t.final_instance.times().begin(), t.final_instance.times().end());
    d["decisions"] = t.decisions;
    d["alg_makespan"] = t.alg_makespan;
    d["opt_makespan"] = t.opt_makespan;
    d["ratio"] = t.ratio;
    d["applied_case"] = t.applied_case;
    d["degenerate"] = t.degenerate;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Semi-online scheduling with lookahead: exact simulation, oracle and bound checks";

    static py::exception<Error> error(m, "LookaheadError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    m.def(
        "simulate",
        [](const std::string& alg, const std::vector<Rational>& times, std::optional<int> machines,
           std::optional<std::size_t> k) {
            const auto id = parse_scheduler_id(alg);
            const int mm = default_machines(id, machines);
            const auto kk = default_lookahead(id, k);
            const auto inst = make_instance(times);
            const auto policy = make_policy(id, mm);
            const auto result = run_online(*policy, inst, kk);
            const auto row = run_one(id, inst, mm, kk);
            py::dict d;
            d["assignment"] = result.schedule.assignment();
            d["loads"] = result.schedule.loads();
            d["alg_makespan"] = row.alg_makespan;
            d["opt_makespan"] = row.opt_makespan;
            d["ratio"] = row.ratio;
            return d;
        },
        py::arg("alg"), py::arg("times"), py::arg("m") = py::none(), py::arg("k") = py::none(),
        "Run one scheduler and compare it with the exact optimum.");

    m.def(
        "optimal_makespan",
        [](const std::vector<Rational>& times, int machines) {
            const auto r = optimal_makespan(make_instance(times), machines);
            return py::make_tuple(r.makespan, r.witness);
        },
        py::arg("times"), py::arg("m"), "Exact optimum and the smallest optimal assignment.");

    m.def(
        "lookahead_window",
        [](const std::vector<Rational>& times, std::size_t i, std::size_t k) {
            const auto w = lookahead_window(make_instance(times), i, k);
            return py::make_tuple(w.current, w.future);
        },
        py::arg("times"), py::arg("i"), py::arg("k"));

    m.def(
        "named_instance",
        [](const std::string& family) {
            const auto inst = named_instance(parse_family(family));
            return std::vector<Rational>(inst.times().begin(), inst.times().end());
        },
        py::arg("family"));

    m.def(
        "verify_bound",
        [](const std::string& alg, std::size_t n_max, const std::vector<Rational>& values, const Rational& bound,
           std::optional<int> machines, std::optional<std::size_t> k, unsigned jobs) {
            const auto id = parse_scheduler_id(alg);
            const auto r = [&] {
                py::gil_scoped_release release;
                return verify_bound(id, default_machines(id, machines), default_lookahead(id, k), n_max, values,
                                    bound, {.jobs = jobs, .limits = {}});
            }();
            py::list violations;
            for (const auto& v : r.violations)
                violations.append(py::make_tuple(
                    std::vector<Rational>(v.instance.times().begin(), v.instance.times().end()), v.ratio));
            py::dict d;
            d["instances_checked"] = r.instances_checked;
            d["max_ratio"] = r.max_ratio;
            d["argmax_instance"] =
                std::vector<Rational>(r.argmax_instance.times().begin(), r.argmax_instance.times().end());
            d["violations"] = violations;
            d["report"] = format_report(r);
            return d;
        },
        py::arg("alg"), py::arg("n_max"), py::arg("values"), py::arg("bound"), py::arg("m") = py::none(),
        py::arg("k") = py::none(), py::arg("jobs") = 1u);

    m.def(
        "play_two_machine_game",
        [](const std::string& alg, std::size_t n, std::size_t k, const Rational& x) {
            const auto id = parse_scheduler_id(alg);
            return game_dict(play_two_machine_game(*make_policy(id, 2), n, k, x));
        },
        py::arg("alg"), py::arg("n"), py::arg("k") = 1, py::arg("x") = Rational(1));

    m.def(
        "play_three_machine_game",
        [](const std::string& alg) {
            return game_dict(play_three_machine_game(*make_policy(parse_scheduler_id(alg), 3)));
        },
        py::arg("alg"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::dispatch(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a command line in-process; returns (exit_code, stdout, stderr).");
}
