#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "qmsd/dense_oracle.hpp"
#include "qmsd/distill.hpp"
#include "qmsd/enumerators.hpp"
#include "qmsd/pipeline.hpp"

namespace py = pybind11;
using namespace qmsd;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple to_py(const BigRat& q) {
    return py::make_tuple(to_py(numerator(q)), to_py(denominator(q)));
}

py::dict coeff_dict(const WeightEnumerator& w) {
    py::dict d;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i)
        if (w.coeffs[i] != 0) d[py::int_(i)] = to_py(w.coeffs[i]);
    return d;
}

WeightEnumerator enum_from(const py::dict& coeffs, std::size_t n, int k,
                           WeightEnumerator::Kind kind) {
    WeightEnumerator w;
    w.n = n;
    w.k = k;
    w.kind = kind;
    w.coeffs.assign(n + 1, BigInt(0));
    for (auto item : coeffs) {
        auto deg = item.first.cast<std::size_t>();
        if (deg > n) throw Error("enumerator: out-of-range degree");
        w.coeffs[deg] = BigInt(py::str(item.second).cast<std::string>());
    }
    return w;
}

struct LoadableCode {
    std::optional<ClassicalTernaryCode> classical;
    std::optional<StabilizerCode> stabilizer;
};

LoadableCode load_text_impl(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        break;
    }
    LoadableCode lc;
    if (line == "TERNARY-CODE v1") {
        lc.classical = parse_classical(text);
    } else if (line == "STABILIZER-CODE v1") {
        StabilizerCode s = parse_stabilizer(text);
        validate(s);
        lc.stabilizer = std::move(s);
    } else {
        throw Error("unrecognized format");
    }
    return lc;
}

py::dict profile_dict(const DistillationProfile& p) {
    py::dict d;
    d["distills"] = p.distills;
    d["classification"] = p.classification;
    d["b_at_minus_half"] = to_py(p.b_at_minus_half);
    d["delta"] = p.delta ? py::object(py::int_(*p.delta)) : py::object(py::none());
    d["leading"] = to_py(p.leading);
    d["threshold"] = p.threshold_value;
    d["success_at_zero"] = to_py(p.success_at_zero);
    d["b_nonzero"] = p.conditions.b_nonzero;
    d["sum_zero"] = p.conditions.sum_zero;
    d["deriv1_zero"] = p.conditions.deriv1_zero;
    d["deriv2_zero"] = p.conditions.deriv2_zero;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "qutrit magic state distillation screening (exact arithmetic core)";

    py::register_exception<ResourceLimit>(m, "ResourceLimit");
    py::register_exception<Error>(m, "QmsdError");

    m.def("wenum", [](const std::string& text, const std::string& method) {
        LoadableCode lc = load_text_impl(text);
        WeightEnumerator a;
        if (lc.classical) {
            a = (method == "naive") ? simple_wenum_naive(css_from_classical(*lc.classical))
                                    : simple_wenum_css_fast(*lc.classical);
        } else {
            if (method == "fast")
                throw Error("fast method needs a TERNARY-CODE input");
            a = simple_wenum_naive(*lc.stabilizer);
        }
        py::dict d;
        d["n"] = a.n;
        d["k"] = a.k;
        d["coeffs"] = coeff_dict(a);
        return d;
    }, py::arg("text"), py::arg("method") = "fast",
       "Simple weight enumerator A(z) of a code file's text");

    m.def("macwilliams", [](const py::dict& coeffs, std::size_t n, int k) {
        WeightEnumerator a = enum_from(coeffs, n, k, WeightEnumerator::Kind::A);
        return coeff_dict(macwilliams(a, n, k));
    }, py::arg("coeffs"), py::arg("n"), py::arg("k"),
       "Dual enumerator B(z) from A(z) coefficients");

    m.def("distance", [](const py::dict& a_c, const py::dict& b_c, std::size_t n, int k) {
        WeightEnumerator a = enum_from(a_c, n, k, WeightEnumerator::Kind::A);
        WeightEnumerator b = enum_from(b_c, n, k, WeightEnumerator::Kind::B);
        auto d = distance_from_enums(a, b);
        return d ? py::object(py::int_(*d)) : py::object(py::none());
    }, py::arg("a_coeffs"), py::arg("b_coeffs"), py::arg("n"), py::arg("k"));

    m.def("distill_profile", [](const py::dict& coeffs, std::size_t n, int k) {
        WeightEnumerator a = enum_from(coeffs, n, k, WeightEnumerator::Kind::A);
        WeightEnumerator b = macwilliams(a, n, k);
        return profile_dict(screen_enumerators(a, b, n, k));
    }, py::arg("coeffs"), py::arg("n"), py::arg("k"),
       "Full distillation screen from A(z) coefficients");

    m.def("css", [](const std::string& text) {
        ClassicalTernaryCode c = parse_classical(text);
        StabilizerCode s = css_from_classical(c);
        validate(s);
        return format_stabilizer(s);
    }, py::arg("text"), "CSS stabilizer file text from a TERNARY-CODE file text");

    m.def("shorten", [](const std::string& text, std::size_t coord,
                        std::array<int, 4> rot) {
        StabilizerCode state = parse_stabilizer(text);
        validate(state);
        Rotation r{FFElement(rot[0] % 3), FFElement(rot[1] % 3),
                   FFElement(rot[2] % 3), FFElement(rot[3] % 3)};
        return format_stabilizer(shorten(state, coord, r));
    }, py::arg("text"), py::arg("coord"),
       py::arg("rotation") = std::array<int, 4>{1, 0, 0, 1},
       "Shorten an [[n,0]] state file text at a 1-based coordinate");

    m.def("search", [](const std::string& path, int jobs) {
        SearchOptions opt;
        opt.jobs = jobs;
        SearchReport report = run_search(path, opt);
        std::ostringstream out;
        write_report_json(report, out);
        return out.str();
    }, py::arg("path"), py::arg("jobs") = 1,
       "Screen every code under a path; returns the JSON report");

    m.def("oracle", [](int n_min, int n_max, int trials, std::uint64_t seed, double tol) {
        OracleReport r = run_oracle_trials(n_min, n_max, trials, seed, tol);
        py::dict d;
        d["trials"] = r.trials;
        d["max_residual"] = r.max_residual;
        d["failures"] = r.failures;
        return d;
    }, py::arg("n_min") = 2, py::arg("n_max") = 4, py::arg("trials") = 25,
       py::arg("seed") = 1, py::arg("tol") = 1e-9,
       "Randomized dense-matrix identity checks");

    m.def("enumerator_digest", [](const py::dict& coeffs, std::size_t n, int k) {
        return enumerator_digest(enum_from(coeffs, n, k, WeightEnumerator::Kind::A));
    }, py::arg("coeffs"), py::arg("n"), py::arg("k") = 1);
}
