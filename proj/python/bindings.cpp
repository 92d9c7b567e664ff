#include "gcdheight/auxdiv.hpp"
#include "gcdheight/error.hpp"
#include "gcdheight/harness.hpp"
#include "gcdheight/heights.hpp"
#include "gcdheight/ideal.hpp"
#include "gcdheight/rational.hpp"
#include "gcdheight/rr_lab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

namespace py = pybind11;
using namespace gcdheight;

namespace {

Ideal make_ideal(int nvars, const std::vector<std::string>& gens) {
    std::vector<Poly> polys;
    for (const auto& g : gens) polys.push_back(parse_poly(g, nvars));
    return Ideal(nvars, std::move(polys));
}

ProjPoint make_point(const py::sequence& coords) {
    std::vector<Rat> raw;
    for (const auto& c : coords) raw.emplace_back(py::str(c).cast<std::string>());
    return normalize_point(std::span<const Rat>(raw));
}

py::int_ to_py(const BigInt& z) { return py::int_(py::module_::import("builtins").attr("int")(z.get_str())); }

py::tuple point_tuple(const ProjPoint& p) {
    py::tuple t(p.coords().size());
    for (std::size_t i = 0; i < p.coords().size(); ++i) t[i] = to_py(p.coords()[i]);
    return t;
}

SampleSpec make_spec(int n, long height_bound, const std::string& mode, long count, std::uint64_t seed) {
    SampleSpec s;
    s.n = n;
    s.height_bound = height_bound;
    s.mode = parse_sample_mode(mode);
    s.count = count;
    s.seed = seed;
    return s;
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::EmptySubscheme: return "empty_subscheme";
        case ErrorKind::WindowInstability: return "window_instability";
        case ErrorKind::InvalidProfile: return "invalid_profile";
        case ErrorKind::BudgetExhausted: return "budget_exhausted";
        case ErrorKind::InconsistentProfile: return "inconsistent_profile";
        case ErrorKind::AllExcluded: return "all_excluded";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact ideal dimensions, heights and auxiliary-divisor certificates";
    m.attr("__version__") = kToolkitVersion;

    // Subclass of ValueError carrying the error kind as `.kind`.
    py::exception<Error>(m, "GcdHeightError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object type = py::module_::import("gcdheight._core").attr("GcdHeightError");
            py::object exc = type(e.what());
            exc.attr("kind") = kind_name(e.kind());
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    m.def("parse_poly", [](const std::string& text, int nvars) { return to_string(parse_poly(text, nvars)); },
          py::arg("text"), py::arg("nvars"), "Normal-form text of a polynomial.");

    m.def("groebner",
          [](int nvars, const std::vector<std::string>& gens) {
              const Ideal ideal = make_ideal(nvars, gens);
              std::vector<std::string> out;
              for (const Poly& g : ideal.groebner()) out.push_back(to_string(g));
              return out;
          },
          py::arg("nvars"), py::arg("generators"));

    m.def("membership",
          [](const std::string& f, int nvars, const std::vector<std::string>& gens, int r) {
              return membership(parse_poly(f, nvars), ideal_power(make_ideal(nvars, gens), r));
          },
          py::arg("f"), py::arg("nvars"), py::arg("generators"), py::arg("r") = 1);

    m.def("quotient_dim",
          [](int nvars, const std::vector<std::string>& gens, int m_, int r) {
              return quotient_dim(ideal_power(make_ideal(nvars, gens), r), m_);
          },
          py::arg("nvars"), py::arg("generators"), py::arg("m"), py::arg("r") = 1);

    m.def("graded_piece_dim",
          [](int nvars, const std::vector<std::string>& gens, int m_, int r) {
              return graded_piece_dim(ideal_power(make_ideal(nvars, gens), r), m_);
          },
          py::arg("nvars"), py::arg("generators"), py::arg("m"), py::arg("r") = 1);

    m.def("profile",
          [](int nvars, const std::vector<std::string>& gens) {
              GeomProfile p = hilbert_profile(make_ideal(nvars, gens));
              py::dict d;
              d["n"] = p.n;
              d["d"] = p.d;
              d["c"] = p.c;
              d["degY"] = to_py(p.degY);
              std::vector<std::string> hp;
              for (const Rat& q : p.hilbert_polynomial) hp.push_back(to_string(q));
              d["hilbert_polynomial"] = hp;
              d["coefficient"] = p.c >= 2 ? py::object(py::float_(bound_coefficient(p))) : py::object(py::none());
              return d;
          },
          py::arg("nvars"), py::arg("generators"));

    m.def("bound_coefficient",
          [](int n, int d, long degY) {
              GeomProfile p;
              p.n = n;
              p.d = d;
              p.c = n - d;
              p.degY = degY;
              return bound_coefficient(p);
          },
          py::arg("n"), py::arg("d"), py::arg("degY"));

    m.def("search",
          [](int nvars, const std::vector<std::string>& gens, double epsilon, int r_budget, int m_budget) {
              SearchResult res = search_certificate(make_ideal(nvars, gens), epsilon, r_budget, m_budget);
              py::dict d;
              d["certificate"] = certificate_to_json(res.certificate);
              d["slope"] = to_string(res.certificate.slope());
              d["coefficient"] = res.coefficient;
              d["within_epsilon"] = res.within_epsilon;
              return d;
          },
          py::arg("nvars"), py::arg("generators"), py::arg("epsilon") = 0.1, py::arg("r_budget") = 4,
          py::arg("m_budget") = 12, "Certificate search; returns the certificate JSON and the slope.");

    m.def("verify",
          [](const std::string& cert_json) { return certificate_diagnostics(certificate_from_json(cert_json)); },
          py::arg("certificate"), "Diagnostics for a certificate JSON text; empty when valid.");

    m.def("weil_height", [](const py::sequence& x) { return weil_height(make_point(x)); }, py::arg("x"));

    m.def("gcd_height",
          [](const py::sequence& x, int nvars, const std::vector<std::string>& gens) {
              HeightBreakdown h = gcd_height(make_point(x), make_ideal(nvars, gens));
              py::dict d;
              d["weil"] = h.weil;
              d["gcd_finite"] = h.gcd_finite;
              d["gcd_arch"] = h.gcd_arch;
              d["gcd_total"] = h.gcd_total;
              d["vanishing"] = h.vanishing;
              return d;
          },
          py::arg("x"), py::arg("nvars"), py::arg("generators"));

    m.def("normalize_point", [](const py::sequence& x) { return point_tuple(make_point(x)); }, py::arg("x"));

    m.def("colength_linear", [](int c, int r) { return to_py(colength_linear(c, r)); }, py::arg("c"), py::arg("r"));

    m.def("lemma_h0",
          [](int n, int e) {
              LemmaH0Check chk = lemma_h0(n, e);
              return py::make_tuple(to_py(chk.h0), to_py(chk.bound), chk.holds, chk.equality);
          },
          py::arg("n"), py::arg("e"), "(h0, bound, holds, equality)");

    m.def("sample",
          [](int n, long height_bound, const std::string& mode, long count, std::uint64_t seed) {
              py::list out;
              for (const ProjPoint& p : sample_points(make_spec(n, height_bound, mode, count, seed)))
                  out.append(point_tuple(p));
              return out;
          },
          py::arg("n"), py::arg("height_bound"), py::arg("mode") = "exhaustive", py::arg("count") = 0,
          py::arg("seed") = 0);

    m.def("bound",
          [](const std::string& cert_json, long height_bound, const std::string& mode, long count,
             std::uint64_t seed, unsigned threads) {
              Certificate cert = certificate_from_json(cert_json);
              SampleSpec spec = make_spec(cert.nvars - 1, height_bound, mode, count, seed);
              Summary s;
              {
                  py::gil_scoped_release release;
                  s = run_bound(cert, spec, nullptr, threads);
              }
              return summary_json(s, cert, spec);
          },
          py::arg("certificate"), py::arg("height_bound"), py::arg("mode") = "exhaustive", py::arg("count") = 0,
          py::arg("seed") = 0, py::arg("threads") = 0, "Summary JSON of the height bound over a sample.");
}
