#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qortho/climit.hpp"
#include "qortho/operators.hpp"
#include "qortho/orthogonality.hpp"
#include "qortho/polynomials.hpp"
#include "qortho/runner.hpp"

namespace py = pybind11;
using namespace qortho;

namespace {

py::dict to_dict(const VerificationReport& r) {
  py::dict d;
  d["identity_id"] = r.identity_id;
  d["params"] = py::make_tuple(r.params.q, r.params.a, r.params.b);
  d["i"] = r.i;
  d["j"] = r.j;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["residual"] = r.residual;
  d["terms_used"] = r.terms_used;
  d["tail_estimate"] = r.tail_estimate;
  d["tolerance"] = r.tolerance;
  d["scale"] = r.scale;
  d["passed"] = r.passed;
  d["status"] = status_name(r.status);
  d["precision"] = r.precision;
  d["note"] = r.note;
  py::dict extras;
  for (const auto& [k, v] : r.extras) extras[py::str(k)] = v;
  d["extras"] = extras;
  return d;
}

VerifyOptions options(double tol, const std::string& precision) {
  VerifyOptions o;
  o.tolerance = tol;
  if (precision == "extended") o.precision = Precision::Extended;
  else if (precision != "double") throw ParameterError("precision must be double or extended");
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "big q-Laguerre / q-Meixner numerics and identity checks";

  py::class_<QParams>(m, "QParams")
      .def(py::init([](double q, double a, double b) { return QParams::make(q, a, b); }), py::arg("q"), py::arg("a"),
           py::arg("b"))
      .def_static("from_l", &QParams::from_l, py::arg("q"), py::arg("l"), py::arg("b"))
      .def_readonly("q", &QParams::q)
      .def_readonly("a", &QParams::a)
      .def_readonly("b", &QParams::b)
      .def_property_readonly("l", &QParams::l)
      .def_property_readonly("alpha", &QParams::alpha)
      .def_property_readonly("beta1", &QParams::beta1)
      .def_property_readonly("beta2", &QParams::beta2)
      .def("__repr__", [](const QParams& p) {
        std::ostringstream o;
        o << "QParams(q=" << p.q << ", a=" << p.a << ", b=" << p.b << ")";
        return o.str();
      });

  m.def("q_pochhammer", &q_pochhammer<double>, py::arg("a"), py::arg("q"), py::arg("n"));
  m.def("q_pochhammer_inf", [](double a, double q) { return q_pochhammer_inf<double>(a, q); }, py::arg("a"),
        py::arg("q"));
  m.def("q_number", &q_number<double>, py::arg("a"), py::arg("q"));
  m.def("phi_2_1", [](double a, double b, double c, double q, double z) { return phi_2_1<double>(a, b, c, q, z); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("q"), py::arg("z"));
  m.def("phi_3_2",
        [](double a1, double a2, double a3, double b1, double b2, double q, double z) {
          return phi_3_2<double>(a1, a2, a3, b1, b2, q, z);
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("b1"), py::arg("b2"), py::arg("q"), py::arg("z"));
  m.def("jackson_Eq", [](double z, double q) { return jackson_Eq<double>(z, q); }, py::arg("z"), py::arg("q"));

  m.def("big_q_laguerre", [](long n, double x, const QParams& p) { return big_q_laguerre<double>(n, x, p); },
        py::arg("n"), py::arg("x"), py::arg("p"));
  m.def("big_q_laguerre_recurrence", &big_q_laguerre_recurrence<double>, py::arg("n_max"), py::arg("x"),
        py::arg("p"));
  m.def("big_q_laguerre_generating", &big_q_laguerre_generating<double>, py::arg("n_max"), py::arg("x"),
        py::arg("p"));
  m.def("q_meixner",
        [](long n, long mm, double b, double c, double q) { return q_meixner<double>(n, mm, b, c, q); },
        py::arg("n"), py::arg("m"), py::arg("bparam"), py::arg("c"), py::arg("q"));
  m.def("dual_f", &dual_f<double>, py::arg("n"), py::arg("m"), py::arg("p"));
  m.def("dual_g", &dual_g<double>, py::arg("n"), py::arg("m"), py::arg("p"));
  m.def("generating_series",
        [](double x, double t, const QParams& p, long n_max) {
          auto g = generating_series<double>(x, t, p, n_max);
          return py::make_tuple(g.value, g.tail_estimate, g.converged);
        },
        py::arg("x"), py::arg("t"), py::arg("p"), py::arg("n_max"));
  m.def("generating_closed", [](double x, double t, const QParams& p) { return generating_closed<double>(x, t, p); },
        py::arg("x"), py::arg("t"), py::arg("p"));
  m.def("q_inverse_meixner_relation",
        [](long n, double x, double b, double c, double q) {
          return q_inverse_meixner_relation<double>(n, x, b, c, q);
        },
        py::arg("n"), py::arg("x"), py::arg("bparam"), py::arg("c"), py::arg("q"));
  m.def("classical_laguerre", &classical_laguerre<double>, py::arg("n"), py::arg("alpha"), py::arg("x"));

  m.def("build_A",
        [](const QParams& p, std::size_t dim) {
          auto T = build_A<double>(p, dim);
          return py::make_tuple(T.diag, T.off);
        },
        py::arg("p"), py::arg("dim"));
  m.def("eig_tridiagonal",
        [](std::vector<double> diag, std::vector<double> off) {
          SymTridiagonal<double> T{std::move(diag), std::move(off)};
          return eig_tridiagonal(T);
        },
        py::arg("diag"), py::arg("off"));
  m.def("spectrum_points",
        [](const QParams& p, std::size_t n) {
          auto s = spectrum_points<double>(p, n);
          return py::make_tuple(s.upper, s.lower);
        },
        py::arg("p"), py::arg("n"));
  m.def("eigen_coefficients",
        [](double lambda, const QParams& p, long m_max) { return eigen_coefficients<double>(lambda, p, m_max).coeffs; },
        py::arg("lambda_"), py::arg("p"), py::arg("m_max"));
  m.def("normalization_c", [](long n, const QParams& p) { return normalization_c<double>(n, p); }, py::arg("n"),
        py::arg("p"));
  m.def("normalization_cprime", [](long n, const QParams& p) { return normalization_cprime<double>(n, p); },
        py::arg("n"), py::arg("p"));

  auto verifier = [&m](const char* name, auto fn) {
    m.def(
        name,
        [fn](long i, long j, const QParams& p, double tol, const std::string& precision) {
          return to_dict(fn(i, j, p, options(tol, precision)));
        },
        py::arg("i"), py::arg("j"), py::arg("p"), py::arg("tol") = 1e-8, py::arg("precision") = "double");
  };
  verifier("verify_big_laguerre_orthogonality", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_big_laguerre_orthogonality(i, j, p, {}, o);
  });
  verifier("verify_unitarity_rows", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_unitarity(RowCol::Rows, i, j, p, {}, o);
  });
  verifier("verify_unitarity_columns", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_unitarity(RowCol::Columns, i, j, p, {}, o);
  });
  verifier("verify_dual_ff", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_dual_orthogonality(DualKind::FF, i, j, p, {}, o);
  });
  verifier("verify_dual_gg", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_dual_orthogonality(DualKind::GG, i, j, p, {}, o);
  });
  verifier("verify_dual_fg", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_dual_orthogonality(DualKind::FG, i, j, p, {}, o);
  });
  verifier("verify_meixner_orthogonality", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_meixner_orthogonality(i, j, p, {}, o);
  });
  verifier("verify_negative_b_meixner_orthogonality", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_negative_b_meixner_orthogonality(i, j, p, {}, o);
  });
  verifier("verify_Eq_zero_identity", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_Eq_zero_identity(i, j, p, {}, o);
  });
  verifier("verify_biorthogonality", [](long i, long j, const QParams& p, const VerifyOptions& o) {
    return verify_biorthogonality(i, j, p, {}, o);
  });
  m.def("verify_identity_3637",
        [](const QParams& p, double tol, const std::string& precision) {
          return to_dict(verify_identity_3637(p, {}, options(tol, precision)));
        },
        py::arg("p"), py::arg("tol") = 1e-8, py::arg("precision") = "double");

  m.def("limit_polynomial_check",
        [](long n, double x, double alpha, double beta) {
          LimitSweep s = LimitSweep::standard();
          s.alpha = alpha;
          s.beta = beta;
          auto r = limit_polynomial_check(n, x, s);
          py::list records;
          for (const auto& rec : r.records) records.append(to_dict(rec));
          py::dict d;
          d["records"] = records;
          d["errors"] = r.errors;
          d["order"] = r.order;
          d["constant"] = r.constant;
          return d;
        },
        py::arg("n"), py::arg("x"), py::arg("alpha") = 1.0, py::arg("beta") = 0.5);
  m.def("classical_eigenfunction", &classical_eigenfunction, py::arg("lambda_"), py::arg("x"), py::arg("l"));
  m.def("classical_operator_check",
        [](double lambda, double x, double l, double h) { return to_dict(classical_operator_check(lambda, x, l, h)); },
        py::arg("lambda_"), py::arg("x"), py::arg("l"), py::arg("h") = 1e-3);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the qortho command line in-process; returns (exit_code, stdout, stderr).");
}
