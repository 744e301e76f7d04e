#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <string>

#include "framekit/dilation.hpp"
#include "framekit/error.hpp"
#include "framekit/generate.hpp"
#include "framekit/hilbert.hpp"
#include "framekit/io.hpp"
#include "framekit/linalg.hpp"
#include "framekit/pasf.hpp"
#include "framekit/riesz.hpp"

namespace py = pybind11;
using namespace framekit;

namespace {

using InArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const InArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  std::vector<double> data(a.data(), a.data() + rows * cols);
  return Matrix(rows, cols, std::move(data));
}

py::array_t<double> to_array(const Matrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  if (m.rows() * m.cols() > 0) {
    std::memcpy(out.mutable_data(), m.entries().data(), sizeof(double) * m.rows() * m.cols());
  }
  return out;
}

Vector to_vector(const InArray& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
  return Vector(a.data(), a.data() + a.shape(0));
}

py::array_t<double> to_array(const Vector& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  for (const auto& c : r.checks()) d[py::str(c.name)] = c.defect;
  return d;
}

}  // namespace

PYBIND11_MODULE(_framekit, m) {
  m.doc() = "p-approximate Schauder frames, Riesz bases and their dilations";

  auto base_error = py::register_exception<Error>(m, "FramekitError");
  py::register_exception<NotInvertible>(m, "NotInvertible", base_error);
  py::register_exception<NotSurjective>(m, "NotSurjective", base_error);
  py::register_exception<NotAFrame>(m, "NotAFrame", base_error);
  py::register_exception<NotHilbertStyle>(m, "NotHilbertStyle", base_error);
  py::register_exception<NotInComplement>(m, "NotInComplement", base_error);
  py::register_exception<ParseError>(m, "ParseError", base_error);

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
  m.attr("DEFAULT_COND_LIMIT") = kDefaultCondLimit;

  // operator core
  m.def("invert", [](const InArray& a, double cond_limit) {
        auto r = invert(to_matrix(a), cond_limit);
        return py::make_tuple(to_array(r.inverse), r.condition_estimate);
      }, py::arg("m"), py::arg("cond_limit") = kDefaultCondLimit);
  m.def("defect", [](const InArray& a, const InArray& b) { return defect(to_matrix(a), to_matrix(b)); });
  m.def("vector_p_norm", [](const InArray& v, double p) { return vector_p_norm(to_vector(v), p); });
  m.def("estimate_operator_p_norm", [](const InArray& a, double p, int samples, std::uint64_t seed) {
        return estimate_operator_p_norm(to_matrix(a), p, samples, seed);
      }, py::arg("m"), py::arg("p"), py::arg("samples") = 16, py::arg("seed") = 0);
  m.def("symmetric_eigenvalues", [](const InArray& a) { return symmetric_eigenvalues(to_matrix(a)); });

  // pasf
  py::enum_<PasfKind>(m, "PasfKind")
      .value("SCHAUDER_FRAME", PasfKind::SchauderFrame)
      .value("PASF", PasfKind::Pasf)
      .value("NOT_PASF", PasfKind::NotPasf);
  py::enum_<ExpansionMode>(m, "ExpansionMode")
      .value("DUAL_FUNCTIONALS", ExpansionMode::DualFunctionals)
      .value("DUAL_VECTORS", ExpansionMode::DualVectors);

  py::class_<PasfClassification>(m, "PasfClassification")
      .def_readonly("kind", &PasfClassification::kind)
      .def_readonly("condition_of_S", &PasfClassification::condition_of_S)
      .def_readonly("identity_defect_of_S", &PasfClassification::identity_defect_of_S);

  py::class_<FramePair>(m, "FramePair")
      .def(py::init([](const InArray& f, const InArray& t, double p, std::optional<double> q) {
             return FramePair(to_matrix(f), to_matrix(t), p, q.value_or(p));
           }),
           py::arg("functionals"), py::arg("vectors"), py::arg("p") = 2.0, py::arg("q") = py::none())
      .def_static("hilbert", [](const InArray& t) { return FramePair::hilbert(to_matrix(t)); })
      .def_property_readonly("space_dim", &FramePair::space_dim)
      .def_property_readonly("seq_dim", &FramePair::seq_dim)
      .def_property_readonly("p", &FramePair::p)
      .def_property_readonly("q", &FramePair::q)
      .def_property_readonly("functionals", [](const FramePair& s) { return to_array(s.functionals()); })
      .def_property_readonly("vectors", [](const FramePair& s) { return to_array(s.vectors()); })
      .def("is_hilbert_style", &FramePair::is_hilbert_style, py::arg("tolerance") = 0.0)
      .def("to_json", [](const FramePair& s) { return io::dump(io::pair_to_json(s)); })
      .def_static("from_json", [](const std::string& text) { return io::pair_from_json(io::parse_json(text)); })
      .def("__repr__", [](const FramePair& s) {
        return "<FramePair d=" + std::to_string(s.space_dim()) + " n=" + std::to_string(s.seq_dim()) +
               " p=" + std::to_string(s.p()) + ">";
      });

  m.def("analysis", [](const FramePair& s, const InArray& x) { return to_array(analysis(s, to_vector(x))); });
  m.def("synthesis", [](const FramePair& s, const InArray& a) { return to_array(synthesis(s, to_vector(a))); });
  m.def("frame_operator", [](const FramePair& s) { return to_array(frame_operator(s)); });
  m.def("classify", &classify, py::arg("pair"), py::arg("cond_limit") = kDefaultCondLimit,
        py::arg("tolerance") = kDefaultTolerance);
  m.def("canonical_dual", &canonical_dual, py::arg("pair"), py::arg("cond_limit") = kDefaultCondLimit);
  m.def("reconstruct", [](const FramePair& s, const InArray& x, ExpansionMode mode, double cond_limit) {
        return to_array(reconstruct(s, to_vector(x), mode, cond_limit));
      }, py::arg("pair"), py::arg("x"), py::arg("mode") = ExpansionMode::DualFunctionals,
      py::arg("cond_limit") = kDefaultCondLimit);
  m.def("pasf_projection", [](const FramePair& s, double cond_limit) {
        return to_array(pasf_projection(s, cond_limit));
      }, py::arg("pair"), py::arg("cond_limit") = kDefaultCondLimit);

  // riesz
  py::class_<RieszVerdict>(m, "RieszVerdict")
      .def_readonly("is_riesz", &RieszVerdict::is_riesz)
      .def_readonly("route_definitional", &RieszVerdict::route_definitional)
      .def_readonly("route_characterization", &RieszVerdict::route_characterization)
      .def_readonly("identity_defect", &RieszVerdict::identity_defect);
  m.def("riesz_from_invertible", [](const InArray& t, double c) { return riesz_from_invertible(to_matrix(t), c); },
        py::arg("t"), py::arg("cond_limit") = kDefaultCondLimit);
  m.def("holub_frame_from_operator", [](const InArray& t) { return holub_frame_from_operator(to_matrix(t)); });
  m.def("is_riesz_basis_hilbert", &is_riesz_basis_hilbert, py::arg("pair"),
        py::arg("cond_limit") = kDefaultCondLimit, py::arg("tolerance") = kDefaultTolerance);
  m.def("is_p_approximate_riesz", &is_p_approximate_riesz, py::arg("pair"),
        py::arg("cond_limit") = kDefaultCondLimit, py::arg("tolerance") = kDefaultTolerance);

  // dilation
  py::class_<DilationBundle>(m, "DilationBundle")
      .def_readonly("base", &DilationBundle::base)
      .def_property_readonly("complement_basis", [](const DilationBundle& b) { return to_array(b.complement_basis); })
      .def_property_readonly("omega_x", [](const DilationBundle& b) { return to_array(b.omega_x); })
      .def_property_readonly("omega_y", [](const DilationBundle& b) { return to_array(b.omega_y); })
      .def_property_readonly("g", [](const DilationBundle& b) { return to_array(b.g); })
      .def_property_readonly("s_g_omega", [](const DilationBundle& b) { return to_array(b.s_g_omega); })
      .def_property_readonly("dilated_dim", &DilationBundle::dilated_dim)
      .def_property_readonly("degenerate", &DilationBundle::degenerate)
      .def("to_json", [](const DilationBundle& b) { return io::dump(io::bundle_to_json(b)); })
      .def_static("from_json", [](const std::string& t) { return io::bundle_from_json(io::parse_json(t)); });

  m.def("dilate", &dilate, py::arg("pair"), py::arg("cond_limit") = kDefaultCondLimit);
  m.def("verify_dilation", [](const DilationBundle& b, double tol) {
        const auto r = verify_dilation(b, tol);
        return py::make_tuple(r.overall(), report_dict(r));
      }, py::arg("bundle"), py::arg("tolerance") = kDefaultTolerance);
  m.def("compress", [](const DilationBundle& b, const InArray& x, const InArray& y) {
        return to_array(compress(b, {to_vector(x), to_vector(y)}));
      });
  m.def("direct_sum_norm", [](const DilationBundle& b, const InArray& x, const InArray& y) {
        return direct_sum_norm(b, {to_vector(x), to_vector(y)});
      });
  m.def("dilated_pair", &dilated_pair, py::arg("bundle"), py::arg("cond_limit") = kDefaultCondLimit);

  // hilbert
  m.def("frame_bounds", [](const InArray& t) {
    const auto b = frame_bounds(HilbertFrame{to_matrix(t)});
    return py::make_tuple(b.a, b.b);
  });
  m.def("hilbert_fundamentals", [](const InArray& t, double tol) {
        const auto r = hilbert_fundamentals(HilbertFrame{to_matrix(t)}, tol);
        return py::make_tuple(r.overall(), report_dict(r));
      }, py::arg("vectors"), py::arg("tolerance") = kDefaultTolerance);
  m.def("naimark_dilate", [](const InArray& t, double tol) {
        auto nd = naimark_dilate(HilbertFrame{to_matrix(t)}, tol);
        py::dict out;
        out["bundle"] = nd.bundle;
        out["overall"] = nd.report.overall();
        out["defects"] = report_dict(nd.report);
        out["omega"] = to_array(nd.omega.vectors);
        out["frame_bounds"] = py::make_tuple(nd.base_bounds.a, nd.base_bounds.b);
        out["omega_frame_bounds"] = py::make_tuple(nd.omega_bounds.a, nd.omega_bounds.b);
        out["omega_spectrum"] = nd.omega_spectrum;
        return out;
      }, py::arg("vectors"), py::arg("tolerance") = kDefaultTolerance);

  // generators
  m.def("generate", [](std::size_t d, std::size_t n, double p, std::optional<double> q, std::uint64_t seed,
                       const std::string& kind, double condition_target, bool mercedes) {
        const auto k = parse_gen_kind(kind);
        if (!k) throw py::value_error("unknown kind '" + kind + "'");
        GenSpec spec{d, n, p, q.value_or(p), seed, *k, condition_target, mercedes};
        return generate(spec);
      }, py::arg("d"), py::arg("n"), py::arg("p") = 2.0, py::arg("q") = py::none(), py::arg("seed") = 0,
      py::arg("kind") = "RANDOM_PASF", py::arg("condition_target") = 1e6, py::arg("mercedes") = false);
  m.def("mercedes_pair", &mercedes_pair);
}
