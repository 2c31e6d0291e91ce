// Python bindings for the biframe toolkit. Families are passed as numpy
// arrays with one row per atom; complex128 is accepted everywhere and real
// spaces enforce exactly-zero imaginary parts.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biframe/document.hpp"
#include "biframe/errors.hpp"
#include "biframe/fixtures.hpp"
#include "biframe/multiplier.hpp"
#include "biframe/tensor.hpp"
#include "biframe/verify.hpp"
#include "biframe/version.hpp"

namespace py = pybind11;
using namespace biframe;

namespace {

Field parse_field(const std::string& name) {
    if (name == "real") return Field::Real;
    if (name == "complex") return Field::Complex;
    throw InvalidArgument("field must be 'real' or 'complex'");
}

std::string field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

std::shared_ptr<const AtomSpace> as_const(const std::shared_ptr<AtomSpace>& sp) {
    return std::static_pointer_cast<const AtomSpace>(sp);
}

// Rows of `vectors` are the family members F(k).
VectorFamily make_family(const std::shared_ptr<AtomSpace>& mu, const std::string& field,
                         const Matrix& vectors) {
    const Field f = parse_field(field);
    const Space space{static_cast<int>(vectors.cols()), f};
    return VectorFamily(as_const(mu), space, vectors.transpose());
}

Op matrix_op(const Matrix& m, Field field) {
    return Op(Space{static_cast<int>(m.cols()), field},
              Space{static_cast<int>(m.rows()), field}, m);
}

Vec vector_in(const VectorFamily& fam, const Vector& v) { return Vec(fam.space(), v); }

DualSide parse_side(const std::string& side) {
    if (side == "left") return DualSide::Left;
    if (side == "right") return DualSide::Right;
    throw InvalidArgument("side must be 'left' or 'right'");
}

} // namespace

PYBIND11_MODULE(pybiframe, m) {
    m.doc() = "Continuous biframe toolkit: discretized measure spaces, biframe operators and "
              "bounds, reconstruction, multipliers, and tensor products.";
    m.attr("__version__") = BIFRAME_VERSION;

    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<SingularOperator>(m, "SingularOperator", PyExc_ArithmeticError);
    py::register_exception<NotHermitian>(m, "NotHermitian", PyExc_ArithmeticError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<AtomSpace, std::shared_ptr<AtomSpace>>(m, "AtomSpace")
        .def_property_readonly("size", &AtomSpace::size)
        .def_property_readonly("total_weight", &AtomSpace::total_weight)
        .def_property_readonly("weights",
                               [](const AtomSpace& s) {
                                   std::vector<double> w(s.size());
                                   for (std::size_t k = 0; k < s.size(); ++k) w[k] = s.weight(k);
                                   return w;
                               })
        .def_property_readonly("labels",
                               [](const AtomSpace& s) {
                                   std::vector<std::string> l(s.size());
                                   for (std::size_t k = 0; k < s.size(); ++k) l[k] = s.label(k);
                                   return l;
                               })
        .def_property_readonly("nodes",
                               [](const AtomSpace& s) -> py::object {
                                   if (!s.nodes()) return py::none();
                                   return py::cast(*s.nodes());
                               })
        .def("__len__", &AtomSpace::size)
        .def("__repr__", [](const AtomSpace& s) {
            return "AtomSpace(" + std::to_string(s.size()) + " atoms, total weight " +
                   std::to_string(s.total_weight()) + ")";
        });

    m.def("counting_space",
          [](int n) { return std::make_shared<AtomSpace>(counting_space(n)); }, py::arg("n"));
    m.def("partition_space",
          [](const std::vector<double>& w) {
              return std::make_shared<AtomSpace>(partition_space(w));
          },
          py::arg("weights"));
    m.def("gauss_legendre",
          [](int n, double lo, double hi) {
              return std::make_shared<AtomSpace>(
                  build_quadrature({QuadratureKind::GaussLegendre, n, lo, hi}));
          },
          py::arg("n"), py::arg("lo") = 0.0, py::arg("hi") = 1.0);
    m.def("midpoint",
          [](int n, double lo, double hi) {
              return std::make_shared<AtomSpace>(
                  build_quadrature({QuadratureKind::MidpointComposite, n, lo, hi}));
          },
          py::arg("n"), py::arg("lo") = 0.0, py::arg("hi") = 1.0);
    m.def("integrate",
          [](const std::shared_ptr<AtomSpace>& mu, const std::vector<double>& values) {
              return integrate(*mu, values);
          },
          py::arg("space"), py::arg("values"));

    py::class_<VectorFamily>(m, "VectorFamily")
        .def_property_readonly("dim", [](const VectorFamily& f) { return f.space().dim; })
        .def_property_readonly("field",
                               [](const VectorFamily& f) { return field_name(f.space().field); })
        .def_property_readonly("size", &VectorFamily::size)
        .def_property_readonly(
            "vectors", [](const VectorFamily& f) { return Matrix(f.columns().transpose()); });

    m.def("family", &make_family, py::arg("space"), py::arg("field"), py::arg("vectors"),
          "Family over an atom space; one row of `vectors` per atom.");

    py::class_<BiframePair>(m, "BiframePair")
        .def(py::init([](const VectorFamily& f, const VectorFamily& g) {
                 return BiframePair(f, g);
             }),
             py::arg("F"), py::arg("G"))
        .def_property_readonly("F", [](const BiframePair& p) { return p.F; })
        .def_property_readonly("G", [](const BiframePair& p) { return p.G; });

    py::class_<BiframeOperator>(m, "BiframeOperator")
        .def_property_readonly("matrix",
                               [](const BiframeOperator& s) { return s.S.entries; })
        .def_readonly("hermitian_residual", &BiframeOperator::hermitian_residual)
        .def_readonly("lower", &BiframeOperator::lower)
        .def_readonly("upper", &BiframeOperator::upper);

    py::class_<BiframeReport>(m, "BiframeReport")
        .def_readonly("is_bessel", &BiframeReport::is_bessel)
        .def_readonly("is_biframe", &BiframeReport::is_biframe)
        .def_readonly("lower", &BiframeReport::lower)
        .def_readonly("upper", &BiframeReport::upper)
        .def_readonly("hermitian_residual", &BiframeReport::hermitian_residual)
        .def_readonly("tightness_gap", &BiframeReport::tightness_gap)
        .def_property_readonly("truncation_note",
                               [](const BiframeReport& r) -> py::object {
                                   if (!r.truncation_note) return py::none();
                                   return py::cast(*r.truncation_note);
                               })
        .def("__repr__", [](const BiframeReport& r) {
            return "BiframeReport(lower=" + std::to_string(r.lower) +
                   ", upper=" + std::to_string(r.upper) +
                   ", is_biframe=" + (r.is_biframe ? std::string("True") : "False") + ")";
        });

    m.def("assemble", &assemble, py::arg("pair"));
    m.def("classify",
          [](const BiframePair& pair, py::object tol) {
              std::optional<double> t;
              if (!tol.is_none()) t = tol.cast<double>();
              return classify(pair, t);
          },
          py::arg("pair"), py::arg("tol") = py::none());
    m.def("single_frame_bounds", &single_frame_bounds, py::arg("family"));
    m.def("quadratic_form",
          [](const BiframePair& pair, const Vector& f) {
              return quadratic_form(pair, vector_in(pair.F, f));
          },
          py::arg("pair"), py::arg("f"));
    m.def("reconstruct",
          [](const BiframePair& pair, const Vector& f, double tol) {
              auto [left, right] = reconstruct(pair, vector_in(pair.F, f), tol);
              return py::make_tuple(left.entries, right.entries);
          },
          py::arg("pair"), py::arg("f"), py::arg("tol") = 1e-10);
    m.def("swap", &swapped, py::arg("pair"));
    m.def("transport",
          [](const Matrix& t, const BiframePair& pair, double tol) {
              return transport(matrix_op(t, pair.F.space().field), pair, tol);
          },
          py::arg("T"), py::arg("pair"), py::arg("tol") = 1e-10);
    m.def("duality_residual", &duality_residual, py::arg("pair"));
    m.def("canonical_dual",
          [](const BiframePair& pair, const std::string& side, double tol) {
              return canonical_dual(pair, parse_side(side), tol);
          },
          py::arg("pair"), py::arg("side") = "right", py::arg("tol") = 1e-10);

    py::class_<SymbolFunction>(m, "SymbolFunction")
        .def_property_readonly("values", &SymbolFunction::values)
        .def_property_readonly("sup_norm", &SymbolFunction::sup_norm);
    m.def("symbol",
          [](const std::shared_ptr<AtomSpace>& mu, const std::vector<Scalar>& values) {
              return SymbolFunction(as_const(mu), values);
          },
          py::arg("space"), py::arg("values"));

    py::class_<MultiplierOperator>(m, "MultiplierOperator")
        .def_property_readonly("matrix",
                               [](const MultiplierOperator& mo) { return mo.M.entries; })
        .def_readonly("bessel_F", &MultiplierOperator::bessel_f)
        .def_readonly("bessel_G", &MultiplierOperator::bessel_g)
        .def_readonly("norm_bound", &MultiplierOperator::norm_bound)
        .def_readonly("actual_norm", &MultiplierOperator::actual_norm);

    py::class_<LowerBoundCertificate>(m, "LowerBoundCertificate")
        .def_readonly("injectivity", &LowerBoundCertificate::injectivity)
        .def_readonly("implied_lower", &LowerBoundCertificate::implied_lower)
        .def_readonly("actual_lower", &LowerBoundCertificate::actual_lower)
        .def_readonly("holds", &LowerBoundCertificate::holds);

    py::class_<PerturbationCertificate>(m, "PerturbationCertificate")
        .def_readonly("hypothesis_ok", &PerturbationCertificate::hypothesis_ok)
        .def_readonly("hypothesis_gap", &PerturbationCertificate::hypothesis_gap)
        .def_readonly("implied_lower_ff", &PerturbationCertificate::implied_lower_ff)
        .def_readonly("actual_lower_ff", &PerturbationCertificate::actual_lower_ff)
        .def_property_readonly("implied_lower_gg",
                               [](const PerturbationCertificate& c) -> py::object {
                                   if (!c.implied_lower_gg) return py::none();
                                   return py::cast(*c.implied_lower_gg);
                               })
        .def_readonly("actual_lower_gg", &PerturbationCertificate::actual_lower_gg)
        .def_readonly("holds", &PerturbationCertificate::holds);

    m.def("build_multiplier",
          [](const SymbolFunction& sym, const VectorFamily& f, const VectorFamily& g) {
              return build_multiplier(sym, f, g);
          },
          py::arg("symbol"), py::arg("F"), py::arg("G"));
    m.def("multiplier_adjoint",
          [](const MultiplierOperator& mo, const VectorFamily& f, const VectorFamily& g) {
              return multiplier_adjoint(mo, f, g).entries;
          },
          py::arg("multiplier"), py::arg("F"), py::arg("G"));
    m.def("lower_bound_certificate", &lower_bound_certificate, py::arg("multiplier"),
          py::arg("F"), py::arg("G"));
    m.def("perturbation_certificate", &perturbation_certificate, py::arg("multiplier"),
          py::arg("F"), py::arg("G"), py::arg("lambda1"), py::arg("lambda2"));
    m.def("multiplier_dual",
          [](const MultiplierOperator& mo, const SymbolFunction& sym, const VectorFamily& f,
             const VectorFamily& g, double tol) { return multiplier_dual(mo, sym, f, g, tol); },
          py::arg("multiplier"), py::arg("symbol"), py::arg("F"), py::arg("G"),
          py::arg("tol") = 1e-10);

    py::class_<TensorBiframePair>(m, "TensorBiframePair")
        .def_property_readonly("pair", [](const TensorBiframePair& t) { return t.pair; });

    py::class_<SandwichVerdict>(m, "SandwichVerdict")
        .def_readonly("hypothesis_met", &SandwichVerdict::hypothesis_met)
        .def_readonly("product_lower", &SandwichVerdict::product_lower)
        .def_readonly("product_upper", &SandwichVerdict::product_upper)
        .def_readonly("lambda_min", &SandwichVerdict::lambda_min)
        .def_readonly("lambda_max", &SandwichVerdict::lambda_max)
        .def_readonly("holds", &SandwichVerdict::holds);

    m.def("tensor_pair", &tensor_pair, py::arg("p1"), py::arg("p2"));
    m.def("tensor_operator_check", &tensor_operator_check, py::arg("p1"), py::arg("p2"));
    m.def("tensor_sandwich_check", &tensor_sandwich_check, py::arg("p1"), py::arg("p2"),
          py::arg("tol") = 1e-10);
    m.def("tensor_transport",
          [](const Matrix& t1, const Matrix& t2, const BiframePair& p1, const BiframePair& p2) {
              return tensor_transport(matrix_op(t1, p1.F.space().field),
                                      matrix_op(t2, p2.F.space().field), p1, p2);
          },
          py::arg("T1"), py::arg("T2"), py::arg("p1"), py::arg("p2"));
    m.def("tensor_multiplier",
          [](const SymbolFunction& m1, const SymbolFunction& m2, const VectorFamily& f1,
             const VectorFamily& f2, const VectorFamily& g1, const VectorFamily& g2) {
              return tensor_multiplier(m1, m2, f1, f2, g1, g2);
          },
          py::arg("m1"), py::arg("m2"), py::arg("F1"), py::arg("F2"), py::arg("G1"),
          py::arg("G2"));

    // Matrix-level helpers (complex field).
    m.def("kron",
          [](const Matrix& a, const Matrix& b) {
              return kron(matrix_op(a, Field::Complex), matrix_op(b, Field::Complex)).entries;
          },
          py::arg("A"), py::arg("B"));
    m.def("op_norm",
          [](const Matrix& a) { return op_norm(matrix_op(a, Field::Complex)); }, py::arg("A"));
    m.def("sigma_min",
          [](const Matrix& a) { return sigma_min(matrix_op(a, Field::Complex)); }, py::arg("A"));
    m.def("invert",
          [](const Matrix& a, double tol) {
              return invert(matrix_op(a, Field::Complex), tol).entries;
          },
          py::arg("A"), py::arg("tol") = 1e-10);
    m.def("hermitian_eigs",
          [](const Matrix& a, double tol) {
              return hermitian_eigs(matrix_op(a, Field::Complex), tol);
          },
          py::arg("A"), py::arg("tol") = 1e-10);

    m.def("load_document",
          [](const std::string& path) {
              LoadedDocument doc = load_document(path);
              py::object sym = doc.symbol ? py::cast(*doc.symbol) : py::none();
              return py::make_tuple(doc.pair, sym, doc.name);
          },
          py::arg("path"));
    m.def("save_document",
          [](const std::string& path, const BiframePair& pair, py::object symbol,
             const std::string& name, const std::string& description) {
              std::optional<SymbolFunction> sym;
              if (!symbol.is_none()) sym = symbol.cast<SymbolFunction>();
              save_document(path, pair, sym, name, description);
          },
          py::arg("path"), py::arg("pair"), py::arg("symbol") = py::none(),
          py::arg("name") = "", py::arg("description") = "");

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("id", &CheckResult::id)
        .def_readonly("name", &CheckResult::name)
        .def_readonly("measured", &CheckResult::measured)
        .def_readonly("threshold", &CheckResult::threshold)
        .def_readonly("passed", &CheckResult::pass)
        .def("__repr__", [](const CheckResult& r) {
            return "CheckResult(" + r.id + ", " + (r.pass ? "pass" : "FAIL") + ")";
        });
    m.def("verify",
          [](double tol, std::uint64_t seed, int instances) {
              VerifyOptions opts;
              opts.tol = tol;
              opts.seed = seed;
              opts.instances = instances;
              return verify_corpus(opts);
          },
          py::arg("tol") = 1e-10, py::arg("seed") = 20240817, py::arg("instances") = 100);

    // Reference fixtures, handy for demos and smoke tests.
    m.def("fixture_partitioned_basis", [] { return fixtures::partitioned_basis_pair(); });
    m.def("fixture_repeated_basis", &fixtures::repeated_basis_pair, py::arg("dim"));
    m.def("fixture_skew", &fixtures::skew_pair);
    m.def("fixture_shifted_parseval", &fixtures::shifted_parseval_pair, py::arg("dim"));
    m.def("fixture_parseval",
          [](int dim) { return fixtures::parseval_pair(dim, Field::Real); }, py::arg("dim"));
}
