#include "biqeuclid/biquad.hpp"
#include "biqeuclid/euclid.hpp"
#include "biqeuclid/genus.hpp"
#include "biqeuclid/localsym.hpp"
#include "biqeuclid/quadfield.hpp"
#include "biqeuclid/table1.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace biqeuclid;

namespace PYBIND11_NAMESPACE {
namespace detail {

// cpp_int <-> python int, through the decimal representation
template <> struct type_caster<Integer> {
  public:
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = Integer(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Integer& v, return_value_policy, handle)
    {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// rationals accept int, (num, den) pairs, or anything with
// numerator/denominator attributes (fractions.Fraction)
template <> struct type_caster<Rational> {
  public:
    PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

    bool load(handle src, bool convert)
    {
        make_caster<Integer> int_caster;
        if (int_caster.load(src, convert)) {
            value = Rational(cast_op<Integer>(int_caster));
            return true;
        }
        if (py::isinstance<py::tuple>(src)) {
            auto t = py::reinterpret_borrow<py::tuple>(src);
            if (t.size() != 2)
                return false;
            value = Rational(t[0].cast<Integer>(), t[1].cast<Integer>());
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            value = Rational(src.attr("numerator").cast<Integer>(),
                             src.attr("denominator").cast<Integer>());
            return true;
        }
        return false;
    }

    static handle cast(const Rational& v, return_value_policy, handle)
    {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        namespace mp = boost::multiprecision;
        return fraction(py::cast(Integer(mp::numerator(v))), py::cast(Integer(mp::denominator(v))))
            .release();
    }
};

} // namespace detail
} // namespace PYBIND11_NAMESPACE

namespace {

SymbolValue hilbert_symbol_py(const Rational& a, const Rational& b, const py::object& place)
{
    if (place.is_none())
        return hilbert_symbol(a, b, Place::real());
    return hilbert_symbol(a, b, Place::finite(place.cast<Integer>()));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Euclidean ideal classes of real biquadratic fields Q(sqrt(p1), sqrt(q1*q2))";

    py::class_<QuadUnit>(m, "QuadUnit")
        .def_readonly("a", &QuadUnit::a)
        .def_readonly("b", &QuadUnit::b)
        .def_readonly("denom", &QuadUnit::denom)
        .def_readonly("m", &QuadUnit::m)
        .def_readonly("norm", &QuadUnit::norm)
        .def("__str__", [](const QuadUnit& u) { return to_string(u); })
        .def("__repr__", [](const QuadUnit& u) { return "QuadUnit(" + to_string(u) + ")"; });

    py::class_<QuadFieldData>(m, "QuadFieldData")
        .def_readonly("m", &QuadFieldData::m)
        .def_readonly("D", &QuadFieldData::D)
        .def_readonly("h", &QuadFieldData::h)
        .def_readonly("h_narrow", &QuadFieldData::h_narrow);

    py::class_<GenusVerdict>(m, "GenusVerdict")
        .def_readonly("elementary", &GenusVerdict::elementary)
        .def_readonly("case_label", &GenusVerdict::case_label)
        .def_readonly("bullet", &GenusVerdict::bullet)
        .def_property_readonly("orientation",
                               [](const GenusVerdict& g) {
                                   return py::make_tuple(g.orientation.first,
                                                         g.orientation.second);
                               })
        .def("__repr__", [](const GenusVerdict& g) {
            std::ostringstream os;
            os << "GenusVerdict(elementary=" << (g.elementary ? "True" : "False") << ", case "
               << g.case_label << ")";
            return os.str();
        });

    py::class_<DecideCertificate>(m, "DecideCertificate")
        .def_readonly("h0", &DecideCertificate::h0)
        .def_readonly("h1", &DecideCertificate::h1)
        .def_readonly("h2", &DecideCertificate::h2)
        .def_readonly("h0_is_one", &DecideCertificate::h0_is_one)
        .def_readonly("h1_pow2", &DecideCertificate::h1_pow2)
        .def_readonly("h2_pow2", &DecideCertificate::h2_pow2)
        .def_readonly("q_both_1_mod_4", &DecideCertificate::q_both_1_mod_4)
        .def_readonly("q_contains_3", &DecideCertificate::q_contains_3)
        .def_readonly("genus", &DecideCertificate::genus)
        .def_readonly("applied", &DecideCertificate::applied);

    py::class_<Decision>(m, "Decision")
        .def_property_readonly("verdict",
                               [](const Decision& d) { return to_string(d.verdict); })
        .def_readonly("certificate", &Decision::certificate)
        .def("__repr__",
             [](const Decision& d) { return "Decision(" + to_string(d.verdict) + ")"; });

    py::class_<ProgressionWitness>(m, "ProgressionWitness")
        .def_readonly("u", &ProgressionWitness::u)
        .def_readonly("l", &ProgressionWitness::l)
        .def_readonly("checked_prime", &ProgressionWitness::checked_prime)
        .def_readonly("prime_symbols", &ProgressionWitness::prime_symbols);

    py::class_<UnitIndexResult>(m, "UnitIndexResult")
        .def_readonly("Q", &UnitIndexResult::Q)
        .def_readonly("square_products", &UnitIndexResult::square_products);

    // integer arithmetic
    m.def("jacobi", [](const Integer& a, const Integer& n) { return jacobi(a, n).value(); },
          py::arg("a"), py::arg("n"));
    m.def("sqrt_mod_prime", &sqrt_mod_prime, py::arg("a"), py::arg("p"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("is_a2_plus_32b2", &is_a2_plus_32b2, py::arg("q"));
    m.def("is_power_of_two", &is_power_of_two, py::arg("n"));
    m.def("crt", &crt, py::arg("residues"), py::arg("moduli"));

    // quadratic fields
    m.def("conductor_quad", &conductor_quad, py::arg("m"));
    m.def("fundamental_unit", &fundamental_unit, py::arg("m"));
    m.def("narrow_class_number", &narrow_class_number, py::arg("m"));
    m.def("class_number", &class_number, py::arg("m"));
    m.def("quad_field_data", &quad_field_data, py::arg("m"));
    m.def("unit_residue_symbol",
          [](const Integer& p1, const Integer& q) { return unit_residue_symbol(p1, q).value(); },
          py::arg("p1"), py::arg("q"));

    // Hilbert symbols; place None means the real place
    m.def("hilbert_symbol",
          [](const Rational& a, const Rational& b, const py::object& place) {
              return hilbert_symbol_py(a, b, place).value();
          },
          py::arg("a"), py::arg("b"), py::arg("place"));
    m.def("product_over_places",
          [](const Rational& a, const Rational& b) { return product_over_places(a, b).value(); },
          py::arg("a"), py::arg("b"));

    // genus classification and the decision engine
    m.def("classify",
          [](const Integer& p1, const Integer& q1, const Integer& q2) {
              return classify(BiquadTriple(p1, q1, q2));
          },
          py::arg("p1"), py::arg("q1"), py::arg("q2"));
    m.def("decide",
          [](const Integer& p1, const Integer& q1, const Integer& q2) {
              return decide(p1, q1, q2);
          },
          py::arg("p1"), py::arg("q1"), py::arg("q2"));
    m.def("conductor_biquad",
          [](const Integer& p1, const Integer& q1, const Integer& q2) {
              return conductor_biquad(BiquadTriple(p1, q1, q2));
          },
          py::arg("p1"), py::arg("q1"), py::arg("q2"));
    m.def("progression_witness",
          [](const Integer& p1, const Integer& q1, const Integer& q2) {
              return progression_witness(BiquadTriple(p1, q1, q2));
          },
          py::arg("p1"), py::arg("q1"), py::arg("q2"));

    // biquadratic arithmetic
    m.def("unit_index", &unit_index, py::arg("m1"), py::arg("m2"));
    m.def("class_number_biquad",
          [](const Integer& p1, const Integer& q1, const Integer& q2) {
              return class_number_biquad(BiquadTriple(p1, q1, q2));
          },
          py::arg("p1"), py::arg("q1"), py::arg("q2"));

    // bundled reference table
    m.def("reference_table_csv", [] { return to_csv(reference_table()); });
    m.def("verify_reference_table",
          [](bool check_hk) {
              std::vector<std::tuple<std::size_t, std::string, std::string, std::string>> out;
              for (const CellDiff& d : verify_reference_rows(reference_table(), {check_hk}))
                  out.emplace_back(d.row, d.column, d.fixture_value, d.computed_value);
              return out;
          },
          py::arg("check_hk") = true);
}
