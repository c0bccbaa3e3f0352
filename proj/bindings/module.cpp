#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "octoramsey/loops.hpp"
#include "octoramsey/naf.hpp"
#include "octoramsey/octonion.hpp"
#include "octoramsey/signs.hpp"
#include "octoramsey/term.hpp"
#include "octoramsey/units.hpp"
#include "octoramsey/witness.hpp"

namespace py = pybind11;
using namespace octoramsey;

namespace {

// Hex strings cross the boundary: CPython caps decimal conversions of
// large integers, hex conversions are unlimited.
BigInt bigint_from_py(const py::object& obj) {
    py::object hex = py::reinterpret_steal<py::object>(PyNumber_ToBase(obj.ptr(), 16));
    if (!hex) throw py::error_already_set();
    std::string text = py::str(hex).cast<std::string>();  // "0x1f" or "-0x1f"
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        text.erase(0, 1);
    }
    BigInt v(text);
    return negative ? -v : v;
}

py::object bigint_to_py(const BigInt& v) {
    std::ostringstream os;
    if (v < 0) os << '-';
    os << std::hex << abs(v);
    py::object out = py::reinterpret_steal<py::object>(
        PyLong_FromString(os.str().c_str(), nullptr, 16));
    if (!out) throw py::error_already_set();
    return out;
}

Assignment assignment_from_dict(const py::dict& d) {
    Assignment mu;
    for (const auto& item : d) {
        const auto index = item.first.cast<std::uint32_t>();
        if (py::isinstance<py::int_>(item.second))
            mu[index] = SignedUnit{+1, item.second.cast<int>()};
        else
            mu[index] = item.second.cast<SignedUnit>();
    }
    return mu;
}

py::dict assignment_to_dict(const Assignment& mu) {
    py::dict d;
    for (const auto& [index, value] : mu) d[py::int_(index)] = value;
    return d;
}

}  // namespace

PYBIND11_MODULE(octoramsey, m) {
    m.doc() = "exact octonion bracketing calculus and finite Moufang loop checks";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<SignedUnit>(m, "SignedUnit")
        .def(py::init([](int sign, int index) {
                 if ((sign != 1 && sign != -1) || index < 0 || index > 7)
                     throw Error("sign must be +-1 and index 0..7");
                 return SignedUnit{sign, index};
             }),
             py::arg("sign"), py::arg("index"))
        .def_readonly("sign", &SignedUnit::sign)
        .def_readonly("index", &SignedUnit::index)
        .def("__neg__", [](SignedUnit u) { return -u; })
        .def("__eq__", [](SignedUnit a, const py::object& b) {
            return py::isinstance<SignedUnit>(b) && a == b.cast<SignedUnit>();
        })
        .def("__hash__", [](SignedUnit u) { return u.sign * 8 + u.index; })
        .def("__repr__", [](SignedUnit u) { return to_string(u); });

    m.def("unit", [](int index) {
        if (index < 0 || index > 7) throw Error("unit index must be 0..7");
        return SignedUnit{+1, index};
    });
    m.def("unit_mul", &unit_mul);
    m.def("associator_class", [](int i, int j, int k) {
        return associator_class(i, j, k) == Associator::Associates ? "ASSOCIATES" : "ANTI";
    });

    py::class_<Term>(m, "Term")
        .def_static("var", &Term::var)
        .def_static("unit", &Term::unit)
        .def_static("pair", &Term::pair)
        .def_property_readonly("is_var", &Term::is_var)
        .def_property_readonly("is_unit", &Term::is_unit)
        .def_property_readonly("is_pair", &Term::is_pair)
        .def_property_readonly("leaf_count", &Term::leaf_count)
        .def("__eq__", [](const Term& a, const py::object& b) {
            return py::isinstance<Term>(b) && a == b.cast<Term>();
        })
        .def("__hash__", [](const Term& t) { return py::hash(py::str(render(t))); })
        .def("__repr__", [](const Term& t) { return render(t); });

    m.def("parse", [](const std::string& text) { return parse(text); });
    m.def("render", &render);
    m.def("eval_units", &eval_units);
    m.def("eval_assigned", [](const Term& t, const py::dict& mu) {
        return eval_assigned(t, assignment_from_dict(mu));
    });
    m.def("right_assoc_normalize", &right_assoc_normalize);
    m.def("is_orderly", &is_orderly);
    m.def("precedes", &precedes);
    m.def("var_indices", [](const Term& t) { return var_indices(t); });
    m.def("enumerate_orderly", [](const std::vector<std::uint32_t>& indices) {
        return enumerate_orderly(indices);
    });
    m.def("lambda_lines", [](const Term& t) { return to_lines(lambda_sets(t)); });
    m.def("distinguish", [](const Term& t, const Term& u) {
        return assignment_to_dict(distinguish(t, u));
    });

    m.def("naf_encode", [](const py::object& value) {
        return to_string(naf_encode(bigint_from_py(value)));
    });
    m.def("naf_decode", [](const std::string& text) {
        return bigint_to_py(naf_decode(naf_from_string(text)));
    });

    py::class_<SymbolicOctonion>(m, "SymbolicOctonion")
        .def("coefficient",
             [](const SymbolicOctonion& v, std::size_t j) {
                 if (j >= 8) throw Error("slot must be 0..7");
                 return v.coeffs[j].to_string();
             })
        .def("coefficient_value",
             [](const SymbolicOctonion& v, std::size_t j) {
                 if (j >= 8) throw Error("slot must be 0..7");
                 return bigint_to_py(v.coeffs[j].to_integer());
             })
        .def("lines", [](const SymbolicOctonion& v) { return to_lines(v); })
        .def("__eq__", [](const SymbolicOctonion& a, const py::object& b) {
            return py::isinstance<SymbolicOctonion>(b) && a == b.cast<SymbolicOctonion>();
        })
        .def("__repr__", [](const SymbolicOctonion& v) {
            return "<SymbolicOctonion\n" + to_lines(v) + ">";
        });

    m.def("bad_term", [](std::uint32_t n) {
        const BigOctonion b = bad_term(n);
        py::list coeffs;
        for (const auto& c : b.coeffs) coeffs.append(bigint_to_py(c));
        return coeffs;
    });
    m.def("symbolic_eval", [](const Term& t, std::size_t leaf_cap) {
        return symbolic_eval(t, leaf_cap);
    }, py::arg("t"), py::arg("leaf_cap") = kDefaultLeafCap);
    m.def("bigint_eval", [](const Term& t) {
        const BigOctonion b = bigint_eval(t);
        py::list coeffs;
        for (const auto& c : b.coeffs) coeffs.append(bigint_to_py(c));
        return coeffs;
    });

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_property_readonly("left", [](const WitnessReport& r) { return r.left; })
        .def_property_readonly("right", [](const WitnessReport& r) { return r.right; })
        .def_property_readonly("distinct", [](const WitnessReport& r) {
            return r.verdict == ClaimVerdict::Distinct;
        })
        .def_readonly("slot", &WitnessReport::slot)
        .def_property_readonly("case_tag", [](const WitnessReport& r) {
            return r.kase == ClaimCase::SameString ? "SAME_STRING" : "DIFFERENT_VARS";
        })
        .def("line", &WitnessReport::line)
        .def("__repr__", &WitnessReport::line);

    m.def("claim_check", [](const Term& t1, const Term& t2, const Term& t3,
                            std::size_t leaf_cap) {
        return claim_check(t1, t2, t3, leaf_cap);
    }, py::arg("t1"), py::arg("t2"), py::arg("t3"), py::arg("leaf_cap") = kDefaultLeafCap);
    m.def("claim_sweep", &claim_sweep);
    m.def("in_x", &in_x);
    m.def("fr_prefix", [](const std::vector<Term>& chain, std::size_t depth) {
        return fr_prefix(chain, depth);
    });

    py::class_<LoopTable>(m, "LoopTable")
        .def(py::init([](std::size_t order, std::size_t identity,
                         const std::vector<std::vector<std::size_t>>& rows,
                         const std::vector<std::string>& names) {
                 std::vector<std::size_t> flat;
                 for (const auto& row : rows) {
                     if (row.size() != order) throw MalformedTable("ragged table");
                     flat.insert(flat.end(), row.begin(), row.end());
                 }
                 return LoopTable(order, identity, std::move(flat), names);
             }),
             py::arg("order"), py::arg("identity"), py::arg("rows"),
             py::arg("names") = std::vector<std::string>{})
        .def_property_readonly("order", &LoopTable::order)
        .def_property_readonly("identity", &LoopTable::identity)
        .def("mul", &LoopTable::mul)
        .def("name", [](const LoopTable& L, std::size_t i) {
            return L.has_names() ? L.name(i) : std::to_string(i);
        })
        .def("__repr__", [](const LoopTable& L) {
            return "<LoopTable order=" + std::to_string(L.order()) + ">";
        });

    m.def("builtin_loop", [](const std::string& name) { return builtin_loop(name); });
    m.def("is_valid_loop", [](const LoopTable& L) { return validate_loop(L).valid(); });
    m.def("is_moufang", &is_moufang);
    m.def("is_associative", &is_associative);
    m.def("m_g2", &m_g2);
    m.def("element_order", &element_order);
    m.def("ramsey_reduce",
          [](const LoopTable& L, const std::vector<std::size_t>& prefix,
             const std::vector<std::size_t>& cycle, std::size_t blocks) {
              const ReductionCertificate cert =
                  ramsey_reduce(L, PeriodicSequence{prefix, cycle}, blocks);
              py::dict out;
              out["element"] = cert.element;
              out["order"] = cert.order;
              out["blocks"] = cert.blocks;
              return out;
          },
          py::arg("table"), py::arg("prefix"), py::arg("cycle"), py::arg("blocks") = 3);
    m.def("format_loop_table", &format_loop_table);
}
