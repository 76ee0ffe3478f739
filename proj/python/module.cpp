#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "redchev/cheby.hpp"
#include "redchev/cli.hpp"
#include "redchev/encoding.hpp"
#include "redchev/fgraph.hpp"
#include "redchev/keyx.hpp"
#include "redchev/redei.hpp"
#include "redchev/selftest.hpp"
#include "redchev/trig.hpp"

namespace py = pybind11;

namespace {

using namespace redchev;

// String-encoded facade over the C++ core: elements travel as the same
// comma-separated coefficient encodings the CLI and wire format use.
class PyExtension {
 public:
  explicit PyExtension(ExtPtr e) : E_(std::move(e)) {}

  uint64_t q() const { return E_->q(); }
  std::string alpha() const { return elem_string(E_->alpha()); }
  std::string beta_bar() const { return elem_string(E_->beta_bar()); }
  uint64_t mu_order() const { return E_->q() + 1; }

  std::string redei_coeffs_str(uint64_t n) const {
    return ratmap_string(redei_coeffs(RedeiSpec{E_, n}));
  }
  std::string redei_eval_str(uint64_t n, const std::string& x) const {
    return point_string(redei_eval(RedeiSpec{E_, n}, parse_pt(x)));
  }
  std::string redei_combine_str(const std::string& u,
                                const std::string& v) const {
    return point_string(redei_combine(*E_, parse_pt(u), parse_pt(v)));
  }
  bool redei_permutes_flag(uint64_t n) const {
    return redei_permutes(RedeiSpec{E_, n});
  }

  std::string cheby_coeffs_str(uint64_t n) const {
    return ratmap_string(cheby_coeffs(ChebySpec{E_, n}));
  }
  std::string cheby_eval_str(uint64_t n, const std::string& x) const {
    return point_string(cheby_eval(ChebySpec{E_, n}, parse_pt(x)));
  }
  std::string cheby_combine_str(const std::string& u,
                                const std::string& v) const {
    return point_string(cheby_combine(*E_, parse_pt(u), parse_pt(v)));
  }
  bool cheby_permutes_flag(uint64_t n) const {
    return cheby_permutes_p1(ChebySpec{E_, n});
  }
  bool cheby_permutes_affine_flag(uint64_t n) const {
    return cheby_permutes_affine(ChebySpec{E_, n});
  }
  bool involution(uint64_t n) const {
    return cheby_is_involution(ChebySpec{E_, n});
  }

  FunctionalGraph graph(const std::string& map, uint64_t n) const {
    if (map == "power") return power_map_graph(*E_, n);
    std::vector<Point> line = projective_line(E_->base());
    if (map == "redei") {
      RedeiSpec spec{E_, n};
      return build_graph(
          [spec](const Point& p) { return redei_eval(spec, p); }, line);
    }
    if (map == "cheby") {
      ChebySpec spec{E_, n};
      return build_graph(
          [spec](const Point& p) { return cheby_eval(spec, p); }, line);
    }
    throw std::domain_error("map must be redei, cheby, or power");
  }
  std::string graph_cycles(const std::string& map, uint64_t n) const {
    return cycle_stats(graph(map, n));
  }
  std::string graph_dot(const std::string& map, uint64_t n) const {
    return to_dot(graph(map, n));
  }
  bool graph_matches_power_map(const std::string& map, uint64_t n) const {
    return iso_check(graph(map, n), graph("power", n));
  }

  std::vector<std::tuple<uint64_t, std::string, std::string, std::string>>
  trig_table() const {
    std::vector<std::tuple<uint64_t, std::string, std::string, std::string>>
        rows;
    if (E_->even_char()) {
      TrigCtx2 c = make_trig2(E_);
      for (uint64_t k = 0; k < c.ord; ++k) {
        int64_t ik = static_cast<int64_t>(k);
        rows.emplace_back(k, elem_string(sin2(c, ik)),
                          elem_string(cos2(c, ik)),
                          point_string(tan2(c, ik)));
      }
    } else {
      TrigCtxOdd c = make_trig_odd(E_);
      for (uint64_t k = 0; k < c.ord; ++k) {
        int64_t ik = static_cast<int64_t>(k);
        rows.emplace_back(k, elem_string(sin_odd(c, ik)),
                          elem_string(cos_odd(c, ik)),
                          point_string(tan_odd(c, ik)));
      }
    }
    return rows;
  }
  std::vector<bool> trig_identities(int64_t k, int64_t l) const {
    TrigCtx2 c = make_trig2(E_);
    auto ok = trig2_identities(c, k, l);
    return std::vector<bool>(ok.begin(), ok.end());
  }
  bool tan_addition(int64_t k, int64_t l) const {
    TrigCtxOdd c = make_trig_odd(E_);
    return tan_odd_addition(c, k, l);
  }

  uint64_t keyx_keygen(const std::string& x0, uint64_t seed) const {
    return keygen(params(x0), seed).n;
  }
  std::string keyx_public(const std::string& x0, uint64_t n) const {
    return point_string(derive_public(params(x0), KeyxSecret{n}));
  }
  std::string keyx_shared(const std::string& x0, uint64_t n,
                          const std::string& peer) const {
    return point_string(
        derive_shared(params(x0), KeyxSecret{n}, parse_pt(peer)));
  }
  std::string keyx_encode(const std::string& x0,
                          const std::string& pub) const {
    return encode_message(params(x0), parse_pt(pub));
  }

  ExtPtr E_;

 private:
  Point parse_pt(const std::string& s) const {
    return parse_point(E_->base(), s);
  }
  KeyxParams params(const std::string& x0) const {
    return KeyxParams{E_, parse_pt(x0)};
  }
};

class PyField {
 public:
  explicit PyField(const std::string& spec) : f_(parse_field_spec(spec)) {}

  uint64_t p() const { return f_->characteristic(); }
  unsigned k() const { return f_->degree(); }
  uint64_t order() const { return f_->order(); }
  std::vector<uint64_t> modulus() const { return f_->modulus(); }
  std::string spec() const { return field_spec_string(*f_); }

  std::vector<std::string> alphas() const {
    std::vector<std::string> out;
    for (const Elem& a : enumerate_alphas(f_)) out.push_back(elem_string(a));
    return out;
  }
  bool valid_alpha(const std::string& a) const {
    return is_valid_alpha(parse_elem(f_, a));
  }

  std::string add(const std::string& a, const std::string& b) const {
    return elem_string(parse_elem(f_, a) + parse_elem(f_, b));
  }
  std::string sub(const std::string& a, const std::string& b) const {
    return elem_string(parse_elem(f_, a) - parse_elem(f_, b));
  }
  std::string mul(const std::string& a, const std::string& b) const {
    return elem_string(parse_elem(f_, a) * parse_elem(f_, b));
  }
  std::string div(const std::string& a, const std::string& b) const {
    return elem_string(parse_elem(f_, a) / parse_elem(f_, b));
  }
  std::string neg(const std::string& a) const {
    return elem_string(-parse_elem(f_, a));
  }
  std::string inv(const std::string& a) const {
    return elem_string(parse_elem(f_, a).inv());
  }
  std::string pow(const std::string& a, int64_t e) const {
    return elem_string(parse_elem(f_, a).pow(e));
  }

  PyExtension extension(const std::string& alpha) const {
    return PyExtension(Extension::make(f_, parse_elem(f_, alpha)));
  }

  FieldPtr f_;
};

std::tuple<std::string, std::string, std::string, std::string> decode_keyx(
    const std::string& line) {
  KeyxMessage m = decode_message(line);
  return {field_spec_string(*m.field), elem_string(m.alpha),
          point_string(m.x0), point_string(m.pub)};
}

std::vector<std::tuple<std::string, bool, std::string>> selftest(bool quick) {
  std::vector<std::tuple<std::string, bool, std::string>> out;
  for (const CheckResult& r : run_selftest(quick)) {
    out.emplace_back(r.name, r.pass, r.detail);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_redchev, m) {
  m.doc() =
      "Redei and tangent-Chebyshev rational maps over finite fields: exact "
      "arithmetic, two evaluation pipelines, functional graphs, finite-field "
      "trigonometry, and a toy commuting-map key exchange.";

  py::class_<PyField>(m, "Field")
      .def(py::init<const std::string&>(), py::arg("spec"),
           "Build F_{p^k} from a spec string such as '5' or '2^4'.")
      .def_property_readonly("p", &PyField::p)
      .def_property_readonly("k", &PyField::k)
      .def_property_readonly("order", &PyField::order)
      .def_property_readonly("spec", &PyField::spec)
      .def("modulus", &PyField::modulus,
           "Monic irreducible modulus, little-endian (empty for k = 1).")
      .def("alphas", &PyField::alphas,
           "All alpha giving an irreducible quadratic; floor(q/2) of them.")
      .def("valid_alpha", &PyField::valid_alpha, py::arg("alpha"))
      .def("add", &PyField::add)
      .def("sub", &PyField::sub)
      .def("mul", &PyField::mul)
      .def("div", &PyField::div)
      .def("neg", &PyField::neg)
      .def("inv", &PyField::inv)
      .def("pow", &PyField::pow)
      .def("extension", &PyField::extension, py::arg("alpha"),
           "The quadratic extension F_{q^2} = F_q[x]/h for this alpha.");

  py::class_<PyExtension>(m, "Extension")
      .def_property_readonly("q", &PyExtension::q)
      .def_property_readonly("alpha", &PyExtension::alpha)
      .def_property_readonly("beta_bar", &PyExtension::beta_bar)
      .def_property_readonly("mu_order", &PyExtension::mu_order)
      .def("redei_coeffs", &PyExtension::redei_coeffs_str, py::arg("n"))
      .def("redei_eval", &PyExtension::redei_eval_str, py::arg("n"),
           py::arg("x"))
      .def("redei_combine", &PyExtension::redei_combine_str, py::arg("u"),
           py::arg("v"))
      .def("redei_permutes", &PyExtension::redei_permutes_flag, py::arg("n"))
      .def("cheby_coeffs", &PyExtension::cheby_coeffs_str, py::arg("n"))
      .def("cheby_eval", &PyExtension::cheby_eval_str, py::arg("n"),
           py::arg("x"))
      .def("cheby_combine", &PyExtension::cheby_combine_str, py::arg("u"),
           py::arg("v"))
      .def("cheby_permutes", &PyExtension::cheby_permutes_flag, py::arg("n"))
      .def("cheby_permutes_affine", &PyExtension::cheby_permutes_affine_flag,
           py::arg("n"))
      .def("cheby_is_involution", &PyExtension::involution, py::arg("n"))
      .def("graph_cycles", &PyExtension::graph_cycles, py::arg("map"),
           py::arg("n"), "Cycle statistics of the map on P^1(F_q).")
      .def("graph_dot", &PyExtension::graph_dot, py::arg("map"), py::arg("n"))
      .def("graph_matches_power_map", &PyExtension::graph_matches_power_map,
           py::arg("map"), py::arg("n"),
           "Isomorphism with x^n on mu_{q+1} via canonical forms.")
      .def("trig_table", &PyExtension::trig_table)
      .def("trig_identities", &PyExtension::trig_identities, py::arg("k"),
           py::arg("l"), "The five even-q identities (even q only).")
      .def("tan_addition", &PyExtension::tan_addition, py::arg("k"),
           py::arg("l"), "The odd-q tangent addition identity.")
      .def("keyx_keygen", &PyExtension::keyx_keygen, py::arg("x0"),
           py::arg("seed"))
      .def("keyx_public", &PyExtension::keyx_public, py::arg("x0"),
           py::arg("n"))
      .def("keyx_shared", &PyExtension::keyx_shared, py::arg("x0"),
           py::arg("n"), py::arg("peer"))
      .def("keyx_encode", &PyExtension::keyx_encode, py::arg("x0"),
           py::arg("pub"));

  m.def("decode_keyx", &decode_keyx, py::arg("line"),
        "Parse a KEYX1 wire line into (field, alpha, x0, public).");
  m.def("selftest", &selftest, py::arg("quick") = true,
        "Run the invariant suite; returns (name, ok, detail) tuples.");
}
