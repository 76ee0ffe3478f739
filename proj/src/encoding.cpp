#include "redchev/encoding.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace redchev {

namespace {

uint64_t parse_u64(std::string_view s, const char* what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::domain_error(std::string(what) + ": '" + std::string(s) +
                            "' is not a nonnegative integer");
  }
  return v;
}

}  // namespace

std::string field_spec_string(const Field& f) {
  if (f.is_quadratic_ext()) {
    throw std::domain_error("field spec strings name base fields only");
  }
  std::ostringstream os;
  os << f.characteristic();
  if (f.degree() > 1) os << "^" << f.degree();
  return os.str();
}

FieldPtr parse_field_spec(std::string_view s, uint64_t order_bound) {
  size_t caret = s.find('^');
  if (caret == std::string_view::npos) {
    return Field::make(parse_u64(s, "field spec"), 1, order_bound);
  }
  uint64_t p = parse_u64(s.substr(0, caret), "field spec");
  uint64_t k = parse_u64(s.substr(caret + 1), "field spec");
  if (k == 0 || k > 64) {
    throw std::domain_error("field spec: extension degree out of range");
  }
  return Field::make(p, static_cast<unsigned>(k), order_bound);
}

std::string elem_string(const Elem& a) {
  std::ostringstream os;
  bool first = true;
  for (uint64_t d : a.field().coeffs(a)) {
    if (!first) os << ",";
    os << d;
    first = false;
  }
  return os.str();
}

Elem parse_elem(const FieldPtr& f, std::string_view s) {
  std::vector<uint64_t> digits;
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    digits.push_back(parse_u64(tok, "element"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (digits.size() != f->digits()) {
    throw std::domain_error("element '" + std::string(s) + "': expected " +
                            std::to_string(f->digits()) +
                            " coefficients for " + f->describe());
  }
  for (uint64_t d : digits) {
    if (d >= f->characteristic()) {
      throw std::domain_error("element '" + std::string(s) +
                              "': coefficient " + std::to_string(d) +
                              " out of range [0, " +
                              std::to_string(f->characteristic()) + ")");
    }
  }
  return f->from_coeffs(digits);
}

std::string point_string(const Point& p) {
  return p.is_inf() ? "inf" : elem_string(p.value());
}

Point parse_point(const FieldPtr& f, std::string_view s) {
  if (s == "inf") return Point::infinity();
  return Point::finite(parse_elem(f, s));
}

std::string ratmap_string(const RationalMap& f) {
  const FieldPtr& F = f.field();
  auto side = [&](const Poly& poly) {
    std::ostringstream os;
    int deg = std::max(poly.degree(), 0);
    bool first = true;
    for (int i = 0; i <= deg; ++i) {
      for (uint64_t d : F->coeffs(poly.coeff(i))) {
        if (!first) os << ",";
        os << d;
        first = false;
      }
    }
    return os.str();
  };
  return "num: " + side(f.num()) + " / den: " + side(f.den());
}

}  // namespace redchev
