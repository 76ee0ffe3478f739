#pragma once

#include <string>
#include <string_view>

#include "redchev/projmap.hpp"

namespace redchev {

// Field spec: "p" for prime fields, "p^k" otherwise (e.g. "5", "2^4").
std::string field_spec_string(const Field& f);
FieldPtr parse_field_spec(std::string_view s,
                          uint64_t order_bound = Field::kDefaultOrderBound);

// Element encoding: comma-separated little-endian base-p coefficients,
// each in [0, p).  F_{p^k} uses k digits; a quadratic extension flattens to
// 2k digits on the basis (1, t, ..., t^{k-1}, beta, t*beta, ...).
std::string elem_string(const Elem& a);
Elem parse_elem(const FieldPtr& f, std::string_view s);

// A point is an element encoding or "inf".
std::string point_string(const Point& p);
Point parse_point(const FieldPtr& f, std::string_view s);

// "num: c0,c1,... / den: c0,c1,..." ascending degree, flattened digits.
std::string ratmap_string(const RationalMap& f);

}  // namespace redchev
