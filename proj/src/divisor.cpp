#include "dp4/divisor.hpp"

#include <charconv>
#include <cstddef>

namespace dp4 {

Coeff ck_add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

Coeff ck_sub(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return r;
}

Coeff ck_mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

DivisorClass canonical_class() { return {-3, {-1, -1, -1, -1, -1}}; }

DivisorClass anticanonical_class() { return {3, {1, 1, 1, 1, 1}}; }

DivisorClass zero_class() { return {}; }

DivisorClass add(const DivisorClass& x, const DivisorClass& y) {
  DivisorClass r;
  r.a = ck_add(x.a, y.a);
  for (std::size_t i = 0; i < 5; ++i) r.b[i] = ck_add(x.b[i], y.b[i]);
  return r;
}

DivisorClass subtract(const DivisorClass& x, const DivisorClass& y) {
  DivisorClass r;
  r.a = ck_sub(x.a, y.a);
  for (std::size_t i = 0; i < 5; ++i) r.b[i] = ck_sub(x.b[i], y.b[i]);
  return r;
}

DivisorClass scale(const DivisorClass& x, Coeff n) {
  DivisorClass r;
  r.a = ck_mul(x.a, n);
  for (std::size_t i = 0; i < 5; ++i) r.b[i] = ck_mul(x.b[i], n);
  return r;
}

DivisorClass negate(const DivisorClass& x) { return subtract(zero_class(), x); }

Coeff intersect(const DivisorClass& x, const DivisorClass& y) {
  Coeff acc = ck_mul(x.a, y.a);
  for (std::size_t i = 0; i < 5; ++i) acc = ck_sub(acc, ck_mul(x.b[i], y.b[i]));
  return acc;
}

Coeff self_intersection(const DivisorClass& x) { return intersect(x, x); }

Coeff degree(const DivisorClass& x) {
  Coeff acc = ck_mul(3, x.a);
  for (Coeff bi : x.b) acc = ck_sub(acc, bi);
  return acc;
}

Coeff arithmetic_genus(const DivisorClass& x) {
  // n(n-1) is even, so the halvings below are exact.
  Coeff acc = ck_mul(ck_sub(x.a, 1), ck_sub(x.a, 2)) / 2;
  for (Coeff bi : x.b) acc = ck_sub(acc, ck_mul(bi, ck_sub(bi, 1)) / 2);
  return acc;
}

Coeff euler_char(const DivisorClass& x) {
  return ck_add(intersect(x, subtract(x, canonical_class())) / 2, 1);
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "' in class literal");
  }
  ++pos;
}

Coeff parse_int(std::string_view text, std::size_t& pos) {
  skip_spaces(text, pos);
  Coeff value = 0;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) {
    throw ParseError("expected integer in class literal");
  }
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

}  // namespace

DivisorClass parse_class(std::string_view text) {
  std::size_t pos = 0;
  DivisorClass r;
  expect_char(text, pos, '(');
  r.a = parse_int(text, pos);
  expect_char(text, pos, ';');
  for (std::size_t i = 0; i < 5; ++i) {
    if (i > 0) expect_char(text, pos, ',');
    r.b[i] = parse_int(text, pos);
  }
  expect_char(text, pos, ')');
  skip_spaces(text, pos);
  if (pos != text.size()) {
    throw ParseError("trailing characters after class literal");
  }
  return r;
}

std::string to_string(const DivisorClass& x) {
  std::string out = "(" + std::to_string(x.a) + ";";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i > 0) out += ",";
    out += std::to_string(x.b[i]);
  }
  out += ")";
  return out;
}

}  // namespace dp4
