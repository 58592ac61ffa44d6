#pragma once

#include <string>
#include <vector>

#include "ccdeg/order.hpp"
#include "ccdeg/polynomial.hpp"

namespace ccdeg {

// Canonical text form: terms joined by "+"/"-", each term "c*v1^e1*...*vk^ek",
// unit coefficients and unit exponents elided, no whitespace. Terms are
// emitted in descending `order` sequence when one is given, otherwise in the
// canonical sequence. print/parse round-trip is exact.
std::string print_polynomial(const Polynomial& f, const MonomialOrder* order = nullptr);
Polynomial parse_polynomial(const std::string& text, const VarTablePtr& ring);

// Ideal files: "ring: v1,v2,...,vk" then one polynomial per line.
// GB cache files add "order: grevlex v1,..." and "reduced: true/false".
struct IdealFile {
  VarTablePtr ring;
  std::vector<Polynomial> polys;
  OrderPtr order;       // null unless the file carried an order header
  bool reduced = false;
  bool has_order = false;
};

std::string write_ideal_text(const std::vector<Polynomial>& polys, const VarTablePtr& ring,
                             const MonomialOrder* order = nullptr, const bool* reduced = nullptr);
IdealFile read_ideal_text(const std::string& text);

std::string print_order(const MonomialOrder& order, const VariableTable& ring);

// Rational matrices, one row per line, entries whitespace-separated.
std::string write_matrix_text(const std::vector<std::vector<Rational>>& m);
std::vector<std::vector<Rational>> read_matrix_text(const std::string& text);

}  // namespace ccdeg
