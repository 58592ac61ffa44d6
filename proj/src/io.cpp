#include "ccdeg/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ccdeg {

static std::string print_term_body(const Monomial& m, const Rational& c,
                                   const VariableTable& vars) {
  std::string out;
  Rational a = abs(c);
  bool need_coeff = m.is_one() || a != 1;
  if (need_coeff) out += a.get_str();
  bool first = !need_coeff;
  for (auto& [v, e] : m.entries()) {
    if (!first) out += "*";
    first = false;
    out += vars.name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string print_polynomial(const Polynomial& f, const MonomialOrder* order) {
  if (f.is_zero()) return "0";
  std::vector<const Term*> seq;
  seq.reserve(f.term_count());
  for (auto& t : f.terms()) seq.push_back(&t);
  if (order) {
    std::stable_sort(seq.begin(), seq.end(), [&](const Term* a, const Term* b) {
      return order->greater(a->mono, b->mono);
    });
  }
  std::string out;
  const VariableTable& vars = *f.ring();
  for (size_t i = 0; i < seq.size(); ++i) {
    bool neg = seq[i]->coeff < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    out += print_term_body(seq[i]->mono, seq[i]->coeff, vars);
  }
  return out;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarTablePtr& ring) {
  Polynomial out(ring);
  Scanner sc{text};
  if (sc.done()) throw std::invalid_argument("empty polynomial text");
  while (!sc.done()) {
    int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++sc.i;
      if (sc.done()) throw std::invalid_argument("dangling sign in: " + text);
    }
    Rational coeff = sign;
    std::vector<Monomial::Entry> entries;
    bool any_factor = false;
    for (;;) {
      c = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = sc.i;
        while (sc.i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[sc.i])) || text[sc.i] == '/'))
          ++sc.i;
        coeff *= rational_from_string(text.substr(start, sc.i - start));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = sc.i;
        while (sc.i < text.size() && (std::isalnum(static_cast<unsigned char>(text[sc.i])) ||
                                      text[sc.i] == '_'))
          ++sc.i;
        std::string name = text.substr(start, sc.i - start);
        int exp = 1;
        if (sc.i < text.size() && text[sc.i] == '^') {
          ++sc.i;
          size_t es = sc.i;
          while (sc.i < text.size() && std::isdigit(static_cast<unsigned char>(text[sc.i]))) ++sc.i;
          if (es == sc.i) throw std::invalid_argument("missing exponent in: " + text);
          exp = std::stoi(text.substr(es, sc.i - es));
        }
        entries.push_back({ring->rank(name), exp});
      } else {
        throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                    "' in: " + text);
      }
      any_factor = true;
      if (sc.done()) break;
      c = sc.peek();
      if (c == '*') {
        ++sc.i;
        continue;
      }
      break;
    }
    if (!any_factor) throw std::invalid_argument("empty term in: " + text);
    out.add_term(Monomial(std::move(entries)), coeff);
  }
  return out;
}

std::string print_order(const MonomialOrder& order, const VariableTable& ring) {
  std::string kind;
  switch (order.kind()) {
    case MonomialOrder::Kind::Lex: kind = "lex"; break;
    case MonomialOrder::Kind::GrevLex: kind = "grevlex"; break;
    default: throw std::invalid_argument("only lex/grevlex orders are serialized");
  }
  std::string out = kind + " ";
  const auto& perm = order.permutation();
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ",";
    out += ring.name(perm[i]);
  }
  return out;
}

static OrderPtr parse_order(const std::string& text, const VariableTable& ring) {
  std::istringstream in(text);
  std::string kind, rest;
  in >> kind;
  std::getline(in, rest);
  std::vector<int> perm;
  std::string name;
  for (char c : rest) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!name.empty()) perm.push_back(ring.rank(name));
      name.clear();
    } else {
      name += c;
    }
  }
  if (!name.empty()) perm.push_back(ring.rank(name));
  if (kind == "lex") return MonomialOrder::lex(perm);
  if (kind == "grevlex") return MonomialOrder::grevlex(perm);
  throw std::invalid_argument("unknown order kind: " + kind);
}

std::string write_ideal_text(const std::vector<Polynomial>& polys, const VarTablePtr& ring,
                             const MonomialOrder* order, const bool* reduced) {
  std::string out = "ring: ";
  for (int i = 0; i < ring->size(); ++i) {
    if (i) out += ",";
    out += ring->name(i);
  }
  out += "\n";
  if (order) out += "order: " + print_order(*order, *ring) + "\n";
  if (reduced) out += std::string("reduced: ") + (*reduced ? "true" : "false") + "\n";
  for (auto& p : polys) out += print_polynomial(p, order) + "\n";
  return out;
}

IdealFile read_ideal_text(const std::string& text) {
  IdealFile file;
  std::istringstream in(text);
  std::string line;
  std::string order_line;
  std::vector<std::string> poly_lines;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("ring:", 0) == 0) {
      auto names_str = line.substr(5);
      std::vector<std::string> names;
      std::string cur;
      for (char c : names_str) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty()) names.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) names.push_back(cur);
      file.ring = std::make_shared<VariableTable>(names);
    } else if (line.rfind("order:", 0) == 0) {
      order_line = line.substr(6);
      file.has_order = true;
    } else if (line.rfind("reduced:", 0) == 0) {
      file.reduced = line.find("true") != std::string::npos;
    } else {
      poly_lines.push_back(line);
    }
  }
  if (!file.ring) throw std::invalid_argument("ideal file is missing the ring header");
  if (file.has_order) file.order = parse_order(order_line, *file.ring);
  for (auto& pl : poly_lines) file.polys.push_back(parse_polynomial(pl, file.ring));
  return file;
}

std::string write_matrix_text(const std::vector<std::vector<Rational>>& m) {
  std::string out;
  for (auto& row : m) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += " ";
      out += row[j].get_str();
    }
    out += "\n";
  }
  return out;
}

std::vector<std::vector<Rational>> read_matrix_text(const std::string& text) {
  std::vector<std::vector<Rational>> m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row_in(line);
    std::vector<Rational> row;
    std::string tok;
    while (row_in >> tok) row.push_back(rational_from_string(tok));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace ccdeg
