#include "bisyz/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bisyz {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  bool accept(char c) {
    if (!done() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

int variable_index(char c) {
  switch (c) {
    case 's': return kVarS;
    case 'u': return kVarU;
    case 't': return kVarT;
    case 'v': return kVarV;
    default: return -1;
  }
}

Int parse_nat(Cursor& cur) {
  const std::size_t start = cur.pos;
  std::string digits;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    digits.push_back(cur.peek());
    ++cur.pos;
  }
  if (digits.empty()) throw SyntaxError("expected a number", start);
  // Leading zeros would make the big-integer constructor read octal.
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return Int(0);
  return Int(digits.substr(first));
}

// term := coeff? factor*; returns the term's value without its sign.
BiPoly parse_term(Cursor& cur) {
  Rational coeff = 1;
  bool saw_anything = false;

  cur.skip_ws();
  if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    const Int num = parse_nat(cur);
    Int den = 1;
    cur.skip_ws();
    if (cur.accept('/')) {
      cur.skip_ws();
      const std::size_t dpos = cur.pos;
      den = parse_nat(cur);
      if (den == 0) throw SyntaxError("zero denominator", dpos);
    }
    coeff = Rational(num, den);
    saw_anything = true;
  }

  Monomial mono;
  while (true) {
    cur.skip_ws();
    std::size_t mark = cur.pos;
    bool star = cur.accept('*');
    cur.skip_ws();
    if (cur.done()) {
      if (star) throw SyntaxError("dangling '*'", mark);
      break;
    }
    const char c = cur.peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const int var = variable_index(c);
      if (var < 0) throw UnknownVariableError(c, cur.pos);
      ++cur.pos;
      int power = 1;
      cur.skip_ws();
      if (cur.accept('^')) {
        cur.skip_ws();
        const Int p = parse_nat(cur);
        if (p > 64) throw SyntaxError("exponent too large", cur.pos);
        power = static_cast<int>(p);
      }
      if (power > 0) mono = mono * Monomial::variable(var, power);
      saw_anything = true;
      continue;
    }
    if (star) throw SyntaxError("expected a variable after '*'", cur.pos);
    cur.pos = mark;
    break;
  }

  if (!saw_anything)
    throw SyntaxError("expected a coefficient or a variable", cur.pos);
  return BiPoly::term(mono, coeff);
}

BiPoly parse_poly_impl(Cursor& cur) {
  BiPoly result;
  cur.skip_ws();
  if (cur.done()) throw SyntaxError("empty polynomial", cur.pos);
  Rational sign = 1;
  if (cur.accept('-'))
    sign = -1;
  else
    cur.accept('+');
  result += sign * parse_term(cur);
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.accept('-'))
      sign = -1;
    else if (cur.accept('+'))
      sign = 1;
    else
      break;
    result += sign * parse_term(cur);
  }
  return result;
}

void render_monomial(std::ostringstream& out, const Monomial& m,
                     bool lead_with_star) {
  bool first = !lead_with_star;
  for (int i = 0; i < kVarCount; ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << kVarNames[static_cast<std::size_t>(i)];
    if (e > 1) out << '^' << e;
  }
}

}  // namespace

BiPoly parse_poly(std::string_view text) {
  Cursor cur{text};
  BiPoly p = parse_poly_impl(cur);
  cur.skip_ws();
  if (!cur.done()) throw SyntaxError("trailing input", cur.pos);
  return p;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (mono.is_one()) {
      out << rational_to_string(mag);
    } else if (mag == 1) {
      render_monomial(out, mono, false);
    } else {
      out << rational_to_string(mag);
      render_monomial(out, mono, true);
    }
  }
  return out.str();
}

IdealSpec IdealSpec::from_generators(std::vector<BiPoly> gens) {
  IdealSpec spec;
  spec.generators = std::move(gens);
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    spec.names.push_back("f" + std::to_string(i + 1));
  return spec;
}

std::vector<BiDegree> IdealSpec::bidegrees() const {
  std::vector<BiDegree> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.bidegree());
  return out;
}

IdealSpec parse_ideal_text(std::string_view text) {
  IdealSpec spec;
  std::vector<BiDegree> declared;
  bool any_declared = false;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t eol = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, eol == std::string_view::npos ? std::string_view::npos
                                                  : eol - line_start);
    const std::size_t base = line_start;
    line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size() || line[i] == '#') continue;

    std::string name;
    while (i < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
      name.push_back(line[i++]);
    if (name.empty())
      throw SyntaxError("expected a generator name", base + i);
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;

    std::optional<BiDegree> decl;
    if (i < line.size() && line[i] == ':') {
      ++i;
      Cursor c{line, i};
      c.skip_ws();
      if (!c.accept('(')) throw SyntaxError("expected '('", base + c.pos);
      c.skip_ws();
      bool neg1 = c.accept('-');
      const Int d1 = parse_nat(c);
      c.skip_ws();
      if (!c.accept(',')) throw SyntaxError("expected ','", base + c.pos);
      c.skip_ws();
      bool neg2 = c.accept('-');
      const Int d2 = parse_nat(c);
      c.skip_ws();
      if (!c.accept(')')) throw SyntaxError("expected ')'", base + c.pos);
      decl = BiDegree{(neg1 ? -1 : 1) * static_cast<int>(d1),
                      (neg2 ? -1 : 1) * static_cast<int>(d2)};
      i = c.pos;
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
    }

    if (i >= line.size() || line[i] != '=')
      throw SyntaxError("expected '='", base + i);
    ++i;

    Cursor c{line, i};
    BiPoly p = parse_poly_impl(c);
    c.skip_ws();
    if (!c.done()) throw SyntaxError("trailing input", base + c.pos);

    const BiDegree computed = p.bidegree();  // rejects 0 and mixed degrees
    if (decl && !(computed == *decl))
      throw BidegreeMismatchError("generator " + name + " declared " +
                                  decl->to_string() + " but has bidegree " +
                                  computed.to_string());
    spec.names.push_back(name);
    spec.generators.push_back(std::move(p));
    declared.push_back(decl.value_or(computed));
    if (decl) any_declared = true;
  }

  if (spec.generators.empty()) throw EmptyIdealError();
  if (any_declared) spec.declared_bidegrees = declared;
  return spec;
}

IdealSpec parse_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str());
}

std::string serialize_ideal(const IdealSpec& spec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    out << spec.names[i];
    if (spec.declared_bidegrees)
      out << " : " << (*spec.declared_bidegrees)[i].to_string();
    out << " = " << to_string(spec.generators[i]) << '\n';
  }
  return out.str();
}

std::vector<BiPoly> parse_poly_list(std::string_view text) {
  std::vector<BiPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(
        start,
        comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Cursor c{piece};
    BiPoly p = parse_poly_impl(c);
    c.skip_ws();
    if (!c.done()) throw SyntaxError("trailing input", start + c.pos);
    out.push_back(std::move(p));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const std::vector<BiPoly>& polys) {
  std::ostringstream out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out << ", ";
    out << to_string(polys[i]);
  }
  return out.str();
}

namespace {

Rational parse_rational_scalar(Cursor& cur) {
  cur.skip_ws();
  bool neg = cur.accept('-');
  const Int num = parse_nat(cur);
  Int den = 1;
  cur.skip_ws();
  if (cur.accept('/')) {
    cur.skip_ws();
    const std::size_t dpos = cur.pos;
    den = parse_nat(cur);
    if (den == 0) throw SyntaxError("zero denominator", dpos);
  }
  Rational q(num, den);
  return neg ? Rational(-q) : q;
}

}  // namespace

PointP1xP1 parse_point(std::string_view text) {
  Cursor cur{text};
  const Rational s = parse_rational_scalar(cur);
  cur.skip_ws();
  if (!cur.accept(':')) throw SyntaxError("expected ':'", cur.pos);
  const Rational u = parse_rational_scalar(cur);
  cur.skip_ws();
  if (!cur.accept(';')) throw SyntaxError("expected ';'", cur.pos);
  const Rational t = parse_rational_scalar(cur);
  cur.skip_ws();
  if (!cur.accept(':')) throw SyntaxError("expected ':'", cur.pos);
  const Rational v = parse_rational_scalar(cur);
  cur.skip_ws();
  if (!cur.done()) throw SyntaxError("trailing input", cur.pos);
  return PointP1xP1::make(s, u, t, v);
}

std::string to_string(const PointP1xP1& p) { return p.to_string(); }

}  // namespace bisyz
