#include "ramid/render.hpp"

#include <vector>

namespace ramid {

namespace {

enum class Style { Latex, Text };

std::string rational_atom(const Rational& r, Style style) {
  const Rational a = r.abs();
  std::string body;
  if (a.is_integer()) {
    body = a.to_string();
  } else if (style == Style::Latex) {
    body = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  } else {
    body = a.to_string();
  }
  return r.sign() < 0 ? "-" + body : body;
}

std::string surd_body(const Surd& s, Style style) {
  if (s.is_rational()) return rational_atom(s.p(), style);
  std::string out;
  if (!s.p().is_zero()) out = rational_atom(s.p(), style);
  const Rational q = s.q();
  if (q.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const Rational qa = q.abs();
  if (style == Style::Latex) {
    if (qa != Rational(1)) out += rational_atom(qa, style);
    out += "\\sqrt{" + s.d().get_str() + "}";
  } else {
    if (qa != Rational(1)) out += rational_atom(qa, style) + "*";
    out += "sqrt(" + s.d().get_str() + ")";
  }
  return out;
}

bool is_plain_integer(const Surd& s) { return s.is_rational() && s.p().is_integer() && s.p().sign() >= 0; }

// v^2 with v rendered unsigned where it is a plain integer.
std::string squared(const Surd& v, Style style) {
  const Surd a = v.abs();
  if (is_plain_integer(a)) return a.p().to_string() + "^2";
  if (style == Style::Latex) return "\\left(" + surd_body(a, style) + "\\right)^2";
  return "(" + surd_body(a, style) + ")^2";
}

std::string reciprocal_of(const Surd& v, Style style) {
  if (style == Style::Latex) return "\\frac{1}{" + surd_body(v, style) + "}";
  if (is_plain_integer(v)) return "1/" + surd_body(v, style);
  return "1/(" + surd_body(v, style) + ")";
}

std::string paren(const std::string& inner, Style style) {
  return style == Style::Latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
}

std::string radicand_factor(const Surd& v, Style style) {
  if (style == Style::Latex) return paren("1-\\frac{1}{" + squared(v, style) + "}", style);
  return paren("1-1/" + squared(v, style), style);
}

std::string rhs_factor(const Surd& value, int sign, Style style) {
  int s = sign * value.sign();
  return paren(std::string("1") + (s < 0 ? "-" : "+") + reciprocal_of(value.abs(), style), style);
}

std::string assemble(const Rational& scale, const std::vector<Surd>& radicand, const std::vector<RhsFactor>& rhs,
                     Style style) {
  const std::string joiner = style == Style::Latex ? "" : "*";
  std::vector<std::string> left;
  if (scale != Rational(1)) left.push_back(rational_atom(scale, style));
  for (const Surd& v : radicand) left.push_back(radicand_factor(v, style));
  std::string lhs;
  for (std::size_t i = 0; i < left.size(); ++i) lhs += (i == 0 ? "" : joiner) + left[i];
  std::string out = style == Style::Latex ? "\\sqrt{" + lhs + "}" : "sqrt(" + lhs + ")";
  out += " = ";
  for (std::size_t i = 0; i < rhs.size(); ++i) out += (i == 0 ? "" : joiner) + rhs_factor(rhs[i].value, rhs[i].sign, style);
  return out;
}

std::string render(const IdentityTuple& id, Style style) {
  return assemble(id.t, {Surd(id.A), Surd(id.x), Surd(id.y), Surd(id.z)},
                  {{Surd(id.x), 1}, {Surd(id.y), 1}, {Surd(id.z), 1}}, style);
}

std::string render(const VariationIdentity& v, Style style) {
  return assemble(v.scale(), v.radicand_entries(), v.rhs_entries(), style);
}

}  // namespace

std::string render_latex(const IdentityTuple& id) { return render(id, Style::Latex); }
std::string render_latex(const VariationIdentity& v) { return render(v, Style::Latex); }
std::string render_text(const IdentityTuple& id) { return render(id, Style::Text); }
std::string render_text(const VariationIdentity& v) { return render(v, Style::Text); }

}  // namespace ramid
