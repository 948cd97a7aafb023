#include "postrop/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "postrop/errors.hpp"

namespace postrop {

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly r(nvars);
  for (auto& term : t) {
    if (!r.terms_.empty() && r.terms_.back().first == term.first) {
      r.terms_.back().second += term.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (term.second != 0) {
      r.terms_.push_back(std::move(term));
    }
  }
  return r;
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) { return monomial(nvars, Exp(nvars, 0), c); }

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw InputError("variable index out of range");
  Exp e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, Exp e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars) throw InputError("exponent vector has wrong length");
  LaurentPoly r(nvars);
  if (c != 0) r.terms_.emplace_back(std::move(e), c);
  return r;
}

bool LaurentPoly::all_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (nvars_ != o.nvars_) throw InputError("Laurent polynomials in different variable sets");
  LaurentPoly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly(std::max(nvars_, o.nvars_));
  if (nvars_ != o.nvars_) throw InputError("Laurent polynomials in different variable sets");
  std::vector<Term> t;
  t.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exp e(nvars_);
      for (int v = 0; v < nvars_; ++v) e[v] = a.first[v] + b.first[v];
      t.emplace_back(std::move(e), a.second * b.second);
    }
  return from_terms(nvars_, std::move(t));
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (is_zero()) return LaurentPoly(o.nvars_);
  if (nvars_ != o.nvars_) throw InputError("Laurent polynomials in different variable sets");
  auto sub = [&](const Exp& a, const Exp& b) {
    Exp e(nvars_);
    for (int v = 0; v < nvars_; ++v) e[v] = a[v] - b[v];
    return e;
  };
  if (o.is_monomial()) {
    LaurentPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(sub(t.first, o.terms_[0].first), t.second / o.terms_[0].second);
    return r;  // translation preserves the lexicographic order
  }
  // Leading-term division in the lexicographic (group) order. Every quotient
  // term is at least lowest(*this)/lowest(o), which bounds the loop.
  const Exp floor = sub(terms_.front().first, o.terms_.front().first);
  const Term& lead = o.terms_.back();
  LaurentPoly rem = *this;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.back();
    Exp e = sub(top.first, lead.first);
    if (e < floor) throw PreconditionError("Laurent polynomial division is not exact");
    Rational c = top.second / lead.second;
    LaurentPoly m = monomial(nvars_, e, c);
    q.emplace_back(std::move(e), c);
    rem = rem - m * o;
  }
  return from_terms(nvars_, std::move(q));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw PreconditionError("negative power of a non-monomial");
    Exp x(nvars_);
    for (int v = 0; v < nvars_; ++v) x[v] = terms_[0].first[v] * e;
    Rational c = 1;
    for (int i = 0; i < -e; ++i) c /= terms_[0].second;
    return monomial(nvars_, x, c);
  }
  LaurentPoly r = constant(nvars_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Rational LaurentPoly::eval(const QVec& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw InputError("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] != 0 && x[v] == 0) throw InputError("Laurent polynomial evaluated at a zero coordinate");
      for (int t = 0; t < std::abs(e[v]); ++t) m = e[v] > 0 ? Rational(m * x[v]) : Rational(m / x[v]);
    }
    total += m;
  }
  return total;
}

TropValue LaurentPoly::trop(const QVec& y) const {
  if (static_cast<int>(y.size()) != nvars_) throw InputError("evaluation point has wrong dimension");
  TropValue best = TropValue::infinity();
  for (const auto& t : terms_) {
    Rational s = 0;
    for (int v = 0; v < nvars_; ++v)
      if (t.first[v] != 0) s += y[v] * t.first[v];
    best = tmin(best, TropValue::of(s));
  }
  return best;
}

std::vector<IntVec> LaurentPoly::exponents() const {
  std::vector<IntVec> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(t.first.begin(), t.first.end());
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    bool unit = true;
    for (int v : e) unit = unit && v == 0;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (a != 1 || unit) {
      os << to_string(a);
      need_star = true;
    }
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << "x" << v + 1;
      if (e[v] != 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, int nvars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty polynomial");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) { throw InputError("cannot parse polynomial '" + text + "': " + why); };
  auto read_int = [&]() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  };
  std::vector<Term> terms;
  if (s == "0") return LaurentPoly(nvars);
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      fail("expected '+' or '-'");
    }
    Exp e(nvars, 0);
    Rational c = sign;
    bool any = false;
    while (true) {
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        long v = read_int();
        if (v < 1 || v > nvars) fail("variable out of range");
        long p = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          p = read_int();
        }
        e[v - 1] += static_cast<int>(p);
      } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        c *= parse_rational(s.substr(start, pos - start));
      } else {
        fail("expected a factor");
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    terms.emplace_back(std::move(e), c);
  }
  return from_terms(nvars, std::move(terms));
}

LaurentPoly LaurentSemifield::div(const LaurentPoly& a, const LaurentPoly& b) const { return a.divide_exact(b); }

}  // namespace postrop
