#include "eulerstab/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace eulerstab {

std::string VarId::name() const {
  static const char* letters[] = {"x", "y", "q"};
  return std::string(letters[static_cast<int>(axis)]) + std::to_string(index);
}

VarId VarId::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad variable: " + name);
  Axis axis;
  switch (name[0]) {
    case 'x': axis = Axis::X; break;
    case 'y': axis = Axis::Y; break;
    case 'q': axis = Axis::Q; break;
    default: throw std::invalid_argument("bad variable: " + name);
  }
  std::uint64_t idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("bad variable: " + name);
    idx = idx * 10 + static_cast<std::uint64_t>(name[i] - '0');
    if (idx > 0xffffffffull) throw std::invalid_argument("index overflow: " + name);
  }
  if (idx == 0) throw std::invalid_argument("variable index must be >= 1: " + name);
  return {axis, static_cast<std::uint32_t>(idx)};
}

Monomial Monomial::make(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.f_.empty() && m.f_.back().var == f.var)
      m.f_.back().exp += f.exp;
    else
      m.f_.push_back(f);
  }
  return m;
}

Monomial Monomial::var(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.f_.push_back({v, exp});
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& f : f_)
    if (f.var == v) return f.exp;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  m.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->var < b->var) m.f_.push_back(*a++);
    else if (b->var < a->var) m.f_.push_back(*b++);
    else { m.f_.push_back({a->var, a->exp + b->exp}); ++a; ++b; }
  }
  m.f_.insert(m.f_.end(), a, f_.end());
  m.f_.insert(m.f_.end(), b, o.f_.end());
  return m;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial m;
  auto a = f_.begin(), b = o.f_.begin();
  while (b != o.f_.end()) {
    if (a == f_.end() || b->var < a->var) return std::nullopt;
    if (a->var < b->var) { m.f_.push_back(*a++); continue; }
    if (a->exp < b->exp) return std::nullopt;
    if (a->exp > b->exp) m.f_.push_back({a->var, a->exp - b->exp});
    ++a; ++b;
  }
  m.f_.insert(m.f_.end(), a, f_.end());
  return m;
}

Monomial Monomial::dec(VarId v) const {
  Monomial m;
  m.f_.reserve(f_.size());
  bool hit = false;
  for (const auto& f : f_) {
    if (f.var == v) {
      hit = true;
      if (f.exp > 1) m.f_.push_back({f.var, f.exp - 1});
    } else {
      m.f_.push_back(f);
    }
  }
  if (!hit) throw std::invalid_argument("dec: variable absent");
  return m;
}

int cmp_monomial(const Monomial& a, const Monomial& b) {
  const std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  while (ia != fa.rend() && ib != fb.rend()) {
    if (ia->var != ib->var) return ia->var < ib->var ? -1 : 1;
    if (ia->exp != ib->exp) return ia->exp < ib->exp ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia == fa.rend() && ib == fb.rend()) return 0;
  return ia == fa.rend() ? -1 : 1;
}

MPoly MPoly::constant(const BigRat& c) {
  MPoly p;
  if (c != 0) p.t_.push_back({Monomial(), c});
  return p;
}

MPoly MPoly::var(VarId v) { return term(Monomial::var(v), 1); }

MPoly MPoly::term(const Monomial& m, const BigRat& c) {
  MPoly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return cmp_monomial(a.first, b.first) < 0;
  });
  MPoly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first)
      p.t_.back().second += t.second;
    else
      p.t_.push_back(std::move(t));
    if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
  }
  return p;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

BigRat MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      t_.begin(), t_.end(), m, [](const Term& t, const Monomial& key) {
        return cmp_monomial(t.first, key) < 0;
      });
  if (it != t_.end() && it->first == m) return it->second;
  return 0;
}

BigRat MPoly::coefficient_sum() const {
  BigRat s = 0;
  for (const auto& [m, c] : t_) s += c;
  return s;
}

std::vector<VarId> MPoly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : t_)
    for (const auto& f : m.factors()) vs.push_back(f.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::uint32_t MPoly::max_xy_index() const {
  std::uint32_t mx = 0;
  for (const auto& [m, c] : t_)
    for (const auto& f : m.factors())
      if (f.var.axis != Axis::Q) mx = std::max(mx, f.var.index);
  return mx;
}

bool MPoly::is_multiaffine() const {
  for (const auto& [m, c] : t_)
    for (const auto& f : m.factors())
      if (f.exp > 1) return false;
  return true;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out;
  out.t_.reserve(a.t_.size() + b.t_.size());
  auto ia = a.t_.begin(), ib = b.t_.begin();
  while (ia != a.t_.end() && ib != b.t_.end()) {
    int c = cmp_monomial(ia->first, ib->first);
    if (c < 0) out.t_.push_back(*ia++);
    else if (c > 0) out.t_.push_back(*ib++);
    else {
      BigRat s = ia->second + ib->second;
      if (s != 0) out.t_.push_back({ia->first, s});
      ++ia;
      ++ib;
    }
  }
  out.t_.insert(out.t_.end(), ia, a.t_.end());
  out.t_.insert(out.t_.end(), ib, b.t_.end());
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.t_) t.second = -t.second;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const BigRat& c, const MPoly& p) {
  if (c == 0) return MPoly();
  MPoly out = p;
  for (auto& t : out.t_) t.second *= c;
  return out;
}

namespace {

using Accum = std::unordered_map<Monomial, BigRat, MonomialHash>;

MPoly accum_to_poly(Accum& acc) {
  std::vector<MPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return MPoly::from_terms(std::move(terms));
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.size() == 1) {
    const auto& [m, c] = a.terms()[0];
    std::vector<MPoly::Term> terms;
    terms.reserve(b.size());
    for (const auto& [mb, cb] : b.terms()) terms.push_back({m.times(mb), c * cb});
    return MPoly::from_terms(std::move(terms));
  }
  if (b.size() == 1) return b * a;
  Accum acc;
  acc.reserve(a.size() * 2 + b.size() * 2);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc[ma.times(mb)] += ca * cb;
  return accum_to_poly(acc);
}

MPoly partial(const MPoly& p, VarId v) {
  std::vector<MPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exponent(v);
    if (e > 0) terms.push_back({m.dec(v), c * BigRat(e)});
  }
  return MPoly::from_terms(std::move(terms));
}

MPoly del(const MPoly& p, std::uint32_t maxIndex) {
  Accum acc;
  acc.reserve(p.size() * 2);
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) {
      if (f.var.axis == Axis::Q || f.var.index > maxIndex) continue;
      acc[m.dec(f.var)] += c * BigRat(f.exp);
    }
  }
  return accum_to_poly(acc);
}

MPoly specialize(const MPoly& p, VarId v, const BigRat& a) {
  std::vector<MPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exponent(v);
    if (e == 0) {
      terms.push_back({m, c});
      continue;
    }
    BigRat nc = c * rat_pow(a, e);
    if (nc == 0) continue;
    std::vector<Monomial::Factor> fs;
    for (const auto& f : m.factors())
      if (f.var != v) fs.push_back(f);
    terms.push_back({Monomial::make(std::move(fs)), nc});
  }
  return MPoly::from_terms(std::move(terms));
}

MPoly specialize_axis(const MPoly& p, Axis axis, const BigRat& a) {
  std::vector<MPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    BigRat nc = c;
    std::vector<Monomial::Factor> fs;
    for (const auto& f : m.factors()) {
      if (f.var.axis == axis)
        nc *= rat_pow(a, f.exp);
      else
        fs.push_back(f);
    }
    if (nc == 0) continue;
    terms.push_back({Monomial::make(std::move(fs)), nc});
  }
  return MPoly::from_terms(std::move(terms));
}

MPoly diagonalize(const MPoly& p, Axis axis) {
  std::vector<MPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : m.factors()) {
      if (f.var.axis == axis)
        fs.push_back({{axis, 1}, f.exp});
      else
        fs.push_back(f);
    }
    terms.push_back({Monomial::make(std::move(fs)), c});
  }
  return MPoly::from_terms(std::move(terms));
}

MPoly shift_indices(const MPoly& p, int delta) {
  std::vector<MPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : m.factors()) {
      std::int64_t ni = static_cast<std::int64_t>(f.var.index) + delta;
      if (ni < 1)
        throw std::domain_error("shift_indices: index underflow for " +
                                f.var.name());
      fs.push_back({{f.var.axis, static_cast<std::uint32_t>(ni)}, f.exp});
    }
    terms.push_back({Monomial::make(std::move(fs)), c});
  }
  return MPoly::from_terms(std::move(terms));
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  std::map<Monomial, BigRat, MonomialLess> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  const auto& dLead = d.terms().back();
  std::vector<MPoly::Term> quot;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    auto qm = lead->first.divided_by(dLead.first);
    if (!qm) return std::nullopt;
    BigRat qc = lead->second / dLead.second;
    quot.push_back({*qm, qc});
    for (const auto& [dm, dc] : d.terms()) {
      Monomial m = qm->times(dm);
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(m, -qc * dc);
      } else {
        it->second -= qc * dc;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return MPoly::from_terms(std::move(quot));
}

std::complex<double> eval_complex(
    const MPoly& p, const std::map<VarId, std::complex<double>>& assign) {
  return eval_generic<std::complex<double>>(
      p, assign, std::complex<double>(0.0, 0.0),
      [](const BigRat& c) { return std::complex<double>(c.get_d(), 0.0); });
}

BigRat eval_rational(const MPoly& p, const std::map<VarId, BigRat>& assign) {
  return eval_generic<BigRat>(p, assign, BigRat(0),
                              [](const BigRat& c) { return c; });
}

namespace {

std::string monomial_text(const Monomial& m) {
  // Q factors first, then X, then Y, each block by ascending index.
  std::vector<Monomial::Factor> order;
  for (const auto& f : m.factors())
    if (f.var.axis == Axis::Q) order.push_back(f);
  for (const auto& f : m.factors())
    if (f.var.axis != Axis::Q) order.push_back(f);
  std::string out;
  for (const auto& f : order) {
    if (!out.empty()) out += "*";
    out += f.var.name();
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

}  // namespace

std::string MPoly::to_text() const {
  if (t_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const auto& [m, c] = t_[i];
    BigRat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string ms = monomial_text(m);
    if (ms.empty()) {
      out += rat_to_string(a);
    } else if (a == 1) {
      out += ms;
    } else {
      out += rat_to_string(a) + "*" + ms;
    }
  }
  return out;
}

MPoly MPoly::from_text(const std::string& text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == n) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (i < n) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected +/- in polynomial text");
    }
    first = false;
    BigRat coeff = sign;
    std::vector<Monomial::Factor> fs;
    bool any = false;
    while (i < n) {
      skip_ws();
      if (i >= n || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') { ++i; skip_ws(); }
      std::size_t start = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '/' || text[i] == '^'))
        ++i;
      std::string tok = text.substr(start, i - start);
      if (tok.empty()) throw std::invalid_argument("bad polynomial text");
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coeff *= rat_from_string(tok);
      } else {
        std::uint32_t exp = 1;
        auto caret = tok.find('^');
        std::string vname = tok;
        if (caret != std::string::npos) {
          vname = tok.substr(0, caret);
          exp = static_cast<std::uint32_t>(std::stoul(tok.substr(caret + 1)));
        }
        fs.push_back({VarId::parse(vname), exp});
      }
      any = true;
    }
    if (!any) throw std::invalid_argument("dangling sign in polynomial text");
    terms.push_back({Monomial::make(std::move(fs)), coeff});
  }
  return from_terms(std::move(terms));
}

std::string MPoly::to_json_string() const {
  nlohmann::ordered_json j;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : t_) {
    nlohmann::ordered_json jm = nlohmann::ordered_json::object();
    for (const auto& f : m.factors()) jm[f.var.name()] = f.exp;
    j["terms"].push_back({{"m", jm}, {"c", rat_to_string(c)}});
  }
  return j.dump();
}

MPoly MPoly::from_json_string(const std::string& json) {
  nlohmann::json j = nlohmann::json::parse(json);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial JSON must have a terms array");
  std::vector<Term> terms;
  for (const auto& jt : j["terms"]) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [key, val] : jt.at("m").items())
      fs.push_back({VarId::parse(key), val.get<std::uint32_t>()});
    terms.push_back({Monomial::make(std::move(fs)),
                     rat_from_string(jt.at("c").get<std::string>())});
  }
  return from_terms(std::move(terms));
}

}  // namespace eulerstab
