#include "gelfand/polynomial.hpp"

#include <algorithm>

namespace gelfand {

Polynomial::Polynomial(Field field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(const Field& field, Code c, std::size_t k) {
  std::vector<Code> v(k + 1, 0);
  v[k] = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::from_ints(const Field& field, std::initializer_list<long long> coeffs) {
  std::vector<Code> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(field.from_int(c));
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  std::vector<Code> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(o);
  std::vector<Code> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<Code> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Code> out(coeffs_);
  for (auto& c : out) c = field_.neg(c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(Code c) const {
  std::vector<Code> out(coeffs_);
  for (auto& x : out) x = field_.mul(x, c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero(field_);
  std::vector<Code> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i % field_.characteristic())), coeffs_[i]);
  }
  return Polynomial(field_, std::move(out));
}

Code Polynomial::evaluate(Code x) const {
  Code acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_ && field_ == o.field_; }

std::strong_ordering Polynomial::operator<=>(const Polynomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (auto c = coeffs_[i] <=> o.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Code c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string cs = field_.format(c);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs;
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial::zero(f), a};
  std::vector<Code> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Code> quot(rem.size() - db, 0);
  const Code lead_inv = f.inv(d.back());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Code c = f.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, d[i]));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::one(f), s1 = Polynomial::zero(f);
  Polynomial t0 = Polynomial::zero(f), t1 = Polynomial::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Code inv = f.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::one(a.field()) % m;
  Polynomial base = a % m;
  while (e > 0) {
    if (e & 1u) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1u;
  }
  return result;
}

bool is_squarefree(const Polynomial& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

bool is_irreducible(const Polynomial& f) {
  if (!f.is_monic()) fail(ErrorCode::NotMonic, f.to_string() + " is not monic");
  if (f.degree() < 1) fail(ErrorCode::InvalidInput, "irreducibility needs degree at least 1");
  if (f.degree() == 1) return true;
  // f has a factor of degree i exactly when gcd(f, t^(q^i) - t) is nontrivial
  // for the least such i.
  const Field& field = f.field();
  const Polynomial t = Polynomial::monomial(field, 1, 1);
  Polynomial h = t;
  for (int i = 1; i <= f.degree() / 2; ++i) {
    h = powmod(h, field.size(), f);
    if (gcd(f, h - t).degree() != 0) return false;
  }
  return true;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& f) {
  if (!f.is_monic()) fail(ErrorCode::NotMonic, f.to_string() + " is not monic");
  if (f.degree() < 1) fail(ErrorCode::InvalidInput, "factorization needs degree at least 1");
  if (!is_squarefree(f)) fail(ErrorCode::NotSquarefree, f.to_string() + " has a repeated factor");

  std::vector<Polynomial> factors;
  Polynomial rest = f;
  // Trial division in increasing degree: the first monic divisor found at each
  // degree is irreducible because every smaller factor has already been removed.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    MonicRange range(f.field(), d);
    for (std::uint64_t i = 0; i < range.count() && 2 * d <= rest.degree(); ++i) {
      Polynomial g = range.at(i);
      auto [quot, rem] = divmod(rest, g);
      if (rem.is_zero()) {
        factors.push_back(std::move(g));
        rest = std::move(quot);
      }
    }
  }
  if (rest.degree() >= 1) factors.push_back(rest);
  std::sort(factors.begin(), factors.end());
  return factors;
}

MonicRange::MonicRange(Field field, int degree) : field_(std::move(field)), degree_(degree) {
  count_ = checked_pow(field_.size(), static_cast<std::uint64_t>(degree));
}

Polynomial MonicRange::at(std::uint64_t index) const {
  std::vector<Code> c(static_cast<std::size_t>(degree_) + 1, 0);
  for (int i = 0; i < degree_; ++i) {
    c[i] = static_cast<Code>(index % field_.size());
    index /= field_.size();
  }
  c[degree_] = 1;
  return Polynomial(field_, std::move(c));
}

Polynomial lowest_irreducible(const Field& field, int degree) {
  MonicRange range(field, degree);
  for (std::uint64_t i = 0; i < range.count(); ++i) {
    Polynomial g = range.at(i);
    if (is_irreducible(g)) return g;
  }
  fail(ErrorCode::InvariantViolation, "no irreducible polynomial of degree " + std::to_string(degree));
}

}  // namespace gelfand
