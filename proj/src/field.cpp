#include "gelfand/field.hpp"

#include <algorithm>
#include <sstream>

#include "gelfand/polynomial.hpp"

namespace gelfand {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t degree = 1;
  std::uint32_t abs_degree = 1;
  std::uint64_t size = 0;
  std::shared_ptr<const FieldData> base;  // null for a prime field
  std::uint64_t base_size = 0;
  std::vector<Code> modulus;  // over base, low degree first, monic

  // Operation tables, populated for small fields.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<Code> neg_table;
  std::vector<Code> inv_table;

  bool has_tables() const noexcept { return !mul_table.empty(); }
};

}  // namespace detail

namespace {

using detail::FieldData;

constexpr std::uint64_t kTableLimit = 256;
constexpr std::uint32_t kMaxCharacteristic = 1u << 15;
constexpr std::uint64_t kMaxFieldSize = 1ull << 31;

Code raw_add(const FieldData& f, Code a, Code b);
Code raw_mul(const FieldData& f, Code a, Code b);
Code raw_neg(const FieldData& f, Code a);

void split(const FieldData& f, Code a, std::vector<Code>& digits) {
  digits.resize(f.degree);
  std::uint64_t v = a;
  for (std::uint32_t i = 0; i < f.degree; ++i) {
    digits[i] = static_cast<Code>(v % f.base_size);
    v /= f.base_size;
  }
}

Code join(const FieldData& f, std::span<const Code> digits) {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * f.base_size + digits[i];
  return static_cast<Code>(v);
}

Code raw_add(const FieldData& f, Code a, Code b) {
  if (f.has_tables()) return f.add_table[a * f.size + b];
  if (!f.base) {
    Code s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  std::vector<Code> x, y;
  split(f, a, x);
  split(f, b, y);
  for (std::uint32_t i = 0; i < f.degree; ++i) x[i] = raw_add(*f.base, x[i], y[i]);
  return join(f, x);
}

Code raw_neg(const FieldData& f, Code a) {
  if (f.has_tables()) return f.neg_table[a];
  if (!f.base) return a == 0 ? 0 : f.p - a;
  std::vector<Code> x;
  split(f, a, x);
  for (auto& c : x) c = raw_neg(*f.base, c);
  return join(f, x);
}

Code raw_mul(const FieldData& f, Code a, Code b) {
  if (f.has_tables()) return f.mul_table[a * f.size + b];
  if (!f.base) return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % f.p);
  const FieldData& base = *f.base;
  const std::uint32_t d = f.degree;
  std::vector<Code> x, y;
  split(f, a, x);
  split(f, b, y);
  std::vector<Code> prod(2 * d - 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      prod[i + j] = raw_add(base, prod[i + j], raw_mul(base, x[i], y[j]));
    }
  }
  for (std::size_t k = prod.size(); k-- > d;) {
    const Code c = prod[k];
    if (c == 0) continue;
    const Code nc = raw_neg(base, c);
    for (std::uint32_t i = 0; i < d; ++i) {
      prod[k - d + i] = raw_add(base, prod[k - d + i], raw_mul(base, nc, f.modulus[i]));
    }
    prod[k] = 0;
  }
  return join(f, std::span<const Code>(prod.data(), d));
}

Code raw_pow(const FieldData& f, Code a, std::uint64_t e) {
  Code result = 1;
  Code b = a;
  while (e > 0) {
    if (e & 1u) result = raw_mul(f, result, b);
    b = raw_mul(f, b, b);
    e >>= 1u;
  }
  return result;
}

Code raw_inv(const FieldData& f, Code a) {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (!f.inv_table.empty()) return f.inv_table[a];
  return raw_pow(f, a, f.size - 2);
}

void build_tables(FieldData& f) {
  if (f.size > kTableLimit) return;
  const auto q = static_cast<Code>(f.size);
  std::vector<std::uint16_t> add(f.size * f.size), mul(f.size * f.size);
  std::vector<Code> neg(q), inv(q, 0);
  for (Code a = 0; a < q; ++a) {
    neg[a] = raw_neg(f, a);
    for (Code b = 0; b < q; ++b) {
      add[a * q + b] = static_cast<std::uint16_t>(raw_add(f, a, b));
      mul[a * q + b] = static_cast<std::uint16_t>(raw_mul(f, a, b));
    }
  }
  for (Code a = 1; a < q; ++a) {
    for (Code b = 1; b < q; ++b) {
      if (mul[a * q + b] == 1) {
        inv[a] = b;
        break;
      }
    }
  }
  f.add_table = std::move(add);
  f.mul_table = std::move(mul);
  f.neg_table = std::move(neg);
  f.inv_table = std::move(inv);
}

bool same_data(const FieldData* a, const FieldData* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->p != b->p || a->degree != b->degree || a->modulus != b->modulus) return false;
  return same_data(a->base.get(), b->base.get());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1 || p >= (1ull << 32)) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) fail(ErrorCode::TooLarge, "characteristic must be below 2^15");
  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->size = p;
  data->base_size = p;
  build_tables(*data);
  return Field(std::move(data));
}

Field make_field(std::uint32_t p, const std::optional<std::vector<std::uint32_t>>& modulus) {
  Field prime_field = Field::prime(p);
  if (!modulus) return prime_field;
  const auto& m = *modulus;
  for (auto c : m) {
    if (c >= p) fail(ErrorCode::InvalidInput, "modulus coefficient " + std::to_string(c) + " not in [0, p)");
  }
  if (m.empty() || m.back() != 1) fail(ErrorCode::ModulusNotMonic, "modulus must be monic");
  return make_extension(prime_field, Polynomial(prime_field, std::vector<Code>(m.begin(), m.end())));
}

Field make_extension(const Field& base, const Polynomial& modulus) {
  if (!(modulus.field() == base)) fail(ErrorCode::FieldMismatch, "modulus is not over the base field");
  if (!modulus.is_monic()) fail(ErrorCode::ModulusNotMonic, "modulus must be monic");
  if (modulus.degree() < 1) fail(ErrorCode::InvalidInput, "modulus must have degree at least 1");
  if (modulus.degree() == 1) return base;
  if (!is_irreducible(modulus)) {
    fail(ErrorCode::ModulusReducible, modulus.to_string() + " is reducible");
  }
  const auto d = static_cast<std::uint32_t>(modulus.degree());
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    size *= base.size();
    if (size > kMaxFieldSize) fail(ErrorCode::TooLarge, "extension field too large");
  }
  auto data = std::make_shared<FieldData>();
  data->p = base.characteristic();
  data->degree = d;
  data->abs_degree = d * base.absolute_degree();
  data->size = size;
  data->base = base.data_;
  data->base_size = base.size();
  data->modulus = modulus.coeffs();
  build_tables(*data);
  return Field(std::move(data));
}

Field field_of_order(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  Field fp = Field::prime(pp->first);
  if (pp->second == 1) return fp;
  return make_extension(fp, lowest_irreducible(fp, static_cast<int>(pp->second)));
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->degree; }
std::uint32_t Field::absolute_degree() const { return data_->abs_degree; }
std::uint64_t Field::size() const { return data_->size; }
bool Field::is_prime_field() const { return !data_->base; }

Field Field::base() const {
  if (!data_->base) return *this;
  return Field(data_->base);
}

const std::vector<Code>& Field::modulus_codes() const { return data_->modulus; }

Polynomial Field::modulus() const {
  if (is_prime_field()) return Polynomial(*this, {0, 1});
  return Polynomial(base(), data_->modulus);
}

Code Field::add(Code a, Code b) const { return raw_add(*data_, a, b); }
Code Field::sub(Code a, Code b) const { return raw_add(*data_, a, raw_neg(*data_, b)); }
Code Field::neg(Code a) const { return raw_neg(*data_, a); }
Code Field::mul(Code a, Code b) const { return raw_mul(*data_, a, b); }
Code Field::inv(Code a) const { return raw_inv(*data_, a); }
Code Field::div(Code a, Code b) const { return raw_mul(*data_, a, raw_inv(*data_, b)); }
Code Field::pow(Code a, std::uint64_t e) const { return raw_pow(*data_, a, e); }

Code Field::from_int(long long k) const {
  const long long p = data_->p;
  return static_cast<Code>(((k % p) + p) % p);
}

std::vector<Code> Field::coefficients(Code a) const {
  std::vector<Code> out;
  if (!data_->base) return {a};
  split(*data_, a, out);
  return out;
}

Code Field::from_coefficients(std::span<const Code> coeffs) const {
  if (!data_->base) {
    if (coeffs.size() != 1) fail(ErrorCode::InvalidInput, "prime field element takes one coefficient");
    return coeffs[0];
  }
  if (coeffs.size() != data_->degree) fail(ErrorCode::InvalidInput, "coefficient count must equal the degree");
  for (auto c : coeffs) {
    if (c >= data_->base_size) fail(ErrorCode::InvalidInput, "coefficient out of range");
  }
  return join(*data_, coeffs);
}

std::vector<std::uint32_t> Field::prime_coefficients(Code a) const {
  if (is_prime_field()) return {a};
  const Field b = base();
  std::vector<std::uint32_t> out;
  for (Code c : coefficients(a)) {
    auto sub = b.prime_coefficients(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

FieldElement Field::element(Code a) const {
  if (a >= size()) fail(ErrorCode::InvalidInput, "element code out of range");
  return FieldElement(*this, a);
}

FieldElement Field::operator()(long long k) const { return FieldElement(*this, from_int(k)); }

std::string Field::format(Code a) const {
  if (is_prime_field()) return std::to_string(a);
  const auto digits = coefficients(a);
  const Field b = base();
  if (!b.is_prime_field()) {
    std::string out = "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) out += ",";
      out += b.format(digits[i]);
    }
    return out + "]";
  }
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const Code c = digits[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << size();
  if (!is_prime_field()) os << " = F_" << base().size() << "[a]/(" << modulus().to_string() << ")";
  return os.str();
}

bool Field::operator==(const Field& other) const { return same_data(data_.get(), other.data_.get()); }

FieldElement::FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.div(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_.frobenius(code_)}; }

bool FieldElement::operator==(const FieldElement& o) const { return code_ == o.code_ && field_ == o.field_; }

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  check_same(o);
  return code_ <=> o.code_;
}

std::optional<FieldElement> square_root(const FieldElement& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  const std::uint64_t q = f.size();
  if (f.characteristic() == 2) return a.pow(q / 2);
  if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;

  // Tonelli-Shanks on q - 1 = 2^s * m.
  std::uint64_t m = q - 1;
  std::uint32_t s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  FieldElement z = f.element(2 % q);
  for (Code c = 2; c < q; ++c) {
    z = f.element(c);
    if (!z.pow((q - 1) / 2).is_one()) break;
  }
  FieldElement c = z.pow(m);
  FieldElement t = a.pow(m);
  FieldElement r = a.pow((m + 1) / 2);
  std::uint32_t M = s;
  while (!t.is_one()) {
    std::uint32_t i = 0;
    FieldElement t2 = t;
    while (!t2.is_one()) {
      t2 = t2 * t2;
      ++i;
    }
    FieldElement b = c;
    for (std::uint32_t k = 0; k + i + 1 < M; ++k) b = b * b;
    M = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  FieldElement other = -r;
  return other.code() < r.code() ? other : r;
}

std::vector<FieldElement> elements(const Field& field) {
  std::vector<FieldElement> out;
  out.reserve(field.size());
  for (std::uint64_t c = 0; c < field.size(); ++c) out.emplace_back(field, static_cast<Code>(c));
  return out;
}

}  // namespace gelfand
