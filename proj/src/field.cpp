#include "hopfwit/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hopfwit {

// ---------------------------------------------------------------------------
// primality (deterministic Miller-Rabin, valid for the full 64-bit range)

namespace {

using u64 = unsigned long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (u64 p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// GF(p) scalars and dense polynomials over GF(p)

namespace zp {

u64 norm(long v, u64 p) {
    long r = v % (long)p;
    if (r < 0) r += (long)p;
    return (u64)r;
}

u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 mul(u64 a, u64 b, u64 p) { return mulmod(a, b, p); }

u64 inv(u64 a, u64 p) {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(p)");
    long t = 0, newt = 1;
    long r = (long)p, newr = (long)a;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return norm(t, p);
}

ZpPoly trim(ZpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int deg(const ZpPoly& a) { return (int)a.size() - 1; }

ZpPoly add(const ZpPoly& a, const ZpPoly& b, u64 p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = add(x, y, p);
    }
    return trim(std::move(r));
}

ZpPoly sub(const ZpPoly& a, const ZpPoly& b, u64 p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = sub(x, y, p);
    }
    return trim(std::move(r));
}

ZpPoly mul(const ZpPoly& a, const ZpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
    return trim(std::move(r));
}

ZpPoly scale(const ZpPoly& a, u64 c, u64 p) {
    ZpPoly r = a;
    for (auto& x : r) x = mul(x, c, p);
    return trim(std::move(r));
}

std::pair<ZpPoly, ZpPoly> divmod(ZpPoly a, const ZpPoly& b, u64 p) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    ZpPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    u64 lci = inv(b.back(), p);
    while (deg(a) >= deg(b)) {
        size_t shift = a.size() - b.size();
        u64 c = mul(a.back(), lci, p);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = sub(a[shift + i], mul(c, b[i], p), p);
        a = trim(std::move(a));
    }
    return {trim(std::move(q)), std::move(a)};
}

ZpPoly gcd(ZpPoly a, ZpPoly b, u64 p) {
    while (!b.empty()) {
        auto [q, r] = divmod(a, b, p);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = scale(a, inv(a.back(), p), p);
    return a;
}

} // namespace zp

bool ExtValue::operator==(const ExtValue& o) const { return coeffs == o.coeffs; }

// ---------------------------------------------------------------------------
// field construction

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime_field(unsigned long p) {
    if (!is_prime(p)) throw NonPrimeModulus("PrimeField modulus " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::PrimeField;
    f->p_ = p;
    return f;
}

FieldPtr Field::rational_functions(unsigned long p, std::string var) {
    if (!is_prime(p)) throw NonPrimeModulus("RationalFunctions modulus " + std::to_string(p) + " is not prime");
    if (var.empty() || !std::isalpha((unsigned char)var[0]))
        throw ParseError("variable name must start with a letter");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::RationalFunctions;
    f->p_ = p;
    f->var_ = std::move(var);
    return f;
}

FieldPtr Field::simple_extension(FieldPtr base, std::vector<Scalar> minpoly) {
    if (!base) throw Error("simple_extension: null base field");
    if (minpoly.size() < 2) throw ZeroDegreeExtension("minimal polynomial must have degree >= 1");
    for (const auto& c : minpoly)
        if (!c.valid() || !base->same(c.field())) throw FieldMismatch("minimal polynomial coefficients must lie in the base field");
    if (!minpoly.back().is_one()) throw NonMonicMinimalPolynomial("minimal polynomial must be monic");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::SimpleExtension;
    f->base_ = std::move(base);
    f->minpoly_ = std::move(minpoly);
    return f;
}

unsigned long Field::characteristic() const {
    switch (kind_) {
        case FieldKind::Rationals: return 0;
        case FieldKind::PrimeField:
        case FieldKind::RationalFunctions: return p_;
        case FieldKind::SimpleExtension: return base_->characteristic();
    }
    return 0;
}

bool Field::same(const Field& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::PrimeField: return p_ == o.p_;
        case FieldKind::RationalFunctions: return p_ == o.p_ && var_ == o.var_;
        case FieldKind::SimpleExtension:
            return base_->same(*o.base_) && minpoly_ == o.minpoly_;
    }
    return false;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
    auto self = shared_from_this();
    switch (kind_) {
        case FieldKind::Rationals: return Scalar(self, mpq_class(n));
        case FieldKind::PrimeField: return Scalar(self, zp::norm(n, p_));
        case FieldKind::RationalFunctions: {
            unsigned long c = zp::norm(n, p_);
            RatFuncValue v;
            if (c != 0) v.num = {c};
            v.den = {1};
            return Scalar(self, std::move(v));
        }
        case FieldKind::SimpleExtension: {
            ExtValue v;
            v.coeffs.assign(degree(), base_->zero());
            v.coeffs[0] = base_->from_int(n);
            return Scalar(self, std::move(v));
        }
    }
    throw Error("unreachable");
}

Scalar Field::from_fraction(long num, long den) const {
    return from_int(num) / from_int(den);
}

Scalar Field::generator() const {
    auto self = shared_from_this();
    if (kind_ == FieldKind::RationalFunctions) {
        RatFuncValue v;
        v.num = {0, 1};
        v.den = {1};
        return Scalar(self, std::move(v));
    }
    if (kind_ == FieldKind::SimpleExtension) {
        ExtValue v;
        v.coeffs.assign(degree(), base_->zero());
        if (degree() == 1) {
            // X = c0-root: the class of X equals -minpoly[0]
            v.coeffs[0] = -minpoly_[0];
        } else {
            v.coeffs[1] = base_->one();
        }
        return Scalar(self, std::move(v));
    }
    throw Error("generator() requires RationalFunctions or SimpleExtension");
}

Scalar Field::make_ext(std::vector<Scalar> coeffs) const {
    if (kind_ != FieldKind::SimpleExtension) throw Error("make_ext on non-extension field");
    if (coeffs.size() > degree()) {
        // reduce modulo the minimal polynomial
        auto [q, r] = polyring::divmod(polyring::trim(std::move(coeffs)), minpoly_, base_);
        (void)q;
        coeffs = std::move(r);
    }
    for (auto& c : coeffs)
        if (!base_->same(c.field())) throw FieldMismatch("extension coefficients must lie in the base field");
    coeffs.resize(degree(), base_->zero());
    return Scalar(shared_from_this(), ExtValue{std::move(coeffs)});
}

Scalar Field::make_ratfunc(ZpPoly num, ZpPoly den) const {
    if (kind_ != FieldKind::RationalFunctions) throw Error("make_ratfunc on non-function field");
    num = zp::trim(std::move(num));
    den = zp::trim(std::move(den));
    if (den.empty()) throw DivisionByZero("rational function with zero denominator");
    if (num.empty()) return Scalar(shared_from_this(), RatFuncValue{{}, {1}});
    ZpPoly g = zp::gcd(num, den, p_);
    num = zp::divmod(num, g, p_).first;
    den = zp::divmod(den, g, p_).first;
    unsigned long lc = den.back();
    if (lc != 1) {
        unsigned long lci = zp::inv(lc, p_);
        num = zp::scale(num, lci, p_);
        den = zp::scale(den, lci, p_);
    }
    return Scalar(shared_from_this(), RatFuncValue{std::move(num), std::move(den)});
}

std::string Field::str() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::RationalFunctions: return "GF(" + std::to_string(p_) + ")(" + var_ + ")";
        case FieldKind::SimpleExtension: {
            std::string s = base_->str() + "[X]/(";
            for (size_t i = minpoly_.size(); i-- > 0;) {
                s += minpoly_[i].str();
                if (i) s += ",";
            }
            return s + ")";
        }
    }
    return "?";
}

nlohmann::json Field::to_json() const {
    nlohmann::json j;
    switch (kind_) {
        case FieldKind::Rationals: j["kind"] = "Q"; break;
        case FieldKind::PrimeField:
            j["kind"] = "GFp";
            j["p"] = p_;
            break;
        case FieldKind::RationalFunctions:
            j["kind"] = "RatFunc";
            j["p"] = p_;
            j["var"] = var_;
            break;
        case FieldKind::SimpleExtension: {
            j["kind"] = "SimpleExt";
            j["base"] = base_->to_json();
            nlohmann::json mp = nlohmann::json::array();
            for (const auto& c : minpoly_) mp.push_back(c.str());
            j["minpoly"] = mp;
            break;
        }
    }
    return j;
}

FieldPtr Field::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field spec: missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return rationals();
    if (kind == "GFp") return prime_field(j.at("p").get<unsigned long>());
    if (kind == "RatFunc")
        return rational_functions(j.at("p").get<unsigned long>(), j.at("var").get<std::string>());
    if (kind == "SimpleExt") {
        FieldPtr base = from_json(j.at("base"));
        std::vector<Scalar> mp;
        for (const auto& c : j.at("minpoly")) mp.push_back(base->parse(c.get<std::string>()));
        return simple_extension(base, std::move(mp));
    }
    throw ParseError("field spec: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// scalar arithmetic

namespace {

void require_same(const Scalar& a, const Scalar& b) {
    if (!a.valid() || !b.valid()) throw Error("arithmetic on empty scalar");
    if (a.field().get() != b.field().get() && !a.field()->same(b.field()))
        throw FieldMismatch("scalars from different fields");
}

} // namespace

bool Scalar::is_zero() const {
    if (!valid()) throw Error("is_zero on empty scalar");
    switch (field_->kind()) {
        case FieldKind::Rationals: return rational() == 0;
        case FieldKind::PrimeField: return residue() == 0;
        case FieldKind::RationalFunctions: return ratfunc().num.empty();
        case FieldKind::SimpleExtension:
            return std::all_of(ext().coeffs.begin(), ext().coeffs.end(),
                               [](const Scalar& c) { return c.is_zero(); });
    }
    return false;
}

bool Scalar::is_one() const { return *this == field_->one(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    if (!field_->same(o.field())) return false;
    return v_ == o.v_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(*this, o);
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(rational() + o.rational()));
        case FieldKind::PrimeField: return Scalar(field_, zp::add(residue(), o.residue(), field_->modulus()));
        case FieldKind::RationalFunctions: {
            const auto& a = ratfunc();
            const auto& b = o.ratfunc();
            u64 p = field_->modulus();
            ZpPoly num = zp::add(zp::mul(a.num, b.den, p), zp::mul(b.num, a.den, p), p);
            ZpPoly den = zp::mul(a.den, b.den, p);
            return field_->make_ratfunc(std::move(num), std::move(den));
        }
        case FieldKind::SimpleExtension: {
            ExtValue v;
            v.coeffs.reserve(ext().coeffs.size());
            for (size_t i = 0; i < ext().coeffs.size(); ++i)
                v.coeffs.push_back(ext().coeffs[i] + o.ext().coeffs[i]);
            return Scalar(field_, std::move(v));
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::operator-() const {
    if (!valid()) throw Error("negation of empty scalar");
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(-rational()));
        case FieldKind::PrimeField: return Scalar(field_, zp::sub(0, residue(), field_->modulus()));
        case FieldKind::RationalFunctions: {
            u64 p = field_->modulus();
            RatFuncValue v{zp::scale(ratfunc().num, p - 1, p), ratfunc().den};
            return Scalar(field_, std::move(v));
        }
        case FieldKind::SimpleExtension: {
            ExtValue v;
            for (const auto& c : ext().coeffs) v.coeffs.push_back(-c);
            return Scalar(field_, std::move(v));
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(*this, o);
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(rational() * o.rational()));
        case FieldKind::PrimeField: return Scalar(field_, zp::mul(residue(), o.residue(), field_->modulus()));
        case FieldKind::RationalFunctions: {
            u64 p = field_->modulus();
            return field_->make_ratfunc(zp::mul(ratfunc().num, o.ratfunc().num, p),
                                        zp::mul(ratfunc().den, o.ratfunc().den, p));
        }
        case FieldKind::SimpleExtension: {
            polyring::Poly prod = polyring::mul(polyring::trim(ext().coeffs),
                                                polyring::trim(o.ext().coeffs), field_->base());
            auto [q, r] = polyring::divmod(prod, field_->minpoly(), field_->base());
            (void)q;
            return field_->make_ext(std::move(r));
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::inv() const {
    if (!valid()) throw Error("inverse of empty scalar");
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->str());
    switch (field_->kind()) {
        case FieldKind::Rationals: return Scalar(field_, mpq_class(1 / rational()));
        case FieldKind::PrimeField: return Scalar(field_, zp::inv(residue(), field_->modulus()));
        case FieldKind::RationalFunctions:
            return field_->make_ratfunc(ratfunc().den, ratfunc().num);
        case FieldKind::SimpleExtension: {
            auto [g, u, v] = polyring::ext_gcd(polyring::trim(ext().coeffs), field_->minpoly(), field_->base());
            (void)v;
            if (polyring::degree(g) != 0)
                throw DivisionByZero("element is a zero divisor modulo the minimal polynomial");
            // g is monic of degree 0, hence 1; u is the inverse mod minpoly
            return field_->make_ext(std::move(u));
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
    if (!valid()) throw Error("pow on empty scalar");
    Scalar base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
    Scalar r = field_->one();
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string zp_poly_str(const ZpPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(a[i]);
        } else {
            if (a[i] != 1) s += std::to_string(a[i]) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace

std::string Scalar::str() const {
    if (!valid()) return "<empty>";
    switch (field_->kind()) {
        case FieldKind::Rationals: return rational().get_str();
        case FieldKind::PrimeField: return std::to_string(residue());
        case FieldKind::RationalFunctions:
            return "(" + zp_poly_str(ratfunc().num, field_->variable()) + ")/(" +
                   zp_poly_str(ratfunc().den, field_->variable()) + ")";
        case FieldKind::SimpleExtension: {
            std::string s = "[";
            for (size_t i = 0; i < ext().coeffs.size(); ++i) {
                if (i) s += ",";
                s += ext().coeffs[i].str();
            }
            return s + "]";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// parsing

namespace {

std::string strip_ws(std::string_view sv) {
    std::string s;
    for (char c : sv)
        if (!std::isspace((unsigned char)c)) s += c;
    return s;
}

// split on top-level occurrences of sep (not inside (), [])
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ZpPoly parse_zp_poly(const std::string& s, unsigned long p, const std::string& var) {
    if (s.empty()) throw ParseError("empty polynomial");
    ZpPoly r;
    size_t i = 0;
    long sign = 1;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        i = 1;
    }
    while (i <= s.size()) {
        // read one term up to the next top-level + or -
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw ParseError("malformed polynomial '" + s + "'");
        long coeff = 1;
        size_t k = 0;
        bool saw_coeff = false;
        if (std::isdigit((unsigned char)term[0])) {
            size_t e = 0;
            coeff = std::stol(term, &e);
            k = e;
            saw_coeff = true;
            if (k < term.size() && term[k] == '*') ++k;
        }
        size_t expn = 0;
        if (k == term.size()) {
            if (!saw_coeff) throw ParseError("malformed term '" + term + "'");
        } else {
            if (term.compare(k, var.size(), var) != 0)
                throw ParseError("unknown variable in term '" + term + "' (expected '" + var + "')");
            k += var.size();
            expn = 1;
            if (k < term.size()) {
                if (term[k] != '^') throw ParseError("malformed term '" + term + "'");
                expn = std::stoul(term.substr(k + 1));
                k = term.size();
            }
        }
        if (r.size() <= expn) r.resize(expn + 1, 0);
        r[expn] = zp::add(r[expn], zp::norm(sign * coeff, p), p);
        if (j == s.size()) break;
        sign = s[j] == '-' ? -1 : 1;
        i = j + 1;
    }
    return zp::trim(std::move(r));
}

} // namespace

Scalar Field::parse(std::string_view text) const {
    std::string s = strip_ws(text);
    if (s.empty()) throw ParseError("empty scalar text");
    try {
        switch (kind_) {
            case FieldKind::Rationals: {
                mpq_class q;
                if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
                if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
                q.canonicalize();
                return Scalar(shared_from_this(), std::move(q));
            }
            case FieldKind::PrimeField: {
                size_t pos = 0;
                long v = std::stol(s, &pos);
                if (pos != s.size()) throw ParseError("bad residue '" + s + "'");
                return Scalar(shared_from_this(), zp::norm(v, p_));
            }
            case FieldKind::RationalFunctions: {
                auto parts = split_top(s, '/');
                auto unwrap = [](const std::string& t) {
                    if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
                        return t.substr(1, t.size() - 2);
                    return t;
                };
                if (parts.size() == 1)
                    return make_ratfunc(parse_zp_poly(unwrap(parts[0]), p_, var_), {1});
                if (parts.size() == 2)
                    return make_ratfunc(parse_zp_poly(unwrap(parts[0]), p_, var_),
                                        parse_zp_poly(unwrap(parts[1]), p_, var_));
                throw ParseError("bad rational function '" + s + "'");
            }
            case FieldKind::SimpleExtension: {
                if (s.front() != '[' || s.back() != ']') {
                    // allow base-field literals, embedded as constants
                    std::vector<Scalar> c{base_->parse(s)};
                    return make_ext(std::move(c));
                }
                std::string inner = s.substr(1, s.size() - 2);
                std::vector<Scalar> coeffs;
                if (!inner.empty())
                    for (const auto& part : split_top(inner, ','))
                        coeffs.push_back(base_->parse(part));
                if (coeffs.size() > degree())
                    throw ParseError("too many coefficients for extension of degree " + std::to_string(degree()));
                return make_ext(std::move(coeffs));
            }
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad scalar '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("numeric overflow in scalar '" + s + "'");
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// generic dense polynomials over a Field

namespace polyring {

Poly trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int degree(const Poly& p) { return (int)p.size() - 1; }
bool is_zero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b, const FieldPtr& f) {
    Poly r(std::max(a.size(), b.size()), f->zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] + b[i];
    }
    return trim(std::move(r));
}

Poly neg(const Poly& a) {
    Poly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(-c);
    return r;
}

Poly sub(const Poly& a, const Poly& b, const FieldPtr& f) { return add(a, neg(b), f); }

Poly mul(const Poly& a, const Poly& b, const FieldPtr& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f->zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return trim(std::move(r));
}

Poly scale(const Poly& a, const Scalar& c) {
    Poly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(x * c);
    return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a0, const Poly& b0, const FieldPtr& f) {
    Poly a = trim(a0), b = trim(b0);
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    Poly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, f->zero());
    Scalar lci = b.back().inv();
    while (degree(a) >= degree(b)) {
        size_t shift = a.size() - b.size();
        Scalar c = a.back() * lci;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        a = trim(std::move(a));
    }
    return {trim(std::move(q)), std::move(a)};
}

Poly gcd_monic(Poly a, Poly b, const FieldPtr& f) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = divmod(a, b, f);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) a = scale(a, a.back().inv());
    return a;
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, const FieldPtr& f) {
    Poly r0 = trim(a), r1 = trim(b);
    Poly s0 = {f->one()}, s1 = {};
    Poly t0 = {}, t1 = {f->one()};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, f);
        Poly s2 = sub(s0, mul(q, s1, f), f);
        Poly t2 = sub(t0, mul(q, t1, f), f);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty() && !r0.back().is_one()) {
        Scalar lci = r0.back().inv();
        r0 = scale(r0, lci);
        s0 = scale(s0, lci);
        t0 = scale(t0, lci);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

Poly derivative(const Poly& a, const FieldPtr& f) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * f->from_int((long)i));
    return trim(std::move(r));
}

Scalar eval(const Poly& a, const Scalar& x) {
    Scalar r = x.field()->zero();
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

} // namespace polyring

} // namespace hopfwit
