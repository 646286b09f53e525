#include "kmroots/polynomial.hpp"

#include <algorithm>
#include <set>

#include "kmroots/errors.hpp"

namespace kmroots {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Poly::Poly(const BigRat& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::k() { return from_coeffs({0, 1}); }

Poly Poly::from_coeffs(std::vector<BigRat> low_first) {
    Poly p;
    p.c_ = std::move(low_first);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat Poly::coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigRat(0); }

BigRat Poly::operator()(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::scaled(const BigRat& s) const {
    Poly r = *this;
    BigRat f = 1;
    for (auto& c : r.c_) {
        c *= f;
        f *= s;
    }
    r.trim();
    return r;
}

BigRat Poly::integer_factor() const {
    if (c_.empty()) return 1;
    BigInt l = 1, g = 0;
    for (const auto& c : c_) l = boost::multiprecision::lcm(l, denominator(c));
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, numerator(BigRat(c * l)));
    return BigRat(l, g);
}

std::string to_string(const BigRat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const BigRat c = c_[i];
        if (c == 0) continue;
        const BigRat a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        const bool unit = a == 1 && i > 0;
        if (!unit) s += to_string(a);
        if (i > 0) s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly::from_coeffs(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    Poly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::vector<BigRat> t(r.degree() - b.degree() + 1);
        t.back() = r.lead() / b.lead();
        const Poly term = Poly::from_coeffs(std::move(t));
        q += term;
        r = r - term * b;
    }
    return {q, r};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * Poly(1 / a.lead());
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
    n = abs(n);
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly& p) {
    std::vector<RationalRoot> out;
    if (p.degree() < 1) return out;
    Poly rest = p * Poly(p.integer_factor());
    int zero = 0;
    while (rest.coeff(0) == 0) {
        rest = divmod(rest, Poly::k()).first;
        ++zero;
    }
    if (zero) out.push_back({0, zero});
    if (rest.degree() >= 1) {
        std::set<BigRat> candidates;
        for (const BigInt& a : divisors(numerator(rest.coeff(0))))
            for (const BigInt& b : divisors(numerator(rest.lead()))) {
                candidates.insert(BigRat(a, b));
                candidates.insert(BigRat(-a, b));
            }
        for (const BigRat& x : candidates) {
            const Poly factor = Poly::k() - Poly(x);
            int mult = 0;
            while (rest.degree() >= 1 && rest(x) == 0) {
                rest = divmod(rest, factor).first;
                ++mult;
            }
            if (mult) out.push_back({x, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return out;
}

}  // namespace kmroots
