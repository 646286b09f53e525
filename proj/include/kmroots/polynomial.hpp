#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace kmroots {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Univariate polynomial in the level k over the rationals.
class Poly {
public:
    Poly() = default;
    Poly(const BigRat& c);  // NOLINT: constants convert implicitly
    Poly(long long c) : Poly(BigRat(c)) {}  // NOLINT
    Poly(int c) : Poly(BigRat(c)) {}        // NOLINT
    static Poly k();
    static Poly from_coeffs(std::vector<BigRat> low_first);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    BigRat coeff(int i) const;
    BigRat lead() const { return c_.empty() ? BigRat(0) : c_.back(); }
    BigRat operator()(const BigRat& x) const;
    // p(s k)
    Poly scaled(const BigRat& s) const;
    // Integer multiple with coprime integer coefficients and the same sign of
    // the leading coefficient; returns the factor used.
    BigRat integer_factor() const;
    std::string str(const std::string& var = "k") const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a) { return Poly(0) - a; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

private:
    std::vector<BigRat> c_;  // lowest degree first, no trailing zeros
    void trim();
};

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic greatest common divisor (zero when both are zero).
Poly gcd(Poly a, Poly b);

struct RationalRoot {
    BigRat value;
    int multiplicity = 1;
};
// Distinct rational roots in ascending order, by the rational-root theorem
// applied to the primitive integer multiple.
std::vector<RationalRoot> rational_roots(const Poly& p);

std::string to_string(const BigRat& q);

}  // namespace kmroots
