// Exact integer Laurent polynomials in one variable, plus the fraction-free
// determinant used by the Alexander invariant.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace weld {

class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly constant(std::int64_t c);
    static LaurentPoly monomial(std::int64_t c, int exp);
    static LaurentPoly from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms);

    bool is_zero() const { return coeff_.empty(); }
    std::int64_t coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero

    // term map, exponent -> nonzero coefficient
    const std::map<int, std::int64_t>& terms() const { return coeff_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly shifted(int k) const;              // multiply by t^k
    LaurentPoly substituted_inverse() const;       // t -> t^{-1}
    LaurentPoly pow(int k) const;                  // k >= 0

    // Unit normalization: lowest exponent 0, lowest coefficient positive.
    // Zero stays zero.
    LaurentPoly normalized_units() const;

    // Quotient if division is exact, otherwise false and `out` untouched.
    static bool divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& out);

    std::string str(std::string_view var = "t") const;

private:
    void set(int exp, std::int64_t c);
    std::map<int, std::int64_t> coeff_;
};

// Determinant over LaurentPoly: cofactor expansion for n <= 6, Bareiss
// fraction-free elimination with row pivoting above that. Returns the zero
// polynomial for genuinely singular matrices.
LaurentPoly det_laurent(std::vector<std::vector<LaurentPoly>> m);

// Greatest common divisor up to units, returned unit-normalized (primitive
// pseudo-remainder sequence over the integer coefficients). gcd(0, p) = p.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace weld
