#include "weld/laurent.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace weld {

LaurentPoly LaurentPoly::constant(std::int64_t c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exp) {
    LaurentPoly p;
    if (c != 0) p.coeff_[exp] = c;
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.set(e, p.coeff(e) + c);
    return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
    assert(!coeff_.empty());
    return coeff_.begin()->first;
}

int LaurentPoly::max_exp() const {
    assert(!coeff_.empty());
    return coeff_.rbegin()->first;
}

void LaurentPoly::set(int exp, std::int64_t c) {
    if (c == 0)
        coeff_.erase(exp);
    else
        coeff_[exp] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeff_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeff_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto [e1, c1] : coeff_)
        for (auto [e2, c2] : o.coeff_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto [e, c] : coeff_) r.coeff_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto [e, c] : coeff_) r.coeff_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::substituted_inverse() const {
    LaurentPoly r;
    for (auto [e, c] : coeff_) r.coeff_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    assert(k >= 0);
    LaurentPoly r = constant(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

LaurentPoly LaurentPoly::normalized_units() const {
    if (is_zero()) return {};
    LaurentPoly r = shifted(-min_exp());
    if (r.coeff_.begin()->second < 0) r = -r;
    return r;
}

bool LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& out) {
    if (den.is_zero()) return false;
    if (num.is_zero()) {
        out = {};
        return true;
    }
    // For an exact quotient q we have min_exp(q) = min_exp(num) - min_exp(den).
    const int lowest_q_exp = num.min_exp() - den.min_exp();
    LaurentPoly rem = num;
    LaurentPoly q;
    while (!rem.is_zero()) {
        const int e = rem.max_exp() - den.max_exp();
        if (e < lowest_q_exp) return false;
        const std::int64_t c_num = rem.coeff(rem.max_exp());
        const std::int64_t c_den = den.coeff(den.max_exp());
        if (c_num % c_den != 0) return false;
        LaurentPoly term = monomial(c_num / c_den, e);
        q += term;
        rem -= term * den;
    }
    out = q;
    return true;
}

std::string LaurentPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

LaurentPoly det_cofactor(const std::vector<std::vector<LaurentPoly>>& m,
                         std::vector<int> cols) {
    const size_t row = m.size() - cols.size();
    if (cols.empty()) return LaurentPoly::constant(1);
    LaurentPoly det;
    for (size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        LaurentPoly sub = entry * det_cofactor(m, std::move(rest));
        if (k % 2 == 0)
            det += sub;
        else
            det -= sub;
    }
    return det;
}

LaurentPoly det_bareiss(std::vector<std::vector<LaurentPoly>> m) {
    const size_t n = m.size();
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t pivot = k;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return {};  // singular
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                LaurentPoly q;
                bool ok = LaurentPoly::divide_exact(num, prev, q);
                assert(ok && "Bareiss division must be exact");
                if (!ok) throw std::logic_error("Bareiss division not exact");
                m[i][j] = std::move(q);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

namespace {

// Dense integer polynomial, index = exponent, no leading zero at the top.
using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::int64_t int_gcd(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Divide out the content; returns it (0 for the zero polynomial).
std::int64_t make_primitive(IntPoly& p) {
    std::int64_t c = 0;
    for (std::int64_t v : p) c = int_gcd(c, v);
    if (c > 1)
        for (std::int64_t& v : p) v /= c;
    return c;
}

// Strip the t^k unit: drop low-order zero coefficients.
void strip_low_zeros(IntPoly& p) {
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k) p.erase(p.begin(), p.begin() + static_cast<long>(k));
}

IntPoly to_int_poly(const LaurentPoly& p) {
    IntPoly v(static_cast<size_t>(p.max_exp() - p.min_exp()) + 1, 0);
    for (auto [e, c] : p.terms()) v[static_cast<size_t>(e - p.min_exp())] = c;
    return v;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.normalized_units();
    if (b.is_zero()) return a.normalized_units();
    IntPoly pa = to_int_poly(a), pb = to_int_poly(b);
    const std::int64_t content = int_gcd(make_primitive(pa), make_primitive(pb));
    if (pa.size() < pb.size()) std::swap(pa, pb);
    // Primitive pseudo-remainder sequence.
    while (!pb.empty()) {
        IntPoly r = pa;
        while (true) {
            trim(r);
            if (r.size() < pb.size()) break;
            const std::int64_t lc_r = r.back();
            const std::int64_t lc_b = pb.back();
            const size_t shift = r.size() - pb.size();
            for (std::int64_t& v : r) v *= lc_b;
            for (size_t i = 0; i < pb.size(); ++i) r[shift + i] -= lc_r * pb[i];
            strip_low_zeros(r);  // powers of t are units
            make_primitive(r);
        }
        strip_low_zeros(r);
        make_primitive(r);
        pa = std::move(pb);
        pb = std::move(r);
    }
    LaurentPoly g;
    for (size_t i = 0; i < pa.size(); ++i)
        if (pa[i] != 0) g += LaurentPoly::monomial(content * pa[i], static_cast<int>(i));
    return g.normalized_units();
}

LaurentPoly det_laurent(std::vector<std::vector<LaurentPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly::constant(1);
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("det_laurent: matrix not square");
    }
    if (n <= 6) {
        std::vector<int> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
        return det_cofactor(m, std::move(cols));
    }
    return det_bareiss(std::move(m));
}

}  // namespace weld
