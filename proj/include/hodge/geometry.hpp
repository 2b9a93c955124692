#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <hodge/hodge_vector.hpp>
#include <hodge/profiles.hpp>

namespace hodge {

/// Exact rational arithmetic over 128-bit integers; wide enough for the
/// product formulas at large degree without pulling in a bignum dependency.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rational from_parts(__int128 num, __int128 den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        r.normalize();
        return r;
    }

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return from_parts(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return from_parts(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return from_parts(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw domain_error("division by zero");
        return from_parts(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const { return from_parts(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string to_string() const {
        std::string s = print_int(num_);
        if (den_ != 1) s += "/" + print_int(den_);
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        __int128 a = num_ < 0 ? -num_ : num_;
        __int128 b = den_;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num_ /= a;
            den_ /= a;
        }
        if (num_ == 0) den_ = 1;
    }

    static std::string print_int(__int128 v) {
        if (v == 0) return "0";
        const bool neg = v < 0;
        std::string digits;
        while (v != 0) {
            int d = static_cast<int>(v % 10);
            digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
            v /= 10;
        }
        if (neg) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    __int128 num_ = 0;
    __int128 den_ = 1;
};

enum class FamilyKind { hypersurface, double_cover };

inline const char* to_string(FamilyKind f) {
    return f == FamilyKind::hypersurface ? "hypersurface" : "double_cover";
}

/// Middle primitive cohomology of degree-d hypersurfaces in P^n (weight
/// n - 1), or of double covers of P^n branched in degree 2d (weight n).
struct FamilySpec {
    FamilyKind family = FamilyKind::hypersurface;
    int n = 0;
    int d = 0;

    int weight() const { return family == FamilyKind::hypersurface ? n - 1 : n; }

    void validate() const {
        if (n < 1) throw input_error("ambient dimension n must be at least 1");
        if (d < n + 1) throw input_error("degree must satisfy d >= n + 1");
    }
};

namespace detail {

// coefficients of (1 + t + ... + t^base)^(n+1), truncated past max_exp
inline std::vector<__int128> truncated_power(int base, int n, int max_exp) {
    std::vector<__int128> poly{1};
    for (int factor = 0; factor < n + 1; ++factor) {
        std::vector<__int128> next(std::min<std::size_t>(poly.size() + base, max_exp + 1), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            for (int j = 0; j <= base && i + j < next.size(); ++j) {
                next[i + j] += poly[i];
                if (next[i + j] > (__int128)1 << 100)
                    throw input_error("Hodge numbers overflow for these parameters");
            }
        }
        poly = std::move(next);
    }
    return poly;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    __int128 out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > (__int128)1 << 100)
            throw input_error("binomial coefficient overflows for these parameters");
    }
    return static_cast<long long>(out);
}

} // namespace detail

/// h^p = coefficient of t^{(p+1)d - n - 1} (hypersurface) or
/// t^{(2p+1)d - n - 1} (double cover) in the truncated geometric-series power.
inline HodgeVector middle_hodge_vector(const FamilySpec& spec) {
    spec.validate();
    const int r = spec.weight();
    const bool hyp = spec.family == FamilyKind::hypersurface;
    const int base = hyp ? spec.d - 2 : 2 * spec.d - 2;
    std::vector<int> exps(static_cast<std::size_t>(r) + 1);
    for (int p = 0; p <= r; ++p)
        exps[static_cast<std::size_t>(p)] =
            (hyp ? (p + 1) * spec.d : (2 * p + 1) * spec.d) - spec.n - 1;
    const auto poly = detail::truncated_power(base, spec.n, exps.back());
    std::vector<int> h(static_cast<std::size_t>(r) + 1);
    for (int p = 0; p <= r; ++p) {
        const int e = exps[static_cast<std::size_t>(p)];
        const __int128 value = (e >= 0 && e < static_cast<int>(poly.size())) ? poly[e] : 0;
        if (value > std::numeric_limits<int>::max())
            throw input_error("Hodge numbers overflow for these parameters");
        h[static_cast<std::size_t>(p)] = static_cast<int>(value);
    }
    return HodgeVector(h);
}

/// Closed forms: h^0 = C(d-1, n) for both families,
/// h^1 = C(2d-1, n) - (n+1) C(d, n) resp. C(3d-1, n) - (n+1) C(d, n).
inline std::pair<long long, long long> closed_form_h0_h1(const FamilySpec& spec) {
    spec.validate();
    const long long h0 = detail::binomial(spec.d - 1, spec.n);
    const int top = spec.family == FamilyKind::hypersurface ? 2 * spec.d - 1 : 3 * spec.d - 1;
    const long long h1 =
        detail::binomial(top, spec.n) - (spec.n + 1LL) * detail::binomial(spec.d, spec.n);
    return {h0, h1};
}

/// Unimodality, h^1 >= r h^0, and the saturation bound h >= h^0 b^r. The
/// first two imply the third; `consistent` records that the computed report
/// honors the implication.
struct BoundsReport {
    bool unimodal = false;
    bool h1_bound = false;
    bool b_bound = false;

    bool consistent() const { return !(unimodal && h1_bound) || b_bound; }
};

inline BoundsReport check_bounds(const FamilySpec& spec) {
    const HodgeVector h = middle_hodge_vector(spec);
    const int r = h.weight();
    BoundsReport out;
    out.unimodal = true;
    for (int p = 0; p + 1 <= r / 2; ++p)
        if (h[p] > h[p + 1]) out.unimodal = false;
    out.h1_bound = r >= 1 && static_cast<long long>(h[1]) >= static_cast<long long>(r) * h[0];
    const std::vector<int> b = bound_vector(r, BoundKind::b);
    out.b_bound = true;
    for (int p = 0; p <= r; ++p)
        if (static_cast<long long>(h[p]) < static_cast<long long>(h[0]) * b[static_cast<std::size_t>(p)])
            out.b_bound = false;
    return out;
}

/// f_n(d) = h^1/h^0 - (n - 1) for the hypersurface family, as the exact
/// product formula; defined for rational d > n.
inline Rational f_n(int n, Rational d) {
    if (n < 3) throw input_error("f_n is defined for n >= 3");
    if (d <= Rational(n)) throw domain_error("f_n has a pole at d = n; need d > n");
    Rational prod(1);
    for (int j = 1; j <= n; ++j) prod = prod * (Rational(1) + d / (d - Rational(j)));
    const Rational correction =
        Rational(n + 1) * (Rational(1) + Rational(n) / (d - Rational(n)));
    return prod - correction - Rational(n - 1);
}

} // namespace hodge
