#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace superext {

// Exact element a + b*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational fraction(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }
    bool is_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Canonical text form: "p/q", "p/q+r/s*i", "r/s*i"; integers drop "/1".
    std::string to_string() const;
    static GaussianRational parse(std::string_view text);

    // Square root inside Q(i) when one exists.
    std::optional<GaussianRational> sqrt() const;

    // Image in F_p with i mapped to a fixed square root of -1; nullopt if a denominator vanishes.
    std::optional<std::uint64_t> mod_p(std::uint64_t p, std::uint64_t sqrt_minus_one) const;

    std::size_t hash() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using Scalar = GaussianRational;

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace superext

template <>
struct std::hash<superext::GaussianRational> {
    std::size_t operator()(const superext::GaussianRational& g) const { return g.hash(); }
};
