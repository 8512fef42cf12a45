#include "superext/scalar.hpp"

#include "superext/errors.hpp"

#include <algorithm>
#include <cctype>

namespace superext {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    if (text.empty()) throw ValidationError("malformed scalar literal: \"" + std::string(whole) + "\"");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    const auto valid = std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-';
    });
    if (!valid || s.empty() || std::count(s.begin(), s.end(), '/') > 1) {
        throw ValidationError("malformed scalar literal: \"" + std::string(whole) + "\"");
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.substr(slash + 1).find_first_not_of('0') == std::string::npos) {
        throw ValidationError("zero denominator in scalar literal: \"" + std::string(whole) + "\"");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ValidationError("malformed scalar literal: \"" + std::string(whole) + "\"");
    q.canonicalize();
    return q;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::optional<std::uint64_t> rational_mod(const mpq_class& q, std::uint64_t p) {
    const std::uint64_t den = mpz_mod(q.get_den(), p);
    if (den == 0) return std::nullopt;
    mpz_class inv;
    mpz_class d(static_cast<unsigned long>(den));
    mpz_class m(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    const std::uint64_t num = mpz_mod(q.get_num(), p);
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(num) * inv.get_ui()) % p);
}

}  // namespace

GaussianRational GaussianRational::fraction(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

bool GaussianRational::is_integer() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw ValidationError("division by zero");
    if (is_real()) return GaussianRational(mpq_class(1 / re_));
    const mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_real() && b.is_real()) return GaussianRational(mpq_class(a.re_ * b.re_));
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    *this = *this * o;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    *this = *this * o.inverse();
    return *this;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag = im_ == 1 ? std::string() : (im_ == -1 ? std::string("-") : im_.get_str() + "*");
    imag += "i";
    if (sgn(re_) == 0) return imag;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ValidationError("empty scalar literal");
    if (s.back() != 'i') return GaussianRational(parse_rational(s, text));
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    }
    const std::string re_part = split == std::string::npos ? std::string() : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    return {re, parse_rational(im_part, text)};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return mpq_class(0);
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
        return std::nullopt;
    }
    mpz_class n;
    mpz_class d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
    if (is_real()) {
        if (sgn(re_) >= 0) {
            auto r = rational_sqrt(re_);
            if (r) return GaussianRational(*r);
            return std::nullopt;
        }
        auto r = rational_sqrt(mpq_class(-re_));
        if (r) return GaussianRational(mpq_class(0), *r);
        return std::nullopt;
    }
    const auto n = rational_sqrt(norm());
    if (!n) return std::nullopt;
    const auto x = rational_sqrt(mpq_class((re_ + *n) / 2));
    if (!x || sgn(*x) == 0) return std::nullopt;
    GaussianRational root(*x, mpq_class(im_ / (2 * *x)));
    if (root * root != *this) return std::nullopt;
    return root;
}

std::optional<std::uint64_t> GaussianRational::mod_p(std::uint64_t p, std::uint64_t sqrt_minus_one) const {
    const auto a = rational_mod(re_, p);
    if (!a) return std::nullopt;
    if (is_real()) return a;
    const auto b = rational_mod(im_, p);
    if (!b) return std::nullopt;
    return static_cast<std::uint64_t>((*a + static_cast<unsigned __int128>(*b) * sqrt_minus_one) % p);
}

std::size_t GaussianRational::hash() const {
    auto h = [](const mpq_class& q) {
        const std::size_t a = mpz_getlimbn(q.get_num_mpz_t(), 0) ^ static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()));
        const std::size_t b = mpz_getlimbn(q.get_den_mpz_t(), 0);
        return a * 1000003u ^ b;
    };
    return h(re_) * 31u + h(im_);
}

}  // namespace superext
