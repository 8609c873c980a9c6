#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace brd {

// Exact rational on int64. Thresholds in this model sit exactly on strict/
// non-strict comparison boundaries, so floating point is banned from the core.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    // floor/ceil as exact integers
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Accepts "p/q", plain integers, or decimal literals like "9.5" (exact).
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            std::int64_t n = std::stoll(text.substr(0, slash));
            std::int64_t d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
            if (tail.empty()) return Rational(std::stoll(head));
            std::int64_t den = 1;
            for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
            std::int64_t whole = head.empty() || head == "-" ? 0 : std::stoll(head);
            std::int64_t frac = std::stoll(tail);
            bool neg = !head.empty() && head[0] == '-';
            std::int64_t n = whole * den + (neg ? -frac : frac);
            return Rational(n, den);
        }
        return Rational(std::stoll(text));
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline bool operator==(const Rational& a, std::int64_t b) { return a == Rational(b); }
inline bool operator<(std::int64_t a, const Rational& b) { return Rational(a) < b; }
inline bool operator<(const Rational& a, std::int64_t b) { return a < Rational(b); }

}  // namespace brd
