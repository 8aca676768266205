#ifndef SPLITSCAN_INT_POLY_HPP
#define SPLITSCAN_INT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitscan {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored ascending (coeffs[i] multiplies X^i).
/// The zero polynomial is the empty coefficient vector; for every
/// nonzero polynomial the highest stored coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(const mpz_class& v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(v);
        return p;
    }
    /// The monomial v * X^k.
    static IntPoly monomial(const mpz_class& v, std::size_t k) {
        IntPoly p;
        if (v != 0) {
            p.c_.assign(k + 1, mpz_class(0));
            p.c_[k] = v;
        }
        return p;
    }
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree of a nonzero polynomial. The zero polynomial has no degree;
    /// callers must check is_zero() first (we throw rather than return a
    /// sentinel that could leak into arithmetic).
    int degree() const {
        if (c_.empty()) throw std::domain_error("degree of zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    const mpz_class& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Coefficient of X^i (zero beyond the stored range).
    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const {
        std::vector<mpz_class> r(c_);
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly derivative() const;

    mpz_class eval(const mpz_class& t) const;

    /// Largest absolute coefficient value.
    mpz_class height() const;

    /// Deterministic total order (degree, then coefficients from the top).
    static int compare(const IntPoly& a, const IntPoly& b);

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

IntPoly operator*(const mpz_class& s, const IntPoly& a);

/// Human-readable form, e.g. "X^3 - 2".
std::string to_string(const IntPoly& a);
/// Ascending coefficient-list form, e.g. "[-2, 0, 0, 1]".
std::string to_coeff_string(const IntPoly& a);

/// Parses either the human form ("X^3 - 2", products and parentheses
/// allowed, adjacency means multiplication) or the coefficient-list form
/// ("[-2, 0, 0, 1]"). Throws std::invalid_argument with the offending
/// position on bad input.
IntPoly parse_poly(const std::string& text);

/// Polynomial with rational coefficients, same dense ascending layout.
/// Only what gcd/extended-Euclid over Q needs.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& a) {
        for (const auto& v : a.coeffs()) c_.emplace_back(v);
        trim();
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const {
        if (c_.empty()) throw std::domain_error("degree of zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    const mpq_class& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const mpq_class& coeff(std::size_t i) const {
        static const mpq_class kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator*(const mpq_class& s) const;

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

    /// Least common multiple of the coefficient denominators.
    mpz_class denominator_lcm() const;

    /// clear denominators: the primitive integer polynomial with the
    /// same roots (positive leading coefficient).
    IntPoly clear_denominators() const;

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

}  // namespace splitscan

#endif
