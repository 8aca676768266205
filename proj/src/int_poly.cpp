#include "splitscan/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace splitscan {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
    std::vector<mpz_class> r(a.coeffs());
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mpz_class(i) * c_[i];
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& t) const {
    mpz_class acc{0};
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= t;
        acc += c_[i];
    }
    return acc;
}

mpz_class IntPoly::height() const {
    mpz_class h{0};
    for (const auto& v : c_) {
        mpz_class a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

int IntPoly::compare(const IntPoly& a, const IntPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        int s = cmp(a.c_[i], b.c_[i]);
        if (s != 0) return s;
    }
    return 0;
}

namespace {

void append_term(std::ostringstream& os, const mpz_class& v, std::size_t k, bool first) {
    mpz_class a = abs(v);
    if (first) {
        if (v < 0) os << "-";
    } else {
        os << (v < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) {
        if (a != 1) os << "*";
        os << "X";
        if (k >= 2) os << "^" << k;
    }
}

}  // namespace

std::string to_string(const IntPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeff(i) == 0) continue;
        append_term(os, a.coeff(i), i, first);
        first = false;
    }
    return os.str();
}

std::string to_coeff_string(const IntPoly& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) os << ", ";
        os << a.coeff(i).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

// Recursive-descent parser for the human polynomial grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*' factor) | factor)*      adjacency multiplies
//   factor  := base ('^' uint)?
//   base    := integer | 'X' | 'x' | '(' expr ')'
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool starts_factor() {
        char ch = peek();
        return ch == '(' || ch == 'X' || ch == 'x' || std::isdigit(static_cast<unsigned char>(ch));
    }

    IntPoly expr() {
        char ch = peek();
        bool neg = false;
        if (ch == '+' || ch == '-') {
            neg = ch == '-';
            ++pos;
        }
        IntPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            ch = peek();
            if (ch != '+' && ch != '-') break;
            ++pos;
            IntPoly t = term();
            acc = ch == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    IntPoly term() {
        IntPoly acc = factor();
        while (true) {
            char ch = peek();
            if (ch == '*') {
                ++pos;
                acc *= factor();
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    IntPoly factor() {
        IntPoly b = base();
        if (peek() == '^') {
            ++pos;
            unsigned long e = uint_lit();
            IntPoly r = IntPoly::constant(1);
            for (unsigned long i = 0; i < e; ++i) r *= b;
            return r;
        }
        return b;
    }

    IntPoly base() {
        char ch = peek();
        if (ch == '(') {
            ++pos;
            IntPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (ch == 'X' || ch == 'x') {
            ++pos;
            return IntPoly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return IntPoly::constant(int_lit());
        fail("expected integer, 'X' or '('");
    }

    unsigned long uint_lit() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (v > 100000) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    mpz_class int_lit() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }
};

IntPoly parse_coeff_list(const std::string& s) {
    std::vector<mpz_class> coeffs;
    std::size_t i = 1;  // past '['
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip();
            std::size_t start = i;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
                throw std::invalid_argument("parse error at position " + std::to_string(start) +
                                            ": expected integer coefficient");
            coeffs.emplace_back(s.substr(start, i - start));
            skip();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("parse error at position " + std::to_string(i) + ": expected ',' or ']'");
        }
    }
    while (i < s.size()) {
        if (!std::isspace(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("parse error at position " + std::to_string(i) + ": trailing input");
        ++i;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') return parse_coeff_list(text.substr(i));
    Parser p(text);
    IntPoly r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly{};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> r(c_);
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> rem(c_);
    std::vector<mpq_class> quo;
    int dd = d.degree();
    if (static_cast<int>(rem.size()) - 1 >= dd) quo.assign(rem.size() - dd, mpq_class(0));
    while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
        mpq_class q = rem.back() / d.lc();
        std::size_t shift = rem.size() - 1 - dd;
        quo[shift] = q;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(dd); ++i) rem[shift + i] -= q * d.c_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

mpz_class RatPoly::denominator_lcm() const {
    mpz_class l{1};
    for (const auto& v : c_) {
        mpz_class d = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

IntPoly RatPoly::clear_denominators() const {
    mpz_class l = denominator_lcm();
    std::vector<mpz_class> r;
    r.reserve(c_.size());
    mpz_class g{0};
    for (const auto& v : c_) {
        mpq_class scaled = v * l;
        r.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.back().get_mpz_t());
    }
    if (g != 0) {
        if (r.back() < 0) g = -g;
        for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

std::string RatPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace splitscan
