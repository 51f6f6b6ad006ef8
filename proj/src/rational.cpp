#include "spanmet/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace spanmet {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Strips one optional leading sign, returns +1 or -1.
int take_sign(std::string& s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        int sign = s[0] == '-' ? -1 : 1;
        s.erase(0, 1);
        return sign;
    }
    return 1;
}

Rational parse_fraction(const std::string& token) {
    auto slash = token.find('/');
    std::string num = token.substr(0, slash);
    std::string den = token.substr(slash + 1);
    int nsign = take_sign(num);
    int dsign = take_sign(den);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("bad rational token '" + token + "'");
    // Base 10 always: the default mpz base 0 would read leading zeros as octal.
    BigInt n(num, 10);
    BigInt d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + token + "'");
    Rational q(n * nsign * dsign, d);
    q.canonicalize();
    return q;
}

Rational parse_decimal(const std::string& token) {
    std::string s = token;
    int sign = take_sign(s);
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string es = s.substr(epos + 1);
        s.erase(epos);
        int esign = take_sign(es);
        if (!all_digits(es) || es.size() > 6)
            throw ParseError("bad exponent in '" + token + "'");
        exp10 = esign * std::stol(es);
    }
    auto dot = s.find('.');
    std::string intpart = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fracpart = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (intpart.empty() && fracpart.empty())
        throw ParseError("bad numeric token '" + token + "'");
    if ((!intpart.empty() && !all_digits(intpart)) ||
        (!fracpart.empty() && !all_digits(fracpart)))
        throw ParseError("bad numeric token '" + token + "'");
    BigInt digits(intpart + fracpart, 10);
    long scale = static_cast<long>(fracpart.size()) - exp10;
    Rational q;
    if (scale >= 0)
        q = Rational(digits * sign, pow10(static_cast<unsigned long>(scale)));
    else
        q = Rational(digits * sign * pow10(static_cast<unsigned long>(-scale)), 1);
    q.canonicalize();
    return q;
}

// sign of a/b - 10^e, with a, b > 0
int cmp_pow10(const BigInt& a, const BigInt& b, long e) {
    if (e >= 0) return cmp(a, b * pow10(static_cast<unsigned long>(e)));
    return cmp(a * pow10(static_cast<unsigned long>(-e)), b);
}

}  // namespace

BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_rational(const std::string& token) {
    size_t b = token.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty numeric token");
    size_t e = token.find_last_not_of(" \t\r\n");
    std::string t = token.substr(b, e - b + 1);
    if (t.find('/') != std::string::npos) return parse_fraction(t);
    return parse_decimal(t);
}

std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string compact_rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return rational_string(q);
}

std::string decimal_string(const Rational& q, int significant) {
    if (q == 0) return "0";
    BigInt a = abs(q.get_num());
    BigInt b = q.get_den();
    bool neg = q < 0;

    // exponent of the leading digit: b*10^e <= a < b*10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    while (cmp_pow10(a, b, e) < 0) --e;
    while (cmp_pow10(a, b, e + 1) >= 0) ++e;

    // round(a/b * 10^(significant-1-e)), half up
    long k = significant - 1 - e;
    BigInt num = k >= 0 ? BigInt(a * pow10(static_cast<unsigned long>(k))) : a;
    BigInt den = k >= 0 ? b : BigInt(b * pow10(static_cast<unsigned long>(-k)));
    BigInt t;
    mpz_fdiv_q(t.get_mpz_t(), BigInt(2 * num + den).get_mpz_t(), BigInt(2 * den).get_mpz_t());
    if (t == pow10(static_cast<unsigned long>(significant))) {
        t = pow10(static_cast<unsigned long>(significant - 1));
        ++e;
    }
    std::string digs = t.get_str();

    auto trim = [](std::string s) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        return s;
    };

    std::string out;
    if (e >= significant - 1 && e <= 18) {
        out = digs + std::string(static_cast<size_t>(e - significant + 1), '0');
    } else if (e >= 0 && e < significant - 1) {
        std::string frac = trim(digs.substr(static_cast<size_t>(e + 1)));
        out = digs.substr(0, static_cast<size_t>(e + 1)) + (frac.empty() ? "" : "." + frac);
    } else if (e < 0 && e >= -5) {
        std::string frac = trim(std::string(static_cast<size_t>(-e - 1), '0') + digs);
        out = "0." + frac;
    } else {
        std::string frac = trim(digs.substr(1));
        out = digs.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

std::string exact_token(const Rational& q) {
    BigInt rest = q.get_den();
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
        rest /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return rational_string(q);
    unsigned long k = std::max(twos, fives);
    if (k == 0) return q.get_num().get_str();
    BigInt scaled = q.get_num() * pow10(k) / q.get_den();
    std::string digits = BigInt(abs(scaled)).get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    return sgn(q) < 0 ? "-" + digits : digits;
}

}  // namespace spanmet
