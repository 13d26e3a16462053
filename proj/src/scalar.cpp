#include "ucat/scalar.hpp"

#include <cctype>

namespace ucat {

Scalar parse_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("bad rational literal: " + text);
        mpq_class q;
        if (q.set_str(num + "/" + den, 10) != 0) throw ParseError("bad rational literal: " + text);
        if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
        q.canonicalize();
        return q;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty()) tail = "0";
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
        if (head.empty()) head = "0";
        for (char c : head + tail)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal literal: " + text);
        mpz_class num(head + tail, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
        Scalar q(num, den);
        q.canonicalize();
        return neg ? Scalar(-q) : q;
    }

    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad integer literal: " + text);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar pow_int(const Scalar& q, long n) {
    if (n == 0) return Scalar(1);
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    if (invert && q == 0) throw NonpositiveExponent("0 cannot be raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
    Scalar r = invert ? Scalar(den, num) : Scalar(num, den);
    r.canonicalize();
    return r;
}

double to_double(const Scalar& q) { return q.get_d(); }

} // namespace ucat
