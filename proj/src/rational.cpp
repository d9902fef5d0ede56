#include "hsdyn/rational.hpp"

namespace hsdyn {

std::string to_string(const Q& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Q parse_rational(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Q(Z(s));
        Z num(s.substr(0, slash));
        Z den(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + s);
        return Q(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad rational literal: " + s);
    }
}

Z q_ceil(const Q& x) {
    Z num = numerator(x), den = denominator(x);
    Z q = num / den;  // truncates toward zero
    if (q * den < num) ++q;
    return q;
}

}  // namespace hsdyn
