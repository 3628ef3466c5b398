#include "qsw/eisenstein.hpp"

#include <cctype>

namespace qsw {

Eisenstein RootOfUnity::value() const {
    switch (j_) {
    case 0: return {1, 0};
    case 1: return {1, 1};  // 1 + w
    case 2: return {0, 1};  // w
    case 3: return {-1, 0};
    case 4: return {-1, -1}; // wb = -1 - w
    default: return {0, -1}; // -w
    }
}

std::string RootOfUnity::str() const {
    switch (j_) {
    case 0: return "1";
    case 1: return "-wb";
    case 2: return "w";
    case 3: return "-1";
    case 4: return "wb";
    default: return "-w";
    }
}

std::string Eisenstein::str() const {
    if (sgn(v_) == 0) return u_.get_str();
    std::string out;
    if (sgn(u_) != 0) out = u_.get_str();
    if (v_ == 1)
        out += out.empty() ? "w" : "+w";
    else if (v_ == -1)
        out += "-w";
    else {
        if (!out.empty() && sgn(v_) > 0) out += "+";
        out += v_.get_str() + "*w";
    }
    return out;
}

namespace {

// one summand of the "u+v*w" format: [sign] [digits] [* ] [w|wb]
struct Term {
    BigInt coef;
    int basis = 0; // 0: rational unit, 1: w, 2: wb
};

Term parse_term(const std::string& s, std::size_t& i) {
    Term t;
    t.coef = 1;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) t.coef = BigInt(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'w') {
        ++i;
        t.basis = 1;
        if (i < s.size() && s[i] == 'b') {
            ++i;
            t.basis = 2;
        }
    } else if (i == start) {
        throw ParseError("expected digits or w in Eisenstein literal", start);
    }
    if (negative) t.coef = -t.coef;
    return t;
}

} // namespace

Eisenstein parse_eisenstein(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty Eisenstein literal", 0);
    BigInt u = 0, v = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        Term t = parse_term(s, i);
        switch (t.basis) {
        case 0: u += t.coef; break;
        case 1: v += t.coef; break;
        default: // wb = -1 - w
            u -= t.coef;
            v -= t.coef;
        }
    }
    return {u, v};
}

} // namespace qsw
