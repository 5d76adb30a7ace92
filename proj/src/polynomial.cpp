#include "tnn/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tnn {

Monomial::Monomial(const std::string& symbol, int exponent) {
    if (symbol.empty()) throw std::invalid_argument("empty symbol name");
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent > 0) factors_.emplace_back(symbol, exponent);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [name, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial result;
    auto it = factors_.begin();
    auto jt = other.factors_.begin();
    while (it != factors_.end() || jt != other.factors_.end()) {
        if (jt == other.factors_.end() || (it != factors_.end() && it->first < jt->first)) {
            result.factors_.push_back(*it++);
        } else if (it == factors_.end() || jt->first < it->first) {
            result.factors_.push_back(*jt++);
        } else {
            result.factors_.emplace_back(it->first, it->second + jt->second);
            ++it;
            ++jt;
        }
    }
    return result;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, e] : factors_) {
        if (!first) out << '*';
        first = false;
        out << name;
        if (e >= 2) out << '^' << e;
    }
    return out.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    // Compare the expanded symbol sequences, e.g. a^2*b -> a,a,b; a proper
    // prefix (the constant in particular) sorts first.
    auto it = a.factors().begin();
    auto jt = b.factors().begin();
    int ri = 0, rj = 0;
    while (it != a.factors().end() && jt != b.factors().end()) {
        if (it->first != jt->first) return it->first < jt->first;
        int common = std::min(it->second - ri, jt->second - rj);
        ri += common;
        rj += common;
        if (ri == it->second) { ++it; ri = 0; }
        if (rj == jt->second) { ++jt; rj = 0; }
    }
    return it == a.factors().end() && jt != b.factors().end();
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial::one(), constant);
}

Polynomial Polynomial::symbol(const std::string& name) {
    Polynomial p;
    p.terms_.emplace(Monomial(name), Rational(1));
    return p;
}

Polynomial Polynomial::constant(const Rational& value) {
    return Polynomial(value);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<std::string> Polynomial::symbols() const {
    std::vector<std::string> names;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.factors()) names.push_back(name);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    Polynomial result = *this;
    for (const auto& [m, c] : q.terms_) result.add_term(m, c);
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial result;
    for (const auto& [m, c] : terms_) result.terms_.emplace(m, -c);
    return result;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    Polynomial result = *this;
    for (const auto& [m, c] : q.terms_) result.add_term(m, -c);
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    Polynomial result;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) result.add_term(ma * mb, ca * cb);
    return result;
}

bool Polynomial::is_subtraction_free() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [name, e] : m.factors()) {
            auto it = assignment.find(name);
            if (it == assignment.end()) throw MissingSymbolError(name);
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            out << abs_c.str();
        } else {
            if (abs_c != 1) out << abs_c.str() << '*';
            out << m.str();
        }
    }
    return out.str();
}

namespace {

// Recursive-descent pieces for the canonical format.
struct Parser {
    const std::string& s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    bool parse_coefficient(Rational& out) {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) return false;
        std::string num = s.substr(start, pos - start);
        std::string den = "1";
        if (!done() && peek() == '/') {
            ++pos;
            size_t dstart = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            if (pos == dstart) return false;
            den = s.substr(dstart, pos - dstart);
            if (Int(den) == 0) return false;
        }
        out = Rational(Int(num), Int(den));
        return true;
    }

    bool parse_symbol(std::string& out) {
        size_t start = pos;
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())))) return false;
        ++pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos;
        out = s.substr(start, pos - start);
        return true;
    }

    // coefficient? symbol(^k)? ('*' symbol(^k)?)*
    bool parse_term(Rational& coeff, Monomial& mono) {
        coeff = Rational(1);
        mono = Monomial::one();
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (!parse_coefficient(coeff)) return false;
            if (done() || peek() != '*') return true;
            ++pos;
        }
        bool saw_symbol = false;
        while (true) {
            std::string name;
            if (!parse_symbol(name)) return false;
            saw_symbol = true;
            int exp = 1;
            if (!done() && peek() == '^') {
                ++pos;
                size_t start = pos;
                while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
                if (pos == start) return false;
                exp = std::stoi(s.substr(start, pos - start));
                if (exp < 1) return false;
            }
            mono = mono * Monomial(name, exp);
            if (done() || peek() != '*') break;
            ++pos;
        }
        return saw_symbol;
    }
};

} // namespace

std::optional<Polynomial> Polynomial::parse(const std::string& text) {
    if (text == "0") return Polynomial();
    Parser p{text};
    Polynomial result;
    int sign = 1;
    if (!p.done() && p.peek() == '-') {
        sign = -1;
        ++p.pos;
    }
    while (true) {
        Rational coeff;
        Monomial mono;
        if (!p.parse_term(coeff, mono)) return std::nullopt;
        result.add_term(mono, Rational(sign) * coeff);
        if (p.done()) break;
        if (p.s.compare(p.pos, 3, " + ") == 0) {
            sign = 1;
            p.pos += 3;
        } else if (p.s.compare(p.pos, 3, " - ") == 0) {
            sign = -1;
            p.pos += 3;
        } else {
            return std::nullopt;
        }
    }
    return result;
}

} // namespace tnn
