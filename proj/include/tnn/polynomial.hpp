#ifndef TNN_POLYNOMIAL_HPP
#define TNN_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnn/rational.hpp"

namespace tnn {

/// A power product of named indeterminates. Zero exponents are never stored,
/// so the empty monomial is the constant 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::string& symbol, int exponent = 1);

    static Monomial one() { return Monomial(); }

    bool is_one() const { return factors_.empty(); }
    int degree() const;
    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

    std::string str() const;

private:
    // Sorted by symbol name, exponents >= 1.
    std::vector<std::pair<std::string, int>> factors_;
};

/// Lexicographic on the expanded symbol sequence (a < a*a < a*b < b); a
/// proper prefix sorts first, so the constant term always comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MissingSymbolError : public std::runtime_error {
public:
    explicit MissingSymbolError(const std::string& symbol)
        : std::runtime_error("no value assigned to symbol '" + symbol + "'"), symbol_(symbol) {}
    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

/// Sparse multivariate polynomial with exact rational coefficients
/// (integer in all the combinatorial computations; rationals appear only
/// when rational constants are embedded as weights).
/// Immutable value type; all arithmetic returns new values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(const Rational& constant);     // NOLINT: implicit by design
    Polynomial(long long constant) : Polynomial(Rational(constant)) {}
    static Polynomial symbol(const std::string& name);
    static Polynomial constant(const Rational& value);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; requires is_constant().
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    int total_degree() const;
    std::vector<std::string> symbols() const;

    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& q) const { return terms_ == q.terms_; }
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    /// True iff every stored coefficient is positive (zero counts as true).
    bool is_subtraction_free() const;

    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    /// Canonical text form, e.g. "c*g + h", "a^2 - b^2", "0".
    std::string str() const;

    /// Inverse of str(); nullopt on malformed input.
    static std::optional<Polynomial> parse(const std::string& text);

private:
    void add_term(const Monomial& m, const Rational& coeff);
    TermMap terms_;
};

} // namespace tnn

#endif
