#pragma once

#include "pathcell/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathcell {

// Sparse polynomial over Q in variables v0, v1, ...; v0 is the symbolic
// constant "a", the rest are cycle parameters.
class Poly {
  public:
    using Expo = std::vector<int>; // exponents, trailing zeros trimmed

    Poly() = default;
    explicit Poly(const Rat& c);
    static Poly var(int i);
    static Poly constant(const Rat& c) { return Poly(c); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    int degree_in(int i) const;
    bool depends_on(int i) const { return degree_in(i) > 0; }
    std::vector<int> variables() const;

    Poly& add_term(const Expo& e, const Rat& c);

    friend Poly operator+(const Poly& x, const Poly& y);
    friend Poly operator-(const Poly& x, const Poly& y);
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly operator-() const;
    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator<(const Poly& x, const Poly& y) { return x.terms_ < y.terms_; }

    // coefficients of powers of variable i, as polynomials in the others
    std::vector<Poly> coefficients_in(int i) const;
    // substitute variable i by the fraction num/den; returns the pair
    // (P_hat, k) with P = P_hat / den^k after clearing denominators
    std::pair<Poly, int> substitute_cleared(int i, const Poly& num, const Poly& den) const;
    // rename variables: old index -> new index
    Poly rename(const std::map<int, int>& names) const;

    std::string str(const std::vector<std::string>* var_names = nullptr) const;

  private:
    std::map<Expo, Rat> terms_;
};

Poly poly_gcd(const Poly& x, const Poly& y);
Poly poly_divide_exact(const Poly& x, const Poly& d);

// Quotient of polynomials, fractional-linear in each parameter separately for
// the families this engine touches. Normalized: gcd removed, denominator's
// leading coefficient scaled to 1 (so "infinity" is represented by den = 0).
class RatFunc {
  public:
    RatFunc() : num_(Rat(0)), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den);
    static RatFunc constant(const Rat& c) { return RatFunc(Poly(c), Poly(Rat(1))); }
    static RatFunc var(int i) { return RatFunc(Poly::var(i), Poly(Rat(1))); }
    static RatFunc infinity() { return RatFunc(Poly(Rat(1)), Poly(Rat(0))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero() && !den_.is_zero(); }
    bool is_infinite() const { return den_.is_zero(); }
    bool is_constant_value(const Rat& c) const; // identically c
    bool depends_on(int i) const { return num_.depends_on(i) || den_.depends_on(i); }
    std::vector<int> variables() const;

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const RatFunc& x, const RatFunc& y) {
        if (!(x.num_ == y.num_))
            return x.num_ < y.num_;
        return x.den_ < y.den_;
    }

    RatFunc substitute(int i, const RatFunc& value) const;
    RatFunc rename(const std::map<int, int>& names) const;

    // as A*v_i + B over C*v_i + D when fractional-linear in v_i
    struct LinearForm {
        Poly a, b, c, d;
    };
    std::optional<LinearForm> linear_in(int i) const;

    std::string str(const std::vector<std::string>* var_names = nullptr) const;

  private:
    void normalize();
    Poly num_, den_;
};

} // namespace pathcell
