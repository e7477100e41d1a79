#pragma once

// Bivariate polynomials over GF(2): the common currency for kernels,
// information words, parity rows and inverse encoders. A polynomial is a
// set of monomials x^a y^b (coefficients are 0/1, so addition is symmetric
// difference of term sets).

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tbcc {

struct Monomial {
    std::uint32_t a = 0;  // x exponent
    std::uint32_t b = 0;  // y exponent

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Poly2 {
  public:
    // Exponents at or above this are rejected: all intended inputs are tiny,
    // so a runaway computation should fail loudly instead of thrashing.
    static constexpr std::uint32_t kDegreeCap = 1u << 16;

    Poly2() = default;
    Poly2(std::initializer_list<Monomial> monomials);

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return monomial(0, 0); }
    static Poly2 monomial(std::uint32_t a, std::uint32_t b);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0] == 0; }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    bool contains(std::uint32_t a, std::uint32_t b) const;

    // x/y degrees; zero polynomial reports 0.
    std::uint32_t degree_x() const;
    std::uint32_t degree_y() const;

    std::vector<Monomial> monomials() const;

    // Flip one term in place (GF(2) add of a monomial).
    void toggle(std::uint32_t a, std::uint32_t b);

    friend Poly2 operator+(const Poly2& lhs, const Poly2& rhs);
    friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
    Poly2& operator+=(const Poly2& rhs) { return *this = *this + rhs; }
    Poly2& operator*=(const Poly2& rhs) { return *this = *this * rhs; }
    friend bool operator==(const Poly2&, const Poly2&) = default;
    friend bool operator<(const Poly2& lhs, const Poly2& rhs) { return lhs.terms_ < rhs.terms_; }

  private:
    static std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }
    static void check_cap(std::uint32_t a, std::uint32_t b);

    // Sorted, duplicate-free packed (a,b) pairs.
    std::vector<std::uint64_t> terms_;

    friend class PolyBuilder;
};

// Periods of the torus quotient: represents the ideal <x^px - 1, y^py - 1>
// (over GF(2), x^px + 1 and y^py + 1). Callers map grid rows/columns onto
// x/y periods themselves; this type is pure exponent arithmetic.
struct TorusIdeal {
    std::uint32_t x_period = 1;
    std::uint32_t y_period = 1;

    TorusIdeal(std::uint32_t px, std::uint32_t py);

    Poly2 x_generator() const;  // x^px + 1
    Poly2 y_generator() const;  // y^py + 1
};

Poly2 poly_add(const Poly2& a, const Poly2& b);
Poly2 poly_mul(const Poly2& a, const Poly2& b);

// Reduce all exponents modulo the torus periods; result has
// degree_x < x_period and degree_y < y_period.
Poly2 poly_mod_torus(const Poly2& a, const TorusIdeal& ideal);

// Textual form: terms joined by '+', monomials like "1", "x", "y", "x^2*y".
// The printer is canonical (ascending by total degree, then by y degree);
// the parser accepts any term order and arbitrary whitespace.
std::string to_string(const Poly2& p);
Poly2 parse_poly(std::string_view text);

}  // namespace tbcc
