#pragma once

// Groebner-basis machinery over GF(2)[x,y]: Buchberger with a cofactor
// ledger (every basis element expressed in the original generators), reduced
// bases, multivariate division, and the colon-ideal computation needed by
// the encoder non-degeneracy criterion. Ideal intersections and quotients
// use the classic elimination trick with a fresh variable, handled by an
// internal trivariate engine; the public surface stays bivariate.

#include <optional>
#include <vector>

#include "tbcc/poly.hpp"

namespace tbcc {

enum class OrderKind {
    Lex,         // x > y, lexicographic
    GrevLex,     // x > y, graded reverse lexicographic (the fixed default)
    BlockElimX,  // eliminate x: compare x degree first, then y
};

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;

    bool less(const Monomial& lhs, const Monomial& rhs) const;
    bool greater(const Monomial& lhs, const Monomial& rhs) const { return less(rhs, lhs); }
};

Monomial leading_monomial(const Poly2& p, const MonomialOrder& order);
bool monomial_divides(const Monomial& d, const Monomial& m);

struct GroebnerBasis {
    std::vector<Poly2> generators;
    MonomialOrder order;
    // cofactors[i][k]: generators[i] == sum_k cofactors[i][k] * inputs[k].
    std::vector<std::vector<Poly2>> cofactors;
    std::vector<Poly2> inputs;
};

// Buchberger's algorithm. The returned basis generates the same ideal as
// `gens` and carries an exact cofactor ledger. Not reduced; see
// reduce_to_rgb for the canonical form.
GroebnerBasis buchberger(const std::vector<Poly2>& gens, MonomialOrder order = {});

// The unique reduced Groebner basis for the same ideal, cofactors updated.
GroebnerBasis reduce_to_rgb(const GroebnerBasis& gb);

struct DivisionResult {
    std::vector<Poly2> quotients;
    Poly2 remainder;
};

// Multivariate long division: f = sum quotients[i]*basis[i] + remainder,
// with no remainder term divisible by any basis leading term.
DivisionResult divide_with_quotients(const Poly2& f, const std::vector<Poly2>& basis,
                                     MonomialOrder order = {});

// Generators of the intersection A ∩ B (fresh-variable elimination).
std::vector<Poly2> ideal_intersection(const std::vector<Poly2>& a_gens,
                                      const std::vector<Poly2>& b_gens);

// Generators of the colon ideal (I : J) = { f | f*g ∈ I for all g ∈ J },
// computed as the intersection over J's generators of (I : <g>).
std::vector<Poly2> ideal_quotient(const std::vector<Poly2>& i_gens,
                                  const std::vector<Poly2>& j_gens);

bool ideal_member(const Poly2& f, const std::vector<Poly2>& gens);
bool ideal_equal(const std::vector<Poly2>& a_gens, const std::vector<Poly2>& b_gens);

struct MonomialWitness {
    std::uint32_t alpha = 0;  // x exponent
    std::uint32_t beta = 0;   // y exponent
    std::vector<Poly2> cofactors;  // sum cofactors[i]*gens[i] == x^alpha y^beta exactly
};

// If <gens> contains a monomial, returns the minimal one under the default
// order together with exact cofactors; the identity is re-verified by plain
// polynomial arithmetic before returning.
std::optional<MonomialWitness> monomial_in_ideal(const std::vector<Poly2>& gens);

}  // namespace tbcc
