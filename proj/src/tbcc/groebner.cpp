#include "tbcc/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <stdexcept>

namespace tbcc {

namespace {

// Internal exponent vector (t, x, y). The extra variable t exists only for
// the elimination computations; bivariate inputs always carry t = 0.
using Exp = std::array<std::uint32_t, 3>;

enum class EKind { GrevLex, Lex, BlockElimX, ElimT };

// true iff l < r under the order.
bool exp_less(EKind kind, const Exp& l, const Exp& r) {
    auto grevlex_xy = [](const Exp& a, const Exp& b) {
        const std::uint64_t da = std::uint64_t(a[1]) + a[2], db = std::uint64_t(b[1]) + b[2];
        if (da != db) return da < db;
        // graded reverse lex, x > y: rightmost differing exponent decides,
        // larger exponent there means smaller monomial.
        if (a[2] != b[2]) return a[2] > b[2];
        return a[1] < b[1];
    };
    switch (kind) {
        case EKind::Lex:
            if (l[0] != r[0]) return l[0] < r[0];
            if (l[1] != r[1]) return l[1] < r[1];
            return l[2] < r[2];
        case EKind::BlockElimX:
            if (l[1] != r[1]) return l[1] < r[1];
            return l[2] < r[2];
        case EKind::ElimT:
            if (l[0] != r[0]) return l[0] < r[0];
            return grevlex_xy(l, r);
        case EKind::GrevLex:
        default: {
            const std::uint64_t dl = std::uint64_t(l[0]) + l[1] + l[2];
            const std::uint64_t dr = std::uint64_t(r[0]) + r[1] + r[2];
            if (dl != dr) return dl < dr;
            if (l[2] != r[2]) return l[2] > r[2];
            if (l[1] != r[1]) return l[1] > r[1];
            return l[0] < r[0];
        }
    }
}

EKind to_ekind(MonomialOrder order) {
    switch (order.kind) {
        case OrderKind::Lex: return EKind::Lex;
        case OrderKind::BlockElimX: return EKind::BlockElimX;
        case OrderKind::GrevLex:
        default: return EKind::GrevLex;
    }
}

// Terms sorted descending under the active order; leading term at front.
using EPoly = std::vector<Exp>;

EPoly sorted_desc(std::vector<Exp> terms, EKind kind) {
    std::sort(terms.begin(), terms.end(),
              [kind](const Exp& a, const Exp& b) { return exp_less(kind, b, a); });
    // cancel duplicate pairs (GF(2))
    EPoly out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

EPoly eadd(const EPoly& a, const EPoly& b, EKind kind) {
    EPoly out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                                  [kind](const Exp& l, const Exp& r) { return exp_less(kind, r, l); });
    return out;
}

Exp exp_add(const Exp& a, const Exp& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Exp exp_sub(const Exp& a, const Exp& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
bool exp_divides(const Exp& d, const Exp& m) {
    return d[0] <= m[0] && d[1] <= m[1] && d[2] <= m[2];
}
Exp exp_lcm(const Exp& a, const Exp& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

EPoly eshift(const EPoly& p, const Exp& m) {
    EPoly out;
    out.reserve(p.size());
    for (const Exp& t : p) out.push_back(exp_add(t, m));
    return out;
}

EPoly emul(const EPoly& a, const EPoly& b, EKind kind) {
    std::vector<Exp> acc;
    acc.reserve(a.size() * b.size());
    for (const Exp& s : a)
        for (const Exp& t : b) acc.push_back(exp_add(s, t));
    return sorted_desc(std::move(acc), kind);
}

EPoly from_poly2(const Poly2& p, EKind kind) {
    std::vector<Exp> terms;
    for (const Monomial& m : p.monomials()) terms.push_back({0, m.a, m.b});
    return sorted_desc(std::move(terms), kind);
}

Poly2 to_poly2(const EPoly& p) {
    Poly2 out;
    for (const Exp& t : p) {
        if (t[0] != 0) throw std::logic_error("internal polynomial still carries the elimination variable");
        out.toggle(t[1], t[2]);
    }
    return out;
}

// f = sum quotients[i]*basis[i] + remainder. Quotients tracked only when
// requested; remainder terms are divisible by no basis leading term.
EPoly edivide(const EPoly& f, const std::vector<EPoly>& basis, EKind kind,
              std::vector<EPoly>* quotients) {
    if (quotients) quotients->assign(basis.size(), {});
    EPoly p = f;
    EPoly remainder;
    while (!p.empty()) {
        const Exp lt = p.front();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) continue;
            if (!exp_divides(basis[i].front(), lt)) continue;
            const Exp q = exp_sub(lt, basis[i].front());
            p = eadd(p, eshift(basis[i], q), kind);
            if (quotients) (*quotients)[i] = eadd((*quotients)[i], {q}, kind);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);  // strictly decreasing, stays sorted
            p.erase(p.begin());
        }
    }
    return remainder;
}

struct Engine {
    EKind kind;
    bool track;
    std::vector<EPoly> basis;
    std::vector<std::vector<EPoly>> cof;  // per basis element, per input

    void run(const std::vector<EPoly>& inputs) {
        std::size_t n_inputs = inputs.size();
        for (std::size_t i = 0; i < n_inputs; ++i) {
            if (inputs[i].empty()) continue;
            basis.push_back(inputs[i]);
            if (track) {
                std::vector<EPoly> row(n_inputs);
                row[i] = {Exp{0, 0, 0}};
                cof.push_back(std::move(row));
            }
        }
        if (basis.empty()) return;

        std::deque<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

        while (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            const Exp lti = basis[i].front(), ltj = basis[j].front();
            const Exp lcm = exp_lcm(lti, ltj);
            if (lcm == exp_add(lti, ltj)) continue;  // Buchberger's product criterion
            const Exp mi = exp_sub(lcm, lti), mj = exp_sub(lcm, ltj);
            EPoly s = eadd(eshift(basis[i], mi), eshift(basis[j], mj), kind);
            std::vector<EPoly> q;
            EPoly r = edivide(s, basis, kind, track ? &q : nullptr);
            if (r.empty()) continue;
            if (track) {
                std::vector<EPoly> rc(cof[i].size());
                for (std::size_t k = 0; k < rc.size(); ++k) {
                    rc[k] = eadd(eshift(cof[i][k], mi), eshift(cof[j][k], mj), kind);
                    for (std::size_t b = 0; b < basis.size(); ++b)
                        if (!q[b].empty() && !cof[b][k].empty())
                            rc[k] = eadd(rc[k], emul(q[b], cof[b][k], kind), kind);
                }
                cof.push_back(std::move(rc));
            }
            basis.push_back(std::move(r));
            for (std::size_t b = 0; b + 1 < basis.size(); ++b) pairs.emplace_back(b, basis.size() - 1);
        }
    }

    // Minimalize + tail-reduce into the unique reduced basis (sorted by
    // ascending leading term).
    void reduce() {
        // drop elements whose leading term another element's leading term divides
        std::vector<std::size_t> order_idx(basis.size());
        for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
        std::sort(order_idx.begin(), order_idx.end(), [this](std::size_t a, std::size_t b) {
            return exp_less(kind, basis[a].front(), basis[b].front());
        });
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t a = 0; a < order_idx.size(); ++a) {
            const std::size_t i = order_idx[a];
            for (std::size_t b = 0; b < a; ++b) {
                const std::size_t j = order_idx[b];
                if (keep[j] && exp_divides(basis[j].front(), basis[i].front())) {
                    keep[i] = false;
                    break;
                }
            }
        }
        std::vector<EPoly> mb;
        std::vector<std::vector<EPoly>> mc;
        for (std::size_t a = 0; a < order_idx.size(); ++a) {
            const std::size_t i = order_idx[a];
            if (!keep[i]) continue;
            mb.push_back(basis[i]);
            if (track) mc.push_back(cof[i]);
        }
        basis = std::move(mb);
        cof = std::move(mc);

        // tail-reduce until stable; leading terms never change
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::vector<EPoly> others;
                std::vector<std::size_t> map;
                for (std::size_t j = 0; j < basis.size(); ++j)
                    if (j != i) {
                        others.push_back(basis[j]);
                        map.push_back(j);
                    }
                std::vector<EPoly> q;
                EPoly r = edivide(basis[i], others, kind, track ? &q : nullptr);
                if (r != basis[i]) {
                    changed = true;
                    if (track)
                        for (std::size_t b = 0; b < others.size(); ++b)
                            if (!q[b].empty())
                                for (std::size_t k = 0; k < cof[i].size(); ++k)
                                    if (!cof[map[b]][k].empty())
                                        cof[i][k] = eadd(cof[i][k], emul(q[b], cof[map[b]][k], kind), kind);
                    basis[i] = std::move(r);
                }
            }
        }
    }
};

std::vector<EPoly> to_engine(const std::vector<Poly2>& gens, EKind kind) {
    std::vector<EPoly> out;
    out.reserve(gens.size());
    for (const Poly2& g : gens) out.push_back(from_poly2(g, kind));
    return out;
}

void require_usable(const std::vector<Poly2>& gens) {
    if (gens.empty()) throw std::invalid_argument("generator list is empty");
    if (std::all_of(gens.begin(), gens.end(), [](const Poly2& g) { return g.is_zero(); }))
        throw std::invalid_argument("all generators are zero");
}

// Reduced Groebner basis without cofactor tracking, as plain Poly2s.
std::vector<Poly2> rgb_plain(const std::vector<Poly2>& gens) {
    Engine e{EKind::GrevLex, false, {}, {}};
    e.run(to_engine(gens, EKind::GrevLex));
    e.reduce();
    std::vector<Poly2> out;
    for (const EPoly& p : e.basis) out.push_back(to_poly2(p));
    return out;
}

}  // namespace

bool MonomialOrder::less(const Monomial& lhs, const Monomial& rhs) const {
    return exp_less(to_ekind(*this), {0, lhs.a, lhs.b}, {0, rhs.a, rhs.b});
}

Monomial leading_monomial(const Poly2& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
    Monomial best;
    bool first = true;
    for (const Monomial& m : p.monomials()) {
        if (first || order.less(best, m)) best = m;
        first = false;
    }
    return best;
}

bool monomial_divides(const Monomial& d, const Monomial& m) { return d.a <= m.a && d.b <= m.b; }

GroebnerBasis buchberger(const std::vector<Poly2>& gens, MonomialOrder order) {
    require_usable(gens);
    const EKind kind = to_ekind(order);
    Engine e{kind, true, {}, {}};
    e.run(to_engine(gens, kind));
    GroebnerBasis gb;
    gb.order = order;
    gb.inputs = gens;
    for (std::size_t i = 0; i < e.basis.size(); ++i) {
        gb.generators.push_back(to_poly2(e.basis[i]));
        std::vector<Poly2> row;
        for (const EPoly& c : e.cof[i]) row.push_back(to_poly2(c));
        gb.cofactors.push_back(std::move(row));
    }
    return gb;
}

GroebnerBasis reduce_to_rgb(const GroebnerBasis& gb) {
    const EKind kind = to_ekind(gb.order);
    Engine e{kind, !gb.cofactors.empty(), {}, {}};
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        if (gb.generators[i].is_zero()) continue;
        e.basis.push_back(from_poly2(gb.generators[i], kind));
        if (e.track) {
            std::vector<EPoly> row;
            for (const Poly2& c : gb.cofactors[i]) row.push_back(from_poly2(c, kind));
            e.cof.push_back(std::move(row));
        }
    }
    e.reduce();
    GroebnerBasis out;
    out.order = gb.order;
    out.inputs = gb.inputs;
    for (std::size_t i = 0; i < e.basis.size(); ++i) {
        out.generators.push_back(to_poly2(e.basis[i]));
        if (e.track) {
            std::vector<Poly2> row;
            for (const EPoly& c : e.cof[i]) row.push_back(to_poly2(c));
            out.cofactors.push_back(std::move(row));
        }
    }
    return out;
}

DivisionResult divide_with_quotients(const Poly2& f, const std::vector<Poly2>& basis,
                                     MonomialOrder order) {
    if (basis.empty()) throw std::invalid_argument("division basis is empty");
    for (const Poly2& b : basis)
        if (b.is_zero()) throw std::invalid_argument("division by a zero basis element");
    const EKind kind = to_ekind(order);
    std::vector<EPoly> eb = to_engine(basis, kind);
    std::vector<EPoly> q;
    EPoly r = edivide(from_poly2(f, kind), eb, kind, &q);
    DivisionResult out;
    out.remainder = to_poly2(r);
    for (const EPoly& p : q) out.quotients.push_back(to_poly2(p));
    return out;
}

std::vector<Poly2> ideal_intersection(const std::vector<Poly2>& a_gens,
                                      const std::vector<Poly2>& b_gens) {
    require_usable(a_gens);
    require_usable(b_gens);
    // t*A + (1-t)*B, then eliminate t; over GF(2), 1-t = 1+t.
    const Exp t{1, 0, 0}, unit{0, 0, 0};
    std::vector<EPoly> gens;
    for (const Poly2& a : a_gens) {
        if (a.is_zero()) continue;
        gens.push_back(eshift(from_poly2(a, EKind::ElimT), t));
    }
    for (const Poly2& b : b_gens) {
        if (b.is_zero()) continue;
        EPoly eb = from_poly2(b, EKind::ElimT);
        gens.push_back(eadd(eshift(eb, t), eshift(eb, unit), EKind::ElimT));
    }
    Engine e{EKind::ElimT, false, {}, {}};
    e.run(gens);
    e.reduce();
    std::vector<Poly2> out;
    for (const EPoly& p : e.basis) {
        bool t_free = std::all_of(p.begin(), p.end(), [](const Exp& m) { return m[0] == 0; });
        if (t_free) out.push_back(to_poly2(p));
    }
    if (out.empty()) out.push_back(Poly2::zero());
    return out;
}

std::vector<Poly2> ideal_quotient(const std::vector<Poly2>& i_gens,
                                  const std::vector<Poly2>& j_gens) {
    require_usable(i_gens);
    if (j_gens.empty()) throw std::invalid_argument("generator list is empty");

    auto colon_single = [&i_gens](const Poly2& g) {
        std::vector<Poly2> inter = ideal_intersection(i_gens, {g});
        std::vector<Poly2> out;
        for (const Poly2& e : inter) {
            if (e.is_zero()) continue;
            DivisionResult d = divide_with_quotients(e, {g});
            if (!d.remainder.is_zero())
                throw std::logic_error("intersection element not divisible by the colon generator");
            out.push_back(d.quotients[0]);
        }
        if (out.empty()) out.push_back(Poly2::zero());
        return out;
    };

    std::vector<Poly2> result;
    bool first = true;
    for (const Poly2& g : j_gens) {
        if (g.is_zero()) continue;  // f*0 = 0 ∈ I imposes no constraint
        std::vector<Poly2> qg = colon_single(g);
        result = first ? qg : ideal_intersection(result, qg);
        first = false;
    }
    if (first) return {Poly2::one()};  // J = <0>: every f qualifies
    return result;
}

bool ideal_member(const Poly2& f, const std::vector<Poly2>& gens) {
    if (f.is_zero()) return true;
    require_usable(gens);
    std::vector<Poly2> basis = rgb_plain(gens);
    return divide_with_quotients(f, basis).remainder.is_zero();
}

bool ideal_equal(const std::vector<Poly2>& a_gens, const std::vector<Poly2>& b_gens) {
    auto nonzero = [](const std::vector<Poly2>& g) {
        return std::any_of(g.begin(), g.end(), [](const Poly2& p) { return !p.is_zero(); });
    };
    const bool an = nonzero(a_gens), bn = nonzero(b_gens);
    if (!an || !bn) return an == bn;  // zero ideal cases
    return rgb_plain(a_gens) == rgb_plain(b_gens);
}

namespace {

// Rabinowitsch's trick: xy lies in the radical of <gens> iff adjoining
// 1 + t*x*y yields the unit ideal. Some monomial lies in <gens> exactly when
// this holds (a power of xy is then a member, and any member x^a y^b makes
// (xy)^max(a,b) a member too).
bool ideal_has_some_monomial(const std::vector<Poly2>& gens) {
    std::vector<EPoly> egens = to_engine(gens, EKind::GrevLex);
    egens.push_back({Exp{1, 1, 1}, Exp{0, 0, 0}});  // 1 + t*x*y
    Engine e{EKind::GrevLex, false, {}, {}};
    e.run(egens);
    for (const EPoly& p : e.basis)
        if (p.size() == 1 && p[0] == Exp{0, 0, 0}) return true;
    // unit membership: the constant reduces to zero iff 1 is in the ideal
    return edivide({Exp{0, 0, 0}}, e.basis, EKind::GrevLex, nullptr).empty();
}

}  // namespace

std::optional<MonomialWitness> monomial_in_ideal(const std::vector<Poly2>& gens) {
    require_usable(gens);
    const MonomialOrder order{OrderKind::GrevLex};

    // A reduced basis need not expose an ideal monomial as an element (the
    // kernel pair (1+x+y, 1+x+y+xy) has RGB {1+x+y, y+y^2} yet contains xy),
    // so existence is decided by radical membership and the minimal monomial
    // by an ordered search.
    if (!ideal_has_some_monomial(gens)) return std::nullopt;

    GroebnerBasis rgb = reduce_to_rgb(buchberger(gens, order));
    auto member = [&rgb](const Poly2& f) {
        return divide_with_quotients(f, rgb.generators).remainder.is_zero();
    };

    // Find any member (xy)^m to bound the search for the minimal one.
    std::uint32_t m = 1;
    while (m <= 512 && !member(Poly2::monomial(m, m))) ++m;
    if (m > 512) throw std::logic_error("monomial search bound exceeded");

    std::optional<Monomial> found;
    for (std::uint32_t d = 0; d <= 2 * m && !found; ++d)
        for (std::uint32_t a = 0; a <= d; ++a)  // ascending grevlex within a degree
            if (member(Poly2::monomial(a, d - a))) {
                found = Monomial{a, d - a};
                break;
            }
    if (!found) throw std::logic_error("radical test and monomial search disagree");

    MonomialWitness w;
    w.alpha = found->a;
    w.beta = found->b;

    // Compose cofactors: the monomial over the reduced basis, then the
    // reduced basis over the original generators.
    const DivisionResult d = divide_with_quotients(Poly2::monomial(w.alpha, w.beta), rgb.generators);
    w.cofactors.assign(gens.size(), Poly2::zero());
    for (std::size_t j = 0; j < rgb.generators.size(); ++j)
        for (std::size_t k = 0; k < gens.size(); ++k)
            w.cofactors[k] += d.quotients[j] * rgb.cofactors[j][k];

    Poly2 recomposed;
    for (std::size_t k = 0; k < gens.size(); ++k) recomposed += w.cofactors[k] * gens[k];
    if (recomposed != Poly2::monomial(w.alpha, w.beta))
        throw std::logic_error("cofactor ledger failed to reproduce the monomial");
    return w;
}

}  // namespace tbcc
