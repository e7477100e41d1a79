#include "tbcc/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbcc {

Codeword encode(const TorusGrid& u, const CodeSpec& spec) {
    if (u.rows() != spec.n1 || u.cols() != spec.n2)
        throw std::invalid_argument("information grid does not match the code's support");
    Codeword v(spec.n, spec.n1, spec.n2);
    for (int i = 0; i < spec.n; ++i) {
        TorusGrid& plane = v.planes[i];
        for (int l1 = 0; l1 < spec.k1; ++l1)
            for (int l2 = 0; l2 < spec.k2; ++l2) {
                if (!spec.kernel_at(i, l1, l2)) continue;
                for (int a = 0; a < spec.n1; ++a)
                    for (int b = 0; b < spec.n2; ++b)
                        if (u.at(a, b)) plane.flip(a + l1, b + l2);
            }
    }
    return v;
}

bool is_nondegenerate(const CodeSpec& spec) {
    const TorusIdeal ideal = spec.torus();
    const std::vector<Poly2> i_gens = {ideal.x_generator(), ideal.y_generator()};
    std::vector<Poly2> j_gens;
    for (const Poly2& g : spec.kernel_polys())
        if (!g.is_zero()) j_gens.push_back(g);
    if (j_gens.empty()) return false;  // every input maps to zero
    return ideal_equal(ideal_quotient(i_gens, j_gens), i_gens);
}

bool common_divisor_check(const CodeSpec& spec) {
    const std::vector<Poly2> kernels = spec.kernel_polys();
    const int cells = spec.k1 * spec.k2;
    for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
        Poly2 d;
        for (int r = 0; r < spec.k1; ++r)
            for (int c = 0; c < spec.k2; ++c)
                if (mask & (1u << (r * spec.k2 + c))) d.toggle(std::uint32_t(c), std::uint32_t(r));
        if (d.is_one()) continue;  // units do not count
        bool divides_all = true;
        for (const Poly2& g : kernels) {
            if (g.is_zero()) continue;  // every polynomial divides zero
            if (!divide_with_quotients(g, {d}).remainder.is_zero()) {
                divides_all = false;
                break;
            }
        }
        if (divides_all) return false;
    }
    return true;
}

namespace {

// Realized row support for one polynomial entry applied at check position
// (p1,p2): monomial x^a y^b of the entry touches plane bit
// ((p1-b) mod N1, (p2-a) mod N2).
void append_entry_columns(const Poly2& entry, int plane, int p1, int p2, int n1, int n2,
                          std::vector<int>& cols) {
    for (const Monomial& m : entry.monomials()) {
        const int r = ((p1 - int(m.b)) % n1 + n1) % n1;
        const int c = ((p2 - int(m.a)) % n2 + n2) % n2;
        cols.push_back(plane * n1 * n2 + r * n2 + c);
    }
}

}  // namespace

ParityCheck realize_parity(const std::vector<std::vector<Poly2>>& entries, int n, int n1, int n2) {
    ParityCheck h;
    h.n = n;
    h.n1 = n1;
    h.n2 = n2;
    h.entries = entries;
    const int per = n1 * n2;
    h.row_cols.resize(entries.size() * std::size_t(per));
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (int(entries[j].size()) != n) throw std::invalid_argument("parity row has wrong width");
        for (int p1 = 0; p1 < n1; ++p1)
            for (int p2 = 0; p2 < n2; ++p2) {
                std::vector<int>& cols = h.row_cols[j * per + p1 * n2 + p2];
                for (int i = 0; i < n; ++i)
                    append_entry_columns(entries[j][i], i, p1, p2, n1, n2, cols);
                std::sort(cols.begin(), cols.end());
                // entries reduced mod I cannot collide, but wrap-heavy
                // polynomials can; drop GF(2)-cancelling duplicates
                for (std::size_t k = 0; k + 1 < cols.size();) {
                    if (cols[k] == cols[k + 1])
                        cols.erase(cols.begin() + k, cols.begin() + k + 2);
                    else
                        ++k;
                }
            }
    }
    return h;
}

ParityCheck build_parity_check(const CodeSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("parity check needs at least two output planes");
    if (!common_divisor_check(spec))
        throw std::invalid_argument("kernels share a non-unit divisor; parity construction invalid");
    const std::vector<Poly2> g = spec.kernel_polys();
    std::vector<std::vector<Poly2>> entries(spec.n - 1, std::vector<Poly2>(spec.n));
    for (int j = 0; j < spec.n - 1; ++j) {
        entries[j][0] = g[j + 1];
        entries[j][j + 1] = g[0];
    }
    return realize_parity(entries, spec.n, spec.n1, spec.n2);
}

std::vector<TorusGrid> syndrome(const Codeword& v, const ParityCheck& h) {
    if (v.n != h.n || v.n1 != h.n1 || v.n2 != h.n2)
        throw std::invalid_argument("codeword does not match the parity check dimensions");
    const int per = h.n1 * h.n2;
    const int rows = int(h.row_cols.size() / per);
    std::vector<TorusGrid> out(rows, TorusGrid(h.n1, h.n2));
    for (int j = 0; j < rows; ++j)
        for (int p = 0; p < per; ++p) {
            int parity = 0;
            for (int col : h.row_cols[j * per + p]) parity ^= v.bit(col);
            out[j].set_flat(p, std::uint8_t(parity));
        }
    return out;
}

bool syndrome_is_zero(const Codeword& v, const ParityCheck& h) {
    const int per = h.n1 * h.n2;
    const int rows = int(h.row_cols.size() / per);
    for (int j = 0; j < rows; ++j)
        for (int p = 0; p < per; ++p) {
            int parity = 0;
            for (int col : h.row_cols[j * per + p]) parity ^= v.bit(col);
            if (parity) return false;
        }
    return true;
}

std::optional<PseudoInverse> build_pseudo_inverse(const CodeSpec& spec) {
    std::vector<Poly2> gens = spec.kernel_polys();
    if (std::all_of(gens.begin(), gens.end(), [](const Poly2& g) { return g.is_zero(); }))
        return std::nullopt;
    std::optional<MonomialWitness> w = monomial_in_ideal(gens);
    if (!w) return std::nullopt;
    PseudoInverse inv;
    inv.q = w->cofactors;
    inv.alpha = w->alpha;
    inv.beta = w->beta;
    return inv;
}

TorusGrid apply_inverse(const Codeword& v, const PseudoInverse& inv, int n1, int n2) {
    if (v.n1 != n1 || v.n2 != n2 || int(inv.q.size()) != v.n)
        throw std::invalid_argument("codeword does not match the inverse dimensions");
    TorusGrid delayed(n1, n2);
    for (int i = 0; i < v.n; ++i)
        for (const Monomial& m : inv.q[i].monomials())
            for (int k1 = 0; k1 < n1; ++k1)
                for (int k2 = 0; k2 < n2; ++k2)
                    if (v.planes[i].at(k1, k2)) delayed.flip(k1 + int(m.b), k2 + int(m.a));
    // delayed = x^alpha y^beta * u; the monomial is an invertible torus shift
    return delayed.shifted(-int(inv.beta), -int(inv.alpha));
}

std::vector<ParityCheck> syndrome_former_family(const CodeSpec& spec,
                                                const std::vector<Poly2>& z_list) {
    const ParityCheck base = build_parity_check(spec);
    const TorusIdeal ideal = spec.torus();
    std::vector<ParityCheck> family;
    for (const Poly2& z : z_list) {
        if (z.is_zero()) throw std::invalid_argument("syndrome former multiplier must be nonzero");
        std::vector<std::vector<Poly2>> entries = base.entries;
        for (auto& row : entries)
            for (Poly2& e : row) e = poly_mod_torus(e * z, ideal);
        family.push_back(realize_parity(entries, spec.n, spec.n1, spec.n2));
    }
    return family;
}

}  // namespace tbcc
