#pragma once

// Encoder realization and the validity analysis toolchain: cyclic-convolution
// encoding, non-degeneracy via the colon-ideal criterion, coprimality, the
// standard (n-1) x n parity check construction, syndrome computation,
// pseudo-inverse discovery and inverse encoding, and the family of syndrome
// formers obtained by convolving the base parity rows with small polynomials.

#include <optional>
#include <vector>

#include "tbcc/code_spec.hpp"
#include "tbcc/grid.hpp"
#include "tbcc/groebner.hpp"

namespace tbcc {

// v_i[k] = sum_l g_i[l] u[(k-l) mod N]: true cyclic convolution, identical to
// the polynomial product g_i(x,y) u(x,y) reduced modulo the torus ideal.
Codeword encode(const TorusGrid& u, const CodeSpec& spec);

// No nonzero input encodes to the all-zero codeword, tested via <I:J> = I.
bool is_nondegenerate(const CodeSpec& spec);

// True when no non-unit polynomial divides every kernel (exhaustive search
// over candidate divisors supported within the kernel box).
bool common_divisor_check(const CodeSpec& spec);

struct ParityCheck {
    int n = 0, n1 = 0, n2 = 0;
    // entries[j][i]: polynomial in row j (of n-1), column i (of n).
    std::vector<std::vector<Poly2>> entries;
    // realized sparse binary matrix: row index = j*N1*N2 + k1*N2 + k2,
    // column index = plane*N1*N2 + k1*N2 + k2.
    std::vector<std::vector<int>> row_cols;

    int rows() const { return int(row_cols.size()); }
    int cols() const { return n * n1 * n2; }
};

// Eq.-(8) shape: row j has g_{j+2} in column 0 and g_1 in column j+1
// (over GF(2) the sign is immaterial). Requires coprime kernels.
ParityCheck build_parity_check(const CodeSpec& spec);

// Realize any polynomial parity matrix (used for the syndrome-former family).
ParityCheck realize_parity(const std::vector<std::vector<Poly2>>& entries, int n, int n1, int n2);

// Plane j of the result is sum_i H[j][i] * v_i mod I; all-zero iff v is a codeword.
std::vector<TorusGrid> syndrome(const Codeword& v, const ParityCheck& h);
bool syndrome_is_zero(const Codeword& v, const ParityCheck& h);

struct PseudoInverse {
    std::vector<Poly2> q;          // cofactors, sum q_i g_i = x^alpha y^beta exactly
    std::uint32_t alpha = 0;       // x delay (columns)
    std::uint32_t beta = 0;        // y delay (rows)
};

std::optional<PseudoInverse> build_pseudo_inverse(const CodeSpec& spec);

// sum q_i v_i mod I, then the delay monomial is undone by a cyclic shift so
// that apply_inverse(encode(u)) == u exactly.
TorusGrid apply_inverse(const Codeword& v, const PseudoInverse& inv, int n1, int n2);

// One parity check per z: entries of the base matrix multiplied by z_k and
// reduced mod the torus ideal. z = 1 reproduces the base matrix.
std::vector<ParityCheck> syndrome_former_family(const CodeSpec& spec,
                                                const std::vector<Poly2>& z_list);

}  // namespace tbcc
