#pragma once

// Binary grids with toroidal indexing and the LLR planes fed to decoders.
// Bit (k1,k2) of a grid corresponds to the monomial x^{k2} y^{k1}: x walks
// columns, y walks rows. Flattened layouts everywhere are
// plane*N1*N2 + k1*N2 + k2, shared with the realized parity matrices.

#include <cstdint>
#include <vector>

#include "tbcc/poly.hpp"

namespace tbcc {

class TorusGrid {
  public:
    TorusGrid() = default;
    TorusGrid(int n1, int n2);

    int rows() const { return n1_; }
    int cols() const { return n2_; }
    int size() const { return n1_ * n2_; }

    // Indices wrap modulo the grid dimensions (negative offsets included).
    std::uint8_t at(int k1, int k2) const { return bits_[wrap_index(k1, k2)]; }
    void set(int k1, int k2, std::uint8_t v) { bits_[wrap_index(k1, k2)] = v & 1; }
    void flip(int k1, int k2) { bits_[wrap_index(k1, k2)] ^= 1; }

    std::uint8_t at_flat(int idx) const { return bits_[idx]; }
    void set_flat(int idx, std::uint8_t v) { bits_[idx] = v & 1; }

    int weight() const;
    bool is_zero() const { return weight() == 0; }

    TorusGrid shifted(int d1, int d2) const;  // out[k1][k2] = in[k1-d1][k2-d2]

    Poly2 to_poly() const;
    static TorusGrid from_poly(const Poly2& p, int n1, int n2);

    friend TorusGrid operator^(const TorusGrid& a, const TorusGrid& b);
    friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

  private:
    int wrap_index(int k1, int k2) const;

    int n1_ = 0, n2_ = 0;
    std::vector<std::uint8_t> bits_;
};

// n output planes of equal size; plane i holds v_i. The fragment at (k1,k2)
// is the n-tuple across planes.
struct Codeword {
    int n = 0, n1 = 0, n2 = 0;
    std::vector<TorusGrid> planes;

    Codeword() = default;
    Codeword(int n_, int n1_, int n2_);

    int bit_count() const { return n * n1 * n2; }
    std::uint8_t bit(int flat) const;
    void set_bit(int flat, std::uint8_t v);
    int weight() const;

    friend Codeword operator^(const Codeword& a, const Codeword& b);
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Received log-likelihood ratios, one real plane per output plane.
// Convention: LLR > 0 means bit 0 is the more likely.
struct LlrPlanes {
    int n = 0, n1 = 0, n2 = 0;
    std::vector<double> values;  // flat layout plane*N1*N2 + k1*N2 + k2

    LlrPlanes() = default;
    LlrPlanes(int n_, int n1_, int n2_) : n(n_), n1(n1_), n2(n2_), values(n_ * n1_ * n2_, 0.0) {}

    double at(int plane, int k1, int k2) const;
    void set(int plane, int k1, int k2, double v);
    int bit_count() const { return n * n1 * n2; }

    // Cyclic shift of every plane by (d1,d2), same convention as TorusGrid.
    LlrPlanes shifted(int d1, int d2) const;
};

}  // namespace tbcc
