#include "tbcc/grid.hpp"

#include <numeric>
#include <stdexcept>

namespace tbcc {

namespace {
int wrap(int k, int n) {
    int m = k % n;
    return m < 0 ? m + n : m;
}
}  // namespace

TorusGrid::TorusGrid(int n1, int n2) : n1_(n1), n2_(n2), bits_(std::size_t(n1) * n2, 0) {
    if (n1 <= 0 || n2 <= 0) throw std::invalid_argument("grid dimensions must be positive");
}

int TorusGrid::wrap_index(int k1, int k2) const { return wrap(k1, n1_) * n2_ + wrap(k2, n2_); }

int TorusGrid::weight() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

TorusGrid TorusGrid::shifted(int d1, int d2) const {
    TorusGrid out(n1_, n2_);
    for (int k1 = 0; k1 < n1_; ++k1)
        for (int k2 = 0; k2 < n2_; ++k2) out.bits_[k1 * n2_ + k2] = at(k1 - d1, k2 - d2);
    return out;
}

Poly2 TorusGrid::to_poly() const {
    Poly2 p;
    for (int k1 = 0; k1 < n1_; ++k1)
        for (int k2 = 0; k2 < n2_; ++k2)
            if (bits_[k1 * n2_ + k2]) p.toggle(k2, k1);
    return p;
}

TorusGrid TorusGrid::from_poly(const Poly2& p, int n1, int n2) {
    TorusGrid g(n1, n2);
    for (const Monomial& m : p.monomials()) {
        if (m.a >= std::uint32_t(n2) || m.b >= std::uint32_t(n1))
            throw std::invalid_argument("polynomial degree exceeds grid support");
        g.bits_[int(m.b) * n2 + int(m.a)] ^= 1;
    }
    return g;
}

TorusGrid operator^(const TorusGrid& a, const TorusGrid& b) {
    if (a.n1_ != b.n1_ || a.n2_ != b.n2_) throw std::invalid_argument("grid dimension mismatch");
    TorusGrid out = a;
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
    return out;
}

Codeword::Codeword(int n_, int n1_, int n2_) : n(n_), n1(n1_), n2(n2_) {
    if (n_ <= 0) throw std::invalid_argument("codeword needs at least one plane");
    planes.assign(n_, TorusGrid(n1_, n2_));
}

std::uint8_t Codeword::bit(int flat) const {
    const int per = n1 * n2;
    return planes[flat / per].at_flat(flat % per);
}

void Codeword::set_bit(int flat, std::uint8_t v) {
    const int per = n1 * n2;
    planes[flat / per].set_flat(flat % per, v);
}

int Codeword::weight() const {
    int w = 0;
    for (const TorusGrid& p : planes) w += p.weight();
    return w;
}

Codeword operator^(const Codeword& a, const Codeword& b) {
    if (a.n != b.n) throw std::invalid_argument("codeword plane count mismatch");
    Codeword out = a;
    for (int i = 0; i < a.n; ++i) out.planes[i] = a.planes[i] ^ b.planes[i];
    return out;
}

double LlrPlanes::at(int plane, int k1, int k2) const {
    return values[std::size_t(plane) * n1 * n2 + wrap(k1, n1) * n2 + wrap(k2, n2)];
}

void LlrPlanes::set(int plane, int k1, int k2, double v) {
    values[std::size_t(plane) * n1 * n2 + wrap(k1, n1) * n2 + wrap(k2, n2)] = v;
}

LlrPlanes LlrPlanes::shifted(int d1, int d2) const {
    LlrPlanes out(n, n1, n2);
    for (int p = 0; p < n; ++p)
        for (int k1 = 0; k1 < n1; ++k1)
            for (int k2 = 0; k2 < n2; ++k2) out.set(p, k1, k2, at(p, k1 - d1, k2 - d2));
    return out;
}

}  // namespace tbcc
