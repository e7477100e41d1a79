#pragma once

// Code definition: n generator kernels over an N1 x N2 information torus.
// Kernels are stored row-major, top to bottom, exactly as the spec files
// print them; entry g_i[k1][k2] corresponds to the monomial x^{k2} y^{k1}.

#include <cstdint>
#include <string>
#include <vector>

#include "tbcc/poly.hpp"

namespace tbcc {

struct CodeSpec {
    int n = 0;            // output planes per information bit
    int n1 = 0, n2 = 0;   // information support (rows, cols)
    int k1 = 0, k2 = 0;   // kernel support (rows, cols)
    std::vector<std::vector<std::uint8_t>> kernels;  // n kernels, each k1*k2 row-major

    std::uint8_t kernel_at(int i, int r, int c) const { return kernels[i][r * k2 + c]; }
    Poly2 kernel_poly(int i) const;
    std::vector<Poly2> kernel_polys() const;
    int kernel_weight(int i) const;

    // Torus quotient matching this support: x has period N2, y has period N1.
    TorusIdeal torus() const { return TorusIdeal(std::uint32_t(n2), std::uint32_t(n1)); }

    void validate_shape() const;  // throws on malformed fields
    std::string canonical_text() const;
    std::uint64_t hash() const;  // FNV-1a of the canonical text
};

CodeSpec parse_code_spec(const std::string& text);
CodeSpec load_code_spec(const std::string& path);
void save_code_spec(const CodeSpec& spec, const std::string& path);

std::uint64_t fnv1a(const std::string& data);

}  // namespace tbcc
