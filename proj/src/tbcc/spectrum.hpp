#pragma once

// Weight-spectrum discovery. Two independent routes: an exhaustive Gray-code
// enumeration (the oracle, feasible up to 2^40 information words) and the
// bidirectional tree search over constraint regions, which pairs forward
// paths (grown down-then-right from the top-left region) with backward paths
// (up-then-left from the bottom-right region) inside equal initial-state
// bins and validates agreement on every shared information bit.

#include <cstdint>
#include <map>
#include <vector>

#include "tbcc/code_spec.hpp"
#include "tbcc/grid.hpp"

namespace tbcc {

struct WeightSpectrum {
    // A(w) for w in [d_min, w_max]; explicit zeros kept inside the range.
    std::map<int, std::uint64_t> counts;
    int d_min = 0;  // 0 when no codeword of weight <= w_max exists
    int w_max = 0;
    bool exhaustive = true;
    // nonzero information words encoding to weight 0 (degenerate encoders)
    std::uint64_t zero_weight_collisions = 0;

    std::uint64_t at(int w) const;
};

// A constraint region: the K1 x K2 information patch that determines one
// code fragment. Patch bit (a,b) lives at config index a*K2 + b.
struct ConstraintRegion {
    int k1 = 0, k2 = 0;               // patch dimensions
    std::uint32_t bits = 0;           // packed patch

    std::uint8_t at(int a, int b) const { return (bits >> (a * k2 + b)) & 1; }
};

enum class Direction { Up, Down, Left, Right };

// Fragment determined by a patch: bit i = parity of the patch masked by the
// reversed kernel i. Consistent with encode: embedding the patch with its
// last cell at position p reproduces the fragment at p.
std::vector<std::uint8_t> code_fragment(const ConstraintRegion& region, const CodeSpec& spec);

// r2 sits one step in `direction` from r1; true iff the overlapping
// (K1-1) x K2 or K1 x (K2-1) cells agree.
bool compatible(const ConstraintRegion& r1, const ConstraintRegion& r2, Direction direction);

struct BeastCaps {
    std::uint64_t max_paths = 1ull << 24;  // per tree; exceeding clears `exhaustive`
};

// Counts every codeword of weight <= w_max exactly once. Requires a
// non-degenerate code (information words then biject with codewords) and
// N1*N2 <= 64.
WeightSpectrum beast_spectrum(const CodeSpec& spec, int w_max, const BeastCaps& caps = {});

// Exhaustive oracle: all 2^{N1*N2} words in Gray-code order, one XOR and one
// popcount per step. Guarded at N1*N2 <= 40.
WeightSpectrum bruteforce_spectrum(const CodeSpec& spec, int w_max, int threads = 1);

std::string spectrum_csv(const WeightSpectrum& s);

}  // namespace tbcc
