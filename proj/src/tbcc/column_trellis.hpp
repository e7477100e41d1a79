#pragma once

// Reduction of the 2D decoding problem to a 1D trellis: one trellis stage
// per information column, state = the previous K2-1 columns. Closed
// circulations of the tail-biting trellis biject with information words.
// Exact ML runs one Viterbi per start state with start = end enforced.

#include <cstdint>
#include <vector>

#include "tbcc/code_spec.hpp"
#include "tbcc/grid.hpp"

namespace tbcc {

enum class TrellisAxis { Columns, Rows, Auto };

struct ColumnTrellis {
    int state_bits = 0;   // (K2-1)*N1
    int input_bits = 0;   // N1
    int output_bits = 0;  // n*N1 per stage
    int stages = 0;       // N2
    bool transposed = false;  // built along rows via the transposed code

    // output mask per (state, input): bit i*N1 + k1 = plane i, row k1 of the
    // emitted codeword column. Stage-invariant by torus homogeneity.
    std::vector<std::uint32_t> outputs;

    std::uint32_t output(std::uint32_t state, std::uint32_t input) const {
        return outputs[(std::size_t(state) << input_bits) | input];
    }
    std::uint32_t next_state(std::uint32_t state, std::uint32_t input) const;
};

struct TrellisLimits {
    int max_state_bits = 26;        // refuse to build beyond this
    int max_exact_state_bits = 14;  // exact mode runs 2^bits full passes
};

ColumnTrellis build_column_trellis(const CodeSpec& spec, TrellisAxis axis,
                                   const TrellisLimits& limits = {});

enum class ViterbiMode { Exact, SinglePass };

struct ViterbiResult {
    TorusGrid decoded;     // information estimate
    double metric = 0;     // sum of llr over bits decided 1 (minimized)
    std::uint32_t start_state = 0;
};

// Exact mode: one constrained Viterbi per start state, global best closed
// path; ties prefer the lexicographically smaller state/input. Single-pass
// mode runs one unconstrained sweep (approximate, documented as such).
ViterbiResult ml_viterbi(const LlrPlanes& llr, const CodeSpec& spec,
                         ViterbiMode mode = ViterbiMode::Exact,
                         TrellisAxis axis = TrellisAxis::Auto,
                         const TrellisLimits& limits = {});

CodeSpec transpose_spec(const CodeSpec& spec);

}  // namespace tbcc
