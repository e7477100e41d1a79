#include "tbcc/column_trellis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace tbcc {

std::uint32_t ColumnTrellis::next_state(std::uint32_t state, std::uint32_t input) const {
    if (state_bits == 0) return 0;
    const int cols = state_bits / input_bits;  // K2-1 remembered columns
    return (state >> input_bits) | (input << ((cols - 1) * input_bits));
}

CodeSpec transpose_spec(const CodeSpec& spec) {
    CodeSpec t;
    t.n = spec.n;
    t.n1 = spec.n2;
    t.n2 = spec.n1;
    t.k1 = spec.k2;
    t.k2 = spec.k1;
    t.kernels.assign(spec.n, std::vector<std::uint8_t>(spec.k1 * spec.k2, 0));
    for (int i = 0; i < spec.n; ++i)
        for (int r = 0; r < spec.k1; ++r)
            for (int c = 0; c < spec.k2; ++c) t.kernels[i][c * t.k2 + r] = spec.kernel_at(i, r, c);
    return t;
}

namespace {

LlrPlanes transpose_llr(const LlrPlanes& llr) {
    LlrPlanes t(llr.n, llr.n2, llr.n1);
    for (int p = 0; p < llr.n; ++p)
        for (int k1 = 0; k1 < llr.n1; ++k1)
            for (int k2 = 0; k2 < llr.n2; ++k2) t.set(p, k2, k1, llr.at(p, k1, k2));
    return t;
}

TorusGrid transpose_grid(const TorusGrid& g) {
    TorusGrid t(g.cols(), g.rows());
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) t.set(c, r, g.at(r, c));
    return t;
}

ColumnTrellis build_columns(const CodeSpec& spec, const TrellisLimits& limits) {
    ColumnTrellis t;
    t.input_bits = spec.n1;
    t.state_bits = (spec.k2 - 1) * spec.n1;
    t.output_bits = spec.n * spec.n1;
    t.stages = spec.n2;
    if (t.state_bits > limits.max_state_bits || t.input_bits > 26 || t.output_bits > 30)
        throw std::invalid_argument("trellis state space exceeds the configured limit");

    const std::size_t states = std::size_t(1) << t.state_bits;
    const std::size_t inputs = std::size_t(1) << t.input_bits;
    t.outputs.assign(states * inputs, 0);
    for (std::size_t s = 0; s < states; ++s)
        for (std::size_t in = 0; in < inputs; ++in) {
            // u column j-l2 for l2 >= 1 is state column K2-1-l2; l2 = 0 is the input
            std::uint32_t out = 0;
            for (int i = 0; i < spec.n; ++i)
                for (int k1 = 0; k1 < spec.n1; ++k1) {
                    int bit = 0;
                    for (int l1 = 0; l1 < spec.k1; ++l1)
                        for (int l2 = 0; l2 < spec.k2; ++l2) {
                            if (!spec.kernel_at(i, l1, l2)) continue;
                            const int row = (k1 - l1 % spec.n1 + spec.n1) % spec.n1;
                            const std::uint32_t col_bits =
                                (l2 == 0) ? std::uint32_t(in)
                                          : std::uint32_t(s >> ((spec.k2 - 1 - l2) * spec.n1));
                            bit ^= int((col_bits >> row) & 1);
                        }
                    if (bit) out |= 1u << (i * spec.n1 + k1);
                }
            t.outputs[(s << t.input_bits) | in] = out;
        }
    return t;
}

struct StageMetrics {
    // per-stage cost of each output mask: sum of llr over bits decided 1
    std::vector<std::vector<double>> by_mask;  // used when output_bits <= 20
    std::vector<std::vector<double>> bit_llr;  // fallback: per-bit values

    double cost(int stage, std::uint32_t mask) const {
        if (!by_mask.empty()) return by_mask[stage][mask];
        double c = 0;
        std::uint32_t m = mask;
        while (m) {
            const int b = std::countr_zero(m);
            c += bit_llr[stage][b];
            m &= m - 1;
        }
        return c;
    }
};

StageMetrics stage_metrics(const LlrPlanes& llr, const ColumnTrellis& t) {
    StageMetrics sm;
    sm.bit_llr.assign(t.stages, std::vector<double>(t.output_bits));
    const int n1 = t.input_bits;
    for (int j = 0; j < t.stages; ++j)
        for (int i = 0; i < llr.n; ++i)
            for (int k1 = 0; k1 < n1; ++k1) sm.bit_llr[j][i * n1 + k1] = llr.at(i, k1, j);
    if (t.output_bits <= 20) {
        sm.by_mask.assign(t.stages, {});
        for (int j = 0; j < t.stages; ++j) {
            std::vector<double>& bm = sm.by_mask[j];
            bm.assign(std::size_t(1) << t.output_bits, 0.0);
            for (std::uint32_t m = 1; m < bm.size(); ++m) {
                const int b = std::countr_zero(m);
                bm[m] = bm[m & (m - 1)] + sm.bit_llr[j][b];
            }
        }
    }
    return sm;
}

struct PassResult {
    double metric = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> inputs;  // surviving input per stage
};

// One Viterbi sweep. With `closed`, paths start and end at start_state;
// otherwise all states start free and the best final state wins.
PassResult viterbi_pass(const ColumnTrellis& t, const StageMetrics& sm,
                        std::uint32_t start_state, bool closed) {
    const std::size_t states = std::size_t(1) << t.state_bits;
    const std::size_t inputs = std::size_t(1) << t.input_bits;
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> metric(states, closed ? inf : 0.0);
    if (closed) metric[start_state] = 0.0;
    std::vector<double> next(states);
    // survivor (prev_state, input) per stage and state
    std::vector<std::vector<std::uint64_t>> survivor(
        t.stages, std::vector<std::uint64_t>(states, ~0ull));

    for (int j = 0; j < t.stages; ++j) {
        std::fill(next.begin(), next.end(), inf);
        for (std::size_t s = 0; s < states; ++s) {
            if (metric[s] == inf) continue;
            const std::size_t base = s << t.input_bits;
            for (std::size_t in = 0; in < inputs; ++in) {
                const std::uint32_t ns = t.next_state(std::uint32_t(s), std::uint32_t(in));
                const double cand = metric[s] + sm.cost(j, t.outputs[base | in]);
                if (cand < next[ns]) {  // strict: earliest (state, input) wins ties
                    next[ns] = cand;
                    survivor[j][ns] = (std::uint64_t(s) << 32) | in;
                }
            }
        }
        metric.swap(next);
    }

    std::uint32_t end_state = start_state;
    if (!closed) {
        end_state = 0;
        for (std::size_t s = 1; s < states; ++s)
            if (metric[s] < metric[end_state]) end_state = std::uint32_t(s);
    }

    PassResult out;
    out.metric = metric[end_state];
    if (out.metric == inf) return out;
    out.inputs.assign(t.stages, 0);
    std::uint32_t s = end_state;
    for (int j = t.stages - 1; j >= 0; --j) {
        const std::uint64_t sv = survivor[j][s];
        out.inputs[j] = std::uint32_t(sv & 0xffffffffu);
        s = std::uint32_t(sv >> 32);
    }
    return out;
}

}  // namespace

ColumnTrellis build_column_trellis(const CodeSpec& spec, TrellisAxis axis,
                                   const TrellisLimits& limits) {
    spec.validate_shape();
    if (axis == TrellisAxis::Auto) {
        const int col_bits = (spec.k2 - 1) * spec.n1;
        const int row_bits = (spec.k1 - 1) * spec.n2;
        axis = col_bits <= row_bits ? TrellisAxis::Columns : TrellisAxis::Rows;
    }
    if (axis == TrellisAxis::Rows) {
        ColumnTrellis t = build_columns(transpose_spec(spec), limits);
        t.transposed = true;
        return t;
    }
    return build_columns(spec, limits);
}

ViterbiResult ml_viterbi(const LlrPlanes& llr, const CodeSpec& spec, ViterbiMode mode,
                         TrellisAxis axis, const TrellisLimits& limits) {
    if (llr.n != spec.n || llr.n1 != spec.n1 || llr.n2 != spec.n2)
        throw std::invalid_argument("llr planes do not match the code's dimensions");
    const ColumnTrellis t = build_column_trellis(spec, axis, limits);
    const LlrPlanes work = t.transposed ? transpose_llr(llr) : llr;
    const StageMetrics sm = stage_metrics(work, t);

    PassResult best;
    std::uint32_t best_start = 0;
    if (mode == ViterbiMode::SinglePass) {
        best = viterbi_pass(t, sm, 0, false);
    } else {
        if (t.state_bits > limits.max_exact_state_bits)
            throw std::invalid_argument(
                "exact tail-biting decoding over this state space must be enabled explicitly");
        for (std::uint32_t s0 = 0; s0 < (1u << t.state_bits); ++s0) {
            PassResult r = viterbi_pass(t, sm, s0, true);
            if (r.metric < best.metric) {  // strict: smaller start state wins ties
                best = std::move(r);
                best_start = s0;
            }
        }
    }
    if (best.inputs.empty()) throw std::logic_error("no surviving trellis path");

    TorusGrid u(t.transposed ? spec.n2 : spec.n1, t.transposed ? spec.n1 : spec.n2);
    for (int j = 0; j < t.stages; ++j)
        for (int k1 = 0; k1 < t.input_bits; ++k1) u.set(k1, j, (best.inputs[j] >> k1) & 1);

    ViterbiResult out;
    out.decoded = t.transposed ? transpose_grid(u) : u;
    out.metric = best.metric;
    out.start_state = best_start;
    return out;
}

}  // namespace tbcc
