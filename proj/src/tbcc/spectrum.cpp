#include "tbcc/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "tbcc/codec.hpp"

namespace tbcc {

std::uint64_t WeightSpectrum::at(int w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
}

namespace {

// Reversed-kernel masks: fragment bit i of a patch is the parity of
// patch & mask[i], where mask bit (a*K2+b) holds g_i[K1-1-a][K2-1-b].
std::vector<std::uint32_t> fragment_masks(const CodeSpec& spec) {
    std::vector<std::uint32_t> masks(spec.n, 0);
    for (int i = 0; i < spec.n; ++i)
        for (int a = 0; a < spec.k1; ++a)
            for (int b = 0; b < spec.k2; ++b)
                if (spec.kernel_at(i, spec.k1 - 1 - a, spec.k2 - 1 - b))
                    masks[i] |= 1u << (a * spec.k2 + b);
    return masks;
}

WeightSpectrum finish_spectrum(std::vector<std::uint64_t> hist, int w_max, bool exhaustive,
                               std::uint64_t zero_collisions) {
    WeightSpectrum s;
    s.w_max = w_max;
    s.exhaustive = exhaustive;
    s.zero_weight_collisions = zero_collisions;
    int d_min = 0;
    for (int w = 1; w <= w_max && w < int(hist.size()); ++w)
        if (hist[w]) {
            d_min = w;
            break;
        }
    s.d_min = d_min;
    if (d_min)
        for (int w = d_min; w <= w_max; ++w) s.counts[w] = w < int(hist.size()) ? hist[w] : 0;
    return s;
}

}  // namespace

std::vector<std::uint8_t> code_fragment(const ConstraintRegion& region, const CodeSpec& spec) {
    if (region.k1 != spec.k1 || region.k2 != spec.k2)
        throw std::invalid_argument("constraint region does not match the kernel support");
    const std::vector<std::uint32_t> masks = fragment_masks(spec);
    std::vector<std::uint8_t> frag(spec.n);
    for (int i = 0; i < spec.n; ++i)
        frag[i] = std::uint8_t(std::popcount(region.bits & masks[i]) & 1);
    return frag;
}

bool compatible(const ConstraintRegion& r1, const ConstraintRegion& r2, Direction direction) {
    if (r1.k1 != r2.k1 || r1.k2 != r2.k2)
        throw std::invalid_argument("constraint regions differ in support");
    const int k1 = r1.k1, k2 = r1.k2;
    switch (direction) {
        case Direction::Down:  // r2 one row below r1
            for (int a = 1; a < k1; ++a)
                for (int b = 0; b < k2; ++b)
                    if (r1.at(a, b) != r2.at(a - 1, b)) return false;
            return true;
        case Direction::Up:
            for (int a = 0; a + 1 < k1; ++a)
                for (int b = 0; b < k2; ++b)
                    if (r1.at(a, b) != r2.at(a + 1, b)) return false;
            return true;
        case Direction::Right:  // r2 one column right of r1
            for (int a = 0; a < k1; ++a)
                for (int b = 1; b < k2; ++b)
                    if (r1.at(a, b) != r2.at(a, b - 1)) return false;
            return true;
        case Direction::Left:
        default:
            for (int a = 0; a < k1; ++a)
                for (int b = 0; b + 1 < k2; ++b)
                    if (r1.at(a, b) != r2.at(a, b + 1)) return false;
            return true;
    }
}

namespace {

struct TreeStep {
    std::uint32_t patch_cells[32];   // flat u-bit index per patch cell, (a,b) order
    std::vector<int> new_cells;      // cells assigned for the first time at this step
};

struct PathEntry {
    std::uint64_t bits;  // u values on the support laid so far
    std::uint32_t weight;
};

// Schedule of patch/new cells for a sequence of region anchors. The support
// after each step is path-independent, so it is computed once.
std::vector<TreeStep> build_steps(const CodeSpec& spec, const std::vector<int>& anchors,
                                  std::uint64_t& support_out) {
    std::vector<TreeStep> steps;
    std::uint64_t support = 0;
    for (int s : anchors) {
        const int i = s % spec.n1, j = s / spec.n1;
        TreeStep step;
        for (int a = 0; a < spec.k1; ++a)
            for (int b = 0; b < spec.k2; ++b) {
                const int cell = ((i + a) % spec.n1) * spec.n2 + ((j + b) % spec.n2);
                step.patch_cells[a * spec.k2 + b] = std::uint32_t(cell);
            }
        for (int c = 0; c < spec.k1 * spec.k2; ++c) {
            const std::uint64_t bit = 1ull << step.patch_cells[c];
            if (!(support & bit)) {
                support |= bit;
                step.new_cells.push_back(int(step.patch_cells[c]));
            }
        }
        // deduplicate (a wrapped patch can revisit a cell within one step)
        std::sort(step.new_cells.begin(), step.new_cells.end());
        step.new_cells.erase(std::unique(step.new_cells.begin(), step.new_cells.end()),
                             step.new_cells.end());
        steps.push_back(std::move(step));
    }
    support_out = support;
    return steps;
}

// Grow one tree: enumerate every assignment of the support whose partial
// fragment weight stays within w_max.
bool grow_tree(const CodeSpec& spec, const std::vector<TreeStep>& steps,
               const std::vector<std::uint8_t>& frag_weight, int w_max,
               const BeastCaps& caps, std::vector<PathEntry>& paths) {
    const int cells = spec.k1 * spec.k2;
    paths.assign(1, PathEntry{0, 0});
    std::vector<PathEntry> next;
    for (const TreeStep& step : steps) {
        const int m = int(step.new_cells.size());
        next.clear();
        next.reserve(paths.size() << m);
        for (const PathEntry& p : paths) {
            for (std::uint32_t combo = 0; combo < (1u << m); ++combo) {
                std::uint64_t bits = p.bits;
                for (int c = 0; c < m; ++c)
                    if (combo & (1u << c)) bits |= 1ull << step.new_cells[c];
                std::uint32_t patch = 0;
                for (int c = 0; c < cells; ++c)
                    patch |= std::uint32_t((bits >> step.patch_cells[c]) & 1) << c;
                const std::uint32_t w = p.weight + frag_weight[patch];
                if (w <= std::uint32_t(w_max)) next.push_back({bits, w});
            }
            if (next.size() > caps.max_paths) return false;
        }
        paths.swap(next);
        if (paths.empty()) break;
    }
    return true;
}

}  // namespace

WeightSpectrum beast_spectrum(const CodeSpec& spec, int w_max, const BeastCaps& caps) {
    spec.validate_shape();
    if (spec.n1 * spec.n2 > 64)
        throw std::invalid_argument("tree search supports at most 64 information bits");
    if (spec.k1 * spec.k2 > 20)
        throw std::invalid_argument("kernel support too large for the tree search");
    const int total_bits = spec.n * spec.n1 * spec.n2;
    w_max = std::min(w_max, total_bits);
    if (w_max < 1) return finish_spectrum({}, std::max(w_max, 0), true, 0);

    // fragment weight per patch configuration
    const std::vector<std::uint32_t> masks = fragment_masks(spec);
    const int cells = spec.k1 * spec.k2;
    std::vector<std::uint8_t> frag_weight(std::size_t(1) << cells, 0);
    for (std::uint32_t cfg = 0; cfg < (1u << cells); ++cfg) {
        int w = 0;
        for (int i = 0; i < spec.n; ++i) w += std::popcount(cfg & masks[i]) & 1;
        frag_weight[cfg] = std::uint8_t(w);
    }

    // forward anchors cover the first ceil(N2/2) columns, backward the rest
    const int total = spec.n1 * spec.n2;
    const int forward_len = ((spec.n2 + 1) / 2) * spec.n1;
    std::vector<int> fwd_anchors, bwd_anchors;
    for (int s = 0; s < forward_len; ++s) fwd_anchors.push_back(s);
    for (int s = total - 1; s >= forward_len; --s) bwd_anchors.push_back(s);

    std::uint64_t supp_f = 0, supp_b = 0;
    const std::vector<TreeStep> fwd_steps = build_steps(spec, fwd_anchors, supp_f);
    const std::vector<TreeStep> bwd_steps = build_steps(spec, bwd_anchors, supp_b);
    const std::uint64_t all = (total == 64) ? ~0ull : ((1ull << total) - 1);
    if ((supp_f | supp_b) != all)
        throw std::logic_error("tree supports fail to cover the information grid");

    std::vector<PathEntry> fwd, bwd;
    const bool ok_f = grow_tree(spec, fwd_steps, frag_weight, w_max, caps, fwd);
    const bool ok_b = ok_f && grow_tree(spec, bwd_steps, frag_weight, w_max, caps, bwd);
    if (!ok_f || !ok_b) {
        WeightSpectrum s = finish_spectrum({}, w_max, false, 0);
        return s;
    }

    // pair within equal bins: the key gathers every shared information bit
    // (the K2-1 initial-state columns plus the mutual borders), so key
    // equality is exactly full-border compatibility plus the tail-biting
    // boundary conditions.
    std::vector<int> shared_cells;
    for (int c = 0; c < total; ++c)
        if ((supp_f >> c) & (supp_b >> c) & 1) shared_cells.push_back(c);
    auto key_of = [&shared_cells](std::uint64_t bits) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < shared_cells.size(); ++i)
            key |= ((bits >> shared_cells[i]) & 1) << i;
        return key;
    };

    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> bins;
    bins.reserve(fwd.size());
    for (const PathEntry& p : fwd) {
        auto& hist = bins[key_of(p.bits)];
        if (hist.empty()) hist.assign(w_max + 1, 0);
        ++hist[p.weight];
    }

    std::vector<std::uint64_t> counts(w_max + 1, 0);
    for (const PathEntry& p : bwd) {
        auto it = bins.find(key_of(p.bits));
        if (it == bins.end()) continue;
        const std::vector<std::uint64_t>& hist = it->second;
        for (int wf = 0; wf + int(p.weight) <= w_max; ++wf)
            counts[wf + p.weight] += hist[wf];
    }
    counts[0] = 0;  // the all-zero codeword is never listed
    return finish_spectrum(std::move(counts), w_max, true, 0);
}

WeightSpectrum bruteforce_spectrum(const CodeSpec& spec, int w_max, int threads) {
    spec.validate_shape();
    const int bits = spec.n1 * spec.n2;
    if (bits > 40) throw std::invalid_argument("exhaustive enumeration is guarded at 40 bits");
    const int total_bits = spec.n * spec.n1 * spec.n2;
    w_max = std::min(w_max, total_bits);
    const int words = (total_bits + 63) / 64;

    // one codeword mask per information bit
    std::vector<std::vector<std::uint64_t>> rows(bits, std::vector<std::uint64_t>(words, 0));
    for (int l = 0; l < bits; ++l) {
        TorusGrid u(spec.n1, spec.n2);
        u.set_flat(l, 1);
        const Codeword v = encode(u, spec);
        for (int b = 0; b < total_bits; ++b)
            if (v.bit(b)) rows[l][b / 64] |= 1ull << (b % 64);
    }

    const std::uint64_t count = 1ull << bits;
    threads = std::max(1, std::min(threads, 64));
    std::vector<std::vector<std::uint64_t>> hists(threads);
    std::vector<std::uint64_t> zeros(threads, 0);

    auto worker = [&](int tid, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t>& hist = hists[tid];
        hist.assign(w_max + 1, 0);
        std::vector<std::uint64_t> cw(words, 0);
        std::uint64_t gray = lo ^ (lo >> 1);
        for (int l = 0; l < bits; ++l)
            if ((gray >> l) & 1)
                for (int w = 0; w < words; ++w) cw[w] ^= rows[l][w];
        for (std::uint64_t s = lo; s < hi; ++s) {
            if (s != lo) {
                const int flip = std::countr_zero(s);
                for (int w = 0; w < words; ++w) cw[w] ^= rows[flip][w];
                gray ^= 1ull << flip;
            }
            if (gray == 0) continue;  // the all-zero word
            int w = 0;
            for (int k = 0; k < words; ++k) w += std::popcount(cw[k]);
            if (w == 0)
                ++zeros[tid];
            else if (w <= w_max)
                ++hist[w];
        }
    };

    if (threads == 1) {
        worker(0, 0, count);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = count / threads;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = (t + 1 == threads) ? count : lo + chunk;
            pool.emplace_back(worker, t, lo, hi);
        }
        for (std::thread& th : pool) th.join();
    }

    std::vector<std::uint64_t> hist(w_max + 1, 0);
    std::uint64_t zero_collisions = 0;
    for (int t = 0; t < threads; ++t) {
        if (!hists[t].empty())
            for (int w = 0; w <= w_max; ++w) hist[w] += hists[t][w];
        zero_collisions += zeros[t];
    }
    return finish_spectrum(std::move(hist), w_max, true, zero_collisions);
}

std::string spectrum_csv(const WeightSpectrum& s) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : s.counts) os << w << ',' << c << '\n';
    return os.str();
}

}  // namespace tbcc
