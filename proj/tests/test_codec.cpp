#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tbcc/codec.hpp"

using namespace tbcc;

namespace {

CodeSpec make_spec(int n1, int n2, int k1, int k2, std::vector<std::vector<std::uint8_t>> kernels) {
    CodeSpec s;
    s.n = int(kernels.size());
    s.n1 = n1;
    s.n2 = n2;
    s.k1 = k1;
    s.k2 = k2;
    s.kernels = std::move(kernels);
    s.validate_shape();
    return s;
}

// 2x2 kernels (1+x+y, 1+x+y+xy) over a 6x6 torus
CodeSpec code1() { return make_spec(6, 6, 2, 2, {{1, 1, 1, 0}, {1, 1, 1, 1}}); }

// the 4x4 worked example: (x+y, 1+x+y)
CodeSpec example4x4() { return make_spec(4, 4, 2, 2, {{0, 1, 1, 0}, {1, 1, 1, 0}}); }

TorusGrid random_grid(std::mt19937& rng, int n1, int n2) {
    TorusGrid g(n1, n2);
    for (int i = 0; i < n1 * n2; ++i) g.set_flat(i, std::uint8_t(rng() & 1));
    return g;
}

// ground-truth non-degeneracy on small supports: scan all nonzero inputs
bool nondegenerate_bruteforce(const CodeSpec& spec) {
    const int bits = spec.n1 * spec.n2;
    for (std::uint32_t word = 1; word < (1u << bits); ++word) {
        TorusGrid u(spec.n1, spec.n2);
        for (int i = 0; i < bits; ++i) u.set_flat(i, (word >> i) & 1);
        if (encode(u, spec).weight() == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("impulse response places each kernel at the origin") {
    const CodeSpec spec = code1();
    TorusGrid u(6, 6);
    u.set(0, 0, 1);
    const Codeword v = encode(u, spec);
    for (int i = 0; i < spec.n; ++i)
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                const std::uint8_t expect =
                    (r < spec.k1 && c < spec.k2) ? spec.kernel_at(i, r, c) : 0;
                CHECK(v.planes[i].at(r, c) == expect);
            }
    CHECK(encode(TorusGrid(6, 6), spec).weight() == 0);
}

TEST_CASE("all-ones input reads off kernel weight parity") {
    const CodeSpec spec = code1();
    TorusGrid u(6, 6);
    for (int i = 0; i < 36; ++i) u.set_flat(i, 1);
    const Codeword v = encode(u, spec);
    CHECK(v.planes[0].weight() == 36);  // kernel weight 3, odd
    CHECK(v.planes[1].weight() == 0);   // kernel weight 4, even
    CHECK(v.weight() == 36);
}

TEST_CASE("encoding agrees with the polynomial product modulo the torus ideal") {
    std::mt19937 rng(5);
    const CodeSpec spec = code1();
    const TorusIdeal ideal = spec.torus();
    for (int trial = 0; trial < 50; ++trial) {
        const TorusGrid u = random_grid(rng, 6, 6);
        const Codeword v = encode(u, spec);
        for (int i = 0; i < spec.n; ++i) {
            const Poly2 expect = poly_mod_torus(spec.kernel_poly(i) * u.to_poly(), ideal);
            CHECK(v.planes[i].to_poly() == expect);
        }
    }
}

TEST_CASE("linearity and shift equivariance") {
    std::mt19937 rng(9);
    const CodeSpec spec = code1();
    for (int trial = 0; trial < 200; ++trial) {
        const TorusGrid u1 = random_grid(rng, 6, 6), u2 = random_grid(rng, 6, 6);
        CHECK(encode(u1 ^ u2, spec) == (encode(u1, spec) ^ encode(u2, spec)));
        const int a = int(rng() % 6), b = int(rng() % 6);
        const Codeword shifted = encode(u1.shifted(a, b), spec);
        const Codeword direct = encode(u1, spec);
        for (int i = 0; i < spec.n; ++i) CHECK(shifted.planes[i] == direct.planes[i].shifted(a, b));
    }
}

TEST_CASE("non-degeneracy criterion") {
    CHECK(is_nondegenerate(code1()));
    // both kernels 1+x over a 4x4 torus: u = 1+x+x^2+x^3 annihilates them
    CHECK_FALSE(is_nondegenerate(make_spec(4, 4, 1, 2, {{1, 1}, {1, 1}})));
    CodeSpec all_zero;  // single all-zero kernel: every input maps to 0
    all_zero.n = 1;
    all_zero.n1 = all_zero.n2 = 4;
    all_zero.k1 = all_zero.k2 = 2;
    all_zero.kernels = {{0, 0, 0, 0}};
    CHECK_FALSE(is_nondegenerate(all_zero));
}

TEST_CASE("non-degeneracy matches exhaustive search on a 4x4 torus") {
    std::mt19937 rng(13);
    CHECK(is_nondegenerate(example4x4()));
    CHECK(nondegenerate_bruteforce(example4x4()));
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::vector<std::uint8_t>> kernels(2, std::vector<std::uint8_t>(4));
        bool any = false;
        for (auto& k : kernels)
            for (auto& b : k) {
                b = std::uint8_t(rng() & 1);
                any = any || b;
            }
        if (!any) continue;
        const CodeSpec spec = make_spec(4, 4, 2, 2, kernels);
        CHECK(is_nondegenerate(spec) == nondegenerate_bruteforce(spec));
    }
}

TEST_CASE("common divisor check") {
    CHECK(common_divisor_check(code1()));
    // (x + x^2, 1 + x) share the factor 1+x
    CHECK_FALSE(common_divisor_check(make_spec(6, 6, 1, 3, {{0, 1, 1}, {1, 1, 0}})));
    CHECK(common_divisor_check(make_spec(6, 6, 1, 1, {{1}})));
}

TEST_CASE("parity construction reproduces the expected polynomial rows") {
    const ParityCheck h1 = build_parity_check(code1());
    CHECK(h1.entries.size() == 1);
    CHECK(h1.entries[0][0] == parse_poly("1+x+y+x*y"));
    CHECK(h1.entries[0][1] == parse_poly("1+x+y"));

    const ParityCheck h2 = build_parity_check(example4x4());
    CHECK(h2.entries[0][0] == parse_poly("1+x+y"));
    CHECK(h2.entries[0][1] == parse_poly("x+y"));

    CHECK_THROWS(build_parity_check(make_spec(6, 6, 1, 3, {{0, 1, 1}, {1, 1, 0}})));
}

TEST_CASE("realized parity rows have the combined kernel weight") {
    const CodeSpec spec = code1();
    const ParityCheck h = build_parity_check(spec);
    for (const auto& cols : h.row_cols)
        CHECK(int(cols.size()) == spec.kernel_weight(0) + spec.kernel_weight(1));
}

TEST_CASE("the realized 4x4 check node 0 touches the documented variable set") {
    const ParityCheck h = build_parity_check(example4x4());
    CHECK(h.row_cols[0] == std::vector<int>{0, 3, 12, 19, 28});
    CHECK(h.row_cols[5] == std::vector<int>{1, 4, 5, 17, 20});
}

TEST_CASE("syndromes vanish exactly on codewords") {
    std::mt19937 rng(17);
    const CodeSpec spec = code1();
    const ParityCheck h = build_parity_check(spec);
    for (int trial = 0; trial < 50; ++trial) {
        const Codeword v = encode(random_grid(rng, 6, 6), spec);
        CHECK(syndrome_is_zero(v, h));
        for (const TorusGrid& s : syndrome(v, h)) CHECK(s.weight() == 0);
    }
}

TEST_CASE("a single flipped bit lights up one parity column") {
    const CodeSpec spec = code1();
    const ParityCheck h = build_parity_check(spec);
    for (int plane = 0; plane < 2; ++plane) {
        Codeword v(2, 6, 6);
        v.planes[plane].set(2, 3, 1);
        const std::vector<TorusGrid> s = syndrome(v, h);
        // column weight for plane i equals the weight of entry H[0][i]
        CHECK(s[0].weight() == int(h.entries[0][plane].term_count()));
        // support is the torus placement of that entry: s[p] hits checks
        // p = bitpos + monomial offset
        for (const Monomial& m : h.entries[0][plane].monomials())
            CHECK(s[0].at(2 + int(m.b), 3 + int(m.a)) == 1);
    }
}

TEST_CASE("image of encode equals the parity null space on the 4x4 example") {
    const CodeSpec spec = example4x4();
    const ParityCheck h = build_parity_check(spec);

    std::set<std::uint64_t> codewords;
    for (std::uint32_t word = 0; word < (1u << 16); ++word) {
        TorusGrid u(4, 4);
        for (int i = 0; i < 16; ++i) u.set_flat(i, (word >> i) & 1);
        const Codeword v = encode(u, spec);
        CHECK(syndrome_is_zero(v, h));
        std::uint64_t packed = 0;
        for (int i = 0; i < 32; ++i) packed |= std::uint64_t(v.bit(i)) << i;
        codewords.insert(packed);
    }
    CHECK(codewords.size() == (1u << 16));  // encoder is injective

    // GF(2) rank of the realized parity matrix: nullity 16 closes the argument
    std::vector<std::uint64_t> rows;
    for (const auto& cols : h.row_cols) {
        std::uint64_t r = 0;
        for (int c : cols) r |= std::uint64_t(1) << c;
        rows.push_back(r);
    }
    int rank = 0;
    for (int bit = 0; bit < 32; ++bit) {
        std::size_t pivot = std::size_t(-1);
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i] & (std::uint64_t(1) << bit)) {
                pivot = i;
                break;
            }
        if (pivot == std::size_t(-1)) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != std::size_t(rank) && (rows[i] & (std::uint64_t(1) << bit))) rows[i] ^= rows[rank];
        ++rank;
    }
    CHECK(rank == 16);  // 32 - 16 = 16 free bits: null space size 2^16
}

TEST_CASE("pseudo-inverse construction") {
    const auto inv1 = build_pseudo_inverse(code1());
    REQUIRE(inv1.has_value());
    CHECK(inv1->q == std::vector<Poly2>{Poly2::one(), Poly2::one()});
    CHECK(inv1->alpha == 1);
    CHECK(inv1->beta == 1);

    // systematic-style code: g1 = 1 gives a true inverse with zero delay
    const CodeSpec sys = make_spec(6, 6, 3, 3,
                                   {{1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 1, 0, 1}});
    const auto inv_sys = build_pseudo_inverse(sys);
    REQUIRE(inv_sys.has_value());
    CHECK(inv_sys->q == std::vector<Poly2>{Poly2::one(), Poly2::zero()});
    CHECK(inv_sys->alpha == 0);
    CHECK(inv_sys->beta == 0);

    // non-invertible 3x3 pair
    const CodeSpec noinv = make_spec(6, 6, 3, 3,
                                     {{1, 1, 0, 1, 1, 0, 0, 0, 1}, {1, 0, 1, 1, 1, 1, 1, 1, 1}});
    CHECK_FALSE(build_pseudo_inverse(noinv).has_value());
}

TEST_CASE("inverse encoding round-trips") {
    std::mt19937 rng(29);
    const CodeSpec spec = code1();
    const auto inv = build_pseudo_inverse(spec);
    REQUIRE(inv.has_value());
    for (int trial = 0; trial < 100; ++trial) {
        const TorusGrid u = random_grid(rng, 6, 6);
        CHECK(apply_inverse(encode(u, spec), *inv, 6, 6) == u);
    }
    CHECK(apply_inverse(Codeword(2, 6, 6), *inv, 6, 6) == TorusGrid(6, 6));

    // with q = (1, 0) the inverse simply reads plane 1
    const CodeSpec sys = make_spec(6, 6, 3, 3,
                                   {{1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 0, 1, 0, 1}});
    const auto inv_sys = build_pseudo_inverse(sys);
    const TorusGrid u = random_grid(rng, 6, 6);
    const Codeword v = encode(u, sys);
    CHECK(apply_inverse(v, *inv_sys, 6, 6) == v.planes[0]);
}

TEST_CASE("syndrome former family matches hand-convolved rows") {
    const CodeSpec spec = code1();
    const std::vector<Poly2> zs = {Poly2::one(), parse_poly("1+y"), parse_poly("1+x")};
    const std::vector<ParityCheck> family = syndrome_former_family(spec, zs);
    REQUIRE(family.size() == 3);

    const ParityCheck base = build_parity_check(spec);
    CHECK(family[0].entries == base.entries);

    CHECK(family[1].entries[0][0] == parse_poly("1+x+y^2+x*y^2"));
    CHECK(family[1].entries[0][1] == parse_poly("1+x+x*y+y^2"));
    CHECK(family[2].entries[0][0] == parse_poly("1+y+x^2+x^2*y"));
    CHECK(family[2].entries[0][1] == parse_poly("1+y+x*y+x^2"));

    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const Codeword v = encode(random_grid(rng, 6, 6), spec);
        for (const ParityCheck& h : family) CHECK(syndrome_is_zero(v, h));
    }

    CHECK_THROWS(syndrome_former_family(spec, {Poly2::zero()}));
}
