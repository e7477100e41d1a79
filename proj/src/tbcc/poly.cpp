#include "tbcc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tbcc {

void Poly2::check_cap(std::uint32_t a, std::uint32_t b) {
    if (a >= kDegreeCap || b >= kDegreeCap)
        throw std::domain_error("polynomial degree exceeds the per-variable cap (2^16)");
}

Poly2::Poly2(std::initializer_list<Monomial> monomials) {
    for (const Monomial& m : monomials) toggle(m.a, m.b);
}

Poly2 Poly2::monomial(std::uint32_t a, std::uint32_t b) {
    check_cap(a, b);
    Poly2 p;
    p.terms_.push_back(pack(a, b));
    return p;
}

bool Poly2::contains(std::uint32_t a, std::uint32_t b) const {
    return std::binary_search(terms_.begin(), terms_.end(), pack(a, b));
}

std::uint32_t Poly2::degree_x() const {
    // Terms are sorted by packed (a,b), so the x degree is in the last term.
    return terms_.empty() ? 0 : static_cast<std::uint32_t>(terms_.back() >> 32);
}

std::uint32_t Poly2::degree_y() const {
    std::uint32_t d = 0;
    for (std::uint64_t t : terms_) d = std::max(d, static_cast<std::uint32_t>(t & 0xffffffffu));
    return d;
}

std::vector<Monomial> Poly2::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (std::uint64_t t : terms_)
        out.push_back({static_cast<std::uint32_t>(t >> 32), static_cast<std::uint32_t>(t & 0xffffffffu)});
    return out;
}

void Poly2::toggle(std::uint32_t a, std::uint32_t b) {
    check_cap(a, b);
    const std::uint64_t key = pack(a, b);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key);
    if (it != terms_.end() && *it == key)
        terms_.erase(it);
    else
        terms_.insert(it, key);
}

Poly2 operator+(const Poly2& lhs, const Poly2& rhs) {
    // Characteristic 2: the sum is the symmetric difference of term sets.
    Poly2 out;
    out.terms_.reserve(lhs.terms_.size() + rhs.terms_.size());
    std::set_symmetric_difference(lhs.terms_.begin(), lhs.terms_.end(), rhs.terms_.begin(),
                                  rhs.terms_.end(), std::back_inserter(out.terms_));
    return out;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
    std::vector<std::uint64_t> acc;
    acc.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (std::uint64_t s : lhs.terms_)
        for (std::uint64_t t : rhs.terms_) {
            const std::uint32_t a = static_cast<std::uint32_t>(s >> 32) + static_cast<std::uint32_t>(t >> 32);
            const std::uint32_t b = static_cast<std::uint32_t>(s & 0xffffffffu) + static_cast<std::uint32_t>(t & 0xffffffffu);
            Poly2::check_cap(a, b);
            acc.push_back((static_cast<std::uint64_t>(a) << 32) | b);
        }
    std::sort(acc.begin(), acc.end());
    Poly2 out;
    for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) & 1) out.terms_.push_back(acc[i]);
        i = j;
    }
    return out;
}

TorusIdeal::TorusIdeal(std::uint32_t px, std::uint32_t py) : x_period(px), y_period(py) {
    if (px == 0 || py == 0) throw std::invalid_argument("torus periods must be positive");
}

Poly2 TorusIdeal::x_generator() const { return Poly2::monomial(x_period, 0) + Poly2::one(); }
Poly2 TorusIdeal::y_generator() const { return Poly2::monomial(0, y_period) + Poly2::one(); }

Poly2 poly_add(const Poly2& a, const Poly2& b) { return a + b; }
Poly2 poly_mul(const Poly2& a, const Poly2& b) { return a * b; }

Poly2 poly_mod_torus(const Poly2& a, const TorusIdeal& ideal) {
    Poly2 out;
    for (const Monomial& m : a.monomials()) out.toggle(m.a % ideal.x_period, m.b % ideal.y_period);
    return out;
}

namespace {

std::string monomial_to_string(const Monomial& m) {
    if (m.a == 0 && m.b == 0) return "1";
    std::string s;
    auto var = [&s](char name, std::uint32_t e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += name;
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    };
    var('x', m.a);
    var('y', m.b);
    return s;
}

}  // namespace

std::string to_string(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::vector<Monomial> ms = p.monomials();
    std::sort(ms.begin(), ms.end(), [](const Monomial& l, const Monomial& r) {
        const std::uint64_t dl = std::uint64_t(l.a) + l.b, dr = std::uint64_t(r.a) + r.b;
        if (dl != dr) return dl < dr;
        if (l.b != r.b) return l.b < r.b;
        return l.a < r.a;
    });
    std::string out;
    for (const Monomial& m : ms) {
        if (!out.empty()) out += '+';
        out += monomial_to_string(m);
    }
    return out;
}

Poly2 parse_poly(std::string_view text) {
    // Grammar: poly := term ('+' term)*; term := factor ('*' factor)*;
    // factor := '0' | '1' | ('x'|'y') ('^' uint)?. Whitespace is ignored.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial text");

    Poly2 out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::uint64_t a = 0, b = 0;
        bool zero_term = false;
        bool saw_factor = false;
        while (true) {
            if (i >= s.size()) throw std::invalid_argument("dangling operator in polynomial text");
            char c = s[i];
            if (c == '0') {
                zero_term = true;
                ++i;
            } else if (c == '1') {
                ++i;
            } else if (c == 'x' || c == 'y') {
                ++i;
                std::uint64_t e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                        throw std::invalid_argument("expected exponent after '^'");
                    e = 0;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                        e = e * 10 + (s[i] - '0');
                        if (e >= Poly2::kDegreeCap) throw std::domain_error("exponent exceeds cap");
                        ++i;
                    }
                }
                (c == 'x' ? a : b) += e;
            } else {
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in polynomial text");
            }
            saw_factor = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("empty term in polynomial text");
        if (!zero_term) out.toggle(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("expected '+' between terms");
            ++i;
            if (i == s.size()) throw std::invalid_argument("trailing '+' in polynomial text");
        }
    }
    return out;
}

}  // namespace tbcc
