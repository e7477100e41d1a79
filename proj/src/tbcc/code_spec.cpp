#include "tbcc/code_spec.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tbcc {

Poly2 CodeSpec::kernel_poly(int i) const {
    Poly2 p;
    for (int r = 0; r < k1; ++r)
        for (int c = 0; c < k2; ++c)
            if (kernel_at(i, r, c)) p.toggle(std::uint32_t(c), std::uint32_t(r));
    return p;
}

std::vector<Poly2> CodeSpec::kernel_polys() const {
    std::vector<Poly2> out;
    for (int i = 0; i < n; ++i) out.push_back(kernel_poly(i));
    return out;
}

int CodeSpec::kernel_weight(int i) const {
    return std::accumulate(kernels[i].begin(), kernels[i].end(), 0);
}

void CodeSpec::validate_shape() const {
    if (n < 1) throw std::invalid_argument("code needs at least one output plane");
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("information support must be positive");
    if (k1 < 1 || k2 < 1 || k1 > n1 || k2 > n2)
        throw std::invalid_argument("kernel support must satisfy 1 <= K_j <= N_j");
    if (int(kernels.size()) != n) throw std::invalid_argument("kernel count does not match n");
    bool any = false;
    for (const auto& k : kernels) {
        if (int(k.size()) != k1 * k2) throw std::invalid_argument("kernel size mismatch");
        for (std::uint8_t b : k)
            if (b > 1) throw std::invalid_argument("kernel entries must be bits");
        any = any || std::accumulate(k.begin(), k.end(), 0) > 0;
    }
    if (!any) throw std::invalid_argument("at least one kernel must be nonzero");
}

std::string CodeSpec::canonical_text() const {
    std::ostringstream os;
    os << "n: " << n << "\n";
    os << "N1: " << n1 << "\n";
    os << "N2: " << n2 << "\n";
    os << "K1: " << k1 << "\n";
    os << "K2: " << k2 << "\n";
    for (int i = 0; i < n; ++i) {
        os << "kernel " << (i + 1) << ":\n";
        for (int r = 0; r < k1; ++r) {
            for (int c = 0; c < k2; ++c) {
                if (c) os << ' ';
                os << int(kernel_at(i, r, c));
            }
            os << "\n";
        }
    }
    return os.str();
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t CodeSpec::hash() const { return fnv1a(canonical_text()); }

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

CodeSpec parse_code_spec(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    CodeSpec spec;
    int expecting_kernel = -1;  // kernel index currently being filled
    int rows_filled = 0;
    bool have[5] = {false, false, false, false, false};

    while (std::getline(is, line)) {
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;

        if (expecting_kernel >= 0) {
            std::istringstream row(t);
            int bit;
            std::vector<std::uint8_t> bits;
            while (row >> bit) {
                if (bit != 0 && bit != 1) throw std::invalid_argument("kernel bits must be 0/1");
                bits.push_back(std::uint8_t(bit));
            }
            if (int(bits.size()) != spec.k2)
                throw std::invalid_argument("kernel row has wrong number of bits");
            auto& k = spec.kernels[expecting_kernel];
            k.insert(k.end(), bits.begin(), bits.end());
            if (++rows_filled == spec.k1) expecting_kernel = -1;
            continue;
        }

        std::size_t colon = t.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected 'key: value' line: " + t);
        std::string key = strip(t.substr(0, colon));
        std::string value = strip(t.substr(colon + 1));

        if (key == "n") { spec.n = std::stoi(value); have[0] = true; }
        else if (key == "N1") { spec.n1 = std::stoi(value); have[1] = true; }
        else if (key == "N2") { spec.n2 = std::stoi(value); have[2] = true; }
        else if (key == "K1") { spec.k1 = std::stoi(value); have[3] = true; }
        else if (key == "K2") { spec.k2 = std::stoi(value); have[4] = true; }
        else if (key.rfind("kernel", 0) == 0) {
            for (bool h : have)
                if (!h) throw std::invalid_argument("kernel block before n/N1/N2/K1/K2 header");
            int idx = std::stoi(strip(key.substr(6)));
            if (idx < 1 || idx > spec.n) throw std::invalid_argument("kernel index out of range");
            if (spec.kernels.empty()) spec.kernels.assign(spec.n, {});
            if (!spec.kernels[idx - 1].empty()) throw std::invalid_argument("duplicate kernel block");
            expecting_kernel = idx - 1;
            rows_filled = 0;
        } else {
            throw std::invalid_argument("unknown key: " + key);
        }
    }
    if (expecting_kernel >= 0) throw std::invalid_argument("kernel block truncated");
    spec.validate_shape();
    return spec;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open code spec file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_code_spec(buf.str());
}

void save_code_spec(const CodeSpec& spec, const std::string& path) {
    spec.validate_shape();
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write code spec file: " + path);
    f << spec.canonical_text();
}

}  // namespace tbcc
