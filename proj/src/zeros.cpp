#include "gbx/zeros.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "gbx/dd.hpp"
#include "gbx/errors.hpp"
#include "gbx/real50.hpp"
#include "gbx/sieve.hpp"

namespace gbx {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kMaxHeight = 3e12;
constexpr std::size_t kChunk = 4096;

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
    throw format_error("zero table line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, std::size_t line) {
    const char* c = s.c_str();
    char* end = nullptr;
    double v = std::strtod(c, &end);
    if (end == c || *end != '\0' || !std::isfinite(v))
        fail_line(line, "not a finite decimal: '" + s + "'");
    return v;
}

// Sums term(i) for i in [lo, hi) with compensation inside fixed-size chunks
// and across chunk results, in index order. The chunk boundaries are part of
// the contract: the reduction is bit-identical however the work is split.
template <class F>
double chunked_sum(std::size_t lo, std::size_t hi, F&& term) {
    NeumaierSum total;
    for (std::size_t c = lo; c < hi; c += kChunk) {
        NeumaierSum chunk;
        std::size_t end = std::min(hi, c + kChunk);
        for (std::size_t i = c; i < end; ++i) chunk.add(term(i));
        total.add(chunk.value());
    }
    return total.value();
}

// log x split into double-double via one 50-digit evaluation; x is fixed per
// sum so the cost is irrelevant, and the split feeds the mod-2pi reduction.
dd dd_log(double x) {
    real50 l = log(real50(x));
    double hi = static_cast<double>(l);
    double lo = static_cast<double>(l - hi);
    return dd_make(hi, lo);
}

void require_covered(const ZeroTable& t, double T, const char* what) {
    if (T > t.height)
        throw coverage_error(std::string(what) + ": T=" + std::to_string(T) +
                             " exceeds certified height " + std::to_string(t.height));
}

} // namespace

ZeroTable load_zeros(std::istream& in) {
    ZeroTable t;
    bool have_height = false;
    double header_height = 0.0;
    std::string raw;
    std::size_t line = 0;
    bool data_started = false;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back(); // CRLF normalization
        if (raw.empty()) fail_line(line, "empty line");
        if (raw[0] == '#') {
            if (data_started) fail_line(line, "header after ordinate data");
            std::string body = trim(raw.substr(1));
            std::size_t colon = body.find(':');
            if (colon == std::string::npos) fail_line(line, "malformed header (missing ':')");
            std::string key = trim(body.substr(0, colon));
            std::string val = trim(body.substr(colon + 1));
            if (key == "height") {
                header_height = parse_real(val, line);
                have_height = true;
            } else if (key == "modulus") {
                double m = parse_real(val, line);
                if (m < 1 || m != std::floor(m)) fail_line(line, "modulus must be a positive integer");
                t.modulus = static_cast<std::uint64_t>(m);
            } else if (key == "character") {
                double c = parse_real(val, line);
                if (c < 0 || c != std::floor(c)) fail_line(line, "character index must be a nonnegative integer");
                t.character = static_cast<std::int64_t>(c);
            } else if (key == "source") {
                t.source = val;
            }
            // unknown header keys are provenance chatter, ignored
            continue;
        }
        data_started = true;
        double g = parse_real(raw, line);
        if (g <= 0.0) fail_line(line, "ordinate must be positive");
        if (!t.gammas.empty() && g <= t.gammas.back())
            fail_line(line, "ordinates must be strictly increasing");
        t.gammas.push_back(g);
    }
    if (t.gammas.empty()) throw format_error("zero table: no ordinates");
    t.height = have_height ? header_height : t.gammas.back();
    if (t.height <= 0.0) throw format_error("zero table: height must be positive");
    if (t.height > t.gammas.back())
        throw format_error("zero table: height header " + std::to_string(t.height) +
                           " exceeds last ordinate " + std::to_string(t.gammas.back()));
    if (t.height > kMaxHeight)
        throw format_error("zero table: height exceeds 3e12, beyond the verified strip");
    if (t.modulus <= 1 && !(t.gammas.front() > 14.0 && t.gammas.front() < 15.0))
        throw format_error("zero table: first ordinate " + std::to_string(t.gammas.front()) +
                           " is not in (14, 15)");
    return t;
}

ZeroTable load_zeros_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw format_error("zero table: cannot open " + path);
    return load_zeros(f);
}

std::uint64_t count_zeros(const ZeroTable& table, double T) {
    require_covered(table, T, "count_zeros");
    return static_cast<std::uint64_t>(
        std::lower_bound(table.gammas.begin(), table.gammas.end(), T) - table.gammas.begin());
}

ZeroSumResult sum_inv_rho(const ZeroTable& table, double T) {
    require_covered(table, T, "sum_inv_rho");
    std::size_t n = static_cast<std::size_t>(
        std::upper_bound(table.gammas.begin(), table.gammas.end(), T) - table.gammas.begin());
    ZeroSumResult r;
    r.kind = ZeroSumKind::inv_rho;
    r.T = T;
    r.terms_used = n;
    r.doubled = false;
    const auto& g = table.gammas;
    r.value = chunked_sum(0, n, [&](std::size_t i) {
        return 1.0 / std::sqrt(0.25 + g[i] * g[i]);
    });
    return r;
}

ZeroSumResult sum_inv_gamma_sq(const ZeroTable& table, double from_T) {
    if (from_T < 0.0) throw domain_error("sum_inv_gamma_sq: from_T must be >= 0");
    require_covered(table, from_T, "sum_inv_gamma_sq");
    std::size_t lo = static_cast<std::size_t>(
        std::upper_bound(table.gammas.begin(), table.gammas.end(), from_T) -
        table.gammas.begin());
    // entries past the certified height carry no claim; exclude them
    std::size_t hi = static_cast<std::size_t>(
        std::upper_bound(table.gammas.begin(), table.gammas.end(), table.height) -
        table.gammas.begin());
    ZeroSumResult r;
    r.kind = ZeroSumKind::inv_gamma_sq;
    r.T = from_T;
    r.terms_used = hi - lo;
    r.doubled = false;
    const auto& g = table.gammas;
    r.value = chunked_sum(lo, hi, [&](std::size_t i) { return 1.0 / (g[i] * g[i]); });
    r.tail = std::log(table.height) / (kTwoPi * table.height);
    return r;
}

ZeroSumResult sum_inv_rho_rho1(const ZeroTable& table, double T) {
    require_covered(table, T, "sum_inv_rho_rho1");
    // |rho| < T with rho = 1/2 + i gamma means gamma < sqrt(T^2 - 1/4)
    double gmax = T >= 0.5 ? std::sqrt(T * T - 0.25) : 0.0;
    std::size_t n = static_cast<std::size_t>(
        std::lower_bound(table.gammas.begin(), table.gammas.end(), gmax) -
        table.gammas.begin());
    ZeroSumResult r;
    r.kind = ZeroSumKind::inv_rho_rho1;
    r.T = T;
    r.terms_used = n;
    r.doubled = true;
    const auto& g = table.gammas;
    r.value = chunked_sum(0, n, [&](std::size_t i) {
        double gg = g[i] * g[i];
        return 2.0 / std::sqrt((0.25 + gg) * (2.25 + gg));
    });
    return r;
}

ZeroSumResult H_truncated(const ZeroTable& table, double x, HCutoff cutoff) {
    if (x < 2.0) throw domain_error("H_truncated: x must be >= 2");
    double gmax;
    if (cutoff.kind == HCutoff::abs_rho_lt_x) {
        require_covered(table, x, "H_truncated");
        gmax = std::sqrt(x * x - 0.25);
    } else {
        require_covered(table, cutoff.T, "H_truncated");
        gmax = cutoff.T;
    }
    std::size_t n = static_cast<std::size_t>(
        std::lower_bound(table.gammas.begin(), table.gammas.end(), gmax) -
        table.gammas.begin());
    ZeroSumResult r;
    r.kind = ZeroSumKind::H;
    r.T = cutoff.kind == HCutoff::abs_rho_lt_x ? x : cutoff.T;
    r.x = x;
    r.terms_used = n;
    r.doubled = true;
    const dd logx = dd_log(x);
    const double x32 = x * std::sqrt(x);
    const auto& g = table.gammas;
    // 2 Re(x^{rho+1}/(rho(rho+1))); rho(rho+1) = (3/4 - gamma^2) + 2 i gamma
    r.value = chunked_sum(0, n, [&](std::size_t i) {
        double th = dd_reduce_two_pi(g[i], logx);
        double re_d = 0.75 - g[i] * g[i];
        double im_d = 2.0 * g[i];
        double den = re_d * re_d + im_d * im_d;
        return 2.0 * x32 * (std::cos(th) * re_d + std::sin(th) * im_d) / den;
    });
    return r;
}

ZeroSumResult psi_explicit_truncated(const ZeroTable& table, double u, double T) {
    if (u < 2.0) throw domain_error("psi_explicit_truncated: u must be >= 2");
    require_covered(table, T, "psi_explicit_truncated");
    std::size_t n = static_cast<std::size_t>(
        std::lower_bound(table.gammas.begin(), table.gammas.end(), T) - table.gammas.begin());
    ZeroSumResult r;
    r.kind = ZeroSumKind::explicit_psi;
    r.T = T;
    r.x = u;
    r.terms_used = n;
    r.doubled = true;
    const dd logu = dd_log(u);
    const double sqrt_u = std::sqrt(u);
    const auto& g = table.gammas;
    // 2 Re(u^rho / rho) = 2 sqrt(u) (cos(th)/2 + gamma sin(th)) / (1/4 + gamma^2)
    double zero_sum = chunked_sum(0, n, [&](std::size_t i) {
        double th = dd_reduce_two_pi(g[i], logu);
        return 2.0 * sqrt_u * (0.5 * std::cos(th) + g[i] * std::sin(th)) /
               (0.25 + g[i] * g[i]);
    });
    r.value = u - std::log(kTwoPi) - zero_sum;
    return r;
}

} // namespace gbx
