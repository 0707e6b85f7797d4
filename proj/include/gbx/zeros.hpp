#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gbx {

// Positive ordinates of nontrivial zeros on the half-line, ascending. The
// conjugate zero at -gamma is implied; every quantity that ranges over all
// zeros doubles the one-sided sum and says so in its result. beta = 1/2 is
// assumed throughout, which is why load refuses heights beyond 3e12.
struct ZeroTable {
    std::vector<double> gammas;
    double height = 0.0;         // every zero with 0 < gamma <= height is present
    std::uint64_t modulus = 1;   // 1 for zeta tables
    std::int64_t character = -1; // index for L-function tables, -1 when absent
    std::string source;

    std::uint64_t count() const { return gammas.size(); }
};

enum class ZeroSumKind { inv_rho, inv_gamma_sq, inv_rho_rho1, H, explicit_psi };

struct ZeroSumResult {
    ZeroSumKind kind{};
    double T = 0.0;    // truncation parameter (for H with the |rho| < x cutoff, x itself)
    double x = 0.0;    // evaluation point of H / explicit psi, 0 otherwise
    double value = 0.0;
    double tail = 0.0; // analytic bound on the omitted range, inv_gamma_sq only
    std::uint64_t terms_used = 0;
    bool doubled = false; // value covers both gamma and -gamma
};

// Text format: optional '# key: value' headers (height, modulus, character,
// source; unknown keys ignored), then one ascending positive decimal per
// line. CRLF endings are normalized. Violations raise format_error naming the
// line. Without a height header the last ordinate is the claimed coverage; a
// header may only lower that claim.
ZeroTable load_zeros(std::istream& in);
ZeroTable load_zeros_file(const std::string& path);

// Number of ordinates strictly below T. T must not exceed the certified height.
std::uint64_t count_zeros(const ZeroTable& table, double T);

// sum over 0 < gamma <= T of 1/|1/2 + i gamma|, one-sided.
ZeroSumResult sum_inv_rho(const ZeroTable& table, double T);

// sum over gamma > from_T of 1/gamma^2 through the table height, one-sided,
// with tail = log(height)/(2 pi height) bounding everything above the height.
ZeroSumResult sum_inv_gamma_sq(const ZeroTable& table, double from_T);

// sum over |rho| < T of 1/(|rho| |rho + 1|), both conjugates counted.
ZeroSumResult sum_inv_rho_rho1(const ZeroTable& table, double T);

// Truncation rule for H: the source sums alternate between cutting at
// |rho| < x and at |Im rho| < T, so the caller must pick one.
struct HCutoff {
    enum Kind { abs_rho_lt_x, gamma_lt_T } kind = abs_rho_lt_x;
    double T = 0.0; // only read by gamma_lt_T
};

// H(x) = sum x^{rho+1}/(rho (rho+1)) over the chosen cutoff, conjugate pairs
// combined into 2 Re(...). x >= 2.
ZeroSumResult H_truncated(const ZeroTable& table, double x, HCutoff cutoff);

// u - log(2 pi) - sum_{|gamma| < T} u^rho / rho, the zero-sum model of
// psi(u). Conjugate pairs combined; trig arguments gamma * log u are reduced
// mod 2 pi in double-double before evaluation. u >= 2.
ZeroSumResult psi_explicit_truncated(const ZeroTable& table, double u, double T);

} // namespace gbx
