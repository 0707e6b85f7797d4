#include "gbx/bounds.hpp"

#include <utility>
#include <vector>

#include "gbx/manifest.hpp"

namespace gbx {

namespace {

// Parity of chi(-1) when the class determines it.
bool odd_class(CharClass c) {
    return c == CharClass::real_odd || c == CharClass::parity_odd;
}
bool even_class(CharClass c) {
    return c == CharClass::real_even || c == CharClass::parity_even;
}

void require(bool ok, const char* what) {
    if (!ok) throw domain_error(std::string("zero-region bound: ") + what);
}

const real50& two_pi_e() {
    static const real50 v = 2 * r50::pi() * r50::e();
    return v;
}

// McCurley's and Platt's verified range boundary.
constexpr std::uint64_t kSiegelFreeLimit = 400000;

} // namespace

BoundBreakdown zero_region_bound(ZeroRegion which, const RegionArgs& args) {
    BoundBreakdown out;
    out.q = args.q;
    const real50 qr(args.q);
    const real50& t = args.t;

    switch (which) {
        case ZeroRegion::zeta_zero_free: {
            require(t >= 3, "zeta zero-free denominator needs t >= 3");
            out.components.emplace_back(
                "denominator", real50("53.989") * pow(log(t), real50(2) / 3) *
                                   pow(log(log(t)), real50(1) / 3));
            out.notes.push_back("no zeta zero with real part > 1 - 1/denominator");
            break;
        }
        case ZeroRegion::l_zero_free: {
            require(args.q >= 3, "conductor must be >= 3");
            require(t >= 10, "valid for |t| >= 10");
            out.components.emplace_back(
                "denominator", real50("10.5") * log(qr) +
                                   real50("61.5") * pow(log(t), real50(2) / 3) *
                                       pow(log(log(t)), real50(1) / 3));
            out.notes.push_back("no L-function zero with real part > 1 - 1/denominator");
            break;
        }
        case ZeroRegion::l_zero_free_uniform: {
            require(args.q >= 3, "conductor must be >= 3");
            require(t >= 0, "height must be nonnegative");
            real50 m = std::max(real50(10), std::max(qr, qr * t));
            out.components.emplace_back("denominator", real50("9.646") * log(m));
            out.notes.push_back(
                "no zero with real part > 1 - 1/denominator, except possibly one "
                "real zero of one real character");
            break;
        }
        case ZeroRegion::siegel_bound: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            real50 lq2 = sqrt(qr) * log(qr) * log(qr);
            if (odd_class(args.chi)) {
                out.components.emplace_back("beta1_upper", 1 - 800 / lq2);
                out.notes.push_back("odd real character");
            } else if (even_class(args.chi)) {
                out.components.emplace_back("beta1_upper", 1 - 100 / lq2);
                out.notes.push_back("even real character");
            } else {
                require(false, "a real parity class (odd or even) is required");
            }
            out.notes.push_back("upper bound for a real zero of L(s, chi)");
            break;
        }
        case ZeroRegion::grh_verified_height: {
            if (args.chi == CharClass::principal) {
                out.components.emplace_back(
                    "height", Manifest::embedded().value("region.zeta_rh_height"));
                out.notes.push_back("zeta zeros verified on the critical line");
                break;
            }
            if (args.chi == CharClass::any) {
                require(args.q >= 3 && args.q <= kSiegelFreeLimit,
                        "uniform verified height covers 3 <= q <= 4e5");
                out.components.emplace_back(
                    "height", Manifest::embedded().value("region.grh_height_any"));
                out.notes.push_back("valid for every primitive character of conductor <= 4e5");
                break;
            }
            require(args.q >= 3 && args.q <= kSiegelFreeLimit,
                    "verified heights cover 3 <= q <= 4e5");
            if (even_class(args.chi)) {
                out.components.emplace_back(
                    "height", std::max(real50(100000000) / qr,
                                       real50(75000000) / qr + 200));
                out.notes.push_back("even primitive character");
            } else if (odd_class(args.chi)) {
                out.components.emplace_back(
                    "height", std::max(real50(100000000) / qr,
                                       real50(37500000) / qr + 200));
                out.notes.push_back("odd primitive character");
            } else {
                require(false, "a parity class, principal, or any is required");
            }
            out.notes.push_back("zeros below this height lie on the critical line");
            break;
        }
        case ZeroRegion::log_derivative_gap: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            real50 lq = log(qr);
            real50 sq = sqrt(qr);
            if (args.chi == CharClass::non_real) {
                out.components.emplace_back("gap", real50("2.651") * lq * lq * lq);
                out.notes.push_back("non-real character");
            } else if (args.chi == CharClass::real_odd || args.chi == CharClass::real_even) {
                const bool odd = args.chi == CharClass::real_odd;
                // Conductor ranges split at e^24 - 2 and e^(92 pi) - 2; the last
                // range starts beyond every 64-bit conductor.
                real50 low = exp(real50(24)) - 2;
                real50 high = exp(92 * r50::pi()) - 2;
                if (qr <= low) {
                    out.components.emplace_back(
                        "gap", (odd ? real50("0.025") : real50("0.033")) * sq * lq * lq);
                    out.notes.push_back(odd ? "real odd character, q <= e^24 - 2"
                                            : "real even character, q <= e^24 - 2");
                } else if (qr <= high) {
                    out.components.emplace_back("gap",
                                                sq * lq * lq / (odd ? 800 : 100));
                    out.components.emplace_back("gap_linear", real50("0.548") * sq * lq);
                    out.notes.push_back(odd ? "real odd character, e^24 - 2 < q <= e^(92 pi) - 2"
                                            : "real even character, e^24 - 2 < q <= e^(92 pi) - 2");
                } else {
                    out.components.emplace_back(
                        "gap", (odd ? real50("0.004") : real50("0.012")) * sq * lq * lq);
                    out.notes.push_back(odd ? "real odd character, q > e^(92 pi) - 2"
                                            : "real even character, q > e^(92 pi) - 2");
                }
            } else {
                require(false, "class must be non-real, real-odd, or real-even");
            }
            out.notes.push_back(
                "bounds |L'/L(1, conj chi) - delta1(chi)/(1 - beta1)|");
            break;
        }
        case ZeroRegion::log_derivative_gap_max: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            real50 lq = log(qr);
            out.components.emplace_back("gap", real50("0.055") * sqrt(qr) * lq * lq);
            out.notes.push_back("all character classes combined");
            break;
        }
        case ZeroRegion::count_box_conductor: {
            require(args.q > 1, "conductor must exceed 1");
            require(t >= real50(5) / 7, "valid for t >= 5/7");
            real50 a = real50("0.247") * log(qr * t) + real50("6.894");
            real50 b = real50("0.298") * log(qr * t) + real50("4.358");
            if (a <= b) {
                out.components.emplace_back("radius", a);
                out.notes.push_back("variant 0.247 log(qt) + 6.894 selected");
            } else {
                out.components.emplace_back("radius", b);
                out.notes.push_back("variant 0.298 log(qt) + 4.358 selected");
            }
            out.notes.push_back(
                "bounds |N(t, chi) - (t/pi) log(qt/(2 pi e))|; N counts both signs "
                "of the imaginary part");
            break;
        }
        case ZeroRegion::count_box_primitive: {
            require(args.q >= 3, "conductor must be >= 3");
            require(t >= 0, "height must be nonnegative");
            real50 sign;
            if (even_class(args.chi)) {
                sign = 1;
            } else if (odd_class(args.chi)) {
                sign = -1;
            } else {
                require(false, "a parity class is required for the chi(-1)/4 shift");
            }
            real50 l = log(qr * (t + 2) / (2 * r50::pi()));
            if (l <= real50("1.567")) {
                out.components.emplace_back("zero_count", 0);
                out.notes.push_back("log(q(t+2)/(2 pi)) <= 1.567 forces N(t, chi) = 0");
                break;
            }
            real50 main = t / r50::pi() * log(qr * t / two_pi_e()) - sign / 4;
            real50 radius = real50("0.22737") * l + 2 * log(1 + l) - real50("0.5");
            out.components.emplace_back("main", main);
            out.components.emplace_back("radius", radius);
            out.notes.push_back(
                "upper bound for N(t, chi); the lower bound is main - radius; N "
                "counts both signs of the imaginary part");
            break;
        }
        case ZeroRegion::count_box_principal: {
            require(t > r50::e(), "valid for t > e");
            real50 main = t / r50::pi() * log(t / two_pi_e()) + real50(7) / 4;
            real50 radius = real50("0.34") * log(t) + real50("3.996") +
                            25 / (24 * r50::pi() * t);
            out.components.emplace_back("main", main);
            out.components.emplace_back("radius", radius);
            out.notes.push_back(
                "upper bound for N(t) over zeta zeros; the lower bound is "
                "main - radius; N counts both signs of the imaginary part");
            break;
        }
        case ZeroRegion::count_box_coroll_q: {
            require(args.q >= kSiegelFreeLimit, "stated for q >= 4e5");
            require(log(t) >= r50::e(), "valid for t >= e^e");
            out.components.emplace_back("count",
                                        real50("0.364") * t * log(qr * t / two_pi_e()));
            break;
        }
        case ZeroRegion::count_box_coroll_zeta: {
            require(t >= two_pi_e() + 1, "valid for t >= 2 pi e + 1");
            out.components.emplace_back("count",
                                        real50("6.879") * t * log(t / two_pi_e()));
            break;
        }
        case ZeroRegion::interval_count_primitive: {
            require(args.q >= 3, "conductor must be >= 3");
            require(t >= 9, "valid for t >= 9");
            real50 lqt = log(qr * (t + 1));
            out.components.emplace_back(
                "count", (1 / r50::pi() + real50("0.45474")) * lqt + 4 * log(lqt) -
                             real50("2.357"));
            out.notes.push_back("zeros with t < |Im rho| <= t + 1, both signs");
            break;
        }
        case ZeroRegion::interval_count_principal: {
            require(t >= 9, "valid for t >= 9");
            out.components.emplace_back(
                "count", (1 / r50::pi() + real50("0.68")) * log(t + 1) +
                             real50("7.407") + 25 / (12 * r50::pi() * t));
            out.notes.push_back("zeta zeros with t < |Im rho| <= t + 1, both signs");
            break;
        }
        case ZeroRegion::interval_count_coroll_q: {
            require(args.q >= kSiegelFreeLimit, "stated for q >= 4e5");
            require(log(t) >= r50::e(), "valid for t >= e^e");
            out.components.emplace_back("count", real50("1.325") * log(qr * (t + 1)));
            break;
        }
        case ZeroRegion::interval_count_coroll_zeta: {
            require(t >= two_pi_e() + 1, "valid for t >= 2 pi e + 1");
            out.components.emplace_back("count", real50("3.523") * log(t + 1));
            break;
        }
        case ZeroRegion::sum_inv_rho_principal: {
            require(t >= 4 * r50::pi() * r50::e(), "valid for t >= 4 pi e");
            real50 l = log(t / (2 * r50::pi()));
            out.components.emplace_back("sum", l * l / (4 * r50::pi()));
            out.notes.push_back("zeta zeros with 0 < Im rho <= t, one sign only");
            break;
        }
        case ZeroRegion::sum_inv_rho_small_q: {
            require(args.q >= 3 && args.q <= kSiegelFreeLimit,
                    "stated for 3 <= q <= 4e5");
            require(t >= real50(5) / 7, "valid for t >= 5/7");
            real50 lt = log(t);
            real50 base = lt * lt / (2 * r50::pi()) +
                          lt / r50::pi() * log(qr / (2 * r50::pi())) -
                          real50("0.019") * log(qr) / t +
                          (real50("0.22737") * log(t + 2) +
                           2 * log(log(r50::e() * qr * (2 + t) / (2 * r50::pi()))) -
                           real50("7.954")) /
                              t;
            out.components.emplace_back("height_part", base);
            if (args.q <= 11) {
                out.components.emplace_back("conductor_part",
                                            real50("0.843") * log(qr) + real50("5.153"));
                out.notes.push_back("conductor case 3 <= q <= 11");
            } else {
                out.components.emplace_back(
                    "conductor_part", real50("1.116") * log(qr) +
                                          real50("1.2") * log(log(real50("1.175") * qr)) +
                                          real50("4.492"));
                out.notes.push_back("conductor case 12 <= q <= 4e5");
            }
            out.notes.push_back(
                "sum of 1/|rho| over zeros with |Im rho| <= t of one primitive "
                "L-function, both signs");
            break;
        }
        case ZeroRegion::sum_inv_rho_large_q: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            require(t >= real50(5) / 7, "valid for t >= 5/7");
            real50 lt = log(t);
            real50 lq = log(qr);
            real50 llq19 = log(log(19 * r50::e() * qr / (14 * r50::pi())));
            out.components.emplace_back(
                "sum", lt * lt / (2 * r50::pi()) +
                           lt / r50::pi() * log(qr / (2 * r50::pi())) +
                           real50("2.194") * lq * lq + real50("9.646") * lq * llq19 -
                           real50("5.017") * lq - real50("0.8") * llq19 + real50("9.121") +
                           (real50("0.22737") * log(t + 2) - real50("0.019") * lq +
                            2 * log(log(r50::e() * qr * (t + 2) / (2 * r50::pi()))) -
                            real50("7.953")) /
                               t);
            if (args.chi == CharClass::real_odd) {
                out.components.emplace_back("siegel_zero", sqrt(qr) * lq * lq / 800);
                out.notes.push_back("includes a possible exceptional zero, odd character");
            } else if (args.chi == CharClass::real_even) {
                out.components.emplace_back("siegel_zero", sqrt(qr) * lq * lq / 100);
                out.notes.push_back("includes a possible exceptional zero, even character");
            } else {
                out.notes.push_back("exceptional zero excluded from the sum");
            }
            break;
        }
        case ZeroRegion::sum_inv_rho_no_conductor: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            require(t >= qr, "valid for t >= q");
            real50 lt = log(t);
            out.components.emplace_back(
                "sum", lt * lt / (2 * r50::pi()) + real50("4.434") * log(qr) * lt);
            break;
        }
        case ZeroRegion::sum_inv_gamma_sq_tail: {
            require(t >= 2 * r50::pi() * r50::e(), "valid for t >= 2 pi e");
            out.components.emplace_back("tail", log(t) / (2 * r50::pi() * t));
            out.notes.push_back("zeta zeros with Im rho > t, one sign only");
            break;
        }
        case ZeroRegion::sum_inv_gamma_sq_total: {
            out.components.emplace_back(
                "total", Manifest::embedded().value("region.rho2_total"));
            out.notes.push_back("zeta zeros with Im rho > 0, one sign only");
            break;
        }
        case ZeroRegion::sum_inv_rho_sq_tail: {
            require(args.q >= 3, "conductor must be >= 3");
            require(t >= real50(5) / 7, "valid for t >= 5/7");
            out.components.emplace_back(
                "tail", log(qr * t / (2 * r50::pi())) / (r50::pi() * t) +
                            (real50("0.494") * log(qr * t) + real50("13.912")) / (t * t));
            out.notes.push_back("zeros with |Im rho| > t of one primitive L-function");
            break;
        }
        case ZeroRegion::sum_inv_rho_rho1: {
            require(args.q >= 3, "conductor must be >= 3");
            real50 lq = log(qr);
            if (args.q <= 9) {
                out.components.emplace_back("sum",
                                            real50("0.894") * lq + real50("3.107"));
                out.notes.push_back("conductor case 3 <= q <= 9");
            } else if (args.q <= kSiegelFreeLimit) {
                out.components.emplace_back("sum",
                                            real50("1.116") * lq + real50("4.637"));
                out.notes.push_back("conductor case 10 <= q <= 4e5");
            } else {
                out.components.emplace_back(
                    "sum", real50("2.194") * lq * lq + real50("9.646") * lq * log(lq));
                out.notes.push_back("conductor case q > 4e5");
                if (args.chi == CharClass::real_odd) {
                    out.components.emplace_back("siegel_zero", sqrt(qr) * lq * lq / 800);
                    out.notes.push_back("includes a possible exceptional zero, odd character");
                } else if (args.chi == CharClass::real_even) {
                    out.components.emplace_back("siegel_zero", sqrt(qr) * lq * lq / 100);
                    out.notes.push_back("includes a possible exceptional zero, even character");
                } else {
                    out.notes.push_back("exceptional zero excluded from the sum");
                }
            }
            out.notes.push_back(
                "sum of 1/(|rho| |rho + 1|) over all zeros of one primitive L-function");
            break;
        }
        case ZeroRegion::sum_inv_rho_rho_general: {
            require(args.q >= kSiegelFreeLimit, "stated for q >= 4e5");
            require(log(t) >= r50::e(), "valid for t >= e^e");
            out.components.emplace_back(
                "tail", real50("0.430") / t * log(qr * t / (2 * r50::pi())));
            break;
        }
        case ZeroRegion::psi_error_principal: {
            require(args.q == 1 || args.q >= 7, "stated for q = 1 or q >= 7");
            require(t >= 400000, "valid for t >= 4e5");
            require(args.u >= 2 && args.u <= 3 * t, "valid for 2 <= u <= 3t");
            const real50& u = args.u;
            real50 d1 = 2 * (pow(real50(5) / 4, 1 + 1 / r50::log2()) + 1);
            out.components.emplace_back("u_loglog_term",
                                        d1 * u * log(u) * log(log(u)) / t);
            out.components.emplace_back("u_log_term",
                                        real50("34.544") * u * log(u) / t);
            out.components.emplace_back("height_term", real50("18.249") * log(t));
            out.components.emplace_back("point_term",
                                        (log(qr) + real50("8.022")) * log(u));
            out.notes.push_back(
                "bounds |psi(u, chi0) - u + log(2 pi) + sum over |Im rho| < t of "
                "u^rho / rho| for the principal character mod q");
            break;
        }
        case ZeroRegion::psi_error_primitive: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            require(t >= qr, "valid for t >= q");
            require(args.u >= 2 && args.u <= 3 * t, "valid for 2 <= u <= 3t");
            const real50& u = args.u;
            real50 d1 = 2 * (pow(real50(5) / 4, 1 + 1 / r50::log2()) + 1);
            out.components.emplace_back("u_loglog_term",
                                        d1 * u * log(u) * log(log(u)) / t);
            out.components.emplace_back("u_log_term",
                                        real50("34.544") * u * log(u) / t);
            out.components.emplace_back(
                "height_term",
                (real50("0.195") * sqrt(qr) + real50("147.735")) * log(t));
            out.components.emplace_back("point_term", real50("8.022") * log(u));
            out.notes.push_back(
                "bounds |psi(u, chi) - C(chi) + sum over |Im rho| < t of u^rho / rho| "
                "for a non-principal primitive character");
            break;
        }
        case ZeroRegion::psi_error_imprimitive: {
            require(args.q > kSiegelFreeLimit, "stated for q > 4e5");
            require(t >= qr, "valid for t >= q");
            require(args.u >= 2 && args.u <= 3 * t, "valid for 2 <= u <= 3t");
            const real50& u = args.u;
            real50 d1 = 2 * (pow(real50(5) / 4, 1 + 1 / r50::log2()) + 1);
            out.components.emplace_back("u_loglog_term",
                                        d1 * u * log(u) * log(log(u)) / t);
            out.components.emplace_back("u_log_term",
                                        real50("34.544") * u * log(u) / t);
            out.components.emplace_back(
                "height_term",
                (real50("0.195") * sqrt(qr) + real50("148.430")) * log(t));
            out.components.emplace_back("point_term",
                                        (log(qr) + real50("8.022")) * log(u));
            out.notes.push_back(
                "bounds the same error with the zeros of the inducing primitive "
                "character; the extra log q log u covers the induction step");
            break;
        }
        case ZeroRegion::b_chi_bound: {
            require(args.q >= 3, "conductor must be >= 3");
            real50 lq = log(qr);
            if (args.q <= kSiegelFreeLimit) {
                out.components.emplace_back("bound",
                                            real50("1.275") * lq + real50("6.961"));
                out.notes.push_back("conductor case 3 <= q <= 4e5, any character class");
            } else if (args.chi == CharClass::non_real) {
                out.components.emplace_back("bound", real50("2.288") * lq * lq +
                                                         real50("30.264") * lq +
                                                         real50("5.809"));
                out.notes.push_back("non-real character, q > 4e5");
            } else if (args.chi == CharClass::real_odd ||
                       args.chi == CharClass::real_even) {
                const bool odd = args.chi == CharClass::real_odd;
                out.components.emplace_back("siegel_part",
                                            sqrt(qr) * lq * lq / (odd ? 800 : 100));
                out.components.emplace_back("bound", real50("2.288") * lq * lq +
                                                         real50("20.618") * lq +
                                                         real50("5.809"));
                out.notes.push_back(odd ? "real odd character, q > 4e5"
                                        : "real even character, q > 4e5");
            } else {
                require(false,
                        "for q > 4e5 the class must be non-real, real-odd, or real-even");
            }
            out.notes.push_back("bounds the constant term B(chi) of the explicit formula");
            break;
        }
        case ZeroRegion::twin_product: {
            require(args.x >= 286, "valid for x >= 286");
            real50 lx2 = log(args.x) * log(args.x);
            out.components.emplace_back(
                "product", exp(2 * r50::euler_c0()) / (4 * r50::twin_prime_c2()) * lx2 *
                               pow(1 + 1 / (2 * lx2), 2));
            out.notes.push_back("upper bound for the product of p/(p-2) over 2 < p <= x");
            break;
        }
        case ZeroRegion::phi_ratio: {
            require(args.q >= 3, "valid for q >= 3");
            require(args.q % 4 != 2, "phi*(q) vanishes for q = 2 mod 4");
            real50 llq = log(log(qr));
            out.components.emplace_back(
                "ratio", exp(2 * r50::euler_c0()) / r50::twin_prime_c2() *
                             (llq * llq + real50("2.8") + real50("1.96") / (llq * llq)));
            out.notes.push_back("upper bound for q/phi*(q)");
            break;
        }
        case ZeroRegion::divisor_log: {
            require(args.x >= 3, "valid for n >= 3");
            out.components.emplace_back("bound", real50("1.5379") * r50::log2() *
                                                     log(args.x) / log(log(args.x)));
            out.notes.push_back("upper bound for log d(n)");
            break;
        }
    }

    out.total = 0;
    for (const auto& [label, value] : out.components) out.total += value;
    return out;
}

namespace {

const std::vector<std::pair<ZeroRegion, const char*>>& region_names() {
    static const std::vector<std::pair<ZeroRegion, const char*>> table = {
        {ZeroRegion::zeta_zero_free, "zeta-zero-free"},
        {ZeroRegion::l_zero_free, "l-zero-free"},
        {ZeroRegion::l_zero_free_uniform, "l-zero-free-uniform"},
        {ZeroRegion::siegel_bound, "siegel-bound"},
        {ZeroRegion::grh_verified_height, "grh-verified-height"},
        {ZeroRegion::log_derivative_gap, "log-derivative-gap"},
        {ZeroRegion::log_derivative_gap_max, "log-derivative-gap-max"},
        {ZeroRegion::count_box_conductor, "count-box-conductor"},
        {ZeroRegion::count_box_primitive, "count-box-primitive"},
        {ZeroRegion::count_box_principal, "count-box-principal"},
        {ZeroRegion::count_box_coroll_q, "count-box-coroll-q"},
        {ZeroRegion::count_box_coroll_zeta, "count-box-coroll-zeta"},
        {ZeroRegion::interval_count_primitive, "interval-count-primitive"},
        {ZeroRegion::interval_count_principal, "interval-count-principal"},
        {ZeroRegion::interval_count_coroll_q, "interval-count-coroll-q"},
        {ZeroRegion::interval_count_coroll_zeta, "interval-count-coroll-zeta"},
        {ZeroRegion::sum_inv_rho_principal, "sum-inv-rho-principal"},
        {ZeroRegion::sum_inv_rho_small_q, "sum-inv-rho-small-q"},
        {ZeroRegion::sum_inv_rho_large_q, "sum-inv-rho-large-q"},
        {ZeroRegion::sum_inv_rho_no_conductor, "sum-inv-rho-no-conductor"},
        {ZeroRegion::sum_inv_gamma_sq_tail, "sum-inv-gamma-sq-tail"},
        {ZeroRegion::sum_inv_gamma_sq_total, "sum-inv-gamma-sq-total"},
        {ZeroRegion::sum_inv_rho_sq_tail, "sum-inv-rho-sq-tail"},
        {ZeroRegion::sum_inv_rho_rho1, "sum-inv-rho-rho1"},
        {ZeroRegion::sum_inv_rho_rho_general, "sum-inv-rho-rho-general"},
        {ZeroRegion::psi_error_principal, "psi-error-principal"},
        {ZeroRegion::psi_error_primitive, "psi-error-primitive"},
        {ZeroRegion::psi_error_imprimitive, "psi-error-imprimitive"},
        {ZeroRegion::b_chi_bound, "b-chi-bound"},
        {ZeroRegion::twin_product, "twin-product"},
        {ZeroRegion::phi_ratio, "phi-ratio"},
        {ZeroRegion::divisor_log, "divisor-log"},
    };
    return table;
}

const std::vector<std::pair<CharClass, const char*>>& class_names() {
    static const std::vector<std::pair<CharClass, const char*>> table = {
        {CharClass::any, "any"},
        {CharClass::principal, "principal"},
        {CharClass::primitive, "primitive"},
        {CharClass::non_real, "non-real"},
        {CharClass::real_odd, "real-odd"},
        {CharClass::real_even, "real-even"},
        {CharClass::parity_even, "even"},
        {CharClass::parity_odd, "odd"},
    };
    return table;
}

} // namespace

ZeroRegion zero_region_from_name(const std::string& name) {
    for (const auto& [value, text] : region_names())
        if (name == text) return value;
    throw domain_error("unknown zero-region bound '" + name + "'");
}

std::string to_string(ZeroRegion which) {
    for (const auto& [value, text] : region_names())
        if (value == which) return text;
    return "?";
}

CharClass char_class_from_name(const std::string& name) {
    for (const auto& [value, text] : class_names())
        if (name == text) return value;
    throw domain_error("unknown character class '" + name + "'");
}

std::string to_string(CharClass which) {
    for (const auto& [value, text] : class_names())
        if (value == which) return text;
    return "?";
}

} // namespace gbx
