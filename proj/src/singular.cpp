#include "gbx/singular.hpp"

#include "gbx/errors.hpp"

namespace gbx {

std::complex<double> singular_series(std::uint64_t q, std::uint64_t c,
                                     const DirichletCharacter& chi) {
    if (q != chi.modulus()) throw domain_error("singular_series: modulus mismatch");
    if (c == 0) throw domain_error("singular_series: c must be positive");
    std::uint64_t qstar = chi.conductor();
    int mu = moebius(qstar);
    if (mu == 0) return {0.0, 0.0};
    UnitValue chistar = primitive_value(chi, c);
    if (chistar.zero) return {0.0, 0.0};
    double coeff = double(mu) / (double(euler_phi(q)) * double(euler_phi(qstar)));
    for (auto [p, e] : factorize(q).factors)
        if (qstar % p != 0 && c % p != 0)
            coeff *= double(p - 2) / double(p - 1);
    return coeff * chistar.to_complex();
}

double singular_series_principal(std::uint64_t q, std::uint64_t c) {
    if (q == 0) throw domain_error("singular_series: q must be positive");
    if (c == 0) throw domain_error("singular_series: c must be positive");
    double coeff = 1.0 / double(euler_phi(q));
    for (auto [p, e] : factorize(q).factors)
        if (c % p != 0) coeff *= double(p - 2) / double(p - 1);
    return coeff;
}

double hardy_littlewood_J(std::uint64_t n) {
    if (n == 0) throw domain_error("hardy_littlewood_J: n must be positive");
    static const double c2 = double(r50::twin_prime_c2());
    double v = double(n) * c2;
    for (auto [p, e] : factorize(n).factors)
        if (p > 2) v *= double(p - 1) / double(p - 2);
    return v;
}

double hardy_littlewood_even_main(std::uint64_t n) {
    if (n == 0) throw domain_error("hardy_littlewood_even_main: n must be positive");
    return n % 2 == 0 ? 2.0 * hardy_littlewood_J(n) : 0.0;
}

} // namespace gbx
