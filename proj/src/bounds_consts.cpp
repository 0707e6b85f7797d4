#include "gbx/bounds.hpp"

#include "gbx/arith.hpp"
#include "gbx/manifest.hpp"

namespace gbx {

AssumptionConstants zeta_constants() {
    const Manifest& m = Manifest::embedded();
    AssumptionConstants k;
    k.context = BoundContext::zeta;
    k.q = 1;
    k.c1 = m.value("zeta.c1");
    k.c2 = m.value("zeta.c2");
    k.c_q3 = 0;
    k.c_q4 = 0;
    k.t0 = m.value("shared.T0");
    k.t1 = m.eval("zeta.T1", {});
    k.x0 = m.eval("zeta.x0", {});
    k.d1 = m.eval("zeta.d1", {});
    k.d2 = m.value("zeta.d2");
    k.d3 = m.value("zeta.d3");
    k.d4 = m.value("zeta.d4");
    k.d5 = m.eval("zeta.d5", {});
    k.d6 = m.value("zeta.d6");
    k.d7 = m.value("zeta.d7");
    k.d8 = m.value("zeta.d8");
    k.d9 = m.value("zeta.d9");
    k.d10 = m.value("zeta.d10");
    k.d11 = m.value("shared.d11");
    k.phi_value = 1;
    return k;
}

AssumptionConstants general_q_constants(std::uint64_t q, bool primitive_variant) {
    if (q < 3) throw domain_error("general_q_constants: q must be >= 3");
    const Manifest& m = Manifest::embedded();
    const ExprEnv env{{"q", real50(q)}};
    AssumptionConstants k;
    k.context = BoundContext::general_q;
    k.q = q;
    k.primitive_variant = primitive_variant;
    k.c1 = m.value("general.c1");
    k.c2 = m.value("general.c2");
    k.c_q3 = m.eval("general.cq3", env);
    k.c_q4 = m.eval("general.cq4", env);
    k.t0 = m.value("shared.T0");
    k.t1 = m.eval("general.T1", {});
    k.x0 = m.eval("general.x0", {});
    k.d1 = m.eval("general.d1", {});
    k.d2 = m.value("general.d2");
    k.d3 = m.eval("general.d3", env);
    k.d4 = m.eval("general.d4", env);
    k.d5 = m.eval("general.d5", {});
    k.d6 = m.eval("general.d6", env);
    k.d7 = m.value("general.d7");
    if (primitive_variant) {
        k.d8 = m.eval("general.d8_primitive",
                      {{"q", real50(q)}, {"phi1star", real50(phi1_star(q))}});
        k.phi_value = real50(phi1_star(q));
    } else {
        k.d8 = m.eval("general.d8", env);
    }
    k.d9 = m.value("general.d9");
    k.d10 = m.value("general.d10");
    k.d11 = m.value("shared.d11");
    return k;
}

} // namespace gbx
