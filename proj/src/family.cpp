#include "mvortho/family.hpp"

namespace mvortho {

std::string family_name(Family f) {
    switch (f) {
        case Family::aw: return "AW";
        case Family::w: return "W";
        case Family::ch: return "CH";
        case Family::j: return "J";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "AW" || s == "aw") return Family::aw;
    if (s == "W" || s == "w") return Family::w;
    if (s == "CH" || s == "ch" || s == "cH") return Family::ch;
    if (s == "J" || s == "j") return Family::j;
    throw std::invalid_argument("unknown family: " + s);
}

FamilyParams FamilyParams::askey_wilson(int n, ExactScalar q, ExactScalar t, ExactScalar t0,
                                        ExactScalar t1, ExactScalar t2, ExactScalar t3) {
    FamilyParams p;
    p.family = Family::aw;
    p.n = n;
    p.q = std::move(q);
    p.t = std::move(t);
    p.t0 = std::move(t0);
    p.t1 = std::move(t1);
    p.t2 = std::move(t2);
    p.t3 = std::move(t3);
    if (p.q.is_zero()) throw std::invalid_argument("askey_wilson: q must be nonzero");
    return p;
}

FamilyParams FamilyParams::wilson(int n, ExactScalar nu, ExactScalar nu0, ExactScalar nu1,
                                  ExactScalar nu2, ExactScalar nu3) {
    FamilyParams p;
    p.family = Family::w;
    p.n = n;
    p.nu = std::move(nu);
    p.nu0 = std::move(nu0);
    p.nu1 = std::move(nu1);
    p.nu2 = std::move(nu2);
    p.nu3 = std::move(nu3);
    return p;
}

FamilyParams FamilyParams::cont_hahn(int n, ExactScalar nu, ExactScalar nu0p, ExactScalar nu1p,
                                     ExactScalar nu0m, ExactScalar nu1m) {
    FamilyParams p;
    p.family = Family::ch;
    p.n = n;
    p.nu = std::move(nu);
    p.nu0p = std::move(nu0p);
    p.nu1p = std::move(nu1p);
    p.nu0m = std::move(nu0m);
    p.nu1m = std::move(nu1m);
    return p;
}

FamilyParams FamilyParams::jacobi(int n, ExactScalar nu, ExactScalar nu0, ExactScalar nu1) {
    FamilyParams p;
    p.family = Family::j;
    p.n = n;
    p.nu = std::move(nu);
    p.nu0 = std::move(nu0);
    p.nu1 = std::move(nu1);
    return p;
}

VariableKind FamilyParams::kind() const {
    switch (family) {
        case Family::aw: return VariableKind::aw_trig;
        case Family::w: return VariableKind::w_even;
        case Family::ch: return VariableKind::ch_plain;
        case Family::j: return VariableKind::j_trig;
    }
    throw std::logic_error("bad family");
}

bool FamilyParams::self_dual() const {
    const ExactScalar one(1);
    switch (family) {
        case Family::aw: return q * t0 == t1 * t2 * t3;
        case Family::w: return nu0 - nu1 - nu2 - nu3 + one == ExactScalar(0);
        case Family::ch: return nu0p - nu1p - nu0m - nu1m + one == ExactScalar(0);
        case Family::j: return true;
    }
    return false;
}

FamilyParams conj_params(const FamilyParams& p) {
    FamilyParams out = p;
    for (ExactScalar* v : {&out.q, &out.t, &out.t0, &out.t1, &out.t2, &out.t3, &out.nu, &out.nu0,
                           &out.nu1, &out.nu2, &out.nu3, &out.nu0p, &out.nu1p, &out.nu0m,
                           &out.nu1m})
        *v = v->conj();
    return out;
}

HatParams hat_parameters(const FamilyParams& p) {
    HatParams h;
    h.self_dual = p.self_dual();
    const ExactScalar one(1);
    const ExactScalar half(1, 2);

    switch (p.family) {
        case Family::aw: {
            ExactScalar radicand = p.t0 * p.t1 * p.t2 * p.t3 / p.q;
            if (h.self_dual) {
                h.s = p.t0;  // radicand = t0^2; this branch keeps that_r = t_r
                h.that = {p.t0, p.t1, p.t2, p.t3};
            } else {
                if (!is_square(radicand))
                    throw std::domain_error(
                        "hat_parameters: t0*t1*t2*t3/q = " + radicand.str() +
                        " is not a perfect square and the parameters are not self-dual");
                h.s = sqrt_exact(radicand);
                // Branches chosen so that that_r * tau_j = t^{n-j} t0 t_r.
                h.that = {h.s, p.t0 * p.t1 / h.s, p.t0 * p.t2 / h.s, p.t0 * p.t3 / h.s};
            }
            for (int j = 1; j <= p.n; ++j) {
                h.tau.push_back(pow(p.t, p.n - j) * h.s);
                h.tauhat.push_back(pow(p.t, p.n - j) * p.t0);
            }
            break;
        }
        case Family::w: {
            ExactScalar s = p.nu0 + p.nu1 + p.nu2 + p.nu3;
            h.nuhat = {(s - one) * half, (p.nu0 + p.nu1 - p.nu2 - p.nu3 + one) * half,
                       (p.nu0 - p.nu1 + p.nu2 - p.nu3 + one) * half,
                       (p.nu0 - p.nu1 - p.nu2 + p.nu3 + one) * half};
            ExactScalar sh = h.nuhat[0] + h.nuhat[1] + h.nuhat[2] + h.nuhat[3];
            for (int j = 1; j <= p.n; ++j) {
                h.rho.push_back(ExactScalar(p.n - j) * p.nu + (s - one) * half);
                h.rhohat.push_back(ExactScalar(p.n - j) * p.nu + (sh - one) * half);
            }
            break;
        }
        case Family::ch: {
            ExactScalar s = p.nu0p + p.nu1p + p.nu0m + p.nu1m;
            h.nuhat = {(s - one) * half, (p.nu0p - p.nu1p + p.nu0m - p.nu1m + one) * half,
                       (p.nu0p - p.nu1p - p.nu0m + p.nu1m + one) * half,
                       (p.nu0p + p.nu1p - p.nu0m - p.nu1m + one) * half};
            ExactScalar sh = h.nuhat[0] + h.nuhat[1] + h.nuhat[2] + h.nuhat[3];
            for (int j = 1; j <= p.n; ++j) {
                h.rho.push_back(ExactScalar(p.n - j) * p.nu + (s - one) * half);
                h.rhohat.push_back(ExactScalar(p.n - j) * p.nu + (sh - one) * half);
            }
            break;
        }
        case Family::j: {
            h.nuhat = {(p.nu0 + p.nu1) * half, (p.nu0 - p.nu1 + one) * half};
            for (int j = 1; j <= p.n; ++j)
                h.rho.push_back(ExactScalar(p.n - j) * p.nu + (p.nu0 + p.nu1) * half);
            h.rhohat = h.rho;
            break;
        }
    }
    return h;
}

}  // namespace mvortho
