#include "mvortho/polynomials.hpp"

#include <map>

#include "mvortho/special.hpp"

namespace mvortho {

OrthoPoly build_monic(const FamilyParams& params, const Partition& lambda) {
    if (static_cast<int>(lambda.size()) != params.n)
        throw std::invalid_argument("build_monic: partition length mismatch");
    if (!is_partition(lambda)) throw std::invalid_argument("build_monic: not a partition");

    const auto span = ideal(lambda);
    const size_t dim = span.size();
    std::map<Partition, size_t, PartitionLess> index;
    for (size_t i = 0; i < dim; ++i) index[span[i]] = i;

    // mat[i][j] = coefficient of m_{span[i]} in D_1 m_{span[j]}; triangular
    // with respect to the linear extension (i <= j on nonzero entries).
    std::vector<std::vector<ExactScalar>> mat(dim, std::vector<ExactScalar>(dim, ExactScalar(0)));
    for (size_t j = 0; j < dim; ++j) {
        auto dm = apply_difference_operator(
            params, 1, SymPoly::monomial(params.kind(), params.n, span[j]), ideal(span[j]));
        for (const auto& [mu, c] : dm.coeffs()) {
            auto it = index.find(mu);
            if (it == index.end())
                throw std::runtime_error("build_monic: operator left the dominance ideal at m_" +
                                         partition_str(mu));
            mat[it->second][j] = c;
        }
    }

    const ExactScalar e_top = mat[dim - 1][dim - 1];
    std::vector<ExactScalar> c(dim, ExactScalar(0));
    c[dim - 1] = ExactScalar(1);
    for (size_t ii = dim - 1; ii-- > 0;) {
        ExactScalar gap = e_top - mat[ii][ii];
        if (gap.is_zero())
            throw std::domain_error("build_monic: eigenvalue collision E_lambda = E_mu for mu = " +
                                    partition_str(span[ii]) + ", lambda = " + partition_str(lambda));
        ExactScalar acc(0);
        for (size_t j = ii + 1; j < dim; ++j)
            if (!c[j].is_zero()) acc += mat[ii][j] * c[j];
        c[ii] = acc / gap;
    }

    OrthoPoly out;
    out.params = params;
    out.lambda = lambda;
    out.monic = SymPoly(params.kind(), params.n);
    for (size_t i = 0; i < dim; ++i) out.monic.set_coeff(span[i], c[i]);
    try {
        out.cnorm = renorm_constant(params, lambda);
    } catch (const std::domain_error&) {
        out.cnorm.reset();
    }
    return out;
}

namespace {

ExactScalar nonzero_or_throw(ExactScalar v, const char* what) {
    if (v.is_zero()) throw std::domain_error(std::string("vanishing factor in ") + what);
    return v;
}

// Terminating series evaluated exactly at one point.
ExactScalar aw_series(const FamilyParams& p, int l, const ExactScalar& z) {
    const ExactScalar one(1);
    ExactScalar abcd = p.t0 * p.t1 * p.t2 * p.t3;
    ExactScalar pref = qpochhammer_exact(p.t0 * p.t1, p.q, l) *
                       qpochhammer_exact(p.t0 * p.t2, p.q, l) *
                       qpochhammer_exact(p.t0 * p.t3, p.q, l);
    pref /= nonzero_or_throw(pow(p.t0, l) * qpochhammer_exact(abcd * pow(p.q, l - 1), p.q, l),
                             "onevar_reference (aw prefactor)");
    ExactScalar sum(0), term(1);
    for (int k = 0; k <= l; ++k) {
        sum += term;
        // ratio of consecutive 4phi3 terms
        ExactScalar qk = pow(p.q, k);
        ExactScalar num = (one - pow(p.q, -l) * qk) * (one - abcd * pow(p.q, l - 1) * qk) *
                          (one - p.t0 * z * qk) * (one - p.t0 * qk / z);
        ExactScalar den = (one - p.t0 * p.t1 * qk) * (one - p.t0 * p.t2 * qk) *
                          (one - p.t0 * p.t3 * qk) * (one - pow(p.q, k + 1));
        if (k < l) term *= p.q * num / nonzero_or_throw(den, "onevar_reference (aw series)");
    }
    return pref * sum;
}

ExactScalar w_series(const FamilyParams& p, int l, const ExactScalar& x) {
    const ExactScalar i = ExactScalar::make_i();
    ExactScalar s = p.nu0 + p.nu1 + p.nu2 + p.nu3;
    ExactScalar pref = pochhammer_exact(p.nu0 + p.nu1, l) * pochhammer_exact(p.nu0 + p.nu2, l) *
                       pochhammer_exact(p.nu0 + p.nu3, l);
    ExactScalar denom = pochhammer_exact(s + ExactScalar(l - 1), l);
    pref /= nonzero_or_throw((l % 2 ? ExactScalar(-1) : ExactScalar(1)) * denom,
                             "onevar_reference (w prefactor)");
    ExactScalar sum(0);
    for (int k = 0; k <= l; ++k) {
        ExactScalar term = pochhammer_exact(ExactScalar(-l), k) *
                           pochhammer_exact(s + ExactScalar(l - 1), k) *
                           pochhammer_exact(p.nu0 + i * x, k) * pochhammer_exact(p.nu0 - i * x, k);
        term /= nonzero_or_throw(pochhammer_exact(p.nu0 + p.nu1, k) *
                                     pochhammer_exact(p.nu0 + p.nu2, k) *
                                     pochhammer_exact(p.nu0 + p.nu3, k) *
                                     pochhammer_exact(ExactScalar(1), k),
                                 "onevar_reference (w series)");
        sum += term;
    }
    return pref * sum;
}

ExactScalar ch_series(const FamilyParams& p, int l, const ExactScalar& x) {
    const ExactScalar i = ExactScalar::make_i();
    ExactScalar s = p.nu0p + p.nu1p + p.nu0m + p.nu1m;
    ExactScalar pref = pow(i, l) * pochhammer_exact(p.nu0p + p.nu0m, l) *
                       pochhammer_exact(p.nu0p + p.nu1m, l);
    pref /= nonzero_or_throw(pochhammer_exact(s + ExactScalar(l - 1), l),
                             "onevar_reference (ch prefactor)");
    ExactScalar sum(0);
    for (int k = 0; k <= l; ++k) {
        ExactScalar term = pochhammer_exact(ExactScalar(-l), k) *
                           pochhammer_exact(s + ExactScalar(l - 1), k) *
                           pochhammer_exact(p.nu0p + i * x, k);
        term /= nonzero_or_throw(
            pochhammer_exact(p.nu0p + p.nu0m, k) * pochhammer_exact(p.nu0p + p.nu1m, k) *
                pochhammer_exact(ExactScalar(1), k),
            "onevar_reference (ch series)");
        sum += term;
    }
    return pref * sum;
}

ExactScalar j_series(const FamilyParams& p, int l, const ExactScalar& z) {
    const ExactScalar half(1, 2);
    ExactScalar pref = pow(ExactScalar(2), 2 * l) * pochhammer_exact(p.nu0 + half, l);
    pref /= nonzero_or_throw(pochhammer_exact(p.nu0 + p.nu1 + ExactScalar(l), l),
                             "onevar_reference (j prefactor)");
    // sin^2(alpha x / 2) = (2 - z - 1/z)/4
    ExactScalar u = (ExactScalar(2) - z - inverse(z)) / ExactScalar(4);
    ExactScalar sum(0);
    for (int k = 0; k <= l; ++k) {
        ExactScalar term = pochhammer_exact(ExactScalar(-l), k) *
                           pochhammer_exact(p.nu0 + p.nu1 + ExactScalar(l), k) * pow(u, k);
        term /= nonzero_or_throw(pochhammer_exact(p.nu0 + half, k) *
                                     pochhammer_exact(ExactScalar(1), k),
                                 "onevar_reference (j series)");
        sum += term;
    }
    return pref * sum;
}

}  // namespace

SymPoly onevar_reference(const FamilyParams& p, int l) {
    if (p.n != 1) throw std::invalid_argument("onevar_reference: requires n = 1");
    if (l < 0) throw std::invalid_argument("onevar_reference: negative degree");
    Evaluator f;
    switch (p.family) {
        case Family::aw: f = [&p, l](const EvalPoint& pt) { return aw_series(p, l, pt.coords[0]); }; break;
        case Family::w: f = [&p, l](const EvalPoint& pt) { return w_series(p, l, pt.coords[0]); }; break;
        case Family::ch: f = [&p, l](const EvalPoint& pt) { return ch_series(p, l, pt.coords[0]); }; break;
        case Family::j: f = [&p, l](const EvalPoint& pt) { return j_series(p, l, pt.coords[0]); }; break;
    }
    auto out = expand_in_msym(f, ideal({l}), p.kind(), 1);
    if (out.coeff({l}) != ExactScalar(1))
        throw std::runtime_error("onevar_reference: series is not monic");
    return out;
}

ExactScalar renorm_constant(const FamilyParams& p, const Partition& lambda) {
    if (static_cast<int>(lambda.size()) != p.n)
        throw std::invalid_argument("renorm_constant: partition length mismatch");
    if (weight(lambda) == 0) return ExactScalar(1);  // empty products
    const auto h = hat_parameters(p);
    const int n = p.n;
    ExactScalar c(1);

    if (p.family == Family::aw) {
        for (int j = 0; j < n; ++j) c *= pow(h.tauhat[j], lambda[j]);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                ExactScalar tjtk = h.tau[j] * h.tau[k];
                ExactScalar tjotk = h.tau[j] / h.tau[k];
                c *= qpochhammer_exact(tjtk, p.q, lambda[j] + lambda[k]) /
                     nonzero_or_throw(qpochhammer_exact(p.t * tjtk, p.q, lambda[j] + lambda[k]),
                                      "renorm_constant (t tau_j tau_k; q)");
                c *= qpochhammer_exact(tjotk, p.q, lambda[j] - lambda[k]) /
                     nonzero_or_throw(qpochhammer_exact(p.t * tjotk, p.q, lambda[j] - lambda[k]),
                                      "renorm_constant (t tau_j/tau_k; q)");
            }
        for (int j = 0; j < n; ++j) {
            c *= qpochhammer_exact(h.tau[j] * h.tau[j], p.q, 2 * lambda[j]);
            ExactScalar den(1);
            for (int rr = 0; rr < 4; ++rr)
                den *= qpochhammer_exact(h.that[rr] * h.tau[j], p.q, lambda[j]);
            c /= nonzero_or_throw(den, "renorm_constant (that_r tau_j; q)");
        }
        return c;
    }

    // Additive families share one Pochhammer-product shape; only the constant
    // c and the nuhat factors differ (the ch case uses nuhat_0..nuhat_2 only).
    ExactScalar base;
    size_t nhat = h.nuhat.size();
    switch (p.family) {
        case Family::w: base = ExactScalar(-1); break;
        case Family::ch:
            base = inverse(ExactScalar::make_i());
            nhat = 3;
            break;
        case Family::j: base = ExactScalar(1, 4); break;
        default: throw std::logic_error("unreachable");
    }
    c = pow(base, weight(lambda));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            ExactScalar sum = h.rho[j] + h.rho[k];
            ExactScalar dif = h.rho[j] - h.rho[k];
            c *= pochhammer_exact(sum, lambda[j] + lambda[k]) /
                 nonzero_or_throw(pochhammer_exact(p.nu + sum, lambda[j] + lambda[k]),
                                  "renorm_constant (nu+rho_j+rho_k)");
            c *= pochhammer_exact(dif, lambda[j] - lambda[k]) /
                 nonzero_or_throw(pochhammer_exact(p.nu + dif, lambda[j] - lambda[k]),
                                  "renorm_constant (nu+rho_j-rho_k)");
        }
    for (int j = 0; j < n; ++j) {
        c *= pochhammer_exact(ExactScalar(2) * h.rho[j], 2 * lambda[j]);
        ExactScalar den(1);
        for (size_t rr = 0; rr < nhat; ++rr)
            den *= pochhammer_exact(h.nuhat[rr] + h.rho[j], lambda[j]);
        c /= nonzero_or_throw(den, "renorm_constant (nuhat_r + rho_j)");
    }
    return c;
}

SymPoly renormalized(const FamilyParams& p, const Partition& lambda) {
    ExactScalar c = renorm_constant(p, lambda);
    return build_monic(p, lambda).monic * c;
}

}  // namespace mvortho
