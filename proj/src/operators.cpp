#include "mvortho/operators.hpp"

#include <algorithm>
#include <set>

#include "mvortho/detail/opkernels.hpp"

namespace mvortho {

ExactScalar er_kernel(const std::vector<ExactScalar>& x, const std::vector<ExactScalar>& y, int r) {
    const int n = static_cast<int>(x.size());
    if (r < 1 || r > n || y.size() != static_cast<size_t>(n - r + 1))
        throw std::invalid_argument("er_kernel: dimension mismatch");
    return detail::er_kernel_t(x, y, r);
}

namespace {

std::vector<ExactScalar> rho_vector(const FamilyParams& p) {
    const ExactScalar one(1), half(1, 2);
    ExactScalar base;
    switch (p.family) {
        case Family::w: base = (p.nu0 + p.nu1 + p.nu2 + p.nu3 - one) * half; break;
        case Family::ch: base = (p.nu0p + p.nu1p + p.nu0m + p.nu1m - one) * half; break;
        case Family::j: base = (p.nu0 + p.nu1) * half; break;
        case Family::aw: throw std::logic_error("rho_vector: aw is multiplicative");
    }
    std::vector<ExactScalar> rho;
    for (int j = 1; j <= p.n; ++j) rho.push_back(ExactScalar(p.n - j) * p.nu + base);
    return rho;
}

}  // namespace

ExactScalar eigenvalue(const FamilyParams& p, int r, const Partition& lambda) {
    const int n = p.n;
    if (r < 1 || r > n) throw std::invalid_argument("eigenvalue: r out of range");
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("eigenvalue: partition length mismatch");

    std::vector<ExactScalar> x, y;
    if (p.family == Family::aw) {
        ExactScalar prod = p.t0 * p.t1 * p.t2 * p.t3 / p.q;
        for (int j = 1; j <= n; ++j) {
            ExactScalar tp = prod * pow(p.t, 2 * n - 1 - j);
            ExactScalar tm = pow(p.t, j - 1);
            x.push_back(tp * pow(p.q, lambda[j - 1]) + tm * pow(p.q, -lambda[j - 1]));
            if (j >= r) y.push_back(tp + tm);
        }
        return pow(p.t, -static_cast<long>(r) * (r - 1) / 2) * detail::er_kernel_t(x, y, r);
    }
    auto rho = rho_vector(p);
    for (int j = 1; j <= n; ++j) {
        ExactScalar xe = rho[j - 1] + ExactScalar(lambda[j - 1]);
        x.push_back(xe * xe);
        if (j >= r) y.push_back(rho[j - 1] * rho[j - 1]);
    }
    return detail::er_kernel_t(x, y, r);
}

namespace {

using detail::AwPack;

// ---- exact pointwise evaluators -------------------------------------------

ExactScalar w_wilson(const FamilyParams& p, const ExactScalar& z) {
    const ExactScalar i = ExactScalar::make_i(), one(1), two(2);
    ExactScalar num = (i * p.nu0 + z) * (i * p.nu1 + z) * (i * p.nu2 + z) * (i * p.nu3 + z);
    ExactScalar tz = two * i * z;
    return num / (tz * (tz - one));
}

ExactScalar v_wilson(const FamilyParams& p, const ExactScalar& z) {
    return (ExactScalar::make_i() * p.nu + z) / z;
}

ExactScalar wilson_apply_at(const FamilyParams& p, int r, const std::vector<ExactScalar>& x,
                            const std::function<ExactScalar(const std::vector<ExactScalar>&)>& f) {
    const int n = p.n;
    const ExactScalar i = ExactScalar::make_i(), one(1);
    ExactScalar total(0);
    for (unsigned jmask = 0; jmask < (1u << n); ++jmask) {
        int jsz = __builtin_popcount(jmask);
        if (jsz > r) continue;
        std::vector<int> jidx, comp;
        for (int j = 0; j < n; ++j) (jmask & (1u << j)) ? jidx.push_back(j) : comp.push_back(j);
        const int pp = r - jsz;
        // U_{K,p}(x)
        ExactScalar ufac(1);
        if (pp > 0) {
            ExactScalar sum(0);
            const int m = static_cast<int>(comp.size());
            for (unsigned lmask = 0; lmask < (1u << m); ++lmask) {
                if (__builtin_popcount(lmask) != pp) continue;
                std::vector<int> lidx, rest;
                for (int a = 0; a < m; ++a)
                    (lmask & (1u << a)) ? lidx.push_back(comp[a]) : rest.push_back(comp[a]);
                for (unsigned signs = 0; signs < (1u << pp); ++signs) {
                    auto s = [&](int a) {
                        return (signs & (1u << a)) ? -x[lidx[a]] : x[lidx[a]];
                    };
                    ExactScalar term(1);
                    for (int a = 0; a < pp; ++a) term *= w_wilson(p, s(a));
                    for (int a = 0; a < pp; ++a)
                        for (int b = a + 1; b < pp; ++b)
                            term *= v_wilson(p, s(a) + s(b)) * v_wilson(p, -s(a) - s(b) - i);
                    for (int a = 0; a < pp; ++a)
                        for (int k : rest)
                            term *= v_wilson(p, s(a) + x[k]) * v_wilson(p, s(a) - x[k]);
                    sum += term;
                }
            }
            ufac = (pp % 2) ? -sum : sum;
        }
        for (unsigned signs = 0; signs < (1u << jsz); ++signs) {
            auto s = [&](int a) {
                return (signs & (1u << a)) ? -x[jidx[a]] : x[jidx[a]];
            };
            ExactScalar coeff = ufac;
            for (int a = 0; a < jsz; ++a) coeff *= w_wilson(p, s(a));
            for (int a = 0; a < jsz; ++a)
                for (int b = a + 1; b < jsz; ++b)
                    coeff *= v_wilson(p, s(a) + s(b)) * v_wilson(p, s(a) + s(b) + i);
            for (int a = 0; a < jsz; ++a)
                for (int k : comp) coeff *= v_wilson(p, s(a) + x[k]) * v_wilson(p, s(a) - x[k]);
            std::vector<ExactScalar> shifted = x;
            for (int a = 0; a < jsz; ++a)
                shifted[jidx[a]] += (signs & (1u << a)) ? -i : i;
            (void)one;
            total += coeff * f(shifted);
        }
    }
    return total;
}

ExactScalar v_hahn(const FamilyParams& p, const ExactScalar& z) {
    ExactScalar iz = ExactScalar::make_i() * z;
    return (iz + p.nu) / iz;
}

ExactScalar wp_hahn(const FamilyParams& p, const ExactScalar& z) {
    ExactScalar iz = ExactScalar::make_i() * z;
    return (p.nu0p + iz) * (p.nu1p + iz);
}

ExactScalar wm_hahn(const FamilyParams& p, const ExactScalar& z) {
    ExactScalar iz = ExactScalar::make_i() * z;
    return (p.nu0m - iz) * (p.nu1m - iz);
}

ExactScalar hahn_apply_at(const FamilyParams& p, int r, const std::vector<ExactScalar>& x,
                          const std::function<ExactScalar(const std::vector<ExactScalar>&)>& f) {
    const int n = p.n;
    const ExactScalar i = ExactScalar::make_i();
    ExactScalar total(0);
    for (unsigned pmask = 0; pmask < (1u << n); ++pmask) {
        for (unsigned mmask = 0; mmask < (1u << n); ++mmask) {
            if (pmask & mmask) continue;
            int psz = __builtin_popcount(pmask), msz = __builtin_popcount(mmask);
            if (psz + msz > r) continue;
            const int pp = r - psz - msz;
            std::vector<int> pidx, midx, comp;
            for (int j = 0; j < n; ++j) {
                if (pmask & (1u << j))
                    pidx.push_back(j);
                else if (mmask & (1u << j))
                    midx.push_back(j);
                else
                    comp.push_back(j);
            }
            // U^{cH}_{K,p}
            ExactScalar ufac(1);
            if (pp > 0) {
                ExactScalar sum(0);
                const int m = static_cast<int>(comp.size());
                for (unsigned lp = 0; lp < (1u << m); ++lp) {
                    for (unsigned lm = 0; lm < (1u << m); ++lm) {
                        if (lp & lm) continue;
                        if (__builtin_popcount(lp) + __builtin_popcount(lm) != pp) continue;
                        std::vector<int> lpi, lmi, rest;
                        for (int a = 0; a < m; ++a) {
                            if (lp & (1u << a))
                                lpi.push_back(comp[a]);
                            else if (lm & (1u << a))
                                lmi.push_back(comp[a]);
                            else
                                rest.push_back(comp[a]);
                        }
                        ExactScalar term(1);
                        for (int l : lpi) term *= wp_hahn(p, x[l]);
                        for (int l : lmi) term *= wm_hahn(p, x[l]);
                        for (int l : lpi)
                            for (int lq : lmi)
                                term *= v_hahn(p, x[l] - x[lq]) * v_hahn(p, x[lq] - x[l] + i);
                        for (int l : lpi)
                            for (int k : rest) term *= v_hahn(p, x[l] - x[k]);
                        for (int l : lmi)
                            for (int k : rest) term *= v_hahn(p, x[k] - x[l]);
                        sum += term;
                    }
                }
                ufac = (pp % 2) ? -sum : sum;
            }
            ExactScalar coeff = ufac;
            for (int j : pidx) coeff *= wp_hahn(p, x[j]);
            for (int j : midx) coeff *= wm_hahn(p, x[j]);
            for (int j : pidx)
                for (int jq : midx) coeff *= v_hahn(p, x[j] - x[jq]) * v_hahn(p, x[j] - x[jq] - i);
            for (int j : pidx)
                for (int k : comp) coeff *= v_hahn(p, x[j] - x[k]);
            for (int j : midx)
                for (int k : comp) coeff *= v_hahn(p, x[k] - x[j]);
            std::vector<ExactScalar> shifted = x;
            for (int j : pidx) shifted[j] -= i;  // T_j^{-1} for J_+
            for (int j : midx) shifted[j] += i;  // T_j for J_-
            total += coeff * f(shifted);
        }
    }
    return total;
}

// alpha-rescaled Jacobi operator acting in z coordinates; alpha cancels and
// the eigenvalues match the printed E^J exactly.
ExactScalar jacobi_apply_at(const FamilyParams& p, const SymPoly& f,
                            const std::vector<ExactScalar>& z) {
    const int n = p.n;
    const ExactScalar one(1);
    auto u = transform_point(VariableKind::j_trig, z);
    auto jet = eval_with_derivatives(f, u);
    std::vector<ExactScalar> theta(n), theta2(n);
    for (int j = 0; j < n; ++j) {
        ExactScalar zm = z[j] - inverse(z[j]);
        theta[j] = jet.d1[j] * zm;
        theta2[j] = jet.d2[j] * zm * zm + jet.d1[j] * (z[j] + inverse(z[j]));
    }
    ExactScalar total(0);
    for (int j = 0; j < n; ++j) {
        total += theta2[j];
        ExactScalar c0 = p.nu0 * (z[j] + one) / (z[j] - one);
        ExactScalar c1 = p.nu1 * (z[j] - one) / (z[j] + one);
        total += (c0 + c1) * theta[j];
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            ExactScalar zp = z[j] * z[k];
            ExactScalar zq = z[j] / z[k];
            total += p.nu * (zp + one) / (zp - one) * (theta[j] + theta[k]);
            total += p.nu * (zq + one) / (zq - one) * (theta[j] - theta[k]);
        }
    return total;
}

// ---- pole filters for interpolation points --------------------------------

PointFilter make_filter(const FamilyParams& p) {
    switch (p.family) {
        case Family::aw: {
            ExactScalar q = p.q;
            return [q](const EvalPoint& pt) {
                const ExactScalar one(1);
                auto bad = [&](const ExactScalar& v) {
                    return v == one || v == q || v * q == one;
                };
                const auto& z = pt.coords;
                for (size_t j = 0; j < z.size(); ++j) {
                    if (z[j].is_zero() || bad(z[j] * z[j])) return false;
                    for (size_t k = j + 1; k < z.size(); ++k)
                        if (bad(z[j] * z[k]) || bad(z[j] / z[k])) return false;
                }
                return true;
            };
        }
        case Family::w:
            return [](const EvalPoint& pt) {
                const ExactScalar i = ExactScalar::make_i(), half(1, 2);
                const auto& x = pt.coords;
                for (size_t j = 0; j < x.size(); ++j) {
                    if (x[j].is_zero() || x[j] == i * half || x[j] == -(i * half)) return false;
                    for (size_t k = j + 1; k < x.size(); ++k)
                        for (const ExactScalar& s : {x[j] + x[k], x[j] - x[k]})
                            if (s.is_zero() || s == i || s == -i) return false;
                }
                return true;
            };
        case Family::ch:
            return [](const EvalPoint& pt) {
                const ExactScalar i = ExactScalar::make_i();
                const auto& x = pt.coords;
                for (size_t j = 0; j < x.size(); ++j)
                    for (size_t k = j + 1; k < x.size(); ++k) {
                        ExactScalar d = x[j] - x[k];
                        if (d.is_zero() || d == i || d == -i) return false;
                    }
                return true;
            };
        case Family::j:
            return [](const EvalPoint& pt) {
                const ExactScalar one(1);
                const auto& z = pt.coords;
                for (size_t j = 0; j < z.size(); ++j) {
                    if (z[j].is_zero() || z[j] == one || z[j] == -one) return false;
                    for (size_t k = j + 1; k < z.size(); ++k)
                        if (z[j] * z[k] == one || z[j] == z[k]) return false;
                }
                return true;
            };
    }
    return {};
}

std::vector<Partition> enlarge_span(const std::vector<Partition>& span) {
    std::set<Partition, PartitionLess> grown(span.begin(), span.end());
    for (const auto& mu : span) {
        bool maximal = true;
        for (const auto& nu : span)
            if (nu != mu && dominance_leq(mu, nu)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        Partition up = mu;
        up[0] += 1;
        for (const auto& extra : ideal(up)) grown.insert(extra);
    }
    return {grown.begin(), grown.end()};
}

}  // namespace

SymPoly apply_difference_operator(const FamilyParams& p, int r, const SymPoly& f,
                                  const std::vector<Partition>& span) {
    const int n = p.n;
    if (r < 1 || r > n) throw std::invalid_argument("apply_difference_operator: r out of range");
    if (p.family == Family::j && r != 1)
        throw std::invalid_argument("apply_difference_operator: j family supports r = 1 only");
    if (f.vars() != n || f.kind() != p.kind())
        throw std::invalid_argument("apply_difference_operator: kind/dimension mismatch");
    {
        std::set<Partition, PartitionLess> in(span.begin(), span.end());
        for (const auto& mu : f.support())
            if (!in.count(mu))
                throw std::invalid_argument("apply_difference_operator: support outside span");
    }

    Evaluator g;
    switch (p.family) {
        case Family::aw: {
            AwPack<ExactScalar> pack{p.q, p.t, p.t0, p.t1, p.t2, p.t3};
            g = [pack, &f, n, r](const EvalPoint& pt) {
                return detail::aw_apply_at(pack, n, r, pt.coords,
                                           [&f](const std::vector<ExactScalar>& z) {
                                               return f.eval(EvalPoint{z});
                                           });
            };
            break;
        }
        case Family::w:
            g = [&p, &f, r](const EvalPoint& pt) {
                return wilson_apply_at(p, r, pt.coords, [&f](const std::vector<ExactScalar>& x) {
                    return f.eval(EvalPoint{x});
                });
            };
            break;
        case Family::ch:
            g = [&p, &f, r](const EvalPoint& pt) {
                return hahn_apply_at(p, r, pt.coords, [&f](const std::vector<ExactScalar>& x) {
                    return f.eval(EvalPoint{x});
                });
            };
            break;
        case Family::j:
            g = [&p, &f](const EvalPoint& pt) { return jacobi_apply_at(p, f, pt.coords); };
            break;
    }

    auto filter = make_filter(p);
    try {
        return expand_in_msym(g, span, p.kind(), n, filter);
    } catch (const ExpansionResidualError&) {
        // Triangularity is a theorem; one defensive retry on a grown ideal.
        return expand_in_msym(g, enlarge_span(span), p.kind(), n, filter);
    }
}

}  // namespace mvortho
