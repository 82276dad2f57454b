#include "mvortho/quadrature.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "mvortho/identities.hpp"
#include "mvortho/polynomials.hpp"
#include "mvortho/special.hpp"

namespace mvortho {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
using Cx = std::complex<double>;

void check_domain(const FamilyParams& p) {
    auto re = [](const ExactScalar& v) { return v.re.get_d(); };
    switch (p.family) {
        case Family::aw: {
            double q = re(p.q), t = re(p.t);
            if (!(p.q.is_real() && q > 0.0 && q < 1.0))
                throw std::domain_error("weight_value: aw requires 0 < q < 1");
            if (!(p.t.is_real() && t >= -1.0 && t <= 1.0))
                throw std::domain_error("weight_value: aw requires -1 <= t <= 1");
            for (const auto* tr : {&p.t0, &p.t1, &p.t2, &p.t3})
                if (std::abs(tr->to_complex()) > 1.0 + 1e-12)
                    throw std::domain_error("weight_value: aw requires |t_r| <= 1");
            break;
        }
        case Family::w:
            if (re(p.nu) < 0.0) throw std::domain_error("weight_value: w requires nu >= 0");
            for (const auto* nr : {&p.nu0, &p.nu1, &p.nu2, &p.nu3})
                if (re(*nr) <= 0.0)
                    throw std::domain_error("weight_value: w requires Re(nu_r) > 0");
            break;
        case Family::ch:
            if (re(p.nu) < 0.0) throw std::domain_error("weight_value: ch requires nu >= 0");
            for (const auto* nr : {&p.nu0p, &p.nu1p, &p.nu0m, &p.nu1m})
                if (re(*nr) <= 0.0)
                    throw std::domain_error("weight_value: ch requires Re(nu^{+-}_r) > 0");
            if (!(p.nu0m == p.nu0p.conj() && p.nu1m == p.nu1p.conj()))
                throw std::domain_error("weight_value: ch requires conjugate parameter pairs");
            break;
        case Family::j:
            if (re(p.nu) < 0.0) throw std::domain_error("weight_value: j requires nu >= 0");
            if (re(p.nu0) <= -0.5 || re(p.nu1) <= -0.5)
                throw std::domain_error("weight_value: j requires nu0, nu1 > -1/2");
            break;
    }
}

double weight_aw(const FamilyParams& p, const std::vector<double>& x, double qtol) {
    const int n = static_cast<int>(x.size());
    const Cx q = p.q.to_complex();
    const Cx t = p.t.to_complex();
    const Cx ts[4] = {p.t0.to_complex(), p.t1.to_complex(), p.t2.to_complex(),
                      p.t3.to_complex()};
    Cx acc(1.0, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int e1 : {+1, -1})
                for (int e2 : {+1, -1}) {
                    Cx z = std::exp(Cx(0.0, e1 * x[j] + e2 * x[k]));
                    acc *= qpochhammer_inf(z, q, qtol) / qpochhammer_inf(t * z, q, qtol);
                }
    for (int j = 0; j < n; ++j)
        for (int e : {+1, -1}) {
            Cx z = std::exp(Cx(0.0, e * x[j]));
            Cx num = qpochhammer_inf(z * z, q, qtol);
            Cx den(1.0, 0.0);
            for (const Cx& tr : ts) den *= qpochhammer_inf(tr * z, q, qtol);
            acc *= num / den;
        }
    if (std::abs(acc.imag()) > 1e-10 * (std::abs(acc.real()) + 1e-300))
        throw std::runtime_error("weight_value: aw weight has a large imaginary residue");
    return acc.real();
}

double weight_w(const FamilyParams& p, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    const Cx nu = p.nu.to_complex();
    const Cx nr[4] = {p.nu0.to_complex(), p.nu1.to_complex(), p.nu2.to_complex(),
                      p.nu3.to_complex()};
    Cx acc(1.0, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int e1 : {+1, -1})
                for (int e2 : {+1, -1}) {
                    Cx iy(0.0, e1 * x[j] + e2 * x[k]);
                    acc *= gamma_cx(nu + iy) * rgamma_cx(iy);
                }
    for (int j = 0; j < n; ++j)
        for (int e : {+1, -1}) {
            Cx ix(0.0, e * x[j]);
            Cx f(1.0, 0.0);
            for (const Cx& v : nr) f *= gamma_cx(v + ix);
            acc *= f * rgamma_cx(2.0 * ix);
        }
    if (std::abs(acc.imag()) > 1e-10 * (std::abs(acc.real()) + 1e-300))
        throw std::runtime_error("weight_value: w weight has a large imaginary residue");
    return acc.real();
}

double weight_ch(const FamilyParams& p, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    const Cx nu = p.nu.to_complex();
    Cx acc(1.0, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Cx d(0.0, x[j] - x[k]);
            acc *= gamma_cx(nu + d) * rgamma_cx(d) * gamma_cx(nu - d) * rgamma_cx(-d);
        }
    for (int j = 0; j < n; ++j) {
        Cx ix(0.0, x[j]);
        acc *= gamma_cx(p.nu0p.to_complex() + ix) * gamma_cx(p.nu1p.to_complex() + ix) *
               gamma_cx(p.nu0m.to_complex() - ix) * gamma_cx(p.nu1m.to_complex() - ix);
    }
    if (std::abs(acc.imag()) > 1e-10 * (std::abs(acc.real()) + 1e-300))
        throw std::runtime_error("weight_value: ch weight has a large imaginary residue");
    return acc.real();
}

double weight_j(const FamilyParams& p, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    const double nu = p.nu.re.get_d();
    const double nu0 = p.nu0.re.get_d(), nu1 = p.nu1.re.get_d();
    double acc = 1.0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            acc *= std::pow(std::abs(std::sin(0.5 * (x[j] + x[k])) * std::sin(0.5 * (x[j] - x[k]))),
                            2.0 * nu);
    for (int j = 0; j < n; ++j)
        acc *= std::pow(std::abs(std::sin(0.5 * x[j])), 2.0 * nu0) *
               std::pow(std::abs(std::cos(0.5 * x[j])), 2.0 * nu1);
    return acc;
}

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration.
void gauleg(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int k = 0; k < order; ++k) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * k + 1.0) * z * p2 - k * p3) / (k + 1.0);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[order - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[order - 1 - i] = weights[i];
    }
}

struct Axis {
    std::vector<double> nodes, weights;
};

Axis make_axis(const FamilyParams& p, const GridSpec& g) {
    Axis ax;
    if (p.family == Family::aw || p.family == Family::j) {
        const int n = g.npoints;
        const double h = 2.0 * kPi / n;
        for (int m = 0; m < n; ++m) {
            ax.nodes.push_back(-kPi + (m + 0.5) * h);
            ax.weights.push_back(h);
        }
    } else {
        std::vector<double> gn, gw;
        gauleg(g.panel_order, gn, gw);
        const double width = 2.0 * g.radius / g.panels;
        for (int panel = 0; panel < g.panels; ++panel) {
            double a = -g.radius + panel * width;
            for (int k = 0; k < g.panel_order; ++k) {
                ax.nodes.push_back(a + 0.5 * width * (gn[k] + 1.0));
                ax.weights.push_back(0.5 * width * gw[k]);
            }
        }
    }
    return ax;
}

// Fixed-order compensated accumulation keeps the results byte-deterministic.
struct Accum {
    Cx sum{0.0, 0.0};
    Cx comp{0.0, 0.0};
    void add(const Cx& v) {
        Cx y = v - comp;
        Cx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double msym_real(const Partition& la, const std::vector<double>& u) {
    double total = 0.0;
    for (const auto& mu : orbit(la)) {
        double term = 1.0;
        for (size_t j = 0; j < mu.size(); ++j)
            for (int e = 0; e < mu[j]; ++e) term *= u[j];
        total += term;
    }
    return total;
}

std::vector<double> transform_real(VariableKind kind, const std::vector<double>& x) {
    std::vector<double> u(x.size());
    for (size_t j = 0; j < x.size(); ++j) {
        switch (kind) {
            case VariableKind::aw_trig:
            case VariableKind::j_trig: u[j] = 2.0 * std::cos(x[j]); break;
            case VariableKind::w_even: u[j] = x[j] * x[j]; break;
            case VariableKind::ch_plain: u[j] = x[j]; break;
        }
    }
    return u;
}

// Runs fn over the tensor grid with the point and the product weight.
void for_each_grid_point(const Axis& ax, int n,
                         const std::function<void(const std::vector<double>&, double)>& fn) {
    std::vector<size_t> idx(n, 0);
    std::vector<double> x(n);
    const size_t len = ax.nodes.size();
    while (true) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            x[j] = ax.nodes[idx[j]];
            w *= ax.weights[idx[j]];
        }
        fn(x, w);
        int j = n - 1;
        while (j >= 0 && ++idx[j] == len) idx[j--] = 0;
        if (j < 0) break;
    }
}

double family_weight(const FamilyParams& p, const std::vector<double>& x, double qtol) {
    switch (p.family) {
        case Family::aw: return weight_aw(p, x, qtol);
        case Family::w: return weight_w(p, x);
        case Family::ch: return weight_ch(p, x);
        case Family::j: return weight_j(p, x);
    }
    throw std::logic_error("bad family");
}

}  // namespace

double weight_value(const FamilyParams& p, const std::vector<double>& x, double qtol) {
    if (static_cast<int>(x.size()) != p.n)
        throw std::invalid_argument("weight_value: dimension mismatch");
    check_domain(p);
    return family_weight(p, x, qtol);
}

std::complex<double> eval_float(const SymPoly& f, const std::vector<double>& x) {
    auto u = transform_real(f.kind(), x);
    Cx acc(0.0, 0.0);
    for (const auto& [la, c] : f.coeffs()) acc += c.to_complex() * msym_real(la, u);
    return acc;
}

std::complex<double> inner_product_numeric(const FamilyParams& p, const SymPoly& f,
                                           const SymPoly& g, const GridSpec& grid) {
    check_domain(p);
    Axis ax = make_axis(p, grid);
    Accum acc;
    for_each_grid_point(ax, p.n, [&](const std::vector<double>& x, double w) {
        double dw = family_weight(p, x, grid.qtol);
        acc.add(w * dw * eval_float(f, x) * std::conj(eval_float(g, x)));
    });
    return acc.sum;
}

OrthoReport orthogonality_report(const FamilyParams& p, const Partition& lambda_max,
                                 const GridSpec& grid) {
    check_domain(p);
    OrthoReport rep;
    rep.family = p.family;
    rep.lambda_max = lambda_max;

    const auto span = ideal(lambda_max);
    const size_t m = span.size();
    std::vector<SymPoly> polys;
    polys.reserve(m);
    for (const auto& mu : span) polys.push_back(build_monic(p, mu).monic);

    // Single streaming pass; per-point evaluation shares the weight value.
    Axis ax = make_axis(p, grid);
    std::vector<std::vector<Accum>> gram(m, std::vector<Accum>(m));
    double min_weight = std::numeric_limits<double>::infinity();
    std::vector<Cx> vals(m);
    for_each_grid_point(ax, p.n, [&](const std::vector<double>& x, double w) {
        double dw = family_weight(p, x, grid.qtol);
        min_weight = std::min(min_weight, dw);
        for (size_t a = 0; a < m; ++a) vals[a] = eval_float(polys[a], x);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a; b < m; ++b) gram[a][b].add(w * dw * vals[a] * std::conj(vals[b]));
    });

    // Convergence monitor on <1,1> with the per-dimension count halved.
    GridSpec coarse = grid;
    coarse.npoints = std::max(2, grid.npoints / 2);
    coarse.panels = std::max(1, grid.panels / 2);
    Cx one_coarse = inner_product_numeric(
        p, SymPoly::constant(p.kind(), p.n, ExactScalar(1)),
        SymPoly::constant(p.kind(), p.n, ExactScalar(1)), coarse);
    rep.constant_term = gram[0][0].sum.real();
    rep.convergence_delta =
        std::abs(one_coarse.real() - rep.constant_term) / std::abs(rep.constant_term);
    rep.min_weight_sample = min_weight;

    std::vector<double> norms(m);
    for (size_t a = 0; a < m; ++a) norms[a] = std::sqrt(std::abs(gram[a][a].sum.real()));
    rep.max_offdiag = 0.0;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a; b < m; ++b) {
            GramEntry e;
            e.a = span[a];
            e.b = span[b];
            e.value = gram[a][b].sum;
            e.normalized = (a == b) ? 0.0 : std::abs(e.value) / (norms[a] * norms[b]);
            rep.max_offdiag = std::max(rep.max_offdiag, e.normalized);
            rep.entries.push_back(e);
        }

    rep.max_ratio_defect = 0.0;
    try {
        for (size_t a = 0; a < m; ++a) {
            double numeric = gram[a][a].sum.real() / rep.constant_term;
            double exact = norm_ratio_exact(p, span[a]).to_complex().real();
            rep.max_ratio_defect =
                std::max(rep.max_ratio_defect, std::abs(numeric - exact) / std::abs(exact));
        }
        rep.ratio_checked = true;
    } catch (const std::domain_error&) {
        rep.ratio_checked = false;  // hat parameters unavailable
    }

    rep.pass = rep.max_offdiag < rep.offdiag_tol &&
               (!rep.ratio_checked || rep.max_ratio_defect < rep.ratio_tol);
    return rep;
}

}  // namespace mvortho
