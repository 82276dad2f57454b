#include "mvortho/sympoly.hpp"

#include <algorithm>

#include "mvortho/linsolve.hpp"

namespace mvortho {

std::string kind_name(VariableKind k) {
    switch (k) {
        case VariableKind::aw_trig: return "AW_TRIG";
        case VariableKind::j_trig: return "J_TRIG";
        case VariableKind::w_even: return "W_EVEN";
        case VariableKind::ch_plain: return "CH_PLAIN";
    }
    return "?";
}

VariableKind kind_from_name(const std::string& s) {
    if (s == "AW_TRIG") return VariableKind::aw_trig;
    if (s == "J_TRIG") return VariableKind::j_trig;
    if (s == "W_EVEN") return VariableKind::w_even;
    if (s == "CH_PLAIN") return VariableKind::ch_plain;
    throw std::invalid_argument("unknown variable kind: " + s);
}

SymPoly SymPoly::constant(VariableKind kind, int n, const ExactScalar& c) {
    SymPoly p(kind, n);
    p.set_coeff(Partition(n, 0), c);
    return p;
}

SymPoly SymPoly::monomial(VariableKind kind, int n, const Partition& lambda, const ExactScalar& c) {
    if (!is_partition(lambda) || static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("SymPoly::monomial: bad partition");
    SymPoly p(kind, n);
    p.set_coeff(lambda, c);
    return p;
}

ExactScalar SymPoly::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? ExactScalar(0) : it->second;
}

void SymPoly::set_coeff(const Partition& lambda, const ExactScalar& value) {
    if (value.is_zero())
        coeffs_.erase(lambda);
    else
        coeffs_[lambda] = value;
}

std::vector<Partition> SymPoly::support() const {
    std::vector<Partition> out;
    out.reserve(coeffs_.size());
    for (const auto& [p, c] : coeffs_) out.push_back(p);
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [p, c] : o.coeffs_) set_coeff(p, coeff(p) + c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [p, c] : o.coeffs_) set_coeff(p, coeff(p) - c);
    return *this;
}

SymPoly& SymPoly::operator*=(const ExactScalar& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, c] : coeffs_) c *= s;
    return *this;
}

SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
SymPoly operator*(SymPoly a, const ExactScalar& s) { return a *= s; }

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.kind() != b.kind() || a.vars() != b.vars())
        throw std::invalid_argument("SymPoly product: kind/dimension mismatch");
    SymPoly out(a.kind(), a.vars());
    // The product of two orbit sums contributes one monomial per exponent
    // pair; collecting only the weakly decreasing representatives recovers
    // the m-basis coefficients.
    for (const auto& [la, ca] : a.coeffs()) {
        auto orb_a = orbit(la);
        for (const auto& [mu, cb] : b.coeffs()) {
            auto orb_b = orbit(mu);
            ExactScalar cab = ca * cb;
            for (const auto& sa : orb_a)
                for (const auto& sb : orb_b) {
                    Partition e(sa.size());
                    bool sorted = true;
                    for (size_t j = 0; j < sa.size(); ++j) {
                        e[j] = sa[j] + sb[j];
                        if (j > 0 && e[j - 1] < e[j]) {
                            sorted = false;
                            break;
                        }
                    }
                    if (sorted) out.set_coeff(e, out.coeff(e) + cab);
                }
        }
    }
    return out;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.kind() == b.kind() && a.vars() == b.vars() && a.coeffs() == b.coeffs();
}

std::vector<ExactScalar> transform_point(VariableKind kind, const std::vector<ExactScalar>& coords) {
    std::vector<ExactScalar> u;
    u.reserve(coords.size());
    switch (kind) {
        case VariableKind::aw_trig:
        case VariableKind::j_trig:
            for (const auto& z : coords) {
                if (z.is_zero())
                    throw std::domain_error("transform_point: zero coordinate for trig kind");
                u.push_back(z + inverse(z));
            }
            break;
        case VariableKind::w_even:
            for (const auto& x : coords) u.push_back(x * x);
            break;
        case VariableKind::ch_plain:
            u = coords;
            break;
    }
    return u;
}

ExactScalar SymPoly::eval(const EvalPoint& p) const {
    if (static_cast<int>(p.coords.size()) != n_)
        throw std::invalid_argument("SymPoly::eval: dimension mismatch");
    auto u = transform_point(kind_, p.coords);
    ExactScalar acc(0);
    for (const auto& [lambda, c] : coeffs_) acc += c * msym_eval(lambda, u);
    return acc;
}

JetValues eval_with_derivatives(const SymPoly& f, const std::vector<ExactScalar>& u) {
    const int n = f.vars();
    JetValues out;
    out.value = ExactScalar(0);
    out.d1.assign(n, ExactScalar(0));
    out.d2.assign(n, ExactScalar(0));
    for (const auto& [lambda, c] : f.coeffs()) {
        for (const auto& mu : orbit(lambda)) {
            // Powers of each coordinate reused across the value and the
            // derivative terms.
            ExactScalar total(1);
            std::vector<ExactScalar> without(n, ExactScalar(1));
            for (int j = 0; j < n; ++j) {
                ExactScalar pj = pow(u[j], mu[j]);
                for (int k = 0; k < n; ++k)
                    if (k != j) without[k] *= pj;
                total *= pj;
            }
            out.value += c * total;
            for (int j = 0; j < n; ++j) {
                if (mu[j] >= 1)
                    out.d1[j] += c * ExactScalar(mu[j]) * pow(u[j], mu[j] - 1) * without[j];
                if (mu[j] >= 2)
                    out.d2[j] += c * ExactScalar(static_cast<long>(mu[j]) * (mu[j] - 1)) *
                                 pow(u[j], mu[j] - 2) * without[j];
            }
        }
    }
    return out;
}

namespace {

constexpr int kPrimaryBases[] = {2, 3, 5, 7, 11, 13, 17, 19};
constexpr int kFallbackBases[] = {23, 29, 31, 37, 41, 43, 47, 53};

EvalPoint make_point(const int* bases, int n, int k) {
    EvalPoint p;
    p.coords.reserve(n);
    for (int j = 0; j < n; ++j) p.coords.push_back(pow(ExactScalar(bases[j]), k));
    return p;
}

}  // namespace

SymPoly expand_in_msym(const Evaluator& f, const std::vector<Partition>& span, VariableKind kind,
                       int n, const PointFilter& point_ok) {
    if (span.empty()) throw std::invalid_argument("expand_in_msym: empty span");
    const size_t dim = span.size();
    if (n > 8) throw std::invalid_argument("expand_in_msym: unsupported dimension");

    // Deterministic candidate points: coordinates are powers of distinct
    // small primes, with a fallback prime set once the primary pool is spent.
    std::vector<EvalPoint> pool;
    const int budget = static_cast<int>(dim) + 12;
    for (int k = 1; static_cast<int>(pool.size()) < budget + static_cast<int>(dim) && k <= 4 * budget;
         ++k) {
        EvalPoint p = make_point(kPrimaryBases, n, k);
        if (!point_ok || point_ok(p)) pool.push_back(std::move(p));
        if (static_cast<int>(pool.size()) >= budget + static_cast<int>(dim)) break;
        EvalPoint q = make_point(kFallbackBases, n, k);
        if (!point_ok || point_ok(q)) pool.push_back(std::move(q));
    }
    if (pool.size() < dim + 1)
        throw SingularSystemError("expand_in_msym: point generation exhausted by the filter");

    // Sliding window over the pool until the interpolation matrix is regular.
    std::vector<ExactScalar> sol;
    size_t first = 0;
    bool solved = false;
    for (; first + dim < pool.size(); ++first) {
        std::vector<std::vector<ExactScalar>> mat(dim, std::vector<ExactScalar>(dim));
        std::vector<ExactScalar> rhs(dim);
        for (size_t i = 0; i < dim; ++i) {
            auto u = transform_point(kind, pool[first + i].coords);
            for (size_t j = 0; j < dim; ++j) mat[i][j] = msym_eval(span[j], u);
            rhs[i] = f(pool[first + i]);
        }
        if (solve_exact(std::move(mat), std::move(rhs), sol)) {
            solved = true;
            break;
        }
    }
    if (!solved) throw SingularSystemError("expand_in_msym: singular interpolation system");

    SymPoly out(kind, n);
    for (size_t j = 0; j < dim; ++j) out.set_coeff(span[j], sol[j]);

    // One fresh point certifies the span hypothesis.
    const EvalPoint& check = pool[first + dim];
    ExactScalar residual = f(check) - out.eval(check);
    if (!residual.is_zero())
        throw ExpansionResidualError("expand_in_msym: nonzero residual at the check point");
    return out;
}

}  // namespace mvortho
