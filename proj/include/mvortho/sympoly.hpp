#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mvortho/exact.hpp"
#include "mvortho/partition.hpp"

namespace mvortho {

/// What the basis monomial m_lambda means in terms of the raw coordinates:
///   aw_trig, j_trig : m_sym,lambda(z_1 + 1/z_1, ...) with z_j = e^{i alpha x_j}
///   w_even          : m_sym,lambda(x_1^2, ...)
///   ch_plain        : m_sym,lambda(x_1, ...)
enum class VariableKind { aw_trig, j_trig, w_even, ch_plain };

std::string kind_name(VariableKind k);
VariableKind kind_from_name(const std::string& s);

/// Raw coordinates: z for the trig kinds, x otherwise.
struct EvalPoint {
    std::vector<ExactScalar> coords;
};

/// Symmetric polynomial as a coefficient map over the monomial basis of one
/// variable kind. Zero coefficients are never stored.
class SymPoly {
public:
    SymPoly() : kind_(VariableKind::ch_plain), n_(0) {}
    SymPoly(VariableKind kind, int n) : kind_(kind), n_(n) {}

    static SymPoly constant(VariableKind kind, int n, const ExactScalar& c);
    static SymPoly monomial(VariableKind kind, int n, const Partition& lambda,
                            const ExactScalar& c = ExactScalar(1));

    VariableKind kind() const { return kind_; }
    int vars() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<Partition, ExactScalar, PartitionLess>& coeffs() const { return coeffs_; }
    ExactScalar coeff(const Partition& lambda) const;
    void set_coeff(const Partition& lambda, const ExactScalar& value);
    std::vector<Partition> support() const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const ExactScalar& s);

    ExactScalar eval(const EvalPoint& p) const;

private:
    VariableKind kind_;
    int n_;
    std::map<Partition, ExactScalar, PartitionLess> coeffs_;
};

SymPoly operator+(SymPoly a, const SymPoly& b);
SymPoly operator-(SymPoly a, const SymPoly& b);
SymPoly operator*(SymPoly a, const ExactScalar& s);
/// Exact product in the monomial basis (orbit expansion; kind-agnostic since
/// both factors live over the same transformed coordinates).
SymPoly operator*(const SymPoly& a, const SymPoly& b);
bool operator==(const SymPoly& a, const SymPoly& b);

/// Transformed coordinates u_j for the given kind (z+1/z, x^2 or x).
std::vector<ExactScalar> transform_point(VariableKind kind, const std::vector<ExactScalar>& coords);

/// Value together with first and pure second partial derivatives with respect
/// to the transformed coordinates u_j.
struct JetValues {
    ExactScalar value;
    std::vector<ExactScalar> d1;
    std::vector<ExactScalar> d2;
};
JetValues eval_with_derivatives(const SymPoly& f, const std::vector<ExactScalar>& u);

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExpansionResidualError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Evaluator = std::function<ExactScalar(const EvalPoint&)>;
using PointFilter = std::function<bool(const EvalPoint&)>;

/// Expands a black-box symmetric function known to lie in
/// span{m_mu : mu in span} by exact interpolation: evaluate at |span|
/// deterministic points, solve the square system (fraction-free), and verify
/// the residual at one extra point. Throws SingularSystemError after the
/// point-retry budget runs out and ExpansionResidualError when the span
/// hypothesis fails.
SymPoly expand_in_msym(const Evaluator& f, const std::vector<Partition>& span, VariableKind kind,
                       int n, const PointFilter& point_ok = {});

/// Monomial symmetric evaluation over any field-like scalar (used by the
/// float lane of the limit harness).
template <class K>
K msym_eval_t(const Partition& lambda, const std::vector<K>& u) {
    K sum{};
    for (const auto& mu : orbit(lambda)) {
        K term = K(1);
        for (size_t j = 0; j < mu.size(); ++j)
            for (int e = 0; e < mu[j]; ++e) term *= u[j];
        sum += term;
    }
    return sum;
}

}  // namespace mvortho
