#pragma once

// Pointwise evaluation kernels for the higher difference operators. These are
// templated on the scalar type so the float lane of the limit harness can
// reuse the Askey-Wilson kernel verbatim.

#include <utility>
#include <vector>

namespace mvortho::detail {

template <class K>
K hom_sym(const std::vector<K>& y, int m) {
    // Complete homogeneous symmetric polynomial h_m(y).
    if (m < 0) return K(0);
    std::vector<K> h(static_cast<size_t>(m) + 1, K(0));
    h[0] = K(1);
    for (const K& v : y)
        for (int d = 1; d <= m; ++d) h[d] += v * h[d - 1];
    return h[m];
}

template <class K>
std::vector<K> elem_sym_all(const std::vector<K>& x, int rmax) {
    std::vector<K> e(static_cast<size_t>(rmax) + 1, K(0));
    e[0] = K(1);
    int seen = 0;
    for (const K& v : x) {
        ++seen;
        for (int d = std::min(rmax, seen); d >= 1; --d) e[d] += v * e[d - 1];
    }
    return e;
}

/// E_r(x_1..x_n; y_r..y_n): y has length n-r+1.
template <class K>
K er_kernel_t(const std::vector<K>& x, const std::vector<K>& y, int r) {
    auto e = elem_sym_all(x, r);
    K total = K(0);
    for (int s = 0; s <= r; ++s) {
        K term = e[s] * hom_sym(y, r - s);
        if ((r - s) % 2) term = K(0) - term;
        total += term;
    }
    return total;
}

template <class K>
struct AwPack {
    K q, t, t0, t1, t2, t3;
};

// Rationalized coefficient functions: the t^{-1/2} and
// (t0 t1 t2 t3 q^{-1})^{-1/2} prefactors are omitted, which multiplies the
// whole operator by the constant t^{r(n-1)-r(r-1)/2} (t0t1t2t3/q)^{r/2} and
// keeps everything rational in the parameters.
template <class K>
K aw_v(const AwPack<K>& p, const K& z) {
    return (K(1) - p.t * z) / (K(1) - z);
}

template <class K>
K aw_w(const AwPack<K>& p, const K& z) {
    K z2 = z * z;
    return (K(1) - p.t0 * z) * (K(1) - p.t1 * z) * (K(1) - p.t2 * z) * (K(1) - p.t3 * z) /
           ((K(1) - z2) * (K(1) - p.q * z2));
}

template <class K>
K aw_vfactor_pair(const AwPack<K>& p, const K& zz) {
    return aw_v(p, zz) * aw_v(p, p.q * zz);
}

template <class K>
K aw_coeff_v(const AwPack<K>& p, const std::vector<std::pair<int, int>>& js,
             const std::vector<int>& comp, const std::vector<K>& z) {
    auto zs = [&](std::pair<int, int> e) { return e.second > 0 ? z[e.first] : K(1) / z[e.first]; };
    K acc = K(1);
    for (const auto& e : js) acc *= aw_w(p, zs(e));
    for (size_t a = 0; a < js.size(); ++a)
        for (size_t b = a + 1; b < js.size(); ++b) acc *= aw_vfactor_pair(p, zs(js[a]) * zs(js[b]));
    for (const auto& e : js)
        for (int k : comp) acc *= aw_v(p, zs(e) * z[k]) * aw_v(p, zs(e) / z[k]);
    return acc;
}

template <class K>
K aw_coeff_u(const AwPack<K>& p, const std::vector<int>& kset, int pp, const std::vector<K>& z) {
    if (pp == 0) return K(1);
    const int m = static_cast<int>(kset.size());
    K sum = K(0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != pp) continue;
        std::vector<int> lidx;
        std::vector<int> rest;
        for (int a = 0; a < m; ++a)
            (mask & (1u << a)) ? lidx.push_back(kset[a]) : rest.push_back(kset[a]);
        for (unsigned signs = 0; signs < (1u << pp); ++signs) {
            auto zs = [&](int a) {
                return (signs & (1u << a)) ? K(1) / z[lidx[a]] : z[lidx[a]];
            };
            K term = K(1);
            for (int a = 0; a < pp; ++a) term *= aw_w(p, zs(a));
            for (int a = 0; a < pp; ++a)
                for (int b = a + 1; b < pp; ++b) {
                    K zz = zs(a) * zs(b);
                    term *= aw_v(p, zz) * aw_v(p, K(1) / (p.q * zz));
                }
            for (int a = 0; a < pp; ++a)
                for (int k : rest) term *= aw_v(p, zs(a) * z[k]) * aw_v(p, zs(a) / z[k]);
            sum += term;
        }
    }
    return (pp % 2) ? K(0) - sum : sum;
}

/// (D_r f)(z) for the rationalized Askey-Wilson operator; feval receives the
/// multiplicatively shifted coordinate vector.
template <class K, class FEval>
K aw_apply_at(const AwPack<K>& p, int n, int r, const std::vector<K>& z, FEval&& feval) {
    K total = K(0);
    for (unsigned jmask = 0; jmask < (1u << n); ++jmask) {
        int jsz = __builtin_popcount(jmask);
        if (jsz > r) continue;
        std::vector<int> jidx, comp;
        for (int j = 0; j < n; ++j) (jmask & (1u << j)) ? jidx.push_back(j) : comp.push_back(j);
        K ufac = aw_coeff_u(p, comp, r - jsz, z);
        for (unsigned signs = 0; signs < (1u << jsz); ++signs) {
            std::vector<std::pair<int, int>> js;
            for (int a = 0; a < jsz; ++a)
                js.emplace_back(jidx[a], (signs & (1u << a)) ? -1 : +1);
            K coeff = ufac * aw_coeff_v(p, js, comp, z);
            std::vector<K> shifted = z;
            for (const auto& [j, s] : js) shifted[j] = (s > 0) ? p.q * z[j] : z[j] / p.q;
            total += coeff * feval(shifted);
        }
    }
    return total;
}

}  // namespace mvortho::detail
