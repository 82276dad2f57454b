#include "mvortho/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mvortho {

bool is_partition(const Partition& lambda) {
    for (size_t j = 0; j < lambda.size(); ++j) {
        if (lambda[j] < 0) return false;
        if (j + 1 < lambda.size() && lambda[j] < lambda[j + 1]) return false;
    }
    return true;
}

long weight(const Partition& lambda) {
    long w = 0;
    for (int p : lambda) w += p;
    return w;
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
    long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominance_leq: length mismatch");
    long sm = 0, sl = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        sm += mu[j];
        sl += lambda[j];
        if (sm > sl) return false;
    }
    return true;
}

namespace {

void enumerate_partitions(int n, int maxpart, long maxweight,
                          const std::function<void(const Partition&)>& emit) {
    Partition cur(n, 0);
    std::function<void(int, int, long)> rec = [&](int pos, int cap, long left) {
        if (pos == n) {
            emit(cur);
            return;
        }
        for (int v = 0; v <= std::min<long>(cap, left); ++v) {
            cur[pos] = v;
            rec(pos + 1, v, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, maxpart, maxweight);
}

}  // namespace

std::vector<Partition> ideal(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("ideal: not a partition");
    std::vector<Partition> out;
    int n = static_cast<int>(lambda.size());
    enumerate_partitions(n, lambda.empty() ? 0 : lambda[0], weight(lambda),
                         [&](const Partition& mu) {
                             if (dominance_leq(mu, lambda)) out.push_back(mu);
                         });
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

Partition shift_by(const Partition& lambda, const SignedIndexSet& eps_j) {
    Partition out = lambda;
    for (auto [idx, sign] : eps_j.entries) out[idx] += sign;
    return out;
}

std::vector<std::pair<SignedIndexSet, Partition>> pieri_neighbors(const Partition& lambda, int r) {
    int n = static_cast<int>(lambda.size());
    if (r < 1 || r > n) throw std::invalid_argument("pieri_neighbors: r out of range");
    std::vector<std::pair<SignedIndexSet, Partition>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz > r) continue;
        std::vector<int> idx;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) idx.push_back(j);
        for (unsigned signs = 0; signs < (1u << sz); ++signs) {
            SignedIndexSet js;
            for (int k = 0; k < sz; ++k)
                js.entries.emplace_back(idx[k], (signs & (1u << k)) ? -1 : +1);
            Partition target = shift_by(lambda, js);
            if (is_partition(target)) out.emplace_back(std::move(js), std::move(target));
        }
    }
    return out;
}

std::vector<std::vector<int>> orbit(const Partition& lambda) {
    std::vector<int> v = lambda;
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string partition_str(const Partition& lambda) {
    std::string s = "[";
    for (size_t j = 0; j < lambda.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(lambda[j]);
    }
    return s + "]";
}

ExactScalar msym_eval(const Partition& lambda, const std::vector<ExactScalar>& point) {
    if (point.size() != lambda.size()) throw std::invalid_argument("msym_eval: dimension mismatch");
    ExactScalar sum(0);
    for (const auto& mu : orbit(lambda)) {
        ExactScalar term(1);
        for (size_t j = 0; j < mu.size(); ++j) {
            if (mu[j] == 0) continue;
            if (point[j].is_zero() && mu[j] < 0)
                throw std::domain_error("msym_eval: zero coordinate with negative exponent");
            term *= pow(point[j], mu[j]);
        }
        sum += term;
    }
    return sum;
}

}  // namespace mvortho
