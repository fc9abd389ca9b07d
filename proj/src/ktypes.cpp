#include "gsp/ktypes.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gsp {

bool is_dominant(const KWeight& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

void WeightMultiset::add(const std::vector<long long>& w, const Int& mult) {
    if (mult == 0) return;
    auto it = m_.find(w);
    if (it == m_.end()) {
        if (mult < 0) throw std::domain_error("weight multiplicity went negative");
        m_.emplace(w, mult);
    } else {
        it->second += mult;
        if (it->second < 0) throw std::domain_error("weight multiplicity went negative");
        if (it->second == 0) m_.erase(it);
    }
}

Int WeightMultiset::total() const {
    Int t = 0;
    for (auto& [w, m] : m_) t += m;
    return t;
}

Int WeightMultiset::multiplicity(const std::vector<long long>& w) const {
    auto it = m_.find(w);
    return it == m_.end() ? Int(0) : it->second;
}

WeightMultiset operator*(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    for (auto& [wa, ma] : a.m_)
        for (auto& [wb, mb] : b.m_) {
            std::vector<long long> w(wa.size());
            for (size_t i = 0; i < wa.size(); ++i) w[i] = wa[i] + wb[i];
            out.add(w, ma * mb);
        }
    return out;
}

Int irrep_dim(const KWeight& hw) {
    if (!is_dominant(hw)) throw std::invalid_argument("irrep_dim: weight not dominant");
    Rat d(1);
    int n = static_cast<int>(hw.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d *= Rat(hw[static_cast<size_t>(i)] - hw[static_cast<size_t>(j)] + j - i, j - i);
    if (denominator(d) != 1) throw std::logic_error("Weyl dimension not integral");
    return numerator(d);
}

WeightMultiset p_plus_weights(int n) {
    if (n < 1) throw std::invalid_argument("p_plus_weights: n must be positive");
    WeightMultiset ms;
    for (int j = 0; j < n; ++j) {
        std::vector<long long> w(static_cast<size_t>(n), 0);
        w[static_cast<size_t>(j)] = 2;
        ms.add(w, 1);
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            std::vector<long long> w(static_cast<size_t>(n), 0);
            w[static_cast<size_t>(j)] = 1;
            w[static_cast<size_t>(k)] = 1;
            ms.add(w, 1);
        }
    return ms;
}

WeightMultiset p_minus_weights(int n) {
    WeightMultiset plus = p_plus_weights(n);
    WeightMultiset ms;
    for (auto& [w, m] : plus.entries()) {
        std::vector<long long> neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        ms.add(neg, m);
    }
    return ms;
}

namespace {

// Gelfand-Tsetlin branching: weights of the GL_k irrep with nonnegative
// partition lam are the weights of interlacing mu for GL_{k-1}, extended by
// the coordinate |lam| - |mu|.
class CharTable {
public:
    std::shared_ptr<const WeightMultiset> get(const std::vector<long long>& lam) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(lam);
            if (it != cache_.end()) return it->second;
        }
        auto val = std::make_shared<WeightMultiset>(compute(lam));
        std::lock_guard<std::mutex> lk(mu_);
        return cache_.emplace(lam, std::move(val)).first->second;
    }

private:
    WeightMultiset compute(const std::vector<long long>& lam) {
        WeightMultiset out;
        size_t k = lam.size();
        if (k == 1) {
            out.add({lam[0]}, 1);
            return out;
        }
        long long tot = 0;
        for (long long x : lam) tot += x;
        std::vector<long long> mu(k - 1);
        enumerate(lam, mu, 0, tot, out);
        return out;
    }

    void enumerate(const std::vector<long long>& lam, std::vector<long long>& mu, size_t i,
                   long long tot, WeightMultiset& out) {
        if (i == mu.size()) {
            long long msum = 0;
            for (long long x : mu) msum += x;
            auto sub = get(mu);
            for (auto& [w, m] : sub->entries()) {
                std::vector<long long> ext(w);
                ext.push_back(tot - msum);
                out.add(ext, m);
            }
            return;
        }
        for (long long v = lam[i + 1]; v <= lam[i]; ++v) {
            mu[i] = v;
            enumerate(lam, mu, i + 1, tot, out);
        }
    }

    std::mutex mu_;
    std::map<std::vector<long long>, std::shared_ptr<const WeightMultiset>> cache_;
};

CharTable& char_table() {
    static CharTable t;
    return t;
}

} // namespace

WeightMultiset char_weights(const KWeight& hw) {
    if (!is_dominant(hw)) throw std::invalid_argument("char_weights: weight not dominant");
    if (hw.empty()) throw std::invalid_argument("char_weights: empty weight");
    long long shift = hw.back();
    std::vector<long long> lam(hw.size());
    for (size_t i = 0; i < hw.size(); ++i) lam[i] = hw[i] - shift;
    auto base = char_table().get(lam);
    if (shift == 0) return *base;
    WeightMultiset out;
    for (auto& [w, m] : base->entries()) {
        std::vector<long long> ws(w.size());
        for (size_t i = 0; i < w.size(); ++i) ws[i] = w[i] + shift;
        out.add(ws, m);
    }
    return out;
}

Decomposition decompose(WeightMultiset ms) {
    Decomposition out;
    while (!ms.empty()) {
        // lexicographically greatest dominant weight present
        const WeightMultiset::Map& entries = ms.entries();
        auto best = entries.end();
        for (auto it = entries.begin(); it != entries.end(); ++it)
            if (is_dominant(it->first)) best = it;
        if (best == entries.end())
            throw std::domain_error("decompose: no dominant weight left, not a character");
        KWeight hw = best->first;
        Int mult = best->second;
        out[hw] += mult;
        WeightMultiset ch = char_weights(hw);
        for (auto& [w, m] : ch.entries()) ms.add(w, -mult * m); // throws if negative
    }
    return out;
}

Decomposition tensor(const KWeight& a, const KWeight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tensor: rank mismatch");
    return decompose(char_weights(a) * char_weights(b));
}

Decomposition exterior_power(const WeightMultiset& ms, int k) {
    if (k < 0 || static_cast<size_t>(k) > ms.support_size())
        throw std::invalid_argument("exterior_power: k out of range");
    std::vector<std::vector<long long>> ws;
    for (auto& [w, m] : ms.entries()) {
        if (m != 1) throw std::invalid_argument("exterior_power: weights must be multiplicity-free");
        ws.push_back(w);
    }
    size_t nw = ws.size();
    size_t len = ws.empty() ? 0 : ws[0].size();
    WeightMultiset wedge;
    std::vector<size_t> idx(static_cast<size_t>(k));
    // iterate over k-subsets
    for (size_t i = 0; i < static_cast<size_t>(k); ++i) idx[i] = i;
    if (k == 0) {
        std::vector<long long> zero(len, 0);
        wedge.add(zero, 1);
    } else {
        while (true) {
            std::vector<long long> sum(len, 0);
            for (size_t i : idx)
                for (size_t j = 0; j < len; ++j) sum[j] += ws[i][j];
            wedge.add(sum, 1);
            // next combination
            size_t i = static_cast<size_t>(k);
            while (i-- > 0) {
                if (idx[i] != i + nw - static_cast<size_t>(k)) {
                    ++idx[i];
                    for (size_t j = i + 1; j < static_cast<size_t>(k); ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto done;
            }
        }
    }
done:
    return decompose(std::move(wedge));
}

namespace {

WeightMultiset char_of_decomposition(const Decomposition& d) {
    WeightMultiset out;
    for (auto& [hw, m] : d) {
        WeightMultiset ch = char_weights(hw);
        for (auto& [w, c] : ch.entries()) out.add(w, m * c);
    }
    return out;
}

} // namespace

Decomposition wedge_pq(int n, int p, int q) {
    long long dmax = static_cast<long long>(n) * (n + 1) / 2;
    if (p < 0 || q < 0 || p > dmax || q > dmax)
        throw std::invalid_argument("wedge_pq: degree out of range");
    WeightMultiset wp = char_of_decomposition(exterior_power(p_plus_weights(n), p));
    WeightMultiset wq = char_of_decomposition(exterior_power(p_minus_weights(n), q));
    return decompose(wp * wq);
}

Int dim_of(const Decomposition& d) {
    Int t = 0;
    for (auto& [hw, m] : d) t += m * irrep_dim(hw);
    return t;
}

std::string format_weight(const std::vector<long long>& w) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

std::string ktype_table(int n) {
    long long d = static_cast<long long>(n) * (n + 1) / 2;
    std::ostringstream os;
    os << "K-type decompositions of wedge^p p+ (x) wedge^q p-  (n=" << n << ", p+q=" << d << ")\n";
    for (long long p = d; p >= 0; --p) {
        long long q = d - p;
        Decomposition dec = wedge_pq(n, static_cast<int>(p), static_cast<int>(q));
        os << '(' << p << ',' << q << "): ";
        bool first = true;
        for (auto& [hw, m] : dec) {
            if (!first) os << " + ";
            first = false;
            if (m != 1) os << m.str() << '*';
            os << format_weight(hw);
        }
        os << "   [dim " << dim_of(dec).str() << "]\n";
    }
    return os.str();
}

} // namespace gsp
