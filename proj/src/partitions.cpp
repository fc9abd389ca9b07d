#include "gsp/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsp {

namespace {

long long tri(long long m) { return m * (m + 1) / 2; } // C(m+1,2)

// binomial-weight target: (C(n+1,2) + (eps-1)) / 2
long long weight_target(long long n, int eps) {
    long long num = tri(n) + (eps - 1);
    if (num % 2 != 0) throw std::logic_error("weight target not integral");
    return num / 2;
}

void search(long long remaining, long long min_part, long long weight_left,
            std::vector<long long>& stack, std::vector<std::vector<long long>>& out) {
    if (remaining == 0) {
        if (weight_left == 0) out.push_back(stack);
        return;
    }
    // every future part is >= min_part, so the weight contribution is at
    // least remaining*(min_part+1)/2 and at most C(remaining+1,2)
    for (long long p = min_part; p <= remaining; ++p) {
        long long w = tri(p);
        if (w > weight_left) break;
        long long rest = remaining - p;
        long long rest_weight = weight_left - w;
        // 2*rest_weight must fit between rest*(p+1) and rest*(rest+1)
        if (rest * (p + 1) > 2 * rest_weight) continue;
        if (tri(rest) < rest_weight) continue;
        stack.push_back(p);
        search(rest, p, rest_weight, stack, out);
        stack.pop_back();
    }
}

} // namespace

int epsilon_for(long long n) {
    if (n < 1) throw std::invalid_argument("epsilon_for: n must be positive");
    long long r = n % 4;
    return (r == 0 || r == 3) ? 1 : 2;
}

std::vector<SpecialPartition> find_special_partitions(long long n) {
    if (n < 2) throw std::invalid_argument("find_special_partitions: n must be >= 2");
    int eps = epsilon_for(n);
    long long target = weight_target(n, eps);
    // first eps parts are forced equal to 1
    long long remaining = n - eps;
    long long weight_left = target - eps; // eps parts of weight C(2,2)=1
    std::vector<std::vector<long long>> tails;
    if (remaining == 0) {
        if (weight_left == 0) tails.push_back({});
    } else if (weight_left > 0) {
        std::vector<long long> stack;
        search(remaining, 1, weight_left, stack, tails);
    }
    std::vector<SpecialPartition> out;
    out.reserve(tails.size());
    for (auto& t : tails) {
        SpecialPartition p;
        p.n = n;
        p.eps = eps;
        p.parts.assign(static_cast<size_t>(eps), 1);
        p.parts.insert(p.parts.end(), t.begin(), t.end());
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const SpecialPartition& a, const SpecialPartition& b) { return a.parts < b.parts; });
    return out;
}

std::vector<long long> scan_exceptions(long long n_max) {
    if (n_max < 2) throw std::invalid_argument("scan_exceptions: n_max must be >= 2");
    std::vector<long long> out;
    for (long long n = 2; n <= n_max; ++n)
        if (find_special_partitions(n).empty()) out.push_back(n);
    return out;
}

void validate(const SpecialPartition& p) {
    if (p.n < 2) throw std::invalid_argument("partition: n must be >= 2");
    if (p.eps != epsilon_for(p.n)) throw std::invalid_argument("partition: wrong epsilon");
    if (p.parts.empty() || !std::is_sorted(p.parts.begin(), p.parts.end()))
        throw std::invalid_argument("partition: parts must be ascending");
    if (static_cast<long long>(p.parts.size()) < p.eps)
        throw std::invalid_argument("partition: fewer parts than epsilon");
    long long sum = 0, wsum = 0;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        long long x = p.parts[i];
        if (x < 1) throw std::invalid_argument("partition: parts must be positive");
        if (i < static_cast<size_t>(p.eps) && x != 1)
            throw std::invalid_argument("partition: first eps parts must equal 1");
        sum += x;
        wsum += tri(x);
    }
    if (sum != p.n) throw std::invalid_argument("partition: parts do not sum to n");
    if (wsum != weight_target(p.n, p.eps))
        throw std::invalid_argument("partition: binomial weights miss the target");
}

EmbeddingDatum embedding_datum(const SpecialPartition& p) {
    validate(p);
    EmbeddingDatum d;
    d.partition = p;
    // the first eps parts give eps copies of GSp_2 over Q
    for (int i = 0; i < p.eps; ++i) d.groups.push_back({1, 1});
    // remaining parts grouped by equal minimal value
    size_t i = static_cast<size_t>(p.eps);
    while (i < p.parts.size()) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        d.groups.push_back({p.parts[i], static_cast<long long>(j - i)});
        i = j;
    }
    d.ambient_dim = tri(p.n);
    d.subvariety_dim = 0;
    for (long long x : p.parts) d.subvariety_dim += tri(x);
    d.codim = d.ambient_dim - d.subvariety_dim;
    if (2 * d.codim != d.ambient_dim + 1 - p.eps)
        throw std::logic_error("codimension identity failed");
    d.twist = p.eps + d.codim;
    d.hv_exponent = 1 - p.part_count();
    return d;
}

} // namespace gsp
