#include "mira/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mira/errors.hpp"

namespace mira {

Partition::Partition(std::vector<long> r) : rows(std::move(r)) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw Error("partition rows must be positive");
        if (i && rows[i] > rows[i - 1]) throw Error("partition rows must be non-increasing");
    }
}

long Partition::size() const { return std::accumulate(rows.begin(), rows.end(), 0L); }

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) out += (i ? "," : "") + std::to_string(rows[i]);
    return out + "]";
}

Partition conjugate(const Partition& lam) {
    std::vector<long> r;
    long width = lam.rows.empty() ? 0 : lam.rows[0];
    for (long k = 1; k <= width; ++k) {
        long count = 0;
        for (long m : lam.rows)
            if (m >= k) ++count;
        r.push_back(count);
    }
    return Partition(std::move(r));
}

HookData hook_arm_leg(const Partition& lam, long j, long k) {
    if (j < 1 || j > lam.num_rows() || k < 1 || k > lam.row(j))
        throw Error("box outside the Young diagram");
    HookData d;
    d.a = lam.row(j) - k;
    for (long jj = j + 1; jj <= lam.num_rows(); ++jj)
        if (lam.row(jj) >= k) ++d.l;
    d.h = d.a + d.l + 1;
    return d;
}

long hook_row_count(const Partition& lam, long j, long k) {
    if (j < 1 || j > lam.num_rows() || k < 1 || k > lam.row(j))
        throw Error("box outside the Young diagram");
    long count = 0;
    for (long l = j; l <= lam.num_rows(); ++l)
        if (lam.row(l) >= k) ++count;
    return lam.row(j) - k + count;
}

long ClassDatum::total_size() const {
    long n = 0;
    for (const auto& c : components) n += c.poly.degree() * c.partition.size();
    return n;
}

std::vector<LocalZetaFactor> predict_zeta_multiset(const ClassDatum& c) {
    std::vector<LocalZetaFactor> out;
    for (const auto& comp : c.components) {
        long d = comp.poly.degree();
        if (d < 1) throw Error("class component polynomial must be non-constant");
        for (long j = 1; j <= comp.partition.num_rows(); ++j)
            for (long k = 1; k <= comp.partition.row(j); ++k) {
                HookData hd = hook_arm_leg(comp.partition, j, k);
                out.push_back(LocalZetaFactor{d, hd.h, hd.a});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_conjugation_symmetry(const Partition& lam) {
    std::map<std::pair<long, long>, long> hl, ha;
    for (long j = 1; j <= lam.num_rows(); ++j)
        for (long k = 1; k <= lam.row(j); ++k) {
            HookData d = hook_arm_leg(lam, j, k);
            ++hl[{d.h, d.l}];
        }
    Partition conj = conjugate(lam);
    for (long j = 1; j <= conj.num_rows(); ++j)
        for (long k = 1; k <= conj.row(j); ++k) {
            HookData d = hook_arm_leg(conj, j, k);
            ++ha[{d.h, d.a}];
        }
    return hl == ha;
}

namespace {

void enumerate(long remaining, long cap, std::vector<long>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (long first = std::min(cap, remaining); first >= 1; --first) {
        stack.push_back(first);
        enumerate(remaining - first, first, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
    if (n < 1) throw Error("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<long> stack;
    enumerate(n, n, stack, out);
    return out;
}

}  // namespace mira
