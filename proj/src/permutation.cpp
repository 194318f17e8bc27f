#include "permlink/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "permlink/kernels.hpp"

namespace permlink {

namespace {

void check_bijection(const std::vector<std::int32_t>& vals) {
    const int n = static_cast<int>(vals.size());
    if (n == 0) {
        throw std::invalid_argument("permutation: empty input");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < n; ++i) {
        const std::int32_t v = vals[i];
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n) +
                                        " at position " + std::to_string(i + 1));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(v) +
                                        " at position " + std::to_string(i + 1));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::int32_t> one_line) : vals_(std::move(one_line)) {
    check_bijection(vals_);
}

Permutation Permutation::identity(int n) {
    std::vector<std::int32_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<std::int32_t> vals;
    const bool has_separator =
        text.find_first_of(", \t\r\n") != std::string_view::npos;
    if (has_separator) {
        std::size_t pos = 0;
        int token = 0;
        while (pos < text.size()) {
            while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
            if (pos >= text.size()) break;
            ++token;
            std::size_t end = pos;
            while (end < text.size() && text[end] != ',' && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
            const std::string tok(text.substr(pos, end - pos));
            try {
                std::size_t used = 0;
                const long v = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                vals.push_back(static_cast<std::int32_t>(v));
            } catch (const std::exception&) {
                throw std::invalid_argument("permutation: token '" + tok +
                                            "' at position " + std::to_string(token) +
                                            " is not an integer");
            }
            pos = end;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("permutation: character '" + std::string(1, c) +
                                            "' at position " + std::to_string(i + 1) +
                                            " is not a digit");
            }
            vals.push_back(c - '0');
        }
    }
    if (vals.empty()) throw std::invalid_argument("permutation: empty input");
    return Permutation(std::move(vals));
}

Permutation Permutation::inverse() const {
    std::vector<std::int32_t> inv(vals_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(vals_[i - 1]) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    std::vector<std::int32_t> out(vals_.size());
    for (int i = 1; i <= size(); ++i) out[i - 1] = (*this)(other(i));
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Permutation::format() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vals_[i]);
    }
    return out;
}

std::int64_t footrule_D(const Permutation& p) {
    return kernels::footrule(p.values());
}

std::int64_t inversions_I(const Permutation& p) {
    // Fenwick tree over values; for each position, count earlier values
    // greater than the current one.
    const int n = p.size();
    std::vector<std::int32_t> tree(static_cast<std::size_t>(n) + 1, 0);
    auto add = [&](int i) {
        for (; i <= n; i += i & -i) ++tree[i];
    };
    auto prefix = [&](int i) {
        std::int64_t s = 0;
        for (; i > 0; i -= i & -i) s += tree[i];
        return s;
    };
    std::int64_t inv = 0;
    for (int j = 1; j <= n; ++j) {
        const int v = p(j);
        inv += (j - 1) - prefix(v);
        add(v);
    }
    return inv;
}

int cycle_count(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int cyc = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++cyc;
        for (int j = i; !seen[j]; j = p(j)) seen[j] = true;
    }
    return cyc;
}

std::int64_t transposition_distance_T(const Permutation& p) {
    return p.size() - cycle_count(p);
}

std::int64_t statistic_x(const Permutation& p) {
    return footrule_D(p) - inversions_I(p) - p.size();
}

Permutation direct_sum(const Permutation& s, const Permutation& t) {
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(s.size()) + static_cast<std::size_t>(t.size()));
    for (int i = 1; i <= s.size(); ++i) out.push_back(s(i));
    for (int i = 1; i <= t.size(); ++i) out.push_back(t(i) + s.size());
    return Permutation(std::move(out));
}

Permutation translate(const Permutation& p) {
    const int n = p.size();
    std::vector<std::int32_t> out(static_cast<std::size_t>(n));
    if (p(n) == n) {
        // p fixes n: the shifted copy fixes 1.
        out[0] = 1;
        for (int k = 1; k <= n - 1; ++k) out[k] = p(k) + 1;
        return Permutation(std::move(out));
    }
    int a = 0;
    for (int i = 1; i <= n; ++i)
        if (p(i) == n) a = i;
    const int b = p(n);
    out[0] = b + 1;
    for (int k = 1; k <= n - 1; ++k) out[k] = (k == a) ? 1 : p(k) + 1;
    return Permutation(std::move(out));
}

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<std::int32_t> out(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) out[k - 1] = n + 1 - p(n + 1 - k);
    return Permutation(std::move(out));
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

bool contains_321(const Permutation& p) {
    // Middle-element scan: a decreasing triple exists iff some j has a
    // larger value before it and a smaller value after it.
    const int n = p.size();
    std::vector<std::int32_t> suffix_min(static_cast<std::size_t>(n) + 2);
    suffix_min[n + 1] = n + 1;
    for (int j = n; j >= 1; --j) suffix_min[j] = std::min(p(j), suffix_min[j + 1]);
    std::int32_t prefix_max = 0;
    for (int j = 1; j <= n; ++j) {
        if (prefix_max > p(j) && p(j) > suffix_min[j + 1]) return true;
        prefix_max = std::max(prefix_max, p(j));
    }
    return false;
}

std::vector<IntervalWitness> stabilized_intervals(const Permutation& p) {
    const int n = p.size();
    std::vector<IntervalWitness> out;
    for (int lo = 1; lo <= n; ++lo) {
        std::int32_t mn = n + 1, mx = 0;
        for (int hi = lo; hi <= n; ++hi) {
            mn = std::min(mn, p(hi));
            mx = std::max(mx, p(hi));
            if (lo == 1 && hi == n) continue;
            if (mn >= lo && mx <= hi) out.push_back({lo, hi});
        }
    }
    return out;
}

bool is_sif(const Permutation& p) {
    const int n = p.size();
    for (int lo = 1; lo <= n; ++lo) {
        std::int32_t mn = n + 1, mx = 0;
        for (int hi = lo; hi <= n; ++hi) {
            mn = std::min(mn, p(hi));
            mx = std::max(mx, p(hi));
            if (lo == 1 && hi == n) continue;
            if (mn >= lo && mx <= hi) return false;
        }
    }
    return true;
}

bool is_shallow(const Permutation& p) {
    return statistic_x(p) + cycle_count(p) == 0;
}

}  // namespace permlink
