#pragma once

/// Compositions (ordered tuples of positive integers) and their algebra:
/// reversal, duality via complemented partial sums, adjacent-merge
/// coarsenings, catenation splits, the quasi-shuffle (stuffle) product,
/// and unordered partitions with their symmetric-function coefficients.

#include "mhs/integer.hpp"
#include "mhs/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhs {

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        for (auto v : parts_)
            if (v < 1) throw std::invalid_argument("Composition: parts must be >= 1");
    }
    Composition(std::initializer_list<std::int64_t> parts)
        : Composition(std::vector<std::int64_t>(parts)) {}

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::int64_t weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Composition& a, const Composition& b) {
        return !(a == b);
    }
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts_ < b.parts_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s.empty() ? "()" : s;
    }

private:
    std::vector<std::int64_t> parts_;
};

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<std::int64_t> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

inline Composition reverse(const Composition& s) {
    std::vector<std::int64_t> parts(s.parts().rbegin(), s.parts().rend());
    return Composition(std::move(parts));
}

/// The dual composition: same weight, proper partial-sum set replaced by
/// its complement in {1, ..., weight-1}. An involution.
inline Composition dual(const Composition& s) {
    if (s.empty()) throw std::invalid_argument("dual: empty composition");
    const std::int64_t w = s.weight();
    std::vector<bool> in_sums(static_cast<std::size_t>(w), false);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < s.length(); ++i) {
        acc += s.parts()[i];
        in_sums[static_cast<std::size_t>(acc)] = true;
    }
    std::vector<std::int64_t> parts;
    std::int64_t prev = 0;
    for (std::int64_t v = 1; v < w; ++v) {
        if (!in_sums[static_cast<std::size_t>(v)]) {
            parts.push_back(v - prev);
            prev = v;
        }
    }
    parts.push_back(w - prev);
    return Composition(std::move(parts));
}

/// All 2^(l-1) compositions obtained by summing runs of adjacent parts,
/// from s itself down to the single part (|s|).
inline std::vector<Composition> coarsenings(const Composition& s) {
    const std::size_t l = s.length();
    if (l == 0) return {s};
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (l - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (l - 1)); ++mask) {
        std::vector<std::int64_t> parts;
        std::int64_t run = s.parts()[0];
        for (std::size_t i = 1; i < l; ++i) {
            if (mask & (std::uint64_t{1} << (i - 1))) {
                run += s.parts()[i]; // merge across this gap
            } else {
                parts.push_back(run);
                run = s.parts()[i];
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// All 2^(l-1) ordered decompositions of s into nonempty contiguous blocks
/// whose catenation is s.
inline std::vector<std::vector<Composition>> splits(const Composition& s) {
    const std::size_t l = s.length();
    if (l == 0) throw std::invalid_argument("splits: empty composition");
    std::vector<std::vector<Composition>> out;
    out.reserve(std::size_t{1} << (l - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (l - 1)); ++mask) {
        std::vector<Composition> blocks;
        std::vector<std::int64_t> cur{s.parts()[0]};
        for (std::size_t i = 1; i < l; ++i) {
            if (mask & (std::uint64_t{1} << (i - 1))) {
                blocks.emplace_back(std::move(cur));
                cur.clear();
            }
            cur.push_back(s.parts()[i]);
        }
        blocks.emplace_back(std::move(cur));
        out.push_back(std::move(blocks));
    }
    return out;
}

using CompositionMultiset = std::map<Composition, std::int64_t>;

namespace detail {
inline void stuffle_rec(const std::vector<std::int64_t>& a, std::size_t na,
                        const std::vector<std::int64_t>& b, std::size_t nb,
                        std::vector<std::int64_t>& tail, CompositionMultiset& out) {
    if (na == 0 || nb == 0) {
        std::vector<std::int64_t> parts(a.begin(), a.begin() + static_cast<long>(na));
        parts.insert(parts.end(), b.begin(), b.begin() + static_cast<long>(nb));
        parts.insert(parts.end(), tail.rbegin(), tail.rend());
        out[Composition(std::move(parts))] += 1;
        return;
    }
    tail.push_back(a[na - 1]);
    stuffle_rec(a, na - 1, b, nb, tail, out);
    tail.back() = b[nb - 1];
    stuffle_rec(a, na, b, nb - 1, tail, out);
    tail.back() = a[na - 1] + b[nb - 1];
    stuffle_rec(a, na - 1, b, nb - 1, tail, out);
    tail.pop_back();
}
} // namespace detail

/// Quasi-shuffle product: the multiset C with H(a;n)H(b;n) = sum over C of
/// H(c;n) for every n, built by recursion over last parts (take from a,
/// take from b, or merge the two).
inline CompositionMultiset stuffle(const Composition& a, const Composition& b) {
    CompositionMultiset out;
    std::vector<std::int64_t> tail;
    detail::stuffle_rec(a.parts(), a.length(), b.parts(), b.length(), tail, out);
    return out;
}

// ---- unordered partitions ----

struct Partition {
    std::vector<std::int64_t> parts; // ascending

    std::int64_t total() const {
        return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    }
    std::size_t length() const { return parts.size(); }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts == b.parts;
    }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

/// All partitions of l as ascending tuples, in lexicographic order:
/// (1,1,1), (1,2), (3) for l = 3.
inline std::vector<Partition> partitions(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("partitions: l must be >= 1");
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t rem, std::int64_t min_part) -> void {
        if (rem == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (std::int64_t v = min_part; v <= rem; ++v) {
            cur.push_back(v);
            self(self, rem - v, v);
            cur.pop_back();
        }
    };
    rec(rec, l, 1);
    return out;
}

/// Coefficient of the product H(lambda_1 s) ... H(lambda_r s) in the
/// expansion of l! H({s}^l): (-1)^(l-r) l! / (prod_j j^(m_j) m_j!) with
/// m_j the multiplicity of j in lambda. This is the elementary-in-power-sum
/// expansion from Newton's identities; it is validated against brute-force
/// evaluation in the tests.
inline Rational c_lambda(const Partition& lambda) {
    const std::int64_t l = lambda.total();
    const std::size_t r = lambda.length();
    Integer z(1);
    std::int64_t run_val = 0, run_len = 0;
    auto flush = [&] {
        if (run_len == 0) return;
        z *= Integer(run_val).pow(static_cast<std::uint64_t>(run_len));
        z *= Integer::factorial(static_cast<std::uint64_t>(run_len));
    };
    for (auto v : lambda.parts) {
        if (v == run_val) {
            ++run_len;
        } else {
            flush();
            run_val = v;
            run_len = 1;
        }
    }
    flush();
    Integer c = Integer::factorial(static_cast<std::uint64_t>(l)).divexact(z);
    if ((l - static_cast<std::int64_t>(r)) % 2 != 0) c = -c;
    return Rational(std::move(c));
}

// ---- parsing ----

namespace detail {
inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline std::int64_t parse_int(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("composition: expected an integer");
    return std::stoll(std::string(s.substr(start, i - start)));
}

// item := INT [^ INT] | '{' list '}' '^' INT
// list := item (',' item)*
inline void parse_item(std::string_view s, std::size_t& i,
                       std::vector<std::int64_t>& out);

inline void parse_list(std::string_view s, std::size_t& i,
                       std::vector<std::int64_t>& out) {
    parse_item(s, i, out);
    skip_ws(s, i);
    while (i < s.size() && s[i] == ',') {
        ++i;
        parse_item(s, i, out);
        skip_ws(s, i);
    }
}

inline void parse_item(std::string_view s, std::size_t& i,
                       std::vector<std::int64_t>& out) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == '{') {
        ++i;
        std::vector<std::int64_t> group;
        parse_list(s, i, group);
        skip_ws(s, i);
        if (i >= s.size() || s[i] != '}')
            throw std::invalid_argument("composition: missing '}'");
        ++i;
        skip_ws(s, i);
        if (i >= s.size() || s[i] != '^')
            throw std::invalid_argument("composition: '{...}' needs '^<count>'");
        ++i;
        std::int64_t d = parse_int(s, i);
        if (d < 0) throw std::invalid_argument("composition: negative repetition");
        for (std::int64_t rep = 0; rep < d; ++rep)
            out.insert(out.end(), group.begin(), group.end());
        return;
    }
    std::int64_t v = parse_int(s, i);
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
        ++i;
        std::int64_t d = parse_int(s, i);
        if (d < 0) throw std::invalid_argument("composition: negative repetition");
        for (std::int64_t rep = 0; rep < d; ++rep) out.push_back(v);
        return;
    }
    out.push_back(v);
}
} // namespace detail

/// Parse "1,2,1", "1^4", "{2,4}^3", "{1^2,2}^2,3" (whitespace-insensitive).
/// An empty string denotes the empty composition.
inline Composition parse_composition(std::string_view text) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    if (i == text.size()) return Composition{};
    std::vector<std::int64_t> parts;
    detail::parse_list(text, i, parts);
    detail::skip_ws(text, i);
    if (i != text.size())
        throw std::invalid_argument("composition: trailing characters in '" +
                                    std::string(text) + "'");
    return Composition(std::move(parts));
}

/// Every composition of weight 1..max_weight, ordered by weight then
/// lexicographically. 2^(w-1) entries per weight w.
inline std::vector<Composition> all_compositions(std::int64_t max_weight) {
    std::vector<Composition> out;
    for (std::int64_t w = 1; w <= max_weight; ++w) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (w - 1)); ++mask) {
            std::vector<std::int64_t> parts;
            std::int64_t run = 1;
            for (std::int64_t gap = 0; gap < w - 1; ++gap) {
                if (mask & (std::uint64_t{1} << gap)) {
                    ++run;
                } else {
                    parts.push_back(run);
                    run = 1;
                }
            }
            parts.push_back(run);
            out.emplace_back(std::move(parts));
        }
    }
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() < b.parts();
    });
    return out;
}

} // namespace mhs
