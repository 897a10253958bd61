#pragma once

// Linear codes over Z_{2^m} held in Howell (chain-ring canonical) form.

#include <algorithm>
#include <cstddef>
#include <future>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "qrz/polyring.hpp"

namespace qrz {

using Row = std::vector<u64>;

/// A submodule of Z_{2^m}^n. Rows are in Howell form: one row per pivot
/// column, pivot entry a power of two, entries above each pivot reduced
/// below it, and every module element vanishing on the first c columns
/// spanned by the rows whose pivot lies at or after c. The form is unique,
/// so two codes are equal iff their row lists are equal.
class LinearCode {
public:
    LinearCode(std::size_t n, Modulus mod) : n_(n), mod_(mod) {}

    std::size_t length() const noexcept { return n_; }
    const Modulus& modulus() const noexcept { return mod_; }
    unsigned m() const noexcept { return mod_.exponent(); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Valuation v of the pivot 2^v of row i.
    unsigned pivot_valuation(std::size_t i) const { return mod_.valuation(rows_[i][pivots_[i]]); }

    /// log2 |C| = sum over rows of (m - v_i).
    unsigned log2_size() const {
        unsigned s = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) s += m() - pivot_valuation(i);
        return s;
    }

    bool is_zero() const noexcept { return rows_.empty(); }

    bool contains(std::span<const u64> v) const {
        if (v.size() != n_) throw error(errc::shape_mismatch, "vector length differs from code length");
        Row x(v.begin(), v.end());
        for (auto& e : x) e = mod_.reduce(e);
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const std::size_t c = pivots_[j];
            const unsigned val = pivot_valuation(j);
            if (x[c] & ((u64{1} << val) - 1)) return false;
            const u64 t = x[c] >> val;
            if (t)
                for (std::size_t i = c; i < n_; ++i) x[i] = mod_.sub(x[i], mod_.mul(t, rows_[j][i]));
        }
        return std::all_of(x.begin(), x.end(), [](u64 e) { return e == 0; });
    }

    bool contains(const LinearCode& other) const {
        for (const auto& r : other.rows())
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.mod_ == b.mod_ && a.rows_ == b.rows_;
    }

    friend LinearCode canonical_form(std::vector<Row> rows, std::size_t n, const Modulus& mod);

private:
    std::size_t n_;
    Modulus mod_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

/// Howell form of the row span. For each column the row of least valuation
/// becomes the pivot (scaled so its entry is 2^v), the column is cleared in
/// the remaining rows, and 2^(m-v) times the pivot row, which vanishes on
/// this column, rejoins the work set so nothing of the span is lost.
inline LinearCode canonical_form(std::vector<Row> rows, std::size_t n, const Modulus& mod) {
    auto is_zero_row = [](const Row& r) { return std::all_of(r.begin(), r.end(), [](u64 e) { return e == 0; }); };
    for (auto& r : rows) {
        if (r.size() != n) throw error(errc::shape_mismatch, "row length differs from code length");
        for (auto& e : r) e = mod.reduce(e);
    }
    std::erase_if(rows, is_zero_row);

    LinearCode out(n, mod);
    const unsigned m = mod.exponent();
    for (std::size_t c = 0; c < n && !rows.empty(); ++c) {
        std::size_t best = rows.size();
        unsigned best_val = m;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const unsigned v = mod.valuation(rows[i][c]);
            if (v < best_val) {
                best_val = v;
                best = i;
            }
        }
        if (best == rows.size()) continue;
        Row pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        const u64 unit_inv = mod.inverse(pivot[c] >> best_val);
        for (auto& e : pivot) e = mod.mul(e, unit_inv);
        for (auto& r : rows) {
            const u64 t = r[c] >> best_val;
            if (t)
                for (std::size_t i = c; i < n; ++i) r[i] = mod.sub(r[i], mod.mul(t, pivot[i]));
        }
        if (best_val > 0) {
            Row aug(n, 0);
            const u64 s = u64{1} << (m - best_val);
            for (std::size_t i = c; i < n; ++i) aug[i] = mod.mul(s, pivot[i]);
            rows.push_back(std::move(aug));
        }
        std::erase_if(rows, is_zero_row);
        out.rows_.push_back(std::move(pivot));
        out.pivots_.push_back(c);
    }
    // Reduce entries above each pivot into [0, 2^v).
    for (std::size_t j = 0; j < out.rows_.size(); ++j) {
        const std::size_t c = out.pivots_[j];
        const unsigned v = mod.valuation(out.rows_[j][c]);
        for (std::size_t i = 0; i < j; ++i) {
            const u64 t = out.rows_[i][c] >> v;
            if (t)
                for (std::size_t col = c; col < n; ++col)
                    out.rows_[i][col] = mod.sub(out.rows_[i][col], mod.mul(t, out.rows_[j][col]));
        }
    }
    return out;
}

inline LinearCode zero_code(std::size_t n, const Modulus& mod) { return canonical_form({}, n, mod); }

inline LinearCode full_code(std::size_t n, const Modulus& mod) {
    std::vector<Row> rows(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return canonical_form(std::move(rows), n, mod);
}

/// The cyclic code spanned by the n shifts of g (the ideal (g) of R_n).
inline LinearCode code_from_polynomial(const ZPoly& g) {
    std::vector<Row> rows;
    rows.reserve(g.size());
    for (std::size_t s = 0; s < g.size(); ++s) rows.push_back(cyclic_shift(g, s).coeffs());
    return canonical_form(std::move(rows), g.size(), g.modulus());
}

inline unsigned cardinality_log2(const LinearCode& c) { return c.log2_size(); }

namespace detail {

inline void require_same_shape(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length() || !(a.modulus() == b.modulus()))
        throw error(errc::shape_mismatch, "codes differ in length or modulus");
}

/// Rows of the Howell form of `stacked` whose pivot lies at or beyond
/// `split`, restricted to the trailing columns. By the Howell property these
/// span every row-space element that vanishes on the first `split` columns.
inline std::vector<Row> tail_rows(std::vector<Row> stacked, std::size_t split, std::size_t width,
                                  const Modulus& mod) {
    const LinearCode h = canonical_form(std::move(stacked), split + width, mod);
    std::vector<Row> tail;
    for (std::size_t j = 0; j < h.rows().size(); ++j)
        if (h.pivots()[j] >= split) tail.emplace_back(h.rows()[j].begin() + static_cast<std::ptrdiff_t>(split),
                                                      h.rows()[j].end());
    return tail;
}

}  // namespace detail

/// Annihilator under the standard inner product: the kernel of x -> G x,
/// read off the Howell form of [G^T | I].
inline LinearCode dual(const LinearCode& c) {
    const std::size_t n = c.length(), k = c.rows().size();
    std::vector<Row> stacked(n, Row(k + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) stacked[j][i] = c.rows()[i][j];
        stacked[j][k + j] = 1;
    }
    return canonical_form(detail::tail_rows(std::move(stacked), k, n, c.modulus()), n, c.modulus());
}

/// a intersect b from the row space {(yA + zB, yA)}: elements with zero
/// first half have second half in both codes.
inline LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    detail::require_same_shape(a, b);
    const std::size_t n = a.length();
    std::vector<Row> stacked;
    for (const auto& r : a.rows()) {
        Row s(2 * n);
        std::copy(r.begin(), r.end(), s.begin());
        std::copy(r.begin(), r.end(), s.begin() + static_cast<std::ptrdiff_t>(n));
        stacked.push_back(std::move(s));
    }
    for (const auto& r : b.rows()) {
        Row s(2 * n, 0);
        std::copy(r.begin(), r.end(), s.begin());
        stacked.push_back(std::move(s));
    }
    return canonical_form(detail::tail_rows(std::move(stacked), n, n, a.modulus()), n, a.modulus());
}

inline LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
    detail::require_same_shape(a, b);
    std::vector<Row> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return canonical_form(std::move(rows), a.length(), a.modulus());
}

inline u64 inner_product(std::span<const u64> u, std::span<const u64> v, const Modulus& mod) {
    u64 s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return mod.reduce(s);
}

inline bool is_self_orthogonal(const LinearCode& c) {
    const auto& r = c.rows();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i; j < r.size(); ++j)
            if (inner_product(r[i], r[j], c.modulus()) != 0) return false;
    return true;
}

inline bool is_even_like(std::span<const u64> v, const Modulus& mod) {
    u64 s = 0;
    for (u64 x : v) s += x;
    return mod.reduce(s) == 0;
}

/// Appends the negated coordinate sum, so every extended word is even-like.
inline LinearCode extend(const LinearCode& c) {
    std::vector<Row> rows;
    for (const auto& r : c.rows()) {
        Row e = r;
        u64 s = 0;
        for (u64 x : r) s += x;
        e.push_back(c.modulus().neg(s));
        rows.push_back(std::move(e));
    }
    return canonical_form(std::move(rows), c.length() + 1, c.modulus());
}

inline LinearCode puncture(const LinearCode& c, std::size_t pos) {
    if (pos >= c.length()) throw error(errc::bad_position, "puncture position out of range");
    std::vector<Row> rows;
    for (const auto& r : c.rows()) {
        Row e = r;
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(pos));
        rows.push_back(std::move(e));
    }
    return canonical_form(std::move(rows), c.length() - 1, c.modulus());
}

/// The code mu_u(C): coordinate i moves to u*i mod n.
inline LinearCode permute_by_multiplier(const LinearCode& c, u64 u) {
    const std::size_t n = c.length();
    std::vector<Row> rows;
    for (const auto& r : c.rows()) {
        Row out(n, 0);
        for (std::size_t i = 0; i < n; ++i) out[(u % n) * i % n] = r[i];
        rows.push_back(std::move(out));
    }
    return canonical_form(std::move(rows), n, c.modulus());
}

/// Smallest unit u with mu_u(a) = b, if any.
inline std::optional<u64> equivalent_under_mu(const LinearCode& a, const LinearCode& b) {
    detail::require_same_shape(a, b);
    if (a.log2_size() != b.log2_size()) return std::nullopt;
    const std::size_t n = a.length();
    for (u64 u = 1; u < std::max<std::size_t>(n, 2); ++u) {
        if (gcd(u, n) != 1) continue;
        if (permute_by_multiplier(a, u) == b) return u;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Minimum Hamming weight.

struct WeightReport {
    std::size_t min_weight = 0;
    u64 min_weight_count = 0;
    u64 min_odd_like_count = 0;
    bool all_min_odd_like = false;
    bool enumerated = false;
    u64 words_examined = 0;
};

inline constexpr u64 default_weight_budget = u64{1} << 20;

namespace detail {

struct WeightTally {
    std::size_t min_weight = std::numeric_limits<std::size_t>::max();
    u64 count = 0;
    u64 odd = 0;
    u64 examined = 0;

    void observe(std::span<const u64> w, const Modulus& mod) {
        ++examined;
        std::size_t wt = 0;
        u64 sum = 0;
        for (u64 x : w) {
            wt += (x != 0);
            sum += x;
        }
        if (wt == 0) return;
        const bool odd_like = mod.reduce(sum) != 0;
        if (wt < min_weight) {
            min_weight = wt;
            count = 0;
            odd = 0;
        }
        if (wt == min_weight) {
            ++count;
            odd += odd_like;
        }
    }

    void merge(const WeightTally& o) {
        examined += o.examined;
        if (o.min_weight < min_weight) {
            min_weight = o.min_weight;
            count = o.count;
            odd = o.odd;
        } else if (o.min_weight == min_weight) {
            count += o.count;
            odd += o.odd;
        }
    }
};

/// Enumerates sum_j d_j * row_j with 0 <= d_j < radix_j for j < top, with the
/// top row's digit fixed per call. Each codeword arises exactly once.
inline WeightTally enumerate_slice(const LinearCode& c, std::span<const u64> radices, u64 top_digit) {
    const Modulus& mod = c.modulus();
    const std::size_t n = c.length();
    const std::size_t k = c.rows().size();
    const std::size_t top = k - 1;
    Row word(n, 0);
    for (std::size_t i = 0; i < n; ++i) word[i] = mod.mul(top_digit, c.rows()[top][i]);
    std::vector<Row> wrap(top);
    for (std::size_t j = 0; j < top; ++j) {
        wrap[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) wrap[j][i] = mod.mul(radices[j], c.rows()[j][i]);
    }
    std::vector<u64> digit(top, 0);
    WeightTally t;
    while (true) {
        t.observe(word, mod);
        std::size_t j = 0;
        for (; j < top; ++j) {
            const auto& r = c.rows()[j];
            for (std::size_t i = 0; i < n; ++i) word[i] = mod.add(word[i], r[i]);
            if (++digit[j] < radices[j]) break;
            digit[j] = 0;
            for (std::size_t i = 0; i < n; ++i) word[i] = mod.sub(word[i], wrap[j][i]);
        }
        if (j == top) break;
    }
    return t;
}

inline WeightReport to_report(const WeightTally& t, bool enumerated) {
    WeightReport r;
    r.min_weight = t.min_weight;
    r.min_weight_count = t.count;
    r.min_odd_like_count = t.odd;
    r.all_min_odd_like = t.count > 0 && t.odd == t.count;
    r.enumerated = enumerated;
    r.words_examined = t.examined;
    return r;
}

}  // namespace detail

/// Minimum Hamming weight. Within budget every codeword is visited once
/// (workers split the top generator's digit and min-reduce their tallies);
/// beyond it the result is an upper bound from scalar multiples of the
/// generators and a fixed-seed random sample, flagged enumerated = false.
inline WeightReport min_weight(const LinearCode& c, u64 budget = default_weight_budget,
                               bool require_exhaustive = false) {
    if (c.is_zero()) throw error(errc::no_nonzero_words, "the zero code has no nonzero words");
    const unsigned log2 = c.log2_size();
    const bool fits = log2 < 63 && (u64{1} << log2) <= budget;
    const Modulus& mod = c.modulus();
    const std::size_t k = c.rows().size();
    std::vector<u64> radices(k);
    for (std::size_t j = 0; j < k; ++j) radices[j] = u64{1} << (c.m() - c.pivot_valuation(j));

    if (fits) {
        const u64 top_radix = radices[k - 1];
        const u64 workers = std::clamp<u64>(std::thread::hardware_concurrency(), 1, top_radix);
        std::vector<std::future<detail::WeightTally>> jobs;
        for (u64 w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                detail::WeightTally t;
                for (u64 d = w; d < top_radix; d += workers) t.merge(detail::enumerate_slice(c, radices, d));
                return t;
            }));
        }
        detail::WeightTally total;
        for (auto& j : jobs) total.merge(j.get());
        return detail::to_report(total, true);
    }
    if (require_exhaustive)
        throw error(errc::budget_exceeded,
                    "code has 2^" + std::to_string(log2) + " words, budget " + std::to_string(budget));

    detail::WeightTally t;
    for (const auto& r : c.rows())
        for (unsigned s = 0; s < c.m(); ++s) {
            Row w(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = mod.mul(u64{1} << s, r[i]);
            t.observe(w, mod);
        }
    std::mt19937_64 rng(0x5eed);
    Row w(c.length());
    for (u64 sample = 0; sample < budget; ++sample) {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t j = 0; j < k; ++j) {
            const u64 d = rng() & (radices[j] - 1);
            if (d)
                for (std::size_t i = 0; i < w.size(); ++i) w[i] = mod.add(w[i], mod.mul(d, c.rows()[j][i]));
        }
        t.observe(w, mod);
    }
    return detail::to_report(t, false);
}

/// Exhaustive minimum weight with the even/odd-like split of the minimum
/// weight words.
inline WeightReport min_weight_parity(const LinearCode& c, u64 budget = default_weight_budget) {
    return min_weight(c, budget, true);
}

}  // namespace qrz
