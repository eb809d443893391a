// Transitive commuting pairs classified by 4-tuples, their enumeration, and
// closed-form symbols and homology of Abelian branched covers of torus knots
// in S^2 x S^1.
#pragma once

#include "lift.hpp"
#include "permutation.hpp"
#include "symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert {

// Complete conjugacy invariant (a1, a2, delta, i0) of a transitive commuting
// pair: a_i the orders, n = a1 a2 / delta the degree, i0 the twist of the
// torus-grid model.  The pair is recovered on a grid of a2/delta rows and a1
// columns; sigma1 shifts columns, sigma2 shifts rows and wraps the top row to
// the bottom with a column shift of i0 a1 / delta.
struct FourTuple {
    long long a1 = 1;
    long long a2 = 1;
    long long delta = 1;
    long long i0 = 0;

    long long degree() const { return a1 * a2 / delta; }

    void validate() const {
        if (a1 < 1 || a2 < 1 || delta < 1) throw error("4-tuple: entries must be positive");
        if (gcd_ll(a1, a2) % delta != 0) throw error("4-tuple: delta must divide gcd(a1,a2)");
        if ((a1 * a2) % delta != 0) throw error("4-tuple: degree is not an integer");
        if (i0 < 0 || i0 >= delta) throw error("4-tuple: i0 out of range");
        if (gcd_ll(i0, delta) != 1) throw error("4-tuple: i0 not coprime to delta");
    }

    friend bool operator==(const FourTuple&, const FourTuple&) = default;
    friend bool operator<(const FourTuple& a, const FourTuple& b) {
        if (a.a1 != b.a1) return a.a1 < b.a1;
        if (a.a2 != b.a2) return a.a2 < b.a2;
        if (a.delta != b.delta) return a.delta < b.delta;
        return a.i0 < b.i0;
    }
};

// Grid point (row, col) is sheet 1 + col + row*a1.
inline std::pair<Permutation, Permutation> pair_from_tuple(const FourTuple& t) {
    t.validate();
    const long long rows = t.a2 / t.delta, cols = t.a1;
    const long long n = rows * cols;
    const long long twist = t.i0 * (t.a1 / t.delta);
    std::vector<int> img1(n), img2(n);
    for (long long r = 0; r < rows; ++r)
        for (long long c = 0; c < cols; ++c) {
            long long at = c + r * cols;
            img1[at] = static_cast<int>((c + 1) % cols + r * cols + 1);
            if (r + 1 < rows)
                img2[at] = static_cast<int>(c + (r + 1) * cols + 1);
            else
                img2[at] = static_cast<int>((c + twist) % cols + 1);
        }
    return {Permutation::from_images(std::move(img1)), Permutation::from_images(std::move(img2))};
}

// Left inverse of pair_from_tuple up to simultaneous conjugacy.  The twist is
// read off from sigma2^{a2/delta} = sigma1^{i0 a1/delta}, which holds in any
// transitive commuting pair.
inline FourTuple tuple_from_pair(const Permutation& sigma1, const Permutation& sigma2) {
    if (sigma1.degree() != sigma2.degree()) throw error("tuple_from_pair: degree mismatch");
    if (!commute(sigma1, sigma2)) throw error("tuple_from_pair: pair does not commute");
    if (!orbits({sigma1, sigma2}).is_transitive())
        throw error("tuple_from_pair: pair is not transitive");
    FourTuple t;
    t.a1 = sigma1.order();
    t.a2 = sigma2.order();
    const long long n = sigma1.degree();
    if ((t.a1 * t.a2) % n != 0) throw error("tuple_from_pair: orders incompatible with degree");
    t.delta = t.a1 * t.a2 / n;
    Permutation rho = sigma2.power(t.a2 / t.delta);
    const long long step = t.a1 / t.delta;
    t.i0 = -1;
    for (long long j = 0; j < t.delta; ++j)
        if (sigma1.power(j * step) == rho) {
            t.i0 = j;
            break;
        }
    if (t.i0 < 0) throw error("tuple_from_pair: twist extraction failed");
    t.validate();
    return t;
}

// o(sigma1 sigma2) = (a1 a2/delta) / gcd(a1, (i0 a1 + a2)/delta)
inline long long product_order(const FourTuple& t) {
    t.validate();
    long long mu = gcd_ll(t.a1, (t.i0 * t.a1 + t.a2) / t.delta);
    return t.degree() / mu;
}

// All tuples of a given degree: a1 = delta*x, a2 = delta*y with x y delta = n,
// i0 ranging over units modulo delta.  Sorted lexicographically.
inline std::vector<FourTuple> enumerate_tuples(long long n) {
    if (n < 1) throw error("enumerate_tuples: degree must be positive");
    std::vector<FourTuple> out;
    for (long long delta = 1; delta <= n; ++delta) {
        if (n % delta != 0) continue;
        long long m = n / delta;
        for (long long x = 1; x <= m; ++x) {
            if (m % x != 0) continue;
            long long y = m / x;
            for (long long i0 = 0; i0 < std::max(delta, 1LL); ++i0) {
                if (gcd_ll(i0, delta) != 1) continue;
                out.push_back(FourTuple{delta * x, delta * y, delta, i0});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class GenusZeroClass { regular_cyclic, klein_four_type, positive_genus };

// Shape classification of the genus-zero situation for a1, a2 > 1: the two
// families delta=a1=a2 (the group is a single regular cycle) and delta=1,
// a1=a2=2 (the Klein four grid) are the only shapes a genus-zero cover can
// have; every other tuple yields positive genus.
inline GenusZeroClass genus_zero_classifier(const FourTuple& t) {
    t.validate();
    if (t.a1 == 1 || t.a2 == 1) throw error("genus_zero_classifier: requires a1, a2 > 1");
    if (t.delta == t.a1 && t.delta == t.a2) return GenusZeroClass::regular_cyclic;
    if (t.delta == 1 && t.a1 == 2 && t.a2 == 2) return GenusZeroClass::klein_four_type;
    return GenusZeroClass::positive_genus;
}

inline std::string to_string(GenusZeroClass c) {
    switch (c) {
    case GenusZeroClass::regular_cyclic: return "regular-cyclic";
    case GenusZeroClass::klein_four_type: return "klein-four-type";
    default: return "positive-genus";
    }
}

struct AbelianCoverReport {
    std::string case_tag; // "1.1" | "1.2" | "1.3" | "cyclic"
    std::optional<FourTuple> tuple;
    std::optional<long long> cyclic_n;
    SeifertSymbol cover_symbol;
    int genus = 0;
    AbelianGroup h1_closed_form;
    bool unbranched = false;
};

namespace detail {

inline void check_knot_parameters(long long alpha, long long beta) {
    if (alpha < 1) throw error("torus knot: alpha must be positive");
    if (beta < 0 || 2 * beta > alpha) throw error("torus knot: beta out of range [0, alpha/2]");
    if (gcd_ll(alpha, beta) != 1) throw error("torus knot: alpha and beta not coprime");
}

// Torsion list for the first case with a1, a2 > 1, rows of the divisor table
// applied in their printed order.
inline std::vector<long long> case13_torsion(long long alpha, const FourTuple& t) {
    const long long r1 = t.a1 / t.delta, r2 = t.a2 / t.delta;
    const long long g = gcd_ll(t.a1, t.a2), l = t.a1 / g * t.a2;
    std::vector<long long> ds;
    for (long long i = 3; i <= (t.a1 + t.a2) / t.delta; ++i) {
        long long d;
        if (i <= r1 && i <= r2)
            d = alpha / g;
        else if (r1 < i && i <= r2)
            d = alpha / t.a1;
        else if (r2 < i && i <= r1)
            d = alpha / t.a2;
        else
            d = alpha / l;
        if (d > 1) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace detail

// First case: omega(h) = (1), pair given by a 4-tuple with a_i | alpha.
inline AbelianCoverReport abelian_cover_tuple(long long alpha, long long beta, const FourTuple& t) {
    detail::check_knot_parameters(alpha, beta);
    t.validate();
    if (alpha % t.a1 != 0 || alpha % t.a2 != 0)
        throw error("abelian_cover: orders must divide alpha (forced by omega(q_i)^alpha = 1)");

    AbelianCoverReport rep;
    rep.tuple = t;
    const long long n = t.degree();
    if (t.a1 == 1) {
        rep.case_tag = "1.1";
        const long long a2 = t.a2, aprime = alpha / a2;
        for (long long j = 0; j < a2; ++j) rep.cover_symbol.ratios.push_back(make_ratio(alpha, beta));
        rep.cover_symbol.ratios.push_back(make_ratio(aprime, -beta));
        rep.genus = 0;
        rep.h1_closed_form.free_rank = 1;
        if (n == 1) {
            rep.h1_closed_form.torsion.clear(); // identity covering of S^2 x S^1
        } else {
            if (aprime > 1) rep.h1_closed_form.torsion.push_back(aprime);
            for (long long j = 0; j < a2 - 2; ++j)
                if (alpha > 1) rep.h1_closed_form.torsion.push_back(alpha);
        }
        rep.unbranched = (n == 1);
    } else if (t.a2 == 1) {
        rep.case_tag = "1.2";
        const long long a1 = t.a1, aprime = alpha / a1;
        rep.cover_symbol.ratios.push_back(make_ratio(aprime, beta));
        for (long long j = 0; j < a1; ++j) rep.cover_symbol.ratios.push_back(make_ratio(alpha, -beta));
        rep.genus = 0;
        rep.h1_closed_form.free_rank = 1;
        if (aprime > 1) rep.h1_closed_form.torsion.push_back(aprime);
        for (long long j = 0; j < a1 - 2; ++j)
            if (alpha > 1) rep.h1_closed_form.torsion.push_back(alpha);
        rep.unbranched = false;
    } else {
        rep.case_tag = "1.3";
        const long long alpha1 = alpha / t.a1, alpha2 = alpha / t.a2;
        const long long mu = gcd_ll(t.a1, (t.a2 + t.a1 * t.i0) / t.delta);
        long long num = 2 * t.delta + (t.a1 - 1) * (t.a2 - 1) - 1 - t.delta * mu;
        if (num % (2 * t.delta) != 0 || num < 0)
            throw error("abelian_cover: genus formula produced an invalid value");
        rep.genus = static_cast<int>(num / (2 * t.delta));
        for (long long j = 0; j < t.a2 / t.delta; ++j)
            rep.cover_symbol.ratios.push_back(make_ratio(alpha1, beta));
        for (long long j = 0; j < t.a1 / t.delta; ++j)
            rep.cover_symbol.ratios.push_back(make_ratio(alpha2, -beta));
        rep.h1_closed_form.free_rank = 2 * rep.genus + 1;
        rep.h1_closed_form.torsion = detail::case13_torsion(alpha, t);
        rep.unbranched = (product_order(t) == 1);
    }
    rep.cover_symbol.genus = rep.genus;
    rep.cover_symbol.validate();
    rep.h1_closed_form.validate();
    return rep;
}

// Second case: omega(h) an n-cycle, requires (n, alpha) = 1; the cover is the
// unbranched cyclic cover (Oo,0; k/alpha, -k/alpha) with
// k = (-beta alpha* alpha + beta)/n, alpha* alpha = 1 (mod n).
inline AbelianCoverReport abelian_cover_cyclic(long long alpha, long long beta, long long n) {
    detail::check_knot_parameters(alpha, beta);
    if (n < 1) throw error("abelian_cover: cyclic degree must be positive");
    if (gcd_ll(n, alpha) != 1)
        throw error("abelian_cover: cyclic case requires gcd(n, alpha) = 1");
    long long alphastar = mod_inverse(alpha, n);
    long long num = -beta * alphastar * alpha + beta;
    if (num % n != 0) throw error("abelian_cover: k is not an integer");
    long long k = num / n;
    AbelianCoverReport rep;
    rep.case_tag = "cyclic";
    rep.cyclic_n = n;
    rep.genus = 0;
    rep.cover_symbol.ratios.push_back(make_ratio(alpha, k));
    rep.cover_symbol.ratios.push_back(make_ratio(alpha, -k));
    rep.cover_symbol.validate();
    rep.h1_closed_form.free_rank = 1;
    rep.unbranched = true;
    return rep;
}

// The representation over the t_{alpha,beta} frame realizing a tuple cover:
// h -> (1), q1 -> sigma1, q2 -> sigma2, q0 derived from the product relation.
inline FrameRep tuple_rep_over_knot(long long alpha, long long beta, const FourTuple& t) {
    detail::check_knot_parameters(alpha, beta);
    auto [s1, s2] = pair_from_tuple(t);
    const int n = s1.degree();
    Frame frame;
    frame.symbol = make_symbol(0, {Ratio{1, 0}, make_ratio(alpha, beta), make_ratio(alpha, -beta)});
    frame.labels = {"t", "f1", "f2"};
    Permutation q0 = compose(s2, s1).inverse();
    FrameRep r;
    r.frame = frame;
    r.n = n;
    r.h_image = Permutation::identity(n);
    r.q_images = {q0, s1, s2};
    return r;
}

// The cyclic-case representation: h -> epsilon, q1 -> eps^{-alpha* beta},
// q2 -> eps^{alpha* beta}, q0 -> (1).
inline FrameRep cyclic_rep_over_knot(long long alpha, long long beta, long long n) {
    detail::check_knot_parameters(alpha, beta);
    if (n < 1 || gcd_ll(n, alpha) != 1) throw error("cyclic_rep_over_knot: invalid degree");
    long long alphastar = mod_inverse(alpha, n);
    Permutation eps = Permutation::big_cycle(static_cast<int>(n));
    Frame frame;
    frame.symbol = make_symbol(0, {Ratio{1, 0}, make_ratio(alpha, beta), make_ratio(alpha, -beta)});
    frame.labels = {"t", "f1", "f2"};
    FrameRep r;
    r.frame = frame;
    r.n = static_cast<int>(n);
    r.h_image = eps;
    r.q_images = {Permutation::identity(r.n), eps.power(-alphastar * beta), eps.power(alphastar * beta)};
    return r;
}

} // namespace seifert
