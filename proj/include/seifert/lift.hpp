// Frames, monodromy representations into S_n, and the covering-lift engine.
//
// A frame marks fibers of a Seifert manifold by boundary tori of the
// complement F_0 x S^1; a representation of pi_1(F_0 x S^1) determines a
// branched covering.  The engine computes the cover's symbol, genus, and the
// inventory of lifted fibers for three representation shapes: trivial central
// image (per-cycle rule), cyclic image through a full n-cycle, and anything
// that factors through the orbits of the central element into those two.
#pragma once

#include "permutation.hpp"
#include "symbol.hpp"

#include <cassert>
#include <set>
#include <string>
#include <vector>

namespace seifert {

struct Frame {
    SeifertSymbol symbol;            // entries may include 0/1 markers
    std::vector<std::string> labels; // one per ratio, unique

    void validate() const {
        symbol.validate();
        if (labels.size() != symbol.ratios.size())
            throw error("frame: one label per ratio required");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) throw error("frame: labels must be unique");
        if (symbol.ratios.empty()) throw error("frame: at least one boundary required");
    }

    int boundaries() const { return static_cast<int>(symbol.ratios.size()); }
};

// Frame over s with extra 0/1 entries in front (the to-be-branched ordinary
// fibers), fresh labels b0, b1, ...  A symbol with no ratios still gets one
// 0/1 boundary so that the complement surface has free fundamental group.
inline Frame make_frame(const SeifertSymbol& s, int branching_slots) {
    s.validate();
    if (branching_slots < 0) throw error("make_frame: negative slot count");
    Frame f;
    f.symbol.genus = s.genus;
    int slots = branching_slots;
    if (s.ratios.empty() && slots == 0) slots = 1;
    for (int i = 0; i < slots; ++i) f.symbol.ratios.push_back(Ratio{1, 0});
    for (const auto& r : s.ratios) f.symbol.ratios.push_back(r);
    for (int i = 0; i < f.boundaries(); ++i) f.labels.push_back("b" + std::to_string(i));
    f.validate();
    return f;
}

struct FrameRep {
    Frame frame;
    int n = 1;
    Permutation h_image;
    std::vector<Permutation> q_images;       // one per boundary, frame order
    std::vector<Permutation> surface_images; // 2g entries: x1,y1,...,xg,yg
};

struct RepReport {
    std::vector<std::string> violations;
    std::vector<bool> meridian_trivial; // per boundary: omega(m_i) == (1)

    bool valid() const { return violations.empty(); }
};

// Diagnostics, not exceptions: centrality of h, the product relation
// q_1...q_t = [x_1,y_1]...[x_g,y_g], transitivity, and per-boundary meridian
// images.
inline RepReport validate_representation(const FrameRep& r, bool allow_disconnected = false) {
    RepReport rep;
    try {
        r.frame.validate();
    } catch (const error& e) {
        rep.violations.push_back(e.what());
        return rep;
    }
    if (r.n < 1) {
        rep.violations.push_back("degree must be positive");
        return rep;
    }
    if (r.h_image.degree() != r.n) rep.violations.push_back("h image degree mismatch");
    if (static_cast<int>(r.q_images.size()) != r.frame.boundaries())
        rep.violations.push_back("one q image per boundary required");
    if (static_cast<int>(r.surface_images.size()) != 2 * r.frame.symbol.genus)
        rep.violations.push_back("2g surface images required");
    for (const auto& p : r.q_images)
        if (p.degree() != r.n) rep.violations.push_back("q image degree mismatch");
    for (const auto& p : r.surface_images)
        if (p.degree() != r.n) rep.violations.push_back("surface image degree mismatch");
    if (!rep.violations.empty()) return rep;

    for (size_t i = 0; i < r.q_images.size(); ++i)
        if (!commute(r.h_image, r.q_images[i]))
            rep.violations.push_back("h image does not commute with q image #" + std::to_string(i));
    for (size_t i = 0; i < r.surface_images.size(); ++i)
        if (!commute(r.h_image, r.surface_images[i]))
            rep.violations.push_back("h image does not commute with surface image #" +
                                     std::to_string(i));

    Permutation lhs = word(r.q_images, r.n);
    std::vector<Permutation> commutators;
    for (int j = 0; j + 1 < static_cast<int>(r.surface_images.size()); j += 2)
        commutators.push_back(commutator(r.surface_images[j], r.surface_images[j + 1]));
    Permutation rhs = word(commutators, r.n);
    if (!(lhs == rhs)) rep.violations.push_back("product relation violated");

    std::vector<Permutation> gens = r.q_images;
    gens.push_back(r.h_image);
    for (const auto& p : r.surface_images) gens.push_back(p);
    if (!allow_disconnected && !orbits(r.n, gens).is_transitive())
        rep.violations.push_back("representation is not transitive");

    for (size_t i = 0; i < r.q_images.size(); ++i) {
        const Ratio& rt = r.frame.symbol.ratios[i];
        Permutation m = compose(r.q_images[i].power(rt.alpha), r.h_image.power(rt.beta));
        rep.meridian_trivial.push_back(m.is_identity());
    }
    return rep;
}

inline FrameRep conjugate_rep(const FrameRep& r, const Permutation& c) {
    FrameRep out = r;
    out.h_image = conjugate(r.h_image, c);
    for (auto& p : out.q_images) p = conjugate(p, c);
    for (auto& p : out.surface_images) p = conjugate(p, c);
    return out;
}

// Derive the last boundary image from the product relation.
inline FrameRep complete_rep(Frame frame, int n, Permutation h,
                             std::vector<Permutation> q_all_but_last,
                             std::vector<Permutation> surface = {}) {
    FrameRep r;
    r.frame = std::move(frame);
    r.n = n;
    r.h_image = std::move(h);
    if (surface.empty()) surface.assign(2 * r.frame.symbol.genus, Permutation::identity(n));
    r.surface_images = std::move(surface);
    std::vector<Permutation> commutators;
    for (int j = 0; j + 1 < static_cast<int>(r.surface_images.size()); j += 2)
        commutators.push_back(commutator(r.surface_images[j], r.surface_images[j + 1]));
    Permutation rhs = word(commutators, n);
    Permutation prefix = word(q_all_but_last, n);
    // word(q_1..q_t) = q_t o prefix, so q_t = rhs o prefix^{-1}
    Permutation last = compose(rhs, prefix.inverse());
    r.q_images = std::move(q_all_but_last);
    r.q_images.push_back(last);
    return r;
}

struct LiftedFiber {
    std::string source_label;
    int cycle_length = 1;
    Ratio ratio;
    bool branched = false;
    std::string new_label;
};

struct CoverResult {
    SeifertSymbol cover_symbol; // uncanonicalized, inventory order
    std::vector<LiftedFiber> fibers;
    int degree = 1;      // n
    int base_degree = 1; // m, degree of the induced map of base surfaces
    int fiber_degree = 1;// f, degree on a typical fiber

    int genus() const { return cover_symbol.genus; }
};

// Lift of a single marked fiber along a boundary cycle of length d, central
// image trivial.  The component's torus subgroup is <q^d, h>; the meridian
// q^alpha h^beta first returns after d/gcd(d,alpha) traversals, giving ratio
// (d beta/e) / (alpha/e) with e = gcd(d, alpha), branched iff d does not
// divide alpha.  For d | alpha this is the classical beta/(alpha/d).
inline std::pair<Ratio, bool> lift_fiber(const Ratio& ratio, long long d) {
    if (d < 1) throw error("lift_fiber: cycle length must be positive");
    long long e = gcd_ll(d, ratio.alpha);
    Ratio lifted = reduce_ratio(ratio.alpha / e, d * ratio.beta / e);
    bool branched = (ratio.alpha % d) != 0;
    return {lifted, branched};
}

namespace detail {

inline std::string lift_label(const std::string& prefix, int boundary, int cyc) {
    std::string head = prefix.empty() ? std::string() : prefix + ".";
    return head + "b" + std::to_string(boundary) + ".c" + std::to_string(cyc);
}

// Cycles including fixed points, ordered deterministically: length ascending,
// minimal element breaking ties.  Fixed points come first, matching the
// k_j-then-n_j ordering of the uniform cycle-type situation.
inline std::vector<std::vector<int>> ordered_cycles(const Permutation& p) {
    auto cyc = p.cycles(true);
    std::stable_sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return cyc;
}

} // namespace detail

// omega(h) = (1): one lifted fiber per cycle of each omega(q_i); cover genus
// from the Euler characteristic of the covering surface,
//   2 - 2g~ = n(2 - 2g) - sum over nontrivial cycles (d - 1).
inline CoverResult lift_cover_trivial_h(const FrameRep& r, const std::string& label_prefix = "") {
    RepReport rep = validate_representation(r);
    if (!rep.valid()) throw error("lift_cover_trivial_h: invalid representation: " + rep.violations.front());
    if (!r.h_image.is_identity()) throw error("lift_cover_trivial_h: h image must be the identity");

    CoverResult out;
    out.degree = r.n;
    out.base_degree = r.n;
    out.fiber_degree = 1;
    long long excess = 0; // sum of (d-1) over all cycles
    for (int i = 0; i < r.frame.boundaries(); ++i) {
        auto cycles = detail::ordered_cycles(r.q_images[i]);
        int k = 0;
        for (const auto& c : cycles) {
            long long d = static_cast<long long>(c.size());
            auto [ratio, branched] = lift_fiber(r.frame.symbol.ratios[i], d);
            LiftedFiber f;
            f.source_label = r.frame.labels[i];
            f.cycle_length = static_cast<int>(d);
            f.ratio = ratio;
            f.branched = branched;
            f.new_label = detail::lift_label(label_prefix, i, k++);
            out.fibers.push_back(std::move(f));
            excess += d - 1;
        }
    }
    long long g = r.frame.symbol.genus;
    long long num = 2 - static_cast<long long>(r.n) * (2 - 2 * g) + excess;
    if (num % 2 != 0 || num < 0)
        throw error("lift_cover_trivial_h: genus formula produced an invalid value");
    out.cover_symbol.genus = static_cast<int>(num / 2);
    for (const auto& f : out.fibers) out.cover_symbol.ratios.push_back(f.ratio);
    out.cover_symbol.validate();
    return out;
}

// omega(h) = epsilon^s with (n,s)=1 and omega(q_i) = epsilon^{r_i}: the cover
// of each boundary torus is connected, with
//   A_i = n alpha_i / d_i,  B_i = (beta_i + s* r_i alpha_i) / d_i,
//   d_i = gcd(n, beta_i + s* r_i alpha_i),  s* s = 1 (mod n).
// Genus is preserved.  The integer lifts r_i are normalized to sum to zero;
// different zero-sum lifts differ by slope transfers.
inline CoverResult lift_cover_cyclic(const FrameRep& r, long long s,
                                     const std::string& label_prefix = "") {
    RepReport rep = validate_representation(r);
    if (!rep.valid()) throw error("lift_cover_cyclic: invalid representation: " + rep.violations.front());
    const int n = r.n;
    Permutation eps = Permutation::big_cycle(n);
    if (gcd_ll(s, n) != 1) throw error("lift_cover_cyclic: exponent not coprime to degree");
    if (!(r.h_image == eps.power(s))) throw error("lift_cover_cyclic: h image is not epsilon^s");

    std::vector<long long> exps;
    for (const auto& q : r.q_images) {
        long long e = q(1) - 1;
        if (!(q == eps.power(e))) throw error("lift_cover_cyclic: q image is not a power of epsilon");
        exps.push_back(e);
    }
    long long total = 0;
    for (long long e : exps) total += e;
    if (total % n != 0) throw error("lift_cover_cyclic: exponent sum not divisible by degree");
    exps.back() -= total; // zero-sum integer lift

    long long sstar = mod_inverse(s, n);
    CoverResult out;
    out.degree = n;
    out.base_degree = 1;
    out.fiber_degree = n;
    out.cover_symbol.genus = r.frame.symbol.genus;
    for (int i = 0; i < r.frame.boundaries(); ++i) {
        const Ratio& rt = r.frame.symbol.ratios[i];
        long long x = rt.beta + sstar * exps[i] * rt.alpha;
        long long d = gcd_ll(n, x);
        if (d == 0) d = n;
        LiftedFiber f;
        f.source_label = r.frame.labels[i];
        f.cycle_length = n;
        f.ratio = make_ratio(n * rt.alpha / d, x / d);
        f.branched = (d != n);
        f.new_label = detail::lift_label(label_prefix, i, 0);
        out.cover_symbol.ratios.push_back(f.ratio);
        out.fibers.push_back(std::move(f));
    }
    out.cover_symbol.validate();
    return out;
}

// Factorization of a covering through the orbits of the central element: the
// quotient action on blocks has trivial h image, and on each block h acts as
// a single cycle of length n/m.  The residual exponents are the return maps
// of the boundary words read along that cycle.
struct Factorization {
    FrameRep quotient_rep;               // same frame, degree m, h -> (1)
    CoverResult quotient_result;
    int fiber_cycle_length = 1;          // f = n/m
    std::vector<long long> residual_exponents; // one per quotient fiber, zero-sum
};

inline Factorization factor_covering(const FrameRep& r, const std::string& label_prefix = "") {
    RepReport rep = validate_representation(r);
    if (!rep.valid()) throw error("factor_covering: invalid representation: " + rep.violations.front());

    auto hc = r.h_image.cycles(true);
    size_t f = hc.front().size();
    for (const auto& c : hc)
        if (c.size() != f) throw error("factor_covering: h image is not semiregular");

    std::vector<Permutation> gens = r.q_images;
    gens.push_back(r.h_image);
    for (const auto& p : r.surface_images) gens.push_back(p);
    BlockQuotient bq = block_quotient(gens, {r.h_image});

    Factorization out;
    out.fiber_cycle_length = static_cast<int>(f);
    out.quotient_rep.frame = r.frame;
    out.quotient_rep.n = bq.num_blocks;
    out.quotient_rep.h_image = bq.quotient_of(r.h_image);
    assert(out.quotient_rep.h_image.is_identity());
    for (const auto& q : r.q_images) out.quotient_rep.q_images.push_back(bq.quotient_of(q));
    for (const auto& p : r.surface_images)
        out.quotient_rep.surface_images.push_back(bq.quotient_of(p));
    out.quotient_result = lift_cover_trivial_h(out.quotient_rep, label_prefix);

    if (f > 1) {
        // Residual exponent per quotient fiber: the block-cycle return map
        // omega(q_i)^d commutes with the cycle h|block, hence is a power of it.
        size_t fiber_idx = 0;
        for (int i = 0; i < r.frame.boundaries(); ++i) {
            auto block_cycles = detail::ordered_cycles(out.quotient_rep.q_images[i]);
            for (const auto& bc : block_cycles) {
                long long d = static_cast<long long>(bc.size());
                int block_id = bc.front();
                int p0 = bq.blocks[block_id - 1].front();
                Permutation ret = r.q_images[i].power(d);
                int target = ret(p0);
                long long steps = 0;
                int x = p0;
                while (x != target) {
                    x = r.h_image(x);
                    ++steps;
                    if (steps > static_cast<long long>(f))
                        throw error("factor_covering: return map leaves the block");
                }
                out.residual_exponents.push_back(steps);
                ++fiber_idx;
            }
        }
        assert(fiber_idx == out.quotient_result.fibers.size());
        long long total = 0;
        for (long long e : out.residual_exponents) total += e;
        if (total % static_cast<long long>(f) != 0)
            throw error("factor_covering: residual exponents violate the product relation");
        if (!out.residual_exponents.empty()) out.residual_exponents.back() -= total;
    } else {
        out.residual_exponents.assign(out.quotient_result.fibers.size(), 0);
    }
    return out;
}

// General dispatch: trivial central image, full-cycle central image, or the
// factored composition.  Degrees compose multiplicatively.
inline CoverResult lift_cover(const FrameRep& r, const std::string& label_prefix = "") {
    RepReport rep = validate_representation(r);
    if (!rep.valid()) throw error("lift_cover: invalid representation: " + rep.violations.front());

    if (r.h_image.is_identity()) return lift_cover_trivial_h(r, label_prefix);

    if (r.h_image.order() == r.n && r.h_image.cycles().size() == 1) {
        // renumber sheets so that h becomes (1,2,...,n)
        std::vector<int> relabel(r.n);
        int x = 1;
        for (int k = 0; k < r.n; ++k) {
            relabel[x - 1] = k + 1;
            x = r.h_image(x);
        }
        Permutation c = Permutation::from_images(std::move(relabel));
        return lift_cover_cyclic(conjugate_rep(r, c), 1, label_prefix);
    }

    Factorization fac = factor_covering(r, label_prefix);
    const long long f = fac.fiber_cycle_length;
    CoverResult out;
    out.degree = r.n;
    out.base_degree = fac.quotient_result.base_degree;
    out.fiber_degree = static_cast<int>(f);
    if (out.base_degree * out.fiber_degree != out.degree)
        throw error("lift_cover: unsupported representation shape");
    out.cover_symbol.genus = fac.quotient_result.cover_symbol.genus;
    for (size_t j = 0; j < fac.quotient_result.fibers.size(); ++j) {
        const LiftedFiber& qf = fac.quotient_result.fibers[j];
        long long A = qf.ratio.alpha, B = qf.ratio.beta;
        long long x = B + fac.residual_exponents[j] * A;
        long long d = gcd_ll(f, x);
        if (d == 0) d = f;
        LiftedFiber lf;
        lf.source_label = qf.source_label;
        lf.cycle_length = static_cast<int>(qf.cycle_length * f);
        lf.ratio = make_ratio(f * A / d, x / d);
        lf.branched = qf.branched || (d != f);
        lf.new_label = qf.new_label;
        out.cover_symbol.ratios.push_back(lf.ratio);
        out.fibers.push_back(std::move(lf));
    }
    out.cover_symbol.validate();
    return out;
}

// e(cover) = (m/f) e(base): base-surface degree over typical-fiber degree.
inline bool check_euler_multiplicativity(const SeifertSymbol& base, const CoverResult& result) {
    Rational lhs = euler_number(result.cover_symbol);
    Rational rhs = make_rational(result.base_degree, result.fiber_degree) * euler_number(base);
    return lhs == rhs;
}

} // namespace seifert
