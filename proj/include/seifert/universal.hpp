// Constructive realization of zero-Euler-number symbols as branched coverings
// of (S^2 x S^1, t_{alpha,beta}): explicit builders for the four elementary
// covering steps, the recursive planner, and an independent plan verifier.
//
// A plan is a tower of frame representations.  Fibers are tracked by
// deterministic labels "s<step>.b<boundary>.c<cycle>"; the knot-preimage
// labels of a step are the lifts of tracked fibers of the step below, seeded
// by the branching fiber "t" of the bottom frame.
#pragma once

#include "abelian.hpp"
#include "lift.hpp"
#include "symbol.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace seifert {

struct PlanStep {
    FrameRep rep;
    SeifertSymbol base;
    SeifertSymbol expected_cover;
    std::vector<std::string> branch_labels;
    std::vector<std::string> knot_preimage_labels;
};

// steps[0] covers the target; steps.back() covers (Oo,0; beta/alpha, -beta/alpha).
struct CoveringPlan {
    SeifertSymbol target;
    long long alpha = 3;
    long long beta = 1;
    std::vector<PlanStep> steps;
    long long total_degree = 1;
};

namespace detail {

// Bottom-up tower construction with fiber bookkeeping.
class TowerBuilder {
public:
    TowerBuilder(long long alpha, long long beta) : alpha_(alpha), beta_(beta) {
        check_knot_parameters(alpha, beta);
    }

    long long alpha() const { return alpha_; }
    long long beta() const { return beta_; }
    const std::vector<PlanStep>& steps() const { return steps_; }
    const std::vector<std::string>& tracked() const { return tracked_; }
    const std::vector<std::string>& ratio_labels() const { return ratio_labels_; }
    const SeifertSymbol& intended() const { return intended_; }

    // Labels currently tracked but not assigned to a ratio of the intended
    // symbol; these are the spare 0/1 fibers over the knot.
    std::vector<std::string> spare_labels() const {
        std::set<std::string> used(ratio_labels_.begin(), ratio_labels_.end());
        std::vector<std::string> out;
        for (const auto& l : tracked_)
            if (!used.count(l)) out.push_back(l);
        return out;
    }

    // The 2alpha-fold covering (Oo,0;) -> (S^2 x S^1, t_{alpha,beta}) with
    // omega(q0) = (a-1, 2a-1)(a, 2a),
    // omega(q1) = (1, ..., a-1, 2a)(a, ..., 2a-1),
    // omega(q2) = (2a, ..., a+1)(a, ..., 1); 2alpha - 2 fibers over the knot.
    void lemma41() {
        if (!steps_.empty()) throw error("lemma41: must be the bottom step");
        const long long a = alpha_;
        if (a < 2) throw error("lemma41: alpha must be at least 2");
        const int n = static_cast<int>(2 * a);
        std::vector<int> c1a, c1b, c2a, c2b;
        for (long long v = 1; v <= a - 1; ++v) c1a.push_back(static_cast<int>(v));
        c1a.push_back(n);
        for (long long v = a; v <= 2 * a - 1; ++v) c1b.push_back(static_cast<int>(v));
        for (long long v = 2 * a; v >= a + 1; --v) c2a.push_back(static_cast<int>(v));
        for (long long v = a; v >= 1; --v) c2b.push_back(static_cast<int>(v));
        Permutation q0 = Permutation::from_cycles(
            n, {{static_cast<int>(a - 1), static_cast<int>(2 * a - 1)},
                {static_cast<int>(a), static_cast<int>(2 * a)}});
        Permutation q1 = Permutation::from_cycles(n, {c1a, c1b});
        Permutation q2 = Permutation::from_cycles(n, {c2a, c2b});

        Frame frame;
        frame.symbol = make_symbol(
            0, {Ratio{1, 0}, make_ratio(alpha_, beta_), make_ratio(alpha_, -beta_)});
        frame.labels = {"t", "f1", "f2"};
        FrameRep rep;
        rep.frame = frame;
        rep.n = n;
        rep.h_image = Permutation::identity(n);
        rep.q_images = {q0, q1, q2};
        push_step(std::move(rep),
                  make_symbol(0, {make_ratio(alpha_, beta_), make_ratio(alpha_, -beta_)}),
                  {"t"});
        intended_ = make_symbol(0, {});
        ratio_labels_.clear();
    }

    // Degree-k cyclic covering of (Oo,0;) branched along two knot-preimage
    // fibers; every other tracked fiber lifts k times.
    void lemma42(long long k) {
        require_intended_empty(0);
        if (k < 1) throw error("lemma42: k must be positive");
        if (alpha_ < 3 && k > 1) throw error("lemma42: alpha must be at least 3");
        if (tracked_.size() < 2) throw error("lemma42: need two knot-preimage fibers");
        const int n = static_cast<int>(k);
        Permutation eps = Permutation::big_cycle(n);
        Frame frame;
        std::vector<Permutation> qs;
        for (size_t i = 0; i < tracked_.size(); ++i) {
            frame.symbol.ratios.push_back(Ratio{1, 0});
            frame.labels.push_back(tracked_[i]);
            if (i == 0)
                qs.push_back(eps);
            else if (i == 1)
                qs.push_back(eps.inverse());
            else
                qs.push_back(Permutation::identity(n));
        }
        FrameRep rep;
        rep.frame = std::move(frame);
        rep.n = n;
        rep.h_image = Permutation::identity(n);
        rep.q_images = std::move(qs);
        push_step(std::move(rep), make_symbol(0, {}), tracked_);
        intended_ = make_symbol(0, {});
        ratio_labels_.clear();
    }

    // Double covering of (Oo,0;) branched along 2g+2 knot-preimage fibers,
    // raising the base genus to g.
    void lemma43(int g) {
        require_intended_empty(0);
        if (g < 0) throw error("lemma43: genus must be non-negative");
        if (tracked_.size() < static_cast<size_t>(2 * g + 2))
            throw error("lemma43: need 2g+2 knot-preimage fibers");
        Frame frame;
        std::vector<Permutation> qs;
        Permutation swap2 = Permutation::from_cycles(2, {{1, 2}});
        for (size_t i = 0; i < tracked_.size(); ++i) {
            frame.symbol.ratios.push_back(Ratio{1, 0});
            frame.labels.push_back(tracked_[i]);
            qs.push_back(i < static_cast<size_t>(2 * g + 2) ? swap2 : Permutation::identity(2));
        }
        FrameRep rep;
        rep.frame = std::move(frame);
        rep.n = 2;
        rep.h_image = Permutation::identity(2);
        rep.q_images = std::move(qs);
        push_step(std::move(rep), make_symbol(0, {}), tracked_);
        intended_ = make_symbol(g, {});
        ratio_labels_.clear();
    }

    // Degree-a cyclic covering of (Oo,g;) along the frame
    // (Oo,g; 0/1, 0/1, b/1, -b/1) with omega(h) = eps^{b*}, producing
    // (Oo,g; b/a, -b/a) whose exceptional fibers sit over the knot.
    void lemma44(const Ratio& b_over_a) {
        require_intended_empty(intended_.genus);
        const long long a = b_over_a.alpha, b = b_over_a.beta;
        if (gcd_ll(a, b) != 1 || a < 1) throw error("lemma44: ratio must be reduced");
        if (tracked_.size() < 4) throw error("lemma44: need four knot-preimage fibers");
        const int g = intended_.genus;
        const int n = static_cast<int>(a);
        Permutation eps = Permutation::big_cycle(n);
        long long bstar = (a == 1) ? 0 : mod_inverse(b, a);

        Frame frame;
        frame.symbol.genus = g;
        std::vector<Permutation> qs;
        frame.symbol.ratios = {Ratio{1, 0}, Ratio{1, 0}, Ratio{1, b}, Ratio{1, -b}};
        frame.labels = {tracked_[0], tracked_[1], tracked_[2], tracked_[3]};
        qs = {eps.inverse(), eps, eps.inverse(), eps};
        for (size_t i = 4; i < tracked_.size(); ++i) {
            frame.symbol.ratios.push_back(Ratio{1, 0});
            frame.labels.push_back(tracked_[i]);
            qs.push_back(Permutation::identity(n));
        }
        FrameRep rep;
        rep.frame = std::move(frame);
        rep.n = n;
        rep.h_image = eps.power(bstar);
        rep.q_images = std::move(qs);
        rep.surface_images.assign(2 * g, Permutation::identity(n));
        const CoverResult& res = push_step(std::move(rep), make_symbol(g, {}), tracked_);

        intended_ = make_symbol(g, {reduce_ratio(a, b), reduce_ratio(a, -b)});
        ratio_labels_ = {label_over(res, steps_.back().rep.frame.labels[1]),
                         label_over(res, steps_.back().rep.frame.labels[0])};
        expect_ratio(res, ratio_labels_[0], reduce_ratio(a, b));
        expect_ratio(res, ratio_labels_[1], reduce_ratio(a, -b));
    }

    // Inductive step of the recursion: degree-v covering with omega(h) = eps_v
    // and trivial boundary images over the base
    // (Oo,g; u/1, b_1/a_1, ..., b_m/a_m), b_i/a_i = v beta_i/alpha_i reduced.
    // Each frame fiber is a tracked fiber of the tower below: the fiber whose
    // sub-target coordinate is (u a_1 + b_1)/a_1 carries the b_1/a_1 entry,
    // the remaining ratio fibers carry b_i/a_i, and a spare 0/1 fiber over
    // the knot carries u/1.  The cover restores the ratios beta_i/alpha_i and
    // adds u/v.
    void cyclic_step(long long u, long long v, const std::vector<Ratio>& originals,
                     const std::vector<Ratio>& transformed) {
        if (v < 1 || gcd_ll(v, u) != 1) throw error("cyclic_step: u/v must be reduced");
        if (originals.size() != transformed.size() || transformed.empty())
            throw error("cyclic_step: ratio lists misaligned");
        const int g = intended_.genus;
        const int n = static_cast<int>(v);

        // Match needed sub-target coordinates against the tracked ratio
        // fibers by value; integer entries may fall back to spare 0/1 fibers
        // over the knot, which is the transfer-move re-coordinatization.
        std::vector<std::string> spares = spare_labels();
        size_t next_spare = 0;
        std::vector<bool> used(intended_.ratios.size(), false);
        auto label_for = [&](const Ratio& value) -> std::string {
            for (size_t j = 0; j < intended_.ratios.size(); ++j)
                if (!used[j] && intended_.ratios[j] == value) {
                    used[j] = true;
                    return ratio_labels_.at(j);
                }
            if (value.alpha == 1 && next_spare < spares.size()) return spares[next_spare++];
            throw error("cyclic_step: no tracked fiber available for " + to_string(value));
        };

        std::vector<std::string> frame_labels;
        frame_labels.push_back(label_for(Ratio{1, 0})); // the u/1 fiber, spare by construction
        Ratio absorbed{transformed[0].alpha, u * transformed[0].alpha + transformed[0].beta};
        frame_labels.push_back(label_for(absorbed));
        for (size_t i = 1; i < transformed.size(); ++i) frame_labels.push_back(label_for(transformed[i]));

        Frame frame;
        frame.symbol.genus = g;
        frame.symbol.ratios.push_back(Ratio{1, u});
        for (const auto& r : transformed) frame.symbol.ratios.push_back(r);
        frame.labels = frame_labels;
        std::set<std::string> marked(frame_labels.begin(), frame_labels.end());
        for (const auto& l : tracked_) {
            if (marked.count(l)) continue;
            frame.symbol.ratios.push_back(Ratio{1, 0});
            frame.labels.push_back(l);
        }

        FrameRep rep;
        rep.frame = frame;
        rep.n = n;
        rep.h_image = Permutation::big_cycle(n);
        rep.q_images.assign(frame.labels.size(), Permutation::identity(n));
        rep.surface_images.assign(2 * g, Permutation::identity(n));

        SeifertSymbol base = frame.symbol;
        base.ratios.resize(1 + transformed.size()); // drop the 0/1 bookkeeping marks
        const CoverResult& res = push_step(std::move(rep), base, tracked_);

        SeifertSymbol next;
        next.genus = g;
        std::vector<std::string> next_ratio_labels;
        for (size_t i = 0; i < originals.size(); ++i) {
            next.ratios.push_back(originals[i]);
            next_ratio_labels.push_back(label_over(res, frame_labels[1 + i]));
            expect_ratio(res, next_ratio_labels.back(), originals[i]);
        }
        next.ratios.push_back(reduce_ratio(v, u));
        next_ratio_labels.push_back(label_over(res, frame_labels[0]));
        expect_ratio(res, next_ratio_labels.back(), reduce_ratio(v, u));
        next.validate();
        intended_ = next;
        ratio_labels_ = next_ratio_labels;
    }

    CoveringPlan finish(const SeifertSymbol& target) const {
        CoveringPlan plan;
        plan.target = target;
        plan.alpha = alpha_;
        plan.beta = beta_;
        plan.steps.assign(steps_.rbegin(), steps_.rend());
        plan.total_degree = 1;
        for (const auto& s : steps_) plan.total_degree *= s.rep.n;
        return plan;
    }

private:
    void require_intended_empty(int genus) {
        if (!intended_.ratios.empty() || intended_.genus != genus)
            throw error("tower: step applied over the wrong base");
    }

    static std::string label_over(const CoverResult& res, const std::string& source) {
        const LiftedFiber* found = nullptr;
        for (const auto& f : res.fibers)
            if (f.source_label == source) {
                if (found) throw error("tower: fiber lifted more than once in a cyclic step");
                found = &f;
            }
        if (!found) throw error("tower: no lift found over " + source);
        return found->new_label;
    }

    static void expect_ratio(const CoverResult& res, const std::string& label, const Ratio& want) {
        for (const auto& f : res.fibers)
            if (f.new_label == label) {
                if (!(f.ratio == want))
                    throw error("tower: lifted ratio mismatch over " + f.source_label);
                return;
            }
        throw error("tower: missing lifted fiber " + label);
    }

    // Runs the engine, records the step, and advances the tracked set.
    const CoverResult& push_step(FrameRep rep, SeifertSymbol base,
                                 const std::vector<std::string>& tracked_below) {
        std::string prefix = "s" + std::to_string(steps_.size());
        last_result_ = lift_cover(rep, prefix);
        PlanStep step;
        step.rep = std::move(rep);
        step.base = std::move(base);
        step.expected_cover = last_result_.cover_symbol;
        std::set<std::string> tracked_set(tracked_below.begin(), tracked_below.end());
        std::set<std::string> branch_set;
        for (const auto& f : last_result_.fibers)
            if (f.branched) branch_set.insert(f.source_label);
        step.branch_labels.assign(branch_set.begin(), branch_set.end());
        std::vector<std::string> new_tracked;
        for (const auto& f : last_result_.fibers)
            if (tracked_set.count(f.source_label)) new_tracked.push_back(f.new_label);
        std::sort(new_tracked.begin(), new_tracked.end());
        step.knot_preimage_labels = new_tracked;
        for (const auto& l : step.branch_labels)
            if (!tracked_set.count(l))
                throw error("tower: branching over a fiber not above the knot");
        steps_.push_back(std::move(step));
        tracked_ = std::move(new_tracked);
        return last_result_;
    }

    long long alpha_;
    long long beta_;
    std::vector<PlanStep> steps_; // bottom first
    std::vector<std::string> tracked_;
    std::vector<std::string> ratio_labels_;
    SeifertSymbol intended_;
    CoverResult last_result_;
};

} // namespace detail

inline PlanStep build_lemma41(long long alpha, long long beta) {
    detail::TowerBuilder b(alpha, beta);
    b.lemma41();
    return b.steps().front();
}

inline std::vector<PlanStep> build_lemma42(long long alpha, long long beta, long long k) {
    if (alpha < 3) throw error("build_lemma42: alpha must be at least 3");
    detail::TowerBuilder b(alpha, beta);
    b.lemma41();
    b.lemma42(k);
    return b.steps();
}

inline std::vector<PlanStep> build_lemma43(int g, long long alpha, long long beta, long long k) {
    if (alpha < 3) throw error("build_lemma43: alpha must be at least 3");
    if (k < 2 * g + 2) throw error("build_lemma43: k must be at least 2g+2");
    detail::TowerBuilder b(alpha, beta);
    b.lemma41();
    b.lemma42(k);
    b.lemma43(g);
    return b.steps();
}

inline std::vector<PlanStep> build_lemma44(int g, const Ratio& b_over_a, long long alpha,
                                           long long beta, long long k) {
    if (alpha < 3) throw error("build_lemma44: alpha must be at least 3");
    if (k < 2 * g + 2) throw error("build_lemma44: k must be at least 2g+2");
    detail::TowerBuilder b(alpha, beta);
    b.lemma41();
    b.lemma42(k);
    b.lemma43(g);
    b.lemma44(b_over_a);
    return b.steps();
}

// Theorem-style recursion: strip the lexicographically last ratio u/v, build
// the degree-v cyclic step whose base replaces beta_i/alpha_i by the reduced
// v beta_i/alpha_i and absorbs u/1, and recurse; the base cases are handled
// by the elementary builders.
inline CoveringPlan plan_theorem45(const SeifertSymbol& target, long long alpha, long long beta) {
    target.validate();
    detail::check_knot_parameters(alpha, beta);
    if (alpha < 3) throw error("plan_theorem45: alpha must be at least 3");
    if (!(euler_number(target) == Rational(0)))
        throw error("plan_theorem45: target must have Euler number zero");

    CanonicalSymbol canon = canonicalize(target);
    const int g = canon.genus;
    std::vector<Ratio> cur = canon.exceptional;
    if (canon.b != 0) cur.push_back(Ratio{1, canon.b});

    struct Level {
        long long u, v;
        std::vector<Ratio> originals;   // the ratios restored by this step
        std::vector<Ratio> transformed; // v * originals, reduced
        bool vanished;                  // absorbed first entry became 0/1
    };
    std::vector<Level> levels;
    while (cur.size() >= 3) {
        std::sort(cur.begin(), cur.end());
        Ratio last = cur.back();
        cur.pop_back();
        Level lvl;
        lvl.u = last.beta;
        lvl.v = last.alpha;
        lvl.originals = cur;
        for (const auto& r : cur) lvl.transformed.push_back(reduce_ratio(r.alpha, lvl.v * r.beta));
        Ratio absorbed{lvl.transformed[0].alpha,
                       lvl.u * lvl.transformed[0].alpha + lvl.transformed[0].beta};
        lvl.vanished = (absorbed.beta == 0);
        std::vector<Ratio> next;
        if (!lvl.vanished) next.push_back(absorbed);
        for (size_t i = 1; i < lvl.transformed.size(); ++i) next.push_back(lvl.transformed[i]);
        levels.push_back(std::move(lvl));
        cur = std::move(next);
    }

    detail::TowerBuilder builder(alpha, beta);
    builder.lemma41();
    builder.lemma42(2 * g + 2);
    builder.lemma43(g);
    if (cur.size() == 2) {
        std::sort(cur.begin(), cur.end());
        if (!(cur[0].alpha == cur[1].alpha && cur[0].beta == -cur[1].beta))
            throw error("plan_theorem45: residual pair does not cancel");
        if (cur[1].alpha > 1) builder.lemma44(cur[1]);
        // alpha = 1 residual pairs are move-equivalent to the empty symbol
    } else if (!cur.empty()) {
        throw error("plan_theorem45: unexpected residual ratio count");
    }
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        builder.cyclic_step(it->u, it->v, it->originals, it->transformed);

    if (!(canonicalize(builder.intended()) == canon))
        throw error("plan_theorem45: tower top does not match the target");
    return builder.finish(target);
}

struct VerifyReport {
    bool pass = false;
    int steps_checked = 0;
    int failed_step = -1; // index into plan.steps (top first)
    std::string message;
};

// Independent referee: re-runs the lift engine on every step and checks the
// tower composes, branch labels sit over the knot, Euler numbers multiply,
// the bottom is the knot fibering, and the top is the target.
inline VerifyReport verify_plan(const CoveringPlan& plan) {
    VerifyReport out;
    auto fail = [&](int step, const std::string& msg) {
        out.pass = false;
        out.failed_step = step;
        out.message = msg;
        return out;
    };

    SeifertSymbol knot_base;
    try {
        detail::check_knot_parameters(plan.alpha, plan.beta);
        knot_base = make_symbol(0, {make_ratio(plan.alpha, plan.beta),
                                    make_ratio(plan.alpha, -plan.beta)});
        plan.target.validate();
    } catch (const error& e) {
        return fail(-1, std::string("invalid plan data: ") + e.what());
    }

    if (plan.steps.empty()) {
        if (canonicalize(plan.target) == canonicalize(knot_base) && plan.total_degree == 1) {
            out.pass = true;
            out.message = "zero-step identity plan";
        } else {
            fail(-1, "empty plan but target is not the base fibering");
        }
        return out;
    }

    long long degree = 1;
    std::set<std::string> below_tracked;
    std::set<std::string> below_inventory;
    std::set<std::string> below_01;
    SeifertSymbol below_cover;

    for (int idx = static_cast<int>(plan.steps.size()) - 1; idx >= 0; --idx) {
        const PlanStep& step = plan.steps[idx];
        const bool bottom = (idx == static_cast<int>(plan.steps.size()) - 1);

        RepReport rr = validate_representation(step.rep);
        if (!rr.valid()) return fail(idx, "invalid representation: " + rr.violations.front());

        if (bottom) {
            if (!(canonicalize(step.base) == canonicalize(knot_base)))
                return fail(idx, "bottom base is not (Oo,0; beta/alpha, -beta/alpha)");
            std::vector<std::string> knot_labels;
            for (int i = 0; i < step.rep.frame.boundaries(); ++i)
                if (step.rep.frame.symbol.ratios[i] == Ratio{1, 0})
                    knot_labels.push_back(step.rep.frame.labels[i]);
            if (knot_labels.size() != 1)
                return fail(idx, "bottom frame must mark the knot with exactly one 0/1 entry");
            below_tracked = {knot_labels.front()};
            below_inventory = {step.rep.frame.labels.begin(), step.rep.frame.labels.end()};
            below_01 = below_tracked;
        } else {
            if (!(canonicalize(step.base) == canonicalize(below_cover)))
                return fail(idx, "base does not match the cover below");
        }
        if (!(canonicalize(step.rep.frame.symbol) == canonicalize(step.base)))
            return fail(idx, "frame symbol does not describe the base");

        CoverResult res;
        try {
            // labels are positional: "s<step>.b<boundary>.c<cycle>", step 0 at the bottom
            int step_number = static_cast<int>(plan.steps.size()) - 1 - idx;
            res = lift_cover(step.rep, "s" + std::to_string(step_number));
        } catch (const error& e) {
            return fail(idx, std::string("lift failed: ") + e.what());
        }

        if (!(canonicalize(res.cover_symbol) == canonicalize(step.expected_cover)))
            return fail(idx, "expected cover does not match the lifted cover");

        std::set<std::string> branch_computed;
        for (const auto& f : res.fibers)
            if (f.branched) branch_computed.insert(f.source_label);
        std::set<std::string> branch_declared(step.branch_labels.begin(), step.branch_labels.end());
        if (branch_computed != branch_declared)
            return fail(idx, "declared branch labels do not match the representation");
        for (const auto& l : branch_declared) {
            if (!bottom && !below_inventory.count(l))
                return fail(idx, "branch label " + l + " not found in the inventory below");
            if (!below_tracked.count(l) && !below_01.count(l))
                return fail(idx, "branch label " + l + " does not sit over the knot");
        }

        std::set<std::string> knot_computed;
        for (const auto& f : res.fibers)
            if (below_tracked.count(f.source_label)) knot_computed.insert(f.new_label);
        std::set<std::string> knot_declared(step.knot_preimage_labels.begin(),
                                            step.knot_preimage_labels.end());
        if (knot_computed != knot_declared)
            return fail(idx, "declared knot-preimage labels do not match the lift");

        if (!check_euler_multiplicativity(step.base, res))
            return fail(idx, "Euler number multiplicativity violated");

        degree *= res.degree;
        below_tracked = knot_computed;
        below_inventory.clear();
        below_01.clear();
        for (const auto& f : res.fibers) {
            below_inventory.insert(f.new_label);
            if (f.ratio == Ratio{1, 0}) below_01.insert(f.new_label);
        }
        below_cover = res.cover_symbol;
        ++out.steps_checked;
    }

    if (!(canonicalize(below_cover) == canonicalize(plan.target)))
        return fail(0, "top of the tower does not match the target");
    if (degree != plan.total_degree) return fail(-1, "total degree mismatch");
    out.pass = true;
    out.message = "all steps verified";
    return out;
}

} // namespace seifert
