// Seifert symbols of class Oo: normalization moves, canonical form, Euler
// number, first homology, and recognition of S^2 x S^1 fiberings.
#pragma once

#include "arith.hpp"
#include "intmatrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seifert {

// A marked fiber slope beta/alpha with alpha >= 1 and gcd(alpha, beta) = 1.
// The gcd(x, 0) = x convention makes 0/1 legal and 0/alpha (alpha > 1) not.
struct Ratio {
    long long alpha = 1;
    long long beta = 0;

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    }
};

inline Ratio make_ratio(long long alpha, long long beta) {
    if (alpha < 1) throw error("ratio: alpha must be positive");
    if (gcd_ll(alpha, beta) != 1) throw error("ratio: alpha and beta are not coprime");
    return Ratio{alpha, beta};
}

inline Ratio reduce_ratio(long long alpha, long long beta) {
    if (alpha == 0) throw error("ratio: zero denominator");
    if (alpha < 0) {
        alpha = -alpha;
        beta = -beta;
    }
    long long g = gcd_ll(alpha, beta);
    if (g == 0) g = 1;
    return Ratio{alpha / g, beta / g};
}

struct SeifertSymbol {
    int genus = 0;
    std::vector<Ratio> ratios;

    void validate() const {
        if (genus < 0) throw error("symbol: genus must be non-negative");
        for (const auto& r : ratios)
            if (r.alpha < 1 || gcd_ll(r.alpha, r.beta) != 1)
                throw error("symbol: invalid ratio " + std::to_string(r.beta) + "/" +
                            std::to_string(r.alpha));
    }

    friend bool operator==(const SeifertSymbol&, const SeifertSymbol&) = default;
};

inline SeifertSymbol make_symbol(int genus, std::vector<Ratio> ratios) {
    SeifertSymbol s{genus, std::move(ratios)};
    s.validate();
    return s;
}

// e = -sum beta_i/alpha_i
inline Rational euler_number(const SeifertSymbol& s) {
    Rational e(0);
    for (const auto& r : s.ratios) e -= make_rational(r.beta, r.alpha);
    return e;
}

// The three moves that generate fiber-preserving homeomorphism of symbols.
struct MovePermute {
    std::vector<int> order; // 0-based positions, a permutation of the index set
};
struct MoveInsert01 {
    int position = -1; // -1 appends
};
struct MoveDelete01 {
    int index = 0;
};
struct MoveTransfer {
    int i = 0;
    int j = 0;
    long long k = 0; // beta_i += k*alpha_i, beta_j -= k*alpha_j
};
using Move = std::variant<MovePermute, MoveInsert01, MoveDelete01, MoveTransfer>;

inline SeifertSymbol apply_move(const SeifertSymbol& s, const Move& move) {
    SeifertSymbol out = s;
    const int t = static_cast<int>(s.ratios.size());
    if (const auto* m = std::get_if<MovePermute>(&move)) {
        if (static_cast<int>(m->order.size()) != t) throw error("permute: order size mismatch");
        std::vector<bool> seen(t, false);
        out.ratios.clear();
        for (int idx : m->order) {
            if (idx < 0 || idx >= t || seen[idx]) throw error("permute: not a permutation of indices");
            seen[idx] = true;
            out.ratios.push_back(s.ratios[idx]);
        }
    } else if (const auto* m = std::get_if<MoveInsert01>(&move)) {
        int pos = m->position < 0 ? t : m->position;
        if (pos > t) throw error("insert01: position out of range");
        out.ratios.insert(out.ratios.begin() + pos, Ratio{1, 0});
    } else if (const auto* m = std::get_if<MoveDelete01>(&move)) {
        if (m->index < 0 || m->index >= t) throw error("delete01: index out of range");
        if (!(s.ratios[m->index] == Ratio{1, 0})) throw error("delete01: entry is not 0/1");
        out.ratios.erase(out.ratios.begin() + m->index);
    } else if (const auto* m = std::get_if<MoveTransfer>(&move)) {
        if (m->i < 0 || m->i >= t || m->j < 0 || m->j >= t || m->i == m->j)
            throw error("transfer: indices out of range");
        out.ratios[m->i].beta += m->k * out.ratios[m->i].alpha;
        out.ratios[m->j].beta -= m->k * out.ratios[m->j].alpha;
    }
    out.validate();
    return out;
}

// Unique representative of the move-equivalence class: all integer slope is
// carried by a single b/1 term, exceptional entries are reduced into 0 <
// beta < alpha and sorted.
struct CanonicalSymbol {
    int genus = 0;
    long long b = 0;
    std::vector<Ratio> exceptional;

    SeifertSymbol to_symbol() const {
        SeifertSymbol s;
        s.genus = genus;
        if (b != 0) s.ratios.push_back(Ratio{1, b});
        for (const auto& r : exceptional) s.ratios.push_back(r);
        return s;
    }

    friend bool operator==(const CanonicalSymbol&, const CanonicalSymbol&) = default;
};

inline CanonicalSymbol canonicalize(const SeifertSymbol& s) {
    s.validate();
    CanonicalSymbol c;
    c.genus = s.genus;
    for (const auto& r : s.ratios) {
        if (r.alpha == 1) {
            c.b += r.beta;
            continue;
        }
        long long rem = r.beta % r.alpha;
        if (rem < 0) rem += r.alpha;
        c.b += (r.beta - rem) / r.alpha;
        c.exceptional.push_back(Ratio{r.alpha, rem});
    }
    std::sort(c.exceptional.begin(), c.exceptional.end());
    return c;
}

inline bool equivalent(const SeifertSymbol& a, const SeifertSymbol& b) {
    return canonicalize(a) == canonicalize(b);
}

// S^2 x S^1 carries exactly the fiberings (Oo,0; beta/alpha, -beta/alpha):
// base sphere, at most two exceptional fibers, Euler number zero.
inline bool recognize_s2xs1(const SeifertSymbol& s) {
    CanonicalSymbol c = canonicalize(s);
    return c.genus == 0 && c.exceptional.size() <= 2 && euler_number(s) == Rational(0);
}

// Finitely generated abelian group: free rank plus invariant factors d1|d2|...
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> torsion; // each >= 2, divisibility chain

    void validate() const {
        if (free_rank < 0) throw error("abelian group: negative free rank");
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw error("abelian group: invariant factor < 2");
            if (i > 0 && torsion[i] % torsion[i - 1] != 0)
                throw error("abelian group: divisibility chain violated");
        }
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// H_1 from the standard presentation: generators q_1..q_t, h with relations
// alpha_i q_i + beta_i h = 0 and sum q_i = 0, plus Z^{2g} from the base.
inline AbelianGroup h1(const SeifertSymbol& s) {
    s.validate();
    const int t = static_cast<int>(s.ratios.size());
    IntMatrix m(t + 1, t + 1);
    for (int i = 0; i < t; ++i) {
        m.at(i, i) = s.ratios[i].alpha;
        m.at(i, t) = s.ratios[i].beta;
    }
    for (int i = 0; i < t; ++i) m.at(t, i) = 1;
    SmithNormalForm snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = snf.coker_free_rank + 2 * s.genus;
    for (const Int& d : snf.coker_torsion) g.torsion.push_back(static_cast<long long>(d));
    g.validate();
    return g;
}

inline std::string to_string(const Ratio& r) {
    return std::to_string(r.beta) + "/" + std::to_string(r.alpha);
}

inline std::string to_string(const SeifertSymbol& s) {
    std::string out = "(Oo," + std::to_string(s.genus) + ";";
    for (size_t i = 0; i < s.ratios.size(); ++i)
        out += (i ? "," : " ") + to_string(s.ratios[i]);
    return out + ")";
}

inline std::string to_string(const CanonicalSymbol& c) {
    std::string out = "(Oo," + std::to_string(c.genus) + "; b=" + std::to_string(c.b);
    for (const auto& r : c.exceptional) out += "," + to_string(r);
    return out + ")";
}

} // namespace seifert
