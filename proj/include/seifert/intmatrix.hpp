// Integer matrices over arbitrary-precision integers and Smith normal form.
#pragma once

#include "arith.hpp"

#include <vector>

namespace seifert {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {
        if (r < 0 || c < 0) throw error("IntMatrix: negative dimensions");
    }

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }
};

struct SmithNormalForm {
    std::vector<Int> invariants; // d1 | d2 | ... | dr, each >= 1
    int rank = 0;
    int coker_free_rank = 0;     // cols - rank, rows read as relations on col generators
    std::vector<Int> coker_torsion; // invariants > 1
};

// Diagonalization by unimodular row/column operations, exact arithmetic.
inline SmithNormalForm smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const int R = m.rows, C = m.cols;
    int t = 0;
    const int limit = std::min(R, C);

    auto abs_int = [](const Int& v) { return v < 0 ? Int(-v) : v; };

    while (t < limit) {
        // pivot: nonzero entry of least magnitude in the trailing submatrix
        int pr = -1, pc = -1;
        Int best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (m.at(i, j) != 0) {
                    Int v = abs_int(m.at(i, j));
                    if (pr == -1 || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
        if (pr == -1) break; // trailing submatrix is zero

        if (pr != t)
            for (int j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(pr, j));
        if (pc != t)
            for (int i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    // remainder is smaller than the pivot; swap it up and restart
                    for (int j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                for (int i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (int i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce the divisibility chain before moving on
            for (int i = t + 1; i < R && clean; ++i)
                for (int j = t + 1; j < C && clean; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (int jj = t; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
                        clean = false;
                    }
        }
        if (m.at(t, t) < 0)
            for (int j = t; j < C; ++j) m.at(t, j) = -m.at(t, j);
        ++t;
    }

    SmithNormalForm out;
    out.rank = t;
    for (int i = 0; i < t; ++i) out.invariants.push_back(m.at(i, i));
    out.coker_free_rank = C - t;
    for (const Int& d : out.invariants)
        if (d > 1) out.coker_torsion.push_back(d);
    return out;
}

} // namespace seifert
