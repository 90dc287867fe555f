#pragma once

#include <cstdint>
#include <cstdlib>

namespace txsite {

// Kind of grid-line crossing produced by walk_crossings.
enum class CrossKind : uint8_t {
    RowLine,  // crosses an integer row line; x is exact, y fractional
    ColLine,  // crosses an integer column line; y is exact, x fractional
    Post,     // passes exactly through a post; both coordinates exact
};

// Enumerates every crossing of the open segment (r0,c0)->(r1,c1) with the
// integer row and column lines, ordered by the segment parameter t. Both
// endpoints are lattice points, so crossing parameters are k/|dr| and m/|dc|;
// coincident pairs (the segment passing through a post) are merged into a
// single Post crossing. With include_end the t=1 endpoint is emitted too.
//
// f(t, row, col, kind) -> bool; returning false stops the walk early.
// Returns false iff the walk was stopped by the callback.
//
// Distinct crossing parameters differ by at least 1/(|dr|*|dc|), which is
// ~1e-10 for the largest grids handled here; 1e-13 separates that safely
// from double rounding noise.
template <class Fn>
bool walk_crossings(int64_t r0, int64_t c0, int64_t r1, int64_t c1,
                    bool include_end, Fn&& f) {
    const int64_t dr = r1 - r0;
    const int64_t dc = c1 - c0;
    const int64_t nr = std::abs(dr);
    const int64_t nc = std::abs(dc);
    const int sr = dr >= 0 ? 1 : -1;
    const int sc = dc >= 0 ? 1 : -1;
    constexpr double kMergeTol = 1e-13;

    int64_t ir = 1, ic = 1;
    while (ir <= nr || ic <= nc) {
        const double tr = ir <= nr ? static_cast<double>(ir) / nr : 2.0;
        const double tc = ic <= nc ? static_cast<double>(ic) / nc : 2.0;

        double t;
        double row, col;
        CrossKind kind;
        if (tr < tc - kMergeTol) {
            t = tr;
            row = static_cast<double>(r0 + sr * ir);
            // dc == 0: the segment runs along a column, so every crossing
            // sits exactly on a post.
            col = static_cast<double>(c0) + (dc == 0 ? 0.0 : t * dc);
            kind = dc == 0 ? CrossKind::Post : CrossKind::RowLine;
            ++ir;
        } else if (tc < tr - kMergeTol) {
            t = tc;
            row = static_cast<double>(r0) + (dr == 0 ? 0.0 : t * dr);
            col = static_cast<double>(c0 + sc * ic);
            kind = dr == 0 ? CrossKind::Post : CrossKind::ColLine;
            ++ic;
        } else {
            t = tr;
            row = static_cast<double>(r0 + sr * ir);
            col = static_cast<double>(c0 + sc * ic);
            kind = CrossKind::Post;
            ++ir;
            ++ic;
        }

        if (t >= 1.0 - kMergeTol) {
            if (include_end) return f(1.0, static_cast<double>(r1),
                                      static_cast<double>(c1), CrossKind::Post);
            return true;
        }
        if (!f(t, row, col, kind)) return false;
    }
    return true;
}

}  // namespace txsite
