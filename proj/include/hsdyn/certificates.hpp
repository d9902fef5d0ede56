#pragma once

#include "hsdyn/families.hpp"
#include "hsdyn/interval_union.hpp"
#include "hsdyn/pl_homeo.hpp"
#include "hsdyn/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hsdyn {

struct CheckResult {
    std::string check;
    bool passed;
    std::string witness;  // human-readable detail, serialized into reports
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Evidence rows mirror the construction steps so a report is re-checkable
// without re-running the build.

struct RL1Evidence {
    std::size_t a_index;
    bool diagonal_in_image;
};

struct RL2Evidence {
    std::size_t b_index;
    std::size_t a_index;
    Q deviation;  // diag_deviation(h . graph(a^{-1})) = sup_dist(h, a)
    PlanarPoint vertex;
};

// Witness for separating A.p from B.p inside Exp of the curve space: p is the
// family of graphs of inverses of A, every g.p contains the diagonal, every
// h.p consists of curves staying delta away from it.
struct RCertificate {
    std::vector<PLHomeo> a_set;
    std::vector<PLHomeo> b_set;
    Q delta;
    CurveFamily p;
    std::vector<RL1Evidence> l1;
    std::vector<RL2Evidence> l2;
    Q separation_bound;  // delta / 2
};

RCertificate build_r_certificate(const std::vector<PLHomeo>& a,
                                 const std::vector<PLHomeo>& b);

VerificationReport verify_r_certificate(const RCertificate& c);

// Uniform simplex-chain partition with n = ceil(1/delta) parts.
CoverTuple uniform_cover(const Q& delta);

struct CoverK1Evidence {
    std::size_t a_index;
    bool maps_to_cover;
};

struct CoverK2Evidence {
    std::size_t b_index;
    std::size_t a_index;
    std::size_t part_index;
    Q x;   // point with |a(x) - b(x)| >= 2 delta and a(x) in C_i
    Q hx;  // b(x), lies in D_i
};

// Witness for the cover construction: p = {F_g}, F_g the tuple of g-preimages
// of the cover parts; g.F_g reproduces the cover (K1) while h.p keeps a part
// in the far set D_i of its cell (K2).
struct CoverCertificate {
    std::vector<PLHomeo> a_set;
    std::vector<PLHomeo> b_set;
    Q delta;
    CoverTuple cover;
    std::vector<std::optional<IntervalUnion>> d_sets;  // empty parts possible
    TupleFamily p;
    std::vector<CoverK1Evidence> k1;
    std::vector<CoverK2Evidence> k2;
    Q separation_bound;  // delta
};

CoverCertificate build_cover_certificate(const std::vector<PLHomeo>& a,
                                         const std::vector<PLHomeo>& b,
                                         const CoverTuple& cover, const Q& delta);

VerificationReport verify_cover_certificate(const CoverCertificate& c);

}  // namespace hsdyn
