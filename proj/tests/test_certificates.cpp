#include "hsdyn/certificates.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace hsdyn;
using testsupport::Rng;

namespace {

const PLHomeo kBend({{Q(0), Q(0)}, {Q(1, 2), Q(1, 4)}, {Q(1), Q(1)}});
const PLHomeo kSteep({{Q(0), Q(0)}, {Q(1, 8), Q(3, 4)}, {Q(1), Q(1)}});

bool check_named(const VerificationReport& r, const std::string& name, bool expect) {
    for (const auto& c : r.checks)
        if (c.check == name) return c.passed == expect;
    return false;
}

}  // namespace

TEST_CASE("r-certificate on the one-generator instance") {
    RCertificate cert = build_r_certificate({PLHomeo::identity()}, {kBend});
    CHECK(cert.delta == Q(1, 4));
    CHECK(cert.p.members().size() == 1);
    CHECK(cert.p.contains(StaircaseCurve::diagonal()));
    CHECK(cert.separation_bound == Q(1, 8));
    REQUIRE(cert.l2.size() == 1);
    CHECK(cert.l2[0].deviation == Q(1, 4));

    VerificationReport rep = verify_r_certificate(cert);
    CHECK(rep.passed());
}

TEST_CASE("r-certificate realizes the diagonal identity for A on the left") {
    RCertificate cert = build_r_certificate({kBend}, {PLHomeo::identity()});
    CHECK(cert.p.contains(graph(inverse(kBend))));
    REQUIRE(cert.l1.size() == 1);
    CHECK(cert.l1[0].diagonal_in_image);  // g . graph(g^-1) = diagonal
    CHECK(verify_r_certificate(cert).passed());
}

TEST_CASE("r-certificate requires far sets") {
    CHECK_THROWS_AS(build_r_certificate({PLHomeo::identity()}, {PLHomeo::identity()}),
                    Error);
}

TEST_CASE("r-certificate verification rejects tampering") {
    RCertificate cert = build_r_certificate({PLHomeo::identity()}, {kBend});

    SUBCASE("doubled delta breaks the deviation check") {
        cert.delta *= 2;
        VerificationReport rep = verify_r_certificate(cert);
        CHECK(!rep.passed());
        CHECK(check_named(rep, "l2-deviation", false));
    }

    SUBCASE("truncated evidence tables are flagged") {
        cert.l2.clear();
        VerificationReport rep = verify_r_certificate(cert);
        CHECK(!rep.passed());
        CHECK(check_named(rep, "evidence-complete", false));
    }

    SUBCASE("dropping a member of p breaks diagonal membership") {
        RCertificate two = build_r_certificate({PLHomeo::identity(), kBend}, {kSteep});
        std::vector<StaircaseCurve> members;
        for (const auto& m : two.p.members())
            if (m != StaircaseCurve::diagonal()) members.push_back(m);
        two.p = CurveFamily(std::move(members));
        VerificationReport rep = verify_r_certificate(two);
        CHECK(!rep.passed());
        CHECK(check_named(rep, "l1-membership", false));
        CHECK(check_named(rep, "p-consistency", false));
    }
}

TEST_CASE("r-certificates verify on random far pairs") {
    Rng rng(101);
    int built = 0;
    while (built < 20) {
        std::vector<PLHomeo> a, b;
        for (int i = 0; i < 2; ++i) a.push_back(testsupport::random_pl_homeo(rng, 16, 2));
        for (int i = 0; i < 2; ++i) b.push_back(testsupport::random_pl_homeo(rng, 16, 2));
        try {
            RCertificate cert = build_r_certificate(a, b);
            CHECK(verify_r_certificate(cert).passed());
            ++built;
        } catch (const Error&) {
            // shared element: not far, try another pair
        }
    }
}

TEST_CASE("uniform_cover builds the ceil(1/delta) chain") {
    CHECK(uniform_cover(Q(1, 2)).arity() == 2);
    CHECK(uniform_cover(Q(1)).arity() == 1);
    CHECK(uniform_cover(Q(1, 3)).arity() == 3);
    CHECK(uniform_cover(Q(2, 3)).arity() == 2);
    CHECK(mesh(uniform_cover(Q(1, 3))) == Q(1, 3));
    CHECK(uniform_cover(Q(1, 4)).is_simplex_chain());
    CHECK_THROWS_AS(uniform_cover(Q(0)), Error);
    CHECK_THROWS_AS(uniform_cover(Q(2)), Error);
}

TEST_CASE("cover certificate on the steep instance") {
    std::vector<PLHomeo> a{PLHomeo::identity()};
    std::vector<PLHomeo> b{kSteep};
    CHECK(sup_dist(a[0], b[0]) == Q(5, 8));

    CoverCertificate cert =
        build_cover_certificate(a, b, uniform_cover(Q(1, 4)), Q(1, 4));
    CHECK(cert.cover.arity() == 4);
    CHECK(cert.separation_bound == Q(1, 4));
    REQUIRE(cert.k1.size() == 1);
    CHECK(cert.k1[0].maps_to_cover);
    REQUIRE(cert.k2.size() == 1);
    // witness: identity keeps x in its cell, kSteep carries it into the far set
    CHECK(cert.cover.parts()[cert.k2[0].part_index].contains(eval(a[0], cert.k2[0].x)));
    REQUIRE(cert.d_sets[cert.k2[0].part_index].has_value());
    CHECK(cert.d_sets[cert.k2[0].part_index]->contains(cert.k2[0].hx));

    CHECK(verify_cover_certificate(cert).passed());
}

TEST_CASE("cover certificate preconditions") {
    CHECK_THROWS_AS(build_cover_certificate({PLHomeo::identity()}, {PLHomeo::identity()},
                                            uniform_cover(Q(1, 4)), Q(1, 4)),
                    Error);
    // far enough pair, cover too coarse for delta
    CHECK_THROWS_AS(build_cover_certificate({PLHomeo::identity()}, {kSteep},
                                            uniform_cover(Q(1, 2)), Q(1, 4)),
                    Error);
}

TEST_CASE("cover certificate verification rejects tampering") {
    std::vector<PLHomeo> a{PLHomeo::identity(), kBend};
    std::vector<PLHomeo> b{kSteep};
    CoverCertificate cert =
        build_cover_certificate(a, b, uniform_cover(Q(1, 8)), Q(1, 8));
    REQUIRE(verify_cover_certificate(cert).passed());

    SUBCASE("shrunken far sets are flagged by the consistency audit") {
        // recompute every D_i at delta + delta/2: strictly smaller sets
        for (std::size_t i = 0; i < cert.d_sets.size(); ++i)
            cert.d_sets[i] = far_set(cert.cover.parts()[i], cert.delta * 3 / 2);
        VerificationReport rep = verify_cover_certificate(cert);
        CHECK(check_named(rep, "d-set-consistency", false));
        CHECK(!rep.passed());
    }

    SUBCASE("a forged witness point is flagged") {
        cert.k2[0].x = Q(1);  // endpoints agree under every element
        VerificationReport rep = verify_cover_certificate(cert);
        CHECK(!rep.passed());
        CHECK(check_named(rep, "evidence-complete", false));
    }

    SUBCASE("dropping F_id from p breaks K1 membership") {
        SetFamilyTuple cover_tuple(cert.cover.parts());
        std::vector<SetFamilyTuple> members;
        for (const auto& m : cert.p.members())
            if (!(m == cover_tuple)) members.push_back(m);
        REQUIRE(members.size() + 1 == cert.p.members().size());
        cert.p = TupleFamily(std::move(members));
        VerificationReport rep = verify_cover_certificate(cert);
        CHECK(!rep.passed());
        CHECK(check_named(rep, "k1-membership", false));
        CHECK(check_named(rep, "p-consistency", false));
    }
}

TEST_CASE("cover certificates verify on random far-enough pairs") {
    Rng rng(102);
    int built = 0;
    while (built < 10) {
        std::vector<PLHomeo> a, b;
        for (int i = 0; i < 2; ++i) a.push_back(testsupport::random_pl_homeo(rng, 16, 2));
        for (int i = 0; i < 2; ++i) b.push_back(testsupport::random_pl_homeo(rng, 16, 2));
        try {
            if (farness(a, b).two_delta < Q(1, 4)) continue;
        } catch (const Error&) {
            continue;
        }
        CoverCertificate cert =
            build_cover_certificate(a, b, uniform_cover(Q(1, 8)), Q(1, 8));
        CHECK(verify_cover_certificate(cert).passed());
        ++built;
    }
}
