#include "hsdyn/certificates.hpp"

#include <algorithm>

namespace hsdyn {

namespace {

std::string pair_tag(std::size_t b, std::size_t a) {
    return "h=" + std::to_string(b) + ",g=" + std::to_string(a);
}

}  // namespace

RCertificate build_r_certificate(const std::vector<PLHomeo>& a,
                                 const std::vector<PLHomeo>& b) {
    FarnessCertificate far = farness(a, b);  // throws NotFar
    Q delta = far.two_delta;

    std::vector<StaircaseCurve> members;
    members.reserve(a.size());
    for (const auto& g : a) members.push_back(graph(inverse(g)));
    CurveFamily p(std::move(members));

    StaircaseCurve diag = StaircaseCurve::diagonal();
    std::vector<RL1Evidence> l1;
    l1.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool ok = act_curve(a[i], graph(inverse(a[i]))) == diag;
        l1.push_back({i, ok});
    }

    std::vector<RL2Evidence> l2;
    l2.reserve(a.size() * b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            StaircaseCurve moved = act_curve(b[j], graph(inverse(a[i])));
            Q dev(0);
            PlanarPoint where{Q(0), Q(0)};
            for (const auto& v : moved.vertices()) {
                Q d = q_abs(v.first - v.second);
                if (d > dev) {
                    dev = d;
                    where = v;
                }
            }
            l2.push_back({j, i, dev, where});
        }
    }

    return RCertificate{a, b, delta, std::move(p), std::move(l1), std::move(l2),
                        delta / 2};
}

VerificationReport verify_r_certificate(const RCertificate& c) {
    VerificationReport report;
    auto& checks = report.checks;

    if (c.delta <= 0) {
        checks.push_back({"delta-positive", false, "delta = " + to_string(c.delta)});
        return report;
    }
    checks.push_back({"delta-positive", true, ""});

    {
        std::vector<StaircaseCurve> members;
        members.reserve(c.a_set.size());
        for (const auto& g : c.a_set) members.push_back(graph(inverse(g)));
        bool ok = CurveFamily(std::move(members)) == c.p;
        checks.push_back({"p-consistency", ok,
                          ok ? "" : "stored p differs from {graph(g^-1): g in A}"});
    }

    {
        bool ok = c.l1.size() == c.a_set.size() &&
                  c.l2.size() == c.a_set.size() * c.b_set.size();
        for (const auto& e : c.l1)
            if (e.a_index >= c.a_set.size() || !e.diagonal_in_image) ok = false;
        for (const auto& e : c.l2)
            if (e.a_index >= c.a_set.size() || e.b_index >= c.b_set.size() ||
                e.deviation < c.delta)
                ok = false;
        checks.push_back(
            {"evidence-complete", ok, ok ? "" : "evidence table incomplete over A and BxA"});
    }

    StaircaseCurve diag = StaircaseCurve::diagonal();
    {
        bool all = true;
        std::string witness;
        for (std::size_t i = 0; i < c.a_set.size(); ++i) {
            if (!act_family(c.a_set[i], c.p).contains(diag)) {
                all = false;
                witness = "diagonal missing from g.p for g index " + std::to_string(i);
                break;
            }
        }
        checks.push_back({"l1-membership", all, witness});
    }

    {
        bool all = true;
        std::string witness;
        for (std::size_t j = 0; j < c.b_set.size() && all; ++j) {
            CurveFamily moved = act_family(c.b_set[j], c.p);
            for (const auto& m : moved.members()) {
                if (diag_deviation(m) < c.delta) {
                    all = false;
                    witness = "member of h.p with deviation " +
                              to_string(diag_deviation(m)) + " < delta for h index " +
                              std::to_string(j);
                    break;
                }
            }
        }
        checks.push_back({"l2-deviation", all, witness});
    }

    {
        Q bound = c.delta / 2;
        bool all = c.separation_bound <= bound;
        std::string witness;
        if (!all) {
            witness = "stored separation bound exceeds delta/2";
        } else {
            std::vector<CurveFamily> hp;
            hp.reserve(c.b_set.size());
            for (const auto& h : c.b_set) hp.push_back(act_family(h, c.p));
            for (std::size_t i = 0; i < c.a_set.size() && all; ++i) {
                CurveFamily gp = act_family(c.a_set[i], c.p);
                for (std::size_t j = 0; j < c.b_set.size(); ++j) {
                    if (!family_separation_at_least(gp, hp[j], c.separation_bound)) {
                        all = false;
                        witness = "family separation below bound at " + pair_tag(j, i);
                        break;
                    }
                }
            }
        }
        checks.push_back({"separation", all, witness});
    }

    {
        // no family may both contain the diagonal and stay delta away from it
        bool all = true;
        std::string witness;
        auto exclusive = [&](const CurveFamily& q) {
            bool in_l1 = q.contains(diag);
            bool in_l2 = true;
            for (const auto& m : q.members())
                if (diag_deviation(m) < c.delta) in_l2 = false;
            return !(in_l1 && in_l2);
        };
        for (const auto& g : c.a_set)
            if (!exclusive(act_family(g, c.p))) all = false;
        for (const auto& h : c.b_set)
            if (!exclusive(act_family(h, c.p))) all = false;
        if (!all) witness = "a family satisfies both separating predicates";
        checks.push_back({"predicate-exclusion", all, witness});
    }

    return report;
}

CoverTuple uniform_cover(const Q& delta) {
    if (delta <= 0 || delta > 1)
        throw Error(ErrorCode::OutOfRange, "cover mesh must lie in (0,1]");
    Z n = q_ceil(Q(1) / delta);
    std::vector<Q> cuts;
    for (Z i = 1; i < n; ++i) cuts.push_back(Q(i, n));
    return CoverTuple::simplex_chain(cuts);
}

CoverCertificate build_cover_certificate(const std::vector<PLHomeo>& a,
                                         const std::vector<PLHomeo>& b,
                                         const CoverTuple& cover, const Q& delta) {
    FarnessCertificate far = farness(a, b);
    if (far.two_delta < 2 * delta)
        throw Error(ErrorCode::NotFarEnough,
                    "farness bound " + to_string(far.two_delta) + " below 2*delta = " +
                        to_string(2 * delta));
    if (mesh(cover) > delta)
        throw Error(ErrorCode::MeshTooCoarse, "cover mesh exceeds delta");

    std::vector<std::optional<IntervalUnion>> d_sets;
    d_sets.reserve(cover.arity());
    for (const auto& part : cover.parts()) d_sets.push_back(far_set(part, delta));

    std::vector<SetFamilyTuple> members;
    members.reserve(a.size());
    for (const auto& g : a) {
        std::vector<IntervalUnion> parts;
        parts.reserve(cover.arity());
        for (const auto& c : cover.parts()) parts.push_back(preimage(g, c));
        members.push_back(SetFamilyTuple(std::move(parts)));
    }
    TupleFamily p(std::move(members));

    SetFamilyTuple cover_tuple(cover.parts());
    std::vector<CoverK1Evidence> k1;
    k1.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<IntervalUnion> parts;
        for (const auto& c : cover.parts()) parts.push_back(preimage(a[i], c));
        k1.push_back({i, act_tuple(a[i], SetFamilyTuple(std::move(parts))) == cover_tuple});
    }

    std::vector<CoverK2Evidence> k2;
    k2.reserve(a.size() * b.size());
    for (const auto& w : far.witnesses) {
        const Q gx = eval(a[w.a_index], w.x);
        const Q hx = eval(b[w.b_index], w.x);
        std::size_t part = cover.arity();
        for (std::size_t i = 0; i < cover.arity(); ++i) {
            if (cover.parts()[i].contains(gx) && d_sets[i] && d_sets[i]->contains(hx)) {
                part = i;
                break;
            }
        }
        if (part == cover.arity())
            throw Error(ErrorCode::NotFarEnough,
                        "no cell certifies the far witness at x = " + to_string(w.x));
        k2.push_back({w.b_index, w.a_index, part, w.x, hx});
    }

    return CoverCertificate{a,  b,  delta, cover, std::move(d_sets), std::move(p),
                            std::move(k1), std::move(k2), delta};
}

VerificationReport verify_cover_certificate(const CoverCertificate& c) {
    VerificationReport report;
    auto& checks = report.checks;

    if (c.delta <= 0) {
        checks.push_back({"delta-positive", false, "delta = " + to_string(c.delta)});
        return report;
    }
    checks.push_back({"delta-positive", true, ""});

    {
        bool ok = false;
        std::string witness;
        try {
            ok = mesh(c.cover) <= c.delta;
            if (!ok) witness = "mesh exceeds delta";
        } catch (const Error& e) {
            witness = e.what();
        }
        checks.push_back({"cover-mesh", ok, witness});
        if (!ok) return report;
    }

    {
        bool ok = c.d_sets.size() == c.cover.arity();
        for (std::size_t i = 0; ok && i < c.cover.arity(); ++i) {
            auto expect = far_set(c.cover.parts()[i], c.delta);
            if (expect.has_value() != c.d_sets[i].has_value() ||
                (expect && *expect != *c.d_sets[i]))
                ok = false;
        }
        checks.push_back(
            {"d-set-consistency", ok, ok ? "" : "stored D_i differ from recomputation"});
    }

    {
        std::vector<SetFamilyTuple> members;
        members.reserve(c.a_set.size());
        for (const auto& g : c.a_set) {
            std::vector<IntervalUnion> parts;
            for (const auto& part : c.cover.parts()) parts.push_back(preimage(g, part));
            members.push_back(SetFamilyTuple(std::move(parts)));
        }
        bool ok = TupleFamily(std::move(members)) == c.p;
        checks.push_back({"p-consistency", ok, ok ? "" : "stored p differs from {F_g}"});
    }

    {
        bool ok = c.k1.size() == c.a_set.size() &&
                  c.k2.size() == c.a_set.size() * c.b_set.size();
        for (const auto& e : c.k1)
            if (e.a_index >= c.a_set.size() || !e.maps_to_cover) ok = false;
        for (const auto& e : c.k2) {
            if (e.a_index >= c.a_set.size() || e.b_index >= c.b_set.size() ||
                e.part_index >= c.cover.arity() || e.part_index >= c.d_sets.size()) {
                ok = false;
                continue;
            }
            // the recorded witness point must still certify its cell
            if (eval(c.b_set[e.b_index], e.x) != e.hx ||
                !c.cover.parts()[e.part_index].contains(eval(c.a_set[e.a_index], e.x)) ||
                !c.d_sets[e.part_index] || !c.d_sets[e.part_index]->contains(e.hx))
                ok = false;
        }
        checks.push_back(
            {"evidence-complete", ok, ok ? "" : "evidence table incomplete over A and BxA"});
    }

    auto in_k1 = [&](const SetFamilyTuple& t) {
        for (std::size_t i = 0; i < c.cover.arity(); ++i)
            if (!subset_of(t.parts()[i], c.cover.parts()[i])) return false;
        return true;
    };
    auto in_k2 = [&](const SetFamilyTuple& t) {
        for (std::size_t i = 0; i < c.cover.arity(); ++i)
            if (c.d_sets[i] && meets(t.parts()[i], *c.d_sets[i])) return true;
        return false;
    };

    {
        bool all = true;
        std::string witness;
        for (std::size_t i = 0; i < c.a_set.size(); ++i) {
            TupleFamily gp = act_family(c.a_set[i], c.p);
            bool meets_k1 = false;
            for (const auto& t : gp.members())
                if (in_k1(t)) meets_k1 = true;
            if (!meets_k1) {
                all = false;
                witness = "g.p misses K1 for g index " + std::to_string(i);
                break;
            }
        }
        checks.push_back({"k1-membership", all, witness});
    }

    {
        bool all = true;
        std::string witness;
        for (std::size_t j = 0; j < c.b_set.size() && all; ++j) {
            TupleFamily hp = act_family(c.b_set[j], c.p);
            for (const auto& t : hp.members()) {
                if (!in_k2(t)) {
                    all = false;
                    witness = "member of h.p outside K2 for h index " + std::to_string(j);
                    break;
                }
            }
        }
        checks.push_back({"k2-coverage", all, witness});
    }

    {
        bool all = c.separation_bound <= c.delta;
        std::string witness;
        if (!all) {
            witness = "stored separation bound exceeds delta";
        } else {
            std::vector<TupleFamily> hp;
            hp.reserve(c.b_set.size());
            for (const auto& h : c.b_set) hp.push_back(act_family(h, c.p));
            for (std::size_t i = 0; i < c.a_set.size() && all; ++i) {
                TupleFamily gp = act_family(c.a_set[i], c.p);
                for (std::size_t j = 0; j < c.b_set.size(); ++j) {
                    if (!family_separation_at_least(gp, hp[j], c.separation_bound)) {
                        all = false;
                        witness = "family separation below bound at " + pair_tag(j, i);
                        break;
                    }
                }
            }
        }
        checks.push_back({"separation", all, witness});
    }

    {
        bool all = true;
        for (const auto& g : c.a_set) {
            TupleFamily moved = act_family(g, c.p);
            for (const auto& t : moved.members())
                if (in_k1(t) && in_k2(t)) all = false;
        }
        for (const auto& h : c.b_set) {
            TupleFamily moved = act_family(h, c.p);
            for (const auto& t : moved.members())
                if (in_k1(t) && in_k2(t)) all = false;
        }
        checks.push_back({"predicate-exclusion", all,
                          all ? "" : "a tuple lies in both K1 and K2"});
    }

    return report;
}

}  // namespace hsdyn
