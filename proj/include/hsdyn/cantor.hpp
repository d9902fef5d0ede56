#pragma once

#include "hsdyn/pl_homeo.hpp"
#include "hsdyn/rational.hpp"
#include "hsdyn/staircase.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hsdyn {

// Address word over {0,1} naming a standard clopen piece of the middle-third
// Cantor set: 0 selects the left third, 1 the right third. The empty word is
// the whole set.
Q address_left(const std::string& w);
inline Q address_width(const std::string& w) {
    Q width(1);
    for (std::size_t i = 0; i < w.size(); ++i) width /= 3;
    return width;
}
inline Q address_right(const std::string& w) { return address_left(w) + address_width(w); }

// Order-preserving homeomorphism of the Cantor set given by a tree pair: two
// prefix-free complete address lists of equal length; the i-th domain piece
// maps onto the i-th range piece by address substitution. Stored reduced
// (sibling pairs merged), so equality is equality of maps.
class CantorHomeo {
public:
    CantorHomeo(std::vector<std::string> domain, std::vector<std::string> range);

    static CantorHomeo identity() { return CantorHomeo({""}, {""}); }

    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<std::string>& range() const { return range_; }
    std::size_t depth() const;

    bool operator==(const CantorHomeo& o) const {
        return domain_ == o.domain_ && range_ == o.range_;
    }
    std::strong_ordering operator<=>(const CantorHomeo& o) const;

private:
    std::vector<std::string> domain_;
    std::vector<std::string> range_;
};

CantorHomeo cantor_inverse(const CantorHomeo& u);

// (u o v) by common refinement of v's range and u's domain partitions.
CantorHomeo cantor_compose(const CantorHomeo& u, const CantorHomeo& v);

// The canonical extension to [0,1]: affine on each domain piece and affine
// across deleted intervals. Restricted to the Cantor set it is the tree-pair
// map; it is exactly piecewise linear, and composition/inversion of
// extensions match cantor_compose/cantor_inverse.
PLHomeo cantor_to_interval(const CantorHomeo& u);

// Graph of the canonical extension as a staircase curve; passes through
// (x, u(x)) for every deleted-interval endpoint x.
StaircaseCurve cantor_graph(const CantorHomeo& u);

}  // namespace hsdyn
