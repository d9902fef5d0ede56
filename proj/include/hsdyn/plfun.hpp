#pragma once

#include "hsdyn/rational.hpp"

#include <utility>
#include <vector>

namespace hsdyn {

// Exact piecewise-linear function on [0,1]: breakpoints with strictly
// increasing parameters, first at 0, last at 1, affine in between. The
// building block for sup/inf computations over curve parametrizations.
class PLFun {
public:
    using Point = std::pair<Q, Q>;  // (t, value)

    static PLFun constant(const Q& v) { return PLFun({{Q(0), v}, {Q(1), v}}); }
    // t -> v0 + (v1 - v0) t
    static PLFun affine(const Q& v0, const Q& v1) { return PLFun({{Q(0), v0}, {Q(1), v1}}); }
    static PLFun from_points(std::vector<Point> pts);

    const std::vector<Point>& points() const { return pts_; }

    Q operator()(const Q& t) const;

    PLFun scaled(const Q& c) const;
    PLFun shifted(const Q& c) const;
    PLFun abs() const;
    // min(max(f, 0), 1), used for clamped parameters
    PLFun clamp01() const;

    friend PLFun operator+(const PLFun& f, const PLFun& g);
    friend PLFun operator-(const PLFun& f, const PLFun& g);

    static PLFun min(const PLFun& f, const PLFun& g);
    static PLFun max(const PLFun& f, const PLFun& g);

    Q max_value() const;
    Q min_value() const;

private:
    explicit PLFun(std::vector<Point> pts) : pts_(std::move(pts)) {}
    std::vector<Point> pts_;
};

}  // namespace hsdyn
