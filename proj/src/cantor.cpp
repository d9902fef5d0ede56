#include "hsdyn/cantor.hpp"

#include <algorithm>

namespace hsdyn {

Q address_left(const std::string& w) {
    Q pos(0);
    Q width(1);
    for (char c : w) {
        width /= 3;
        if (c == '1') pos += 2 * width;
    }
    return pos;
}

namespace {

bool is_prefix(const std::string& p, const std::string& w) {
    return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

void validate_partition(const std::vector<std::string>& words) {
    if (words.empty())
        throw Error(ErrorCode::EmptyInput, "address partition must be nonempty");
    Q measure(0);
    for (const auto& w : words) {
        for (char c : w)
            if (c != '0' && c != '1')
                throw Error(ErrorCode::OutOfRange, "address letters must be 0 or 1");
        Q m(1);
        for (std::size_t i = 0; i < w.size(); ++i) m /= 2;
        measure += m;
    }
    for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i] <= words[i - 1])
            throw Error(ErrorCode::OutOfRange, "addresses must strictly increase");
        if (is_prefix(words[i - 1], words[i]))
            throw Error(ErrorCode::OutOfRange, "addresses must be prefix-free");
    }
    // prefix-free with full dyadic measure <=> the pieces partition the set
    if (measure != 1)
        throw Error(ErrorCode::OutOfRange, "addresses do not partition the Cantor set");
}

// Merge sibling leaf pairs (w0, w1) -> (v0, v1) down to the reduced tree pair.
void reduce(std::vector<std::string>& dom, std::vector<std::string>& rng) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < dom.size(); ++i) {
            const auto& d0 = dom[i];
            const auto& d1 = dom[i + 1];
            const auto& r0 = rng[i];
            const auto& r1 = rng[i + 1];
            if (d0.size() > 0 && d0.size() == d1.size() && r0.size() > 0 &&
                r0.size() == r1.size() && d0.back() == '0' && d1.back() == '1' &&
                r0.back() == '0' && r1.back() == '1' &&
                d0.compare(0, d0.size() - 1, d1, 0, d1.size() - 1) == 0 &&
                r0.compare(0, r0.size() - 1, r1, 0, r1.size() - 1) == 0) {
                dom[i] = d0.substr(0, d0.size() - 1);
                rng[i] = r0.substr(0, r0.size() - 1);
                dom.erase(dom.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                rng.erase(rng.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

CantorHomeo::CantorHomeo(std::vector<std::string> domain, std::vector<std::string> range)
    : domain_(std::move(domain)), range_(std::move(range)) {
    if (domain_.size() != range_.size())
        throw Error(ErrorCode::ArityMismatch, "domain and range lists differ in length");
    // sort by domain, carrying the pairing
    std::vector<std::size_t> idx(domain_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return domain_[a] < domain_[b]; });
    std::vector<std::string> d, r;
    d.reserve(idx.size());
    r.reserve(idx.size());
    for (std::size_t i : idx) {
        d.push_back(domain_[i]);
        r.push_back(range_[i]);
    }
    domain_ = std::move(d);
    range_ = std::move(r);
    validate_partition(domain_);
    validate_partition(range_);  // sortedness check doubles as order-preservation
    reduce(domain_, range_);
}

std::size_t CantorHomeo::depth() const {
    std::size_t d = 0;
    for (const auto& w : domain_) d = std::max(d, w.size());
    for (const auto& w : range_) d = std::max(d, w.size());
    return d;
}

std::strong_ordering CantorHomeo::operator<=>(const CantorHomeo& o) const {
    if (auto c = domain_ <=> o.domain_; c != 0) return c;
    return range_ <=> o.range_;
}

CantorHomeo cantor_inverse(const CantorHomeo& u) {
    return CantorHomeo(u.range(), u.domain());
}

CantorHomeo cantor_compose(const CantorHomeo& u, const CantorHomeo& v) {
    // cells of the common refinement of v.range and u.domain
    std::vector<std::string> cells;
    for (const auto& w : v.range()) {
        for (const auto& d : u.domain()) {
            if (is_prefix(d, w)) {
                cells.push_back(w);
                break;
            }
        }
    }
    for (const auto& w : u.domain()) {
        for (const auto& r : v.range()) {
            if (is_prefix(r, w) && r.size() < w.size()) {
                cells.push_back(w);
                break;
            }
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    std::vector<std::string> dom, rng;
    dom.reserve(cells.size());
    rng.reserve(cells.size());
    for (const auto& c : cells) {
        for (std::size_t i = 0; i < v.range().size(); ++i) {
            if (is_prefix(v.range()[i], c)) {
                dom.push_back(v.domain()[i] + c.substr(v.range()[i].size()));
                break;
            }
        }
        for (std::size_t j = 0; j < u.domain().size(); ++j) {
            if (is_prefix(u.domain()[j], c)) {
                rng.push_back(u.range()[j] + c.substr(u.domain()[j].size()));
                break;
            }
        }
    }
    return CantorHomeo(std::move(dom), std::move(rng));
}

PLHomeo cantor_to_interval(const CantorHomeo& u) {
    std::vector<PLHomeo::Breakpoint> bps;
    bps.reserve(2 * u.domain().size());
    for (std::size_t i = 0; i < u.domain().size(); ++i) {
        bps.push_back({address_left(u.domain()[i]), address_left(u.range()[i])});
        bps.push_back({address_right(u.domain()[i]), address_right(u.range()[i])});
    }
    return PLHomeo(std::move(bps));
}

StaircaseCurve cantor_graph(const CantorHomeo& u) {
    return graph(cantor_to_interval(u));
}

}  // namespace hsdyn
