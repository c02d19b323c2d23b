// SPDX-License-Identifier: Apache-2.0

#include "approxsys/point.hpp"

#include <ostream>

#include "approxsys/errors.hpp"

namespace approxsys {

Point::Point(std::vector<Rat> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw DimensionError("points need at least one coordinate");
}

Point::Point(std::initializer_list<Rat> coords) : Point(std::vector<Rat>(coords)) {}

Point Point::parse(std::string_view text)
{
    std::vector<Rat> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        coords.push_back(Rat::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Point(std::move(coords));
}

std::string Point::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ", ";
        out += coords_[i].str();
    }
    return out + ")";
}

Rat dist(const Point& p, const Point& q)
{
    if (p.dim() != q.dim())
        throw DimensionError("dist: dimension " + std::to_string(p.dim()) + " vs " +
                             std::to_string(q.dim()));
    Rat best;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        Rat d = abs(p[i] - q[i]);
        if (best < d)
            best = std::move(d);
    }
    return best;
}

std::ostream& operator<<(std::ostream& os, const Point& p)
{
    return os << p.str();
}

} // namespace approxsys
