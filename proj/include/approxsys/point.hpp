// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "approxsys/rat.hpp"

namespace approxsys {

/// A point of Q^N under the max metric. N >= 1.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rat> coords);
    Point(std::initializer_list<Rat> coords);

    /// Comma-separated rational literals, e.g. "1,3" or "-1/2, 0.25".
    static Point parse(std::string_view text);

    std::size_t dim() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic; only used to key ordered containers.
    friend bool operator<(const Point& p, const Point& q) { return p.coords_ < q.coords_; }

    std::string str() const;

private:
    std::vector<Rat> coords_;
};

/// max_i |p_i - q_i|. Throws DimensionError on a dimension mismatch.
Rat dist(const Point& p, const Point& q);

std::ostream& operator<<(std::ostream& os, const Point& p);

} // namespace approxsys
