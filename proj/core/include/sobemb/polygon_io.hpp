#pragma once

#include <stdexcept>
#include <string>

#include "sobemb/geometry.hpp"

namespace sobemb {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Polygon document: {"vertices": [[x, y], ...]} counterclockwise.
// Decomposition document: {"pieces": [<polygon>, ...], "parent": <polygon>?};
// a bare polygon document is accepted as a single-piece decomposition.
// Readers throw ParseError on malformed input (including geometrically
// invalid polygons).

ConvexPolygon read_polygon(const std::string& json_text);
Decomposition read_decomposition(const std::string& json_text);

ConvexPolygon read_polygon_file(const std::string& path);
Decomposition read_decomposition_file(const std::string& path);

std::string write_polygon(const ConvexPolygon& p);
std::string write_decomposition(const Decomposition& d);

}  // namespace sobemb
