#pragma once

// Staircase triangulation of a rational rectangle [0,a] x [0,b] in log_r
// units. With N the common denominator, the (Na) x (Nb) integer grid is
// cut into axis-parallel cells of side 1/N and each cell into two
// triangles along the slope -1 diagonal. Every triangle is N-semistable:
// its edge vectors from one vertex, scaled by N, form an integer basis of
// determinant +-1.

#include <sskel/rational.hpp>

#include <array>
#include <vector>

namespace sskel {

struct Triangle {
    std::array<std::array<Rational, 2>, 3> v;
    Int scale;  // N

    // det of the scaled edge basis; +-1 certifies semistability.
    Int scaled_edge_determinant() const {
        std::array<Rational, 2> e1{v[1][0] - v[0][0], v[1][1] - v[0][1]};
        std::array<Rational, 2> e2{v[2][0] - v[0][0], v[2][1] - v[0][1]};
        for (const auto& e : {e1, e2}) {
            for (const auto& c : e) {
                Rational scaled = c * scale;
                if (denominator(scaled) != 1)
                    throw std::domain_error("triangle: edge is not integral at the declared scale");
            }
        }
        Rational det = (e1[0] * e2[1] - e1[1] * e2[0]) * scale * scale;
        return numerator(det);
    }

    bool is_semistable() const {
        try {
            Int d = scaled_edge_determinant();
            return d == 1 || d == -1;
        } catch (const std::domain_error&) {
            return false;
        }
    }

    Rational area() const {
        Rational det = (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) - (v[1][1] - v[0][1]) * (v[2][0] - v[0][0]);
        return det < 0 ? -det / 2 : det / 2;
    }
};

inline std::vector<Triangle> triangulate_leaf(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("triangulate: rectangle sides must be positive");
    Int N = lcm_int(denominator(a), denominator(b));
    Int W = numerator(a * N);
    Int H = numerator(b * N);
    if (W * H > 500000) throw std::overflow_error("triangulate: rectangle too fine (over 10^6 triangles)");

    std::vector<Triangle> out;
    out.reserve(2 * (W * H).convert_to<std::size_t>());
    for (Int i = 0; i < W; ++i) {
        for (Int j = 0; j < H; ++j) {
            Rational x0(i, N), x1(i + 1, N), y0(j, N), y1(j + 1, N);
            out.push_back(Triangle{{{{x0, y0}, {x1, y0}, {x0, y1}}}, N});
            out.push_back(Triangle{{{{x1, y1}, {x0, y1}, {x1, y0}}}, N});
        }
    }
    return out;
}

}  // namespace sskel
