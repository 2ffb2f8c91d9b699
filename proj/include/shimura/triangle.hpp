#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "shimura/rational.hpp"

namespace shimura {

/// Marker for an infinite triangle-group entry (a cusp).
inline constexpr int kInfinity = 0;

enum class TriangleClass { spherical, euclidean, hyperbolic };
std::string to_string(TriangleClass c);

struct TriangleTriple {
    int p = 2, q = 3, r = 7;
    TriangleClass kind = TriangleClass::hyperbolic;
    Rational value;  ///< 1 - 1/p - 1/q - 1/r
};

TriangleTriple classify(int p, int q, int r);

/// 1/2 (-2 + sum (1 - 1/e)) for a hyperbolic triple.
Rational canonical_degree(int p, int q, int r);

/// (a, b) with a p - b q = 1, 0 <= a < q unless a_even moves it to [q, 2q).
std::pair<Integer, Integer> bezout_weights(const Integer& p, const Integer& q, bool a_even = false);

/// Root-stack data over P^1: generic Z/2 inertia and inertia 2p, 2q, 2r at 0, inf, 1.
struct StackDescriptor {
    TriangleTriple triple;
    int generic_inertia = 2;
    std::array<int, 3> local_inertias{};
    std::array<std::string, 3> points{"0", "inf", "1"};
};

StackDescriptor make_stack(int p, int q, int r);

using Complex = std::complex<double>;
using Mobius = Eigen::Matrix<Complex, 2, 2>;

/// Base triangle in the Poincare disk (vertex P at 0, Q on the positive real
/// axis) with the rotations about P, Q, R by 2pi/p, 2pi/q, 2pi/r.
struct TriangleGeometry {
    int p = 0, q = 0, r = 0;
    Complex P, Q, R;
    Mobius dp, dq, dr;
    Mobius reflect_real;  ///< anti-Mobius matrix of z -> conj(z), acting on conj(z)
};

TriangleGeometry triangle_geometry(int p, int q, int r);

/// Scales to determinant one and fixes the sign, so that +-M compare equal.
Mobius normalize_sl2(const Mobius& m);

inline constexpr int kMaxTessellationDepth = 12;

struct Tessellation {
    std::size_t tile_count = 0;
    std::vector<Mobius> elements;                 ///< distinct group elements, BFS order
    std::vector<std::array<Complex, 3>> tiles;    ///< images of P, Q, R
    std::vector<std::array<Complex, 3>> mirrors;  ///< images of the reflected triangle
    std::string svg;
};

/// Enumerates words of length <= depth in the rotations (and inverses),
/// removes duplicates (tolerance 1e-9) and renders the tiles as an SVG document.
Tessellation tessellate(int p, int q, int r, int depth);
/// As above, also writing the SVG to `out`.
Tessellation tessellate(int p, int q, int r, int depth, const std::filesystem::path& out);

} // namespace shimura
