#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "shimura/errors.hpp"
#include "shimura/triangle.hpp"

namespace shimura {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupTolerance = 1e-9;

Complex apply(const Mobius& m, Complex z) { return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1)); }

// Circle orthogonal to the unit circle through a and b: 2 Re(z conj(c)) = |z|^2 + 1.
Complex orthogonal_center(Complex a, Complex b) {
    Eigen::Matrix2d A;
    A << 2 * a.real(), 2 * a.imag(), 2 * b.real(), 2 * b.imag();
    const Eigen::Vector2d rhs(std::norm(a) + 1, std::norm(b) + 1);
    const Eigen::Vector2d c = A.partialPivLu().solve(rhs);
    return {c(0), c(1)};
}

std::string fmt(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// SVG path for a geodesic triangle; y is flipped so the picture matches the math orientation.
std::string triangle_path(const std::array<Complex, 3>& v) {
    std::ostringstream d;
    d << "M " << fmt(v[0].real()) << ' ' << fmt(-v[0].imag());
    for (int k = 0; k < 3; ++k) {
        const Complex a = v[static_cast<std::size_t>(k)];
        const Complex b = v[static_cast<std::size_t>((k + 1) % 3)];
        const double cross = a.real() * b.imag() - a.imag() * b.real();
        if (std::abs(cross) < 1e-12) {
            d << " L " << fmt(b.real()) << ' ' << fmt(-b.imag());
            continue;
        }
        const Complex c = orthogonal_center(a, b);
        const double radius = std::abs(a - c);
        const Complex dir = b - a, toc = c - a;
        const bool center_left = dir.real() * toc.imag() - dir.imag() * toc.real() > 0;
        d << " A " << fmt(radius) << ' ' << fmt(radius) << " 0 0 " << (center_left ? 0 : 1) << ' '
          << fmt(b.real()) << ' ' << fmt(-b.imag());
    }
    d << " Z";
    return d.str();
}

bool same_projective(const Mobius& a, const Mobius& b) {
    return (a - b).cwiseAbs().maxCoeff() < kDedupTolerance || (a + b).cwiseAbs().maxCoeff() < kDedupTolerance;
}

} // namespace

Mobius normalize_sl2(const Mobius& m) {
    const Complex det = m.determinant();
    if (std::abs(det) == 0.0) throw DomainError("singular Mobius matrix");
    Mobius n = m / std::sqrt(det);
    // Fix the overall sign by the first entry that is clearly nonzero.
    for (int k = 0; k < 4; ++k) {
        const Complex e = n(k / 2, k % 2);
        if (std::abs(e) < 1e-12) continue;
        if (e.real() < -1e-12 || (std::abs(e.real()) <= 1e-12 && e.imag() < 0)) n = -n;
        break;
    }
    return n;
}

TriangleGeometry triangle_geometry(int p, int q, int r) {
    const TriangleTriple t = classify(p, q, r);
    if (t.kind != TriangleClass::hyperbolic) throw DomainError("tessellation needs a hyperbolic triple");
    if (p == kInfinity || q == kInfinity || r == kInfinity) throw DomainError("tessellation needs finite orders");
    const double ap = kPi / p, aq = kPi / q, ar = kPi / r;
    const double cosh_pq = (std::cos(ar) + std::cos(ap) * std::cos(aq)) / (std::sin(ap) * std::sin(aq));
    const double cosh_pr = (std::cos(aq) + std::cos(ap) * std::cos(ar)) / (std::sin(ap) * std::sin(ar));

    TriangleGeometry g;
    g.p = p;
    g.q = q;
    g.r = r;
    g.P = 0.0;
    g.Q = std::tanh(std::acosh(cosh_pq) / 2);
    g.R = std::tanh(std::acosh(cosh_pr) / 2) * std::polar(1.0, ap);

    // Reflections z -> M(conj z) in the three sides.
    const Mobius s1 = Mobius::Identity();
    Mobius s2;
    s2 << std::polar(1.0, ap), 0.0, 0.0, std::polar(1.0, -ap);
    const Complex c = orthogonal_center(g.Q, g.R);
    Mobius s3;
    s3 << c, -1.0, 1.0, -std::conj(c);
    s3 /= std::sqrt(s3.determinant());

    // Composing two reflections gives the Mobius map A * conj(B).
    g.dp = normalize_sl2(s1 * s2.conjugate());
    g.dq = normalize_sl2(s3 * s1.conjugate());
    g.dr = normalize_sl2(s2 * s3.conjugate());
    g.reflect_real = s1;
    return g;
}

Tessellation tessellate(int p, int q, int r, int depth) {
    if (depth < 0 || depth > kMaxTessellationDepth)
        throw DomainError("depth must be in [0, " + std::to_string(kMaxTessellationDepth) + "]");
    const TriangleGeometry g = triangle_geometry(p, q, r);
    const std::array<Mobius, 6> gens = {g.dp, g.dp.inverse(), g.dq, g.dq.inverse(), g.dr, g.dr.inverse()};

    Tessellation out;
    std::map<long, std::vector<std::size_t>> buckets;
    auto bucket_key = [](const Mobius& m) { return std::lround(std::abs(m(0, 0)) * 1e6); };
    auto insert = [&](const Mobius& m) {
        const long key = bucket_key(m);
        for (long k = key - 1; k <= key + 1; ++k) {
            auto it = buckets.find(k);
            if (it == buckets.end()) continue;
            for (std::size_t idx : it->second)
                if (same_projective(out.elements[idx], m)) return false;
        }
        buckets[key].push_back(out.elements.size());
        out.elements.push_back(m);
        return true;
    };

    insert(normalize_sl2(Mobius::Identity()));
    std::size_t frontier_begin = 0;
    for (int level = 0; level < depth; ++level) {
        const std::size_t frontier_end = out.elements.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i)
            for (const auto& s : gens) insert(normalize_sl2(out.elements[i] * s));
        frontier_begin = frontier_end;
    }

    const Complex mirrored_R = std::conj(g.R);
    for (const auto& m : out.elements) {
        out.tiles.push_back({apply(m, g.P), apply(m, g.Q), apply(m, g.R)});
        out.mirrors.push_back({apply(m, g.P), apply(m, g.Q), apply(m, mirrored_R)});
    }
    out.tile_count = out.tiles.size();

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
        << "<title>(" << p << "," << q << "," << r << ") triangle tessellation, depth " << depth << "</title>\n"
        << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.004\"/>\n";
    for (std::size_t i = 0; i < out.tiles.size(); ++i) {
        svg << "<path class=\"tile\" fill=\"#2b2b2b\" stroke=\"#000000\" stroke-width=\"0.001\" d=\""
            << triangle_path(out.tiles[i]) << "\"/>\n";
        svg << "<path class=\"mirror\" fill=\"#f4f4f4\" stroke=\"#000000\" stroke-width=\"0.001\" d=\""
            << triangle_path(out.mirrors[i]) << "\"/>\n";
    }
    svg << "</svg>\n";
    out.svg = svg.str();
    return out;
}

Tessellation tessellate(int p, int q, int r, int depth, const std::filesystem::path& path) {
    Tessellation t = tessellate(p, q, r, depth);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + path.string() + "' for writing");
    f << t.svg;
    if (!f.flush()) throw Error("failed writing '" + path.string() + "'");
    return t;
}

} // namespace shimura
