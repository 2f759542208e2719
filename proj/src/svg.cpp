#include "gcf/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gcf/sails.hpp"

namespace gcf {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double surd_to_double(const QuadraticSurd& s) {
    return (s.p().get_d() + s.q().get_d() * std::sqrt(s.D().get_d())) / s.r().get_d();
}

}  // namespace

std::string render_svg(const IntMatrix2& A, const Int& window) {
    auto sails = four_sail_periods(A);
    Int w = window;
    if (sgn(w) <= 0) {
        w = 3;
        for (const auto& s : sails)
            for (const auto& v : s.chain.vertices) w = std::max(w, Int(chebyshev_norm(v) + 1));
    }
    double half = w.get_d();
    const double size = 820.0, margin = 10.0;
    double unit = (size - 2 * margin) / (2 * half);
    auto X = [&](double x) { return margin + (x + half) * unit; };
    auto Y = [&](double y) { return margin + (half - y) * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
        << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << " " << fmt(size) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Lattice dots (skipped for very large windows to keep files small).
    if (w <= 80) {
        for (Int x = -w; x <= w; ++x)
            for (Int y = -w; y <= w; ++y) {
                bool origin = sgn(x) == 0 && sgn(y) == 0;
                out << "<circle cx=\"" << fmt(X(x.get_d())) << "\" cy=\"" << fmt(Y(y.get_d()))
                    << "\" r=\"" << (origin ? "4.00" : "1.60") << "\" fill=\""
                    << (origin ? "#000000" : "#b0b0b0") << "\"/>\n";
            }
    }

    // Eigenlines, clipped to the window square.
    EigenData eig = eigen_data(A);
    for (double slope : {surd_to_double(eig.slope_plus), surd_to_double(eig.slope_minus)}) {
        double x0, y0;
        if (std::fabs(slope) <= 1.0) {
            x0 = half;
            y0 = half * slope;
        } else {
            x0 = half / std::fabs(slope);
            y0 = half * (slope > 0 ? 1.0 : -1.0);
        }
        out << "<line x1=\"" << fmt(X(-x0)) << "\" y1=\"" << fmt(Y(-y0)) << "\" x2=\""
            << fmt(X(x0)) << "\" y2=\"" << fmt(Y(y0))
            << "\" stroke=\"#c02020\" stroke-width=\"1.50\" stroke-dasharray=\"6,4\"/>\n";
    }

    static const char* colors[4] = {"#1f4e9c", "#1f7a3c", "#6a3d9a", "#b05a00"};
    for (const auto& s : sails) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[s.octant]
            << "\" stroke-width=\"2.50\" points=\"";
        for (std::size_t i = 0; i < s.chain.vertices.size(); ++i) {
            const auto& v = s.chain.vertices[i];
            if (i) out << ' ';
            out << fmt(X(v.x.get_d())) << ',' << fmt(Y(v.y.get_d()));
        }
        out << "\"/>\n";
        for (const auto& v : s.chain.vertices)
            out << "<circle cx=\"" << fmt(X(v.x.get_d())) << "\" cy=\"" << fmt(Y(v.y.get_d()))
                << "\" r=\"3.20\" fill=\"" << colors[s.octant] << "\"/>\n";

        // Period word: lengths on edge midpoints (black), sines on vertices
        // (white digits on dark discs), closing sine on the last vertex.
        const auto& verts = s.chain.vertices;
        for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
            double mx = (verts[i].x.get_d() + verts[i + 1].x.get_d()) / 2;
            double my = (verts[i].y.get_d() + verts[i + 1].y.get_d()) / 2;
            out << "<text x=\"" << fmt(X(mx) + 5) << "\" y=\"" << fmt(Y(my) - 5)
                << "\" font-size=\"15\" fill=\"#000000\">" << s.lls.values[2 * i].get_str()
                << "</text>\n";
        }
        for (std::size_t i = 1; i < verts.size(); ++i) {
            const Int& sine = s.lls.values[2 * i - 1];
            double vx = verts[i].x.get_d(), vy = verts[i].y.get_d();
            out << "<circle cx=\"" << fmt(X(vx)) << "\" cy=\"" << fmt(Y(vy))
                << "\" r=\"9.00\" fill=\"#303030\"/>\n";
            out << "<text x=\"" << fmt(X(vx)) << "\" y=\"" << fmt(Y(vy) + 4.5)
                << "\" font-size=\"12\" fill=\"#ffffff\" text-anchor=\"middle\">"
                << sine.get_str() << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gcf
