#include "platknot/render.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace platknot {

// --------------------------------------------------------------------------
// ASCII
// --------------------------------------------------------------------------
//
// Layout on a character grid with one strand every `pitch` columns:
//
//    ___     ___        <- top arcs
//   |   |   |   |       <- bar row (every strand vertical)
//   |   \       |       <- one row per letter (here +2: strand 2 over
//   |   |   |   |          strand 3, whose bar breaks)
//   |___|   |___|       <- bottom arcs
//
// Each crossing is a two-column glyph on the columns of the two strands
// involved: the over strand's column carries the diagonal ('\' when the
// left strand is over, '/' when the right one is) and the under strand's
// bar breaks.  Rows alternate crossing/bar so adjacent crossings never
// touch.

std::string render_ascii(const PlatPresentation& plat) {
    const int m = plat.strand_count();
    const int n = plat.bridge_count();
    constexpr int pitch = 4;
    const auto col = [](int p) { return (p - 1) * pitch; };
    const int width = col(m) + 1;

    const auto bar_row = [&]() {
        std::string row(static_cast<std::size_t>(width), ' ');
        for (int p = 1; p <= m; ++p) {
            row[static_cast<std::size_t>(col(p))] = '|';
        }
        return row;
    };

    std::vector<std::string> lines;
    std::string top(static_cast<std::size_t>(width), ' ');
    for (int i = 1; i <= n; ++i) {
        for (int c = col(2 * i - 1) + 1; c < col(2 * i); ++c) {
            top[static_cast<std::size_t>(c)] = '_';
        }
    }
    lines.push_back(std::move(top));
    lines.push_back(bar_row());

    for (const int e : plat.braid().letters()) {
        const int i = e < 0 ? -e : e;
        std::string row = bar_row();
        if (e > 0) {
            row[static_cast<std::size_t>(col(i))] = '\\';
            row[static_cast<std::size_t>(col(i + 1))] = ' ';
        } else {
            row[static_cast<std::size_t>(col(i))] = ' ';
            row[static_cast<std::size_t>(col(i + 1))] = '/';
        }
        lines.push_back(std::move(row));
        lines.push_back(bar_row());
    }

    std::string bottom = bar_row();
    for (int i = 1; i <= n; ++i) {
        for (int c = col(2 * i - 1) + 1; c < col(2 * i); ++c) {
            bottom[static_cast<std::size_t>(c)] = '_';
        }
    }
    lines.push_back(std::move(bottom));

    std::ostringstream out;
    for (const auto& line : lines) {
        const auto end = line.find_last_not_of(' ');
        if (end == std::string::npos) {
            out << '\n';
        } else {
            out << line.substr(0, end + 1) << '\n';
        }
    }
    return out.str();
}

// --------------------------------------------------------------------------
// SVG
// --------------------------------------------------------------------------
//
// Arcs are semicircles; each letter occupies one horizontal band in which the
// two involved strands cross as diagonals.  The under strand is interrupted
// around the midpoint.  All coordinates are integers so output is identical
// across platforms.

std::string render_svg(const PlatPresentation& plat) {
    const int m = plat.strand_count();
    const int n = plat.bridge_count();
    const auto& letters = plat.braid().letters();
    const int length = static_cast<int>(letters.size());
    constexpr int pitch = 40;
    const auto x = [](int p) { return 20 + (p - 1) * pitch; };
    const auto y = [](int k) { return 40 + k * pitch; };  // band boundary k = 0..length
    const int width = x(m) + 20;
    const int height = y(length) + 40;
    constexpr int radius = pitch / 2;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <g stroke=\"#1a1a1a\" stroke-width=\"3\" fill=\"none\" stroke-linecap=\"round\">\n";

    const auto line = [&](int ax, int ay, int bx, int by) {
        out << "    <line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx << "\" y2=\"" << by
            << "\"/>\n";
    };
    // Sweep flag 1 bows the semicircle upward, 0 downward.
    const auto arc = [&](int ax, int bx, int at_y, int sweep) {
        out << "    <path d=\"M " << ax << ' ' << at_y << " A " << radius << ' ' << radius
            << " 0 0 " << sweep << ' ' << bx << ' ' << at_y << "\"/>\n";
    };

    for (int i = 1; i <= n; ++i) {
        arc(x(2 * i - 1), x(2 * i), y(0), 1);
    }

    for (int k = 0; k < length; ++k) {
        const int e = letters[k];
        const int i = e < 0 ? -e : e;
        const int y1 = y(k);
        const int y2 = y(k + 1);
        for (int p = 1; p <= m; ++p) {
            if (p != i && p != i + 1) {
                line(x(p), y1, x(p), y2);
            }
        }
        const int xl = x(i);
        const int xr = x(i + 1);
        // Draw the under strand as two segments with a central gap.
        const auto broken = [&](int ax, int ay, int bx, int by) {
            line(ax, ay, ax + (bx - ax) * 35 / 100, ay + (by - ay) * 35 / 100);
            line(ax + (bx - ax) * 65 / 100, ay + (by - ay) * 65 / 100, bx, by);
        };
        if (e > 0) {
            // Positive letter: the strand running left-top to right-bottom is over.
            broken(xr, y1, xl, y2);
            line(xl, y1, xr, y2);
        } else {
            broken(xl, y1, xr, y2);
            line(xr, y1, xl, y2);
        }
    }

    for (int i = 1; i <= n; ++i) {
        arc(x(2 * i - 1), x(2 * i), y(length), 0);
    }

    out << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace platknot
