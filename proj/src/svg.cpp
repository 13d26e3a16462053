#include "ucat/svg.hpp"

#include <fstream>
#include <sstream>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

struct View {
    double x0, x1, y0, y1;
    static constexpr double W = 840, H = 520, PAD = 40;
    double px(double x) const { return PAD + (x - x0) / (x1 - x0) * (W - 2 * PAD); }
    double py(double y) const { return H - PAD - (y - y0) / (y1 - y0) * (H - 2 * PAD); }
};

void polyline(std::ostringstream& os, const View& v,
              const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
              const std::string& extra = "") {
    os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.6\" " << extra
       << " points=\"";
    for (auto& [x, y] : pts) os << v.px(x) << "," << v.py(y) << " ";
    os << "\"/>\n";
}

std::vector<std::pair<double, double>> sample(const PLFunction& f) {
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < f.size(); ++i)
        pts.emplace_back(to_double(f.breakpoints[i]), to_double(f.values[i]));
    return pts;
}

} // namespace

std::string decomposition_svg(const PLFunction& f, const UnimodalDecomposition& d) {
    // cumulative variation profiles at breakpoints
    std::vector<std::pair<double, double>> gp, hp;
    Scalar g(0), h(0);
    gp.emplace_back(to_double(f.x_min()), 0.0);
    hp.emplace_back(to_double(f.x_min()), 0.0);
    for (size_t i = 1; i < f.size(); ++i) {
        Scalar diff = f.values[i] - f.values[i - 1];
        if (diff > 0)
            g += diff;
        else
            h -= diff;
        gp.emplace_back(to_double(f.breakpoints[i]), to_double(g));
        hp.emplace_back(to_double(f.breakpoints[i]), to_double(h));
    }

    double ymax = to_double(g) * 1.05 + 0.1;
    View v{to_double(f.x_min()) - 0.3, to_double(f.x_max()) + 0.3, -0.1, ymax};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << View::W << "\" height=\""
       << View::H << "\" viewBox=\"0 0 " << View::W << " " << View::H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axis
    os << "<line x1=\"" << v.px(v.x0) << "\" y1=\"" << v.py(0) << "\" x2=\"" << v.px(v.x1)
       << "\" y2=\"" << v.py(0) << "\" stroke=\"#999\" stroke-width=\"0.8\"/>\n";

    polyline(os, v, gp, "#2a9d2a");
    polyline(os, v, hp, "#d03030");
    polyline(os, v, sample(f), "black", "stroke-width=\"2.2\"");

    static const char* palette[] = {"#1f6fd0", "#e08b00", "#7d3fbf", "#0e8f8f", "#b0316e"};
    for (size_t i = 0; i < d.summands.size(); ++i)
        polyline(os, v, sample(d.summands[i]), palette[i % 5], "stroke-dasharray=\"6 3\"");

    // sweep broken line: horizontal to (x_i, h(x_i)), vertical to (x_i, g(x_i))
    if (!d.summands.empty()) {
        auto heval = [&](double x) {
            Scalar acc(0);
            for (size_t i = 1; i < f.size(); ++i) {
                if (to_double(f.breakpoints[i]) > x) {
                    double t = (x - to_double(f.breakpoints[i - 1])) /
                               (to_double(f.breakpoints[i]) - to_double(f.breakpoints[i - 1]));
                    double seg = to_double(f.values[i]) - to_double(f.values[i - 1]);
                    return to_double(acc) + (seg < 0 ? -seg * t : 0.0);
                }
                Scalar diff = f.values[i] - f.values[i - 1];
                if (diff < 0) acc -= diff;
            }
            return to_double(acc);
        };
        auto geval = [&](double x) {
            Scalar acc(0);
            for (size_t i = 1; i < f.size(); ++i) {
                if (to_double(f.breakpoints[i]) > x) {
                    double t = (x - to_double(f.breakpoints[i - 1])) /
                               (to_double(f.breakpoints[i]) - to_double(f.breakpoints[i - 1]));
                    double seg = to_double(f.values[i]) - to_double(f.values[i - 1]);
                    return to_double(acc) + (seg > 0 ? seg * t : 0.0);
                }
                Scalar diff = f.values[i] - f.values[i - 1];
                if (diff > 0) acc += diff;
            }
            return to_double(acc);
        };
        std::vector<std::pair<double, double>> broken;
        broken.emplace_back(to_double(f.x_min()), 0.0);
        for (auto& [mlo, mhi] : d.mode_points) {
            double x = to_double(mhi);
            broken.emplace_back(x, heval(x));
            broken.emplace_back(x, geval(x));
        }
        broken.emplace_back(to_double(f.x_max()), to_double(g));
        polyline(os, v, broken, "#555", "stroke-dasharray=\"2 3\"");
    }
    os << "</svg>\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

} // namespace ucat
