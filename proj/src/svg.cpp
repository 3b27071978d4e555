#include "clayton/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace clayton {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 55.0;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct Scale {
    double lo;
    double hi;
    double px_lo;
    double px_hi;

    double operator()(double x) const {
        const double t = (x - lo) / (hi - lo);
        return px_lo + t * (px_hi - px_lo);
    }
};

void open_doc(std::ostream& os) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
       << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(kHeight)
       << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostream& os, const std::string& xlabel,
          const std::string& ylabel) {
    const double x0 = kMarginLeft;
    const double x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom;
    const double y1 = kMarginTop;
    os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\""
       << num(x1) << "\" y2=\"" << num(y0)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\""
       << num(x0) << "\" y2=\"" << num(y1)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << num((x0 + x1) / 2.0) << "\" y=\""
       << num(kHeight - 12.0)
       << "\" text-anchor=\"middle\" font-size=\"14\">" << xlabel
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << num((y0 + y1) / 2.0)
       << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
          "18 " << num((y0 + y1) / 2.0) << ")\">" << ylabel << "</text>\n";
}

void tick_labels(std::ostream& os, const Scale& sx, const Scale& sy) {
    const double y0 = kHeight - kMarginBottom;
    for (int i = 0; i <= 4; ++i) {
        const double fx = sx.lo + (sx.hi - sx.lo) * i / 4.0;
        const double fy = sy.lo + (sy.hi - sy.lo) * i / 4.0;
        os << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(y0 + 18.0)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << num(fx)
           << "</text>\n";
        os << "<text x=\"" << num(kMarginLeft - 8.0) << "\" y=\""
           << num(sy(fy) + 4.0)
           << "\" text-anchor=\"end\" font-size=\"11\">" << num(fy)
           << "</text>\n";
    }
}

} // namespace

void write_recovery_svg(std::ostream& os,
                        const std::vector<RecoveryRecord>& records) {
    double max_val = 0.0;
    for (const auto& r : records) {
        max_val = std::max(max_val, r.theta_true);
        if (std::isfinite(r.theta_hat)) {
            max_val = std::max(max_val, r.theta_hat);
        }
    }
    if (max_val <= 0.0) max_val = 1.0;
    max_val *= 1.05;

    const Scale sx{0.0, max_val, kMarginLeft, kWidth - kMarginRight};
    const Scale sy{0.0, max_val, kHeight - kMarginBottom, kMarginTop};

    open_doc(os);
    axes(os, "True theta", "Estimated theta");
    tick_labels(os, sx, sy);

    os << "<line class=\"identity\" x1=\"" << num(sx(0.0)) << "\" y1=\""
       << num(sy(0.0)) << "\" x2=\"" << num(sx(max_val)) << "\" y2=\""
       << num(sy(max_val))
       << "\" stroke=\"black\" stroke-dasharray=\"6,4\" "
          "stroke-width=\"1\"/>\n";

    for (const auto& r : records) {
        if (!std::isfinite(r.theta_hat)) continue;
        os << "<circle class=\"estimate\" cx=\"" << num(sx(r.theta_true))
           << "\" cy=\"" << num(sy(r.theta_hat))
           << "\" r=\"4\" fill=\"none\" stroke=\"steelblue\" "
              "stroke-width=\"1.5\"/>\n";
    }

    // legend
    const double lx = kMarginLeft + 14.0;
    os << "<circle cx=\"" << num(lx) << "\" cy=\"34\" r=\"4\" fill=\"none\" "
          "stroke=\"steelblue\" stroke-width=\"1.5\"/>\n"
       << "<text x=\"" << num(lx + 10.0)
       << "\" y=\"38\" font-size=\"12\">Estimates</text>\n"
       << "<line x1=\"" << num(lx - 5.0) << "\" y1=\"52\" x2=\""
       << num(lx + 5.0)
       << "\" y2=\"52\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n"
       << "<text x=\"" << num(lx + 10.0)
       << "\" y=\"56\" font-size=\"12\">Identity</text>\n";

    os << "</svg>\n";
}

void write_scaling_svg(std::ostream& os,
                       const std::vector<ScalingRecord>& records) {
    double max_w = 1.0;
    double max_t = 0.0;
    for (const auto& r : records) {
        max_w = std::max(max_w, static_cast<double>(r.workers));
        max_t = std::max(max_t, r.wall_time_seconds);
    }
    if (max_t <= 0.0) max_t = 1.0;
    max_t *= 1.1;

    const Scale sx{0.0, max_w + 0.5, kMarginLeft, kWidth - kMarginRight};
    const Scale sy{0.0, max_t, kHeight - kMarginBottom, kMarginTop};

    open_doc(os);
    axes(os, "Number of workers", "Execution time (s)");
    tick_labels(os, sx, sy);

    os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" "
          "points=\"";
    for (const auto& r : records) {
        os << num(sx(static_cast<double>(r.workers))) << ","
           << num(sy(r.wall_time_seconds)) << " ";
    }
    os << "\"/>\n";

    for (const auto& r : records) {
        os << "<circle class=\"timing\" cx=\""
           << num(sx(static_cast<double>(r.workers))) << "\" cy=\""
           << num(sy(r.wall_time_seconds))
           << "\" r=\"4\" fill=\"steelblue\"/>\n";
    }

    os << "</svg>\n";
}

} // namespace clayton
