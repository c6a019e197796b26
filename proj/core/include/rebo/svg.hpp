#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rebo::io {

/// Fixed-precision number formatting shared by every SVG emitter so that a
/// given input always produces identical bytes.
std::string svg_num(double v);

/// Minimal SVG document builder, millimeter user units.
class SvgBuilder {
public:
    SvgBuilder(double width_mm, double height_mm);

    void comment(const std::string& text);
    void style(const std::string& css);
    void line(double x1, double y1, double x2, double y2, const std::string& cls);
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& cls);
    void circle(double cx, double cy, double r, const std::string& cls);
    void text(double x, double y, const std::string& content, const std::string& attrs = "");
    void raw(const std::string& fragment);

    std::string str() const;  // complete document

private:
    double width_;
    double height_;
    std::string body_;
};

}  // namespace rebo::io
