#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rebo::origami {

/// Cone-angle band covered by the compression experiments. Designs outside
/// the band are still generated but flagged as extrapolated.
inline constexpr double kCharacterizedBetaLoDeg = 15.0;
inline constexpr double kCharacterizedBetaHiDeg = 45.0;

/// Design parameters of one bellows cylinder.
struct ReboParams {
    double a_mm;        // major trapezoid dimension; also the flat unit width
    double b_mm;        // minor trapezoid dimension
    double delta_z_mm;  // folded height contributed by one layer
    int n_r;            // columns, i.e. sides of the folded polygon
    int n_l;            // rows, i.e. layers
    double beta_deg;    // cone angle between base and side of a folded layer
    std::string material = "8mil-polyester-paper";
    std::string provenance = "user";

    void validate() const;  // throws std::invalid_argument
    bool characterized() const {
        return beta_deg >= kCharacterizedBetaLoDeg && beta_deg <= kCharacterizedBetaHiDeg;
    }
};

struct FoldGeometry {
    double theta_rad;       // rotation of each trapezoid when folded
    double alpha_rad;       // mid-crease angle from horizontal
    double h_mm;            // flat unit height
    double rest_length_mm;  // n_l * delta_z
};

enum class CreaseKind { mountain, valley, boundary };

struct Crease {
    double x0_mm, y0_mm, x1_mm, y1_mm;
    CreaseKind kind;
};

struct CreasePattern {
    double sheet_width_mm;
    double sheet_height_mm;
    std::vector<Crease> creases;
    ReboParams params;
    FoldGeometry geometry;

    std::size_t diagonal_count() const;
};

/// Closed-form fold geometry. Rejects beta outside (0, 90] degrees.
FoldGeometry fold_geometry(const ReboParams& params);

struct PatternOptions {
    bool invert_folds = false;  // swap mountain/valley (print on the reverse side)
};

/// Flat tessellation: n_r columns by 2*n_l half-layer rows, one diagonal
/// mid-crease per unit at angle alpha from horizontal, alternating direction
/// between half-rows so each layer collapses into a frustum pair.
CreasePattern generate_pattern(const ReboParams& params, const PatternOptions& opt = {});

/// Radial footprint of the folded cylinder, modeled on the hexagonal envelope
/// at the frustum midline (polygon side (a+b)/2).
double envelope_circumradius_mm(const ReboParams& p);
/// Clear bore of the folded cylinder: inradius of the same midline polygon.
double bore_inradius_mm(const ReboParams& p);

/// True when `inner` fits concentrically inside `outer` with at least
/// `clearance_mm` of radial slack.
bool nests_within(const ReboParams& inner, const ReboParams& outer, double clearance_mm);

/// Largest concentric inner cylinder that nests in `outer` with the given
/// clearance: same delta_z, n_r, n_l and beta, reduced major dimension.
ReboParams inner_layer_params(const ReboParams& outer, double clearance_mm);

struct StyleConfig {
    std::string mountain_stroke = "#c1272d";
    std::string valley_stroke = "#1a62a5";
    std::string boundary_stroke = "#000000";
    double fold_width_mm = 0.25;
    double boundary_width_mm = 0.5;
};

/// Millimeter-unit SVG document; byte-stable for identical inputs.
std::string export_svg(const CreasePattern& pattern, const StyleConfig& style = {});

}  // namespace rebo::origami
