#pragma once

#include "koenigs/domain.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace koenigs {

struct Window {
    double x_min = -1, x_max = 1, y_min = -1, y_max = 1;
};

struct WindowTooSmall : Error {
    using Error::Error;
};

/// Per-row summary of psi over the closed band [y_lo, y_hi].
struct BandSummary {
    double sup = -kInf;      ///< includes isolated point values and carrier values
    double ess_sup = -kInf;  ///< ignores sets of measure zero
    double inf = kInf;       ///< certified where the pieces allow it
    bool inside_I = true;    ///< band lies in the closure of I
    bool unbounded_above = false; ///< psi has limsup +inf somewhere in the band
};

BandSummary band_summary(const DefiningFunction& psi, double y_lo, double y_hi);

/// Cell classification of Omega on an n x n grid; row 0 is the bottom band.
class RasterGrid {
public:
    Window window;
    int nx = 0, ny = 0;
    std::vector<BandSummary> rows;
    std::vector<std::uint8_t> inside;  ///< cell centre column lies in Omega over the whole band
    std::vector<std::uint8_t> thin;    ///< Omega is dense in the cell but misses a null set
    std::vector<std::uint8_t> closure;
    std::vector<std::uint8_t> int_closure;

    double x_center(int i) const { return window.x_min + (i + 0.5) * (window.x_max - window.x_min) / nx; }
    double y_lo(int j) const { return window.y_min + j * (window.y_max - window.y_min) / ny; }
    double y_hi(int j) const { return window.y_min + (j + 1) * (window.y_max - window.y_min) / ny; }
    std::size_t at(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    /// PGM (P5) image: inside 255, closure 170, interior-of-closure defect 85, complement 0.
    void write_pgm(const std::string& path) const;
};

/// Window covering the finite features of psi with margins.
Window auto_window(const DefiningFunction& psi);

RasterGrid rasterize(const DefiningFunction& psi, const Window& window, int n);

struct IntClosureScan {
    bool ok = true;
    int longest_defect_run = 0;
    double defect_height = 0;
};
IntClosureScan int_closure_equals_domain(const RasterGrid& grid);

/// Components of the complement of the closure, with connections outside the window
/// resolved through the rows where the band infimum is finite.
int complement_components(const DefiningFunction& psi, const RasterGrid& grid);

/// Both checks at resolutions n and n/2; a disagreement yields unknown.
struct GeometryVerdict {
    Tri int_closure_ok = Tri::unknown;
    int components = -1; ///< -1 when the two scales disagree
    Window window;
    int n = 0;
    std::vector<std::string> notes;
};
GeometryVerdict geometry_verdict(const DefiningFunction& psi, std::optional<Window> window, int n);

} // namespace koenigs
