#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtorus/bargmann.hpp"
#include "qtorus/dynamics.hpp"
#include "qtorus/symbol.hpp"
#include "qtorus/theta_rep.hpp"
#include "qtorus/weyl_algebra.hpp"

// Text formats. JSON readers throw ParseError on malformed input. CSV writers
// print floats with 17 significant digits; all output is ordered, so equal
// objects serialize to identical bytes.
namespace qtorus::io {

/// {"n": N, "terms": [{"m": int, "k": int, "re": float, "im": float}, ...]},
/// terms sorted by (m, k). Indices that overflow int64 are written as decimal
/// strings; the reader accepts both forms.
std::string algebra_to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(std::string_view text);

/// {"modes": [{"m": int, "k": int, "re": float, "im": float}, ...]}
std::string symbol_to_json(const TorusSymbol& f);
TorusSymbol symbol_from_json(std::string_view text);

/// {"dim": N, "entries": [re, im, re, im, ...]} row-major.
std::string sector_to_json(const SectorMatrix& m);
SectorMatrix sector_from_json(std::string_view text);
/// Header "row,col,re,im", one line per entry, row-major.
std::string sector_to_csv(const SectorMatrix& m);

/// Header "step,value_re,value_im,reference_re,reference_im".
std::string report_to_csv(const DiagnosticsReport& r);
/// Array of row objects with the CSV field names.
std::string report_to_json(const DiagnosticsReport& r);
DiagnosticsReport report_from_json(std::string_view text);

/// Header "r,g_abs2".
std::string kernel_plot_to_csv(const std::vector<KernelPlotRow>& rows);

/// %.17g
std::string format_double(double x);

}  // namespace qtorus::io
