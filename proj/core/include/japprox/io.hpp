#pragma once

#include <string>
#include <vector>

#include "japprox/dynamics.hpp"
#include "japprox/errors.hpp"
#include "japprox/geometry.hpp"
#include "japprox/lagrange.hpp"
#include "japprox/metrics.hpp"
#include "japprox/nodes.hpp"

namespace japprox {

/// Set descriptors:
///   {"type":"disk","center":[x,y],"radius":r}
///   {"type":"segment","a":[x,y],"b":[x,y]}
///   {"type":"polygon","vertices":[[x,y],...]}
///   {"type":"union_disks","disks":[{"center":[x,y],"radius":r},...]}
///   {"type":"poly_preimage","coeffs":[[re,im],...]}   (ascending powers)
PlanarSet parse_set_json(const std::string& text);
PlanarSet load_set_file(const std::string& path);
std::string set_to_json(const PlanarSet& set);

/// Doubles in CSV cells are printed with %.17g: value-exact and byte-stable.
std::string format_double(double v);

std::string nodes_csv(const NodeArray& nodes, const GreenModel& green);
std::string lebesgue_csv(const std::vector<LebesgueDiagnostic>& rows);
std::string rate_table_csv(const std::vector<MetricReport>& rows);
std::string green_grid_csv(const GreenModel& m, const Raster& raster);

std::string approx_json(const JuliaApprox& ja, const Certificate& cert);

const char* error_code_name(ErrorCode code);
int exit_code_for(ErrorCode code);
std::string error_json(ErrorCode code, const std::string& message);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);
void write_pgm(const std::string& path, const Raster& raster);

} // namespace japprox
