#pragma once

#include <string>
#include <vector>

#include "fano216/autgroup.hpp"
#include "fano216/flagdelta.hpp"
#include "fano216/surface.hpp"
#include "fano216/threefold.hpp"

namespace fano216 {

// 64-bit FNV-1a over the raw file bytes; used to content-address the model
// assets listed in data/models/MANIFEST.
std::string content_hash(const std::string& bytes);

std::string read_file(const std::string& path);

// Verifies the file against the manifest unless `unchecked` is set.
// Throws on a hash mismatch or on a file missing from the manifest.
std::string load_checked(const std::string& data_dir, const std::string& rel_path,
                         bool unchecked = false);

SurfaceLattice parse_surface(const std::string& text);
ThreefoldModel parse_threefold(const std::string& text);

SurfaceLattice load_surface(const std::string& data_dir, const std::string& name,
                            bool unchecked = false);
ThreefoldModel load_threefold(const std::string& data_dir, const std::string& name,
                              bool unchecked = false);
FlagSurfaceConfig load_flag_config(const std::string& data_dir, const std::string& name,
                                   bool unchecked = false);

QuotientBoundInputs load_quotient_inputs(const std::string& data_dir, bool unchecked = false);

// Classification-table rows live under models/rows/, one file per row,
// listed in rows/INDEX.
std::vector<std::string> table_row_names(const std::string& data_dir);
TableRow load_table_row(const std::string& data_dir, const std::string& name,
                        bool unchecked = false);

// Point cases and blow-up instructions attached to a flag configuration.
struct FlagCaseData {
  FlagSurfaceConfig config;
  std::vector<PointSpec> points;
  bool has_blowup = false;
  BlowupSpec blowup;
  std::vector<PointSpec> blowup_points;  // indices refer to the blown-up config
};

FlagCaseData load_flag_case(const std::string& data_dir, const std::string& name,
                            bool unchecked = false);

std::string default_data_dir();

}  // namespace fano216
