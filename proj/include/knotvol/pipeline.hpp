#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotvol/augment.hpp"
#include "knotvol/bounds.hpp"
#include "knotvol/reduce.hpp"

namespace knotvol {

struct PipelineOptions {
  bool improve = true;
  Target target = Target::KPrime;
  bool keep_zero_loops = true;  // list n = 0 loops in the surgery manifest
};

struct PipelineResult {
  Reduction reduction;
  std::optional<AugmentedLink> link;
  std::optional<AugmentedLink> improved;
  std::optional<BoundsReport> bounds;
  std::vector<SurgeryInstruction> surgery;
  std::optional<GenusOneClass> genus_one;
  bool roundtrip = false;

  bool degenerate() const { return reduction.outcome.has_value(); }
  // The link whose surgeries the manifest describes.
  const AugmentedLink& final_link() const { return improved ? *improved : *link; }
};

// reduce, augment, improve, surgery manifest, bounds report and round-trip
// check. Degenerate inputs stop after reduce.
PipelineResult run_pipeline(const Diagram& d, const PipelineOptions& opts = {});

// JSON documents.
std::string analysis_json(const Diagram& d);
std::string reduction_json(const ReductionRecord& rec);
std::string surgery_json(const std::vector<SurgeryInstruction>& s);
std::string bounds_json(const BoundsReport& r);
std::string pipeline_json(const PipelineResult& r, const PipelineOptions& opts = {});

// CSV for batch runs; one row per input.
std::string bounds_csv_header();
std::string bounds_csv_row(const std::string& name, const PipelineResult& r);
std::string error_csv_row(const std::string& name, const std::string& message);

}  // namespace knotvol
