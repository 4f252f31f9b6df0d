#pragma once

#include <string>

#include "softedge/curves.hpp"
#include "softedge/histogram.hpp"
#include "softedge/painleve.hpp"
#include "softedge/samplers.hpp"

namespace softedge::io {

// Every writer emits decimal with 17 significant digits, enough to
// round-trip IEEE doubles exactly.
std::string format_double(double x);

// Curve table, header `t,F,p0,p1`.  p1 cells stay empty when the curve has
// no correction column; an extra `untrusted` column is appended when the
// curve carries per-point trust flags (the ODE route).
void write_curve_csv(const std::string& path,
                     const fredholm::DistributionCurve& curve);

// Single-column sample export, header `value`.
void write_batch_csv(const std::string& path,
                     const simulate::SampleBatch& batch);

// Histogram table, header `bin_left,bin_right,count,density`.
void write_histogram_csv(const std::string& path,
                         const simulate::Histogram& hist);

// Painleve-solution dump, header `y,sigma0,sigma0p,sigma0pp,sigma1,residual0`
// with sigma1 cells empty when the correction stage was not solved.
void write_sigma_csv(const std::string& path,
                     const painleve::PainleveSolution& sol);

// JSON documents carrying the same data as the CSVs plus a meta block.
// Returned serialized so the public headers stay free of the JSON library.
std::string curve_json(const fredholm::DistributionCurve& curve);
std::string batch_json(const simulate::SampleBatch& batch);
std::string histogram_json(const simulate::Histogram& hist);

// Metadata-only JSON objects (used for reproducibility sidecars).
std::string curve_meta_json(const fredholm::CurveMeta& meta);
std::string batch_meta_json(const simulate::SampleBatch& batch);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace softedge::io
