#include "softedge/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "softedge/version.hpp"

namespace softedge::io {

namespace {

using nlohmann::json;

json meta_block(const fredholm::CurveMeta& m) {
  json j;
  j["family"] = m.family;
  j["variant"] = m.variant;
  j["route"] = m.route;
  j["xi"] = m.xi;
  j["alpha"] = m.alpha;
  j["N"] = m.N;
  j["a"] = m.a;
  j["order"] = m.order;
  j["h"] = m.h;
  j["tail"] = m.tail;
  j["y_start"] = m.y_start;
  j["clipped_points"] = m.clipped_points;
  j["underflow"] = m.underflow;
  j["notes"] = m.notes;
  j["version"] = kVersion;
  return j;
}

const char* scaling_name(simulate::Scaling s) {
  return simulate::scaling_label(s);
}

json meta_block(const simulate::SampleBatch& b) {
  json j;
  j["ensemble"] = b.ensemble;
  j["N"] = b.N;
  j["a"] = b.a;
  j["alpha"] = b.alpha;
  j["xi"] = b.xi;
  j["seed"] = b.seed;
  j["count"] = b.count();
  j["scaling"] = scaling_name(b.scaling);
  j["atom_count"] = b.atom_count;
  j["version"] = kVersion;
  return j;
}

json histogram_block(const simulate::Histogram& h) {
  json j;
  j["edges"] = h.edges;
  j["counts"] = h.counts;
  j["density"] = h.density;
  j["total"] = h.total;
  j["in_range"] = h.in_range;
  j["version"] = kVersion;
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_curve_csv(const std::string& path,
                     const fredholm::DistributionCurve& curve) {
  const bool has_p1 = !curve.p1.empty();
  const bool has_flags = !curve.untrusted.empty();
  std::ostringstream out;
  out << "t,F,p0,p1";
  if (has_flags) out << ",untrusted";
  out << "\n";
  for (std::size_t i = 0; i < curve.ts.size(); ++i) {
    out << format_double(curve.ts[i]) << ',' << format_double(curve.F[i])
        << ',' << format_double(curve.p0[i]) << ',';
    if (has_p1) out << format_double(curve.p1[i]);
    if (has_flags) out << ',' << int(curve.untrusted[i]);
    out << "\n";
  }
  write_text_file(path, out.str());
}

void write_batch_csv(const std::string& path,
                     const simulate::SampleBatch& batch) {
  std::ostringstream out;
  out << "value\n";
  for (double v : batch.values) out << format_double(v) << "\n";
  write_text_file(path, out.str());
}

void write_histogram_csv(const std::string& path,
                         const simulate::Histogram& hist) {
  std::ostringstream out;
  out << "bin_left,bin_right,count,density\n";
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    out << format_double(hist.edges[k]) << ','
        << format_double(hist.edges[k + 1]) << ',' << hist.counts[k] << ','
        << format_double(hist.density[k]) << "\n";
  }
  write_text_file(path, out.str());
}

void write_sigma_csv(const std::string& path,
                     const painleve::PainleveSolution& sol) {
  std::ostringstream out;
  out << "y,sigma0,sigma0p,sigma0pp,sigma1,residual0\n";
  for (const auto& node : sol.nodes) {
    out << format_double(node.y) << ',' << format_double(node.s0) << ','
        << format_double(node.s0p) << ',' << format_double(node.s0pp) << ',';
    if (sol.has_sigma1 && node.y >= sol.sigma1_y_min - 1e-12)
      out << format_double(node.s1);
    out << ',' << format_double(node.res0) << "\n";
  }
  write_text_file(path, out.str());
}

std::string curve_meta_json(const fredholm::CurveMeta& meta) {
  return meta_block(meta).dump(2);
}

std::string batch_meta_json(const simulate::SampleBatch& batch) {
  return meta_block(batch).dump(2);
}

std::string curve_json(const fredholm::DistributionCurve& curve) {
  json j;
  j["meta"] = meta_block(curve.meta);
  j["t"] = curve.ts;
  j["F"] = curve.F;
  j["p0"] = curve.p0;
  if (!curve.p1.empty()) j["p1"] = curve.p1;
  if (!curve.untrusted.empty()) {
    std::vector<int> flags(curve.untrusted.begin(), curve.untrusted.end());
    j["untrusted"] = flags;
  }
  return j.dump(2);
}

std::string batch_json(const simulate::SampleBatch& batch) {
  json j;
  j["meta"] = meta_block(batch);
  j["values"] = batch.values;
  return j.dump(2);
}

std::string histogram_json(const simulate::Histogram& hist) {
  return histogram_block(hist).dump(2);
}

}  // namespace softedge::io
