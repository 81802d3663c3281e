#include "ivalid/report.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "json_util.hpp"

namespace ivalid {

using nlohmann::json;

std::string report_to_json(const ValidationReport& r) {
  json doc = {
      {"eps_low", r.eps_low},
      {"eps_high", r.eps_high},
      {"delta", r.delta},
      {"converged", r.converged},
      {"iterations", r.iterations},
      {"cover_size", r.cover_size},
      {"witness_param_box", detail::box_to_json(r.witness_param_box)},
      {"witness_noise_box", detail::box_to_json(r.witness_noise_box)},
      {"inclusion", std::string(to_string(r.inclusion))},
      {"noise_splits", r.noise_splits},
      {"oracle_max", r.oracle_max ? json(*r.oracle_max) : json(nullptr)},
      {"certified", r.certified},
      {"elapsed_seconds", r.elapsed_seconds},
  };
  return doc.dump(2) + "\n";
}

ValidationReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ValidationReport r;
    r.eps_low = detail::finite_number(doc.at("eps_low"), "eps_low");
    r.eps_high = detail::finite_number(doc.at("eps_high"), "eps_high");
    r.delta = detail::finite_number(doc.at("delta"), "delta");
    r.converged = doc.at("converged").get<bool>();
    r.iterations = detail::count(doc.at("iterations"), "iterations");
    r.cover_size = detail::count(doc.at("cover_size"), "cover_size");
    r.witness_param_box = detail::parse_box(doc.at("witness_param_box"), "witness_param_box");
    r.witness_noise_box = detail::parse_box(doc.at("witness_noise_box"), "witness_noise_box");
    r.inclusion = parse_inclusion_form(doc.at("inclusion").get<std::string>());
    r.noise_splits = detail::count(doc.at("noise_splits"), "noise_splits");
    if (!doc.at("oracle_max").is_null()) {
      r.oracle_max = detail::finite_number(doc.at("oracle_max"), "oracle_max");
    }
    r.certified = doc.at("certified").get<bool>();
    r.elapsed_seconds = detail::finite_number(doc.at("elapsed_seconds"), "elapsed_seconds");
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

void write_report(const ValidationReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report " + path.string());
  out << report_to_json(report);
  if (!out) throw std::runtime_error("failed writing report " + path.string());
}

}  // namespace ivalid
