#include "ivalid/moore_skelboe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace ivalid {

void Cover::insert(CoverEntry entry) {
  const double key = entry.enclosure.lb();
  heap_.push_back(Node{key, next_seq_++, std::move(entry)});
  std::push_heap(heap_.begin(), heap_.end(), later);
}

CoverEntry Cover::pop_front() {
  std::pop_heap(heap_.begin(), heap_.end(), later);
  CoverEntry e = std::move(heap_.back().entry);
  heap_.pop_back();
  return e;
}

std::vector<CoverEntry> Cover::sorted_entries() const {
  std::vector<Node> nodes = heap_;
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return later(b, a); });
  std::vector<CoverEntry> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) out.push_back(std::move(n.entry));
  return out;
}

std::optional<std::size_t> select_split_dim(
    const IntervalBox& box, std::span<const std::size_t> split_dims) {
  std::optional<std::size_t> best;
  double best_width = 0.0;
  for (std::size_t d : split_dims) {
    if (d >= box.dim()) throw MsError("split dimension out of range");
    if (!box[d].splittable()) continue;
    const double w = box[d].width();
    if (!best || w > best_width || (w == best_width && d < *best)) {
      best = d;
      best_width = w;
    }
  }
  return best;
}

namespace {

void validate(const IntervalBox& initial, const MsConfig& config) {
  if (!(config.delta > 0.0) || !std::isfinite(config.delta)) {
    throw MsError("delta must be a positive finite number");
  }
  if (config.split_dims.empty()) throw MsError("split_dims is empty");
  for (std::size_t d : config.split_dims) {
    if (d >= initial.dim()) {
      throw MsError("split dimension " + std::to_string(d) +
                    " out of range for a box of dimension " +
                    std::to_string(initial.dim()));
    }
  }
}

Interval evaluate(const BoxObjective& f, const IntervalBox& box,
                  std::size_t iteration) {
  try {
    return f(box);
  } catch (const std::exception& ex) {
    std::ostringstream msg;
    msg << "objective evaluation failed at iteration " << iteration << " on box "
        << box << ": " << ex.what();
    throw MsError(msg.str());
  }
}

}  // namespace

MsResult moore_skelboe(const BoxObjective& objective, const IntervalBox& initial,
                       const MsConfig& config, const MsOptions& options) {
  validate(initial, config);

  Cover cover;
  cover.insert(CoverEntry{initial, evaluate(objective, initial, 0)});

  MsResult result{.enclosure = Interval(), .witness = initial, .final_cover = {}};
  std::size_t iteration = 0;
  for (;;) {
    const CoverEntry& front = cover.front();
    if (front.enclosure.width() <= config.delta) {
      result.converged = true;
      break;
    }
    if (iteration >= config.max_iterations) break;
    const auto dim = select_split_dim(front.box, config.split_dims);
    if (!dim) break;

    CoverEntry parent = cover.pop_front();
    auto [lower, upper] = bisect(parent.box, *dim);
    ++iteration;
    Interval f_lower = evaluate(objective, lower, iteration);
    Interval f_upper = evaluate(objective, upper, iteration);
    cover.insert(CoverEntry{std::move(lower), f_lower});
    cover.insert(CoverEntry{std::move(upper), f_upper});

    if (options.on_iteration) {
      options.on_iteration(
          MsTraceEvent{iteration, cover.front().enclosure.lb(), cover.size()});
    }
  }

  result.enclosure = cover.front().enclosure;
  result.witness = cover.front().box;
  result.iterations = iteration;
  result.final_cover_size = cover.size();
  if (options.keep_cover) result.final_cover = cover.sorted_entries();
  return result;
}

}  // namespace ivalid
