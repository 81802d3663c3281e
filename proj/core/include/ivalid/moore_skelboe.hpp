#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ivalid/interval_box.hpp"

namespace ivalid {

/// Inclusion function of the objective being minimized.
using BoxObjective = std::function<Interval(const IntervalBox&)>;

/// A box of the cover with its objective enclosure f(box).
struct CoverEntry {
  IntervalBox box;
  Interval enclosure;
};

/// Working set of Moore-Skelboe, ordered by increasing lb(enclosure).
///
/// Entries with equal lower bounds come out in insertion order.
class Cover {
 public:
  void insert(CoverEntry entry);

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  /// Entry with the smallest lower bound. Precondition: !empty().
  const CoverEntry& front() const { return heap_.front().entry; }
  CoverEntry pop_front();

  /// All entries in cover order.
  std::vector<CoverEntry> sorted_entries() const;

 private:
  struct Node {
    double key;
    std::uint64_t seq;
    CoverEntry entry;
  };
  // Min-heap on (key, seq).
  static bool later(const Node& a, const Node& b) {
    return a.key != b.key ? a.key > b.key : a.seq > b.seq;
  }

  std::vector<Node> heap_;
  std::uint64_t next_seq_ = 0;
};

struct MsConfig {
  /// Stopping criterion: loop while width(f(B0)) > delta.
  double delta = 1e-3;
  std::size_t max_iterations = 1'000'000;
  /// Dimensions that may be bisected.
  std::vector<std::size_t> split_dims;
};

/// One line of the iteration trace.
struct MsTraceEvent {
  std::size_t iteration;
  double front_lb;
  std::size_t cover_size;
};

struct MsOptions {
  std::function<void(const MsTraceEvent&)> on_iteration;
  /// Keep the final cover in MsResult::final_cover (for cover dumps).
  bool keep_cover = false;
};

struct MsResult {
  /// Contains the global minimum of the objective over the initial box.
  Interval enclosure;
  /// Final front box B0.
  IntervalBox witness;
  std::size_t iterations = 0;
  std::size_t final_cover_size = 0;
  /// Width criterion met (as opposed to iteration cap or no splittable
  /// dimension left).
  bool converged = false;
  std::vector<CoverEntry> final_cover;
};

/// Raised when the configuration is invalid or the objective fails.
class MsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Widest splittable dimension among split_dims (lowest index on ties), or
/// nullopt when none can be split.
std::optional<std::size_t> select_split_dim(const IntervalBox& box,
                                            std::span<const std::size_t> split_dims);

/// Basic Moore-Skelboe interval branch and bound. The returned enclosure
/// contains min f over `initial` whenever `objective` is an inclusion
/// function, whether or not the run converged.
MsResult moore_skelboe(const BoxObjective& objective, const IntervalBox& initial,
                       const MsConfig& config, const MsOptions& options = {});

}  // namespace ivalid
