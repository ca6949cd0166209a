#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankclass/qseries.hpp"

namespace rankclass {

/// Largest n accepted by the exhaustive overpartition routines.
inline constexpr std::int64_t kMaxOverpartitionWeight = 50;
/// Largest n accepted by the hook-length 4-core count.
inline constexpr std::int64_t kMaxPartitionWeight = 70;

struct Part {
  std::int64_t size;
  bool overlined;
  friend bool operator==(const Part&, const Part&) = default;
};

/// Parts in weakly decreasing order; within a run of equal sizes only the
/// first may carry the overline.
class Overpartition {
 public:
  Overpartition() = default;
  /// Throws std::invalid_argument if the invariants above do not hold.
  explicit Overpartition(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::int64_t weight() const;
  std::int64_t largest() const { return parts_.empty() ? 0 : parts_.front().size; }
  std::int64_t count() const { return static_cast<std::int64_t>(parts_.size()); }

  /// e.g. "5+4'+4+3'+1+1", overlined parts marked with a trailing quote.
  std::string str() const;
  static Overpartition parse(const std::string& text);

  friend bool operator==(const Overpartition&, const Overpartition&) = default;

 private:
  friend class OverpartitionStream;
  std::vector<Part> parts_;
};

/// Single-consumer stream over all overpartitions of n, each exactly once.
/// For n = 0 it yields the empty overpartition once.
class OverpartitionStream {
 public:
  /// Throws BoundExceeded for n > kMaxOverpartitionWeight, std::invalid_argument for n < 0.
  explicit OverpartitionStream(std::int64_t n);

  /// The next overpartition, or nullptr when exhausted. The pointer stays
  /// valid until the following call.
  const Overpartition* next();

 private:
  struct Block {
    std::int64_t size;
    std::int64_t multiplicity;
    bool overlined;
  };

  void fill_greedy(std::int64_t from_size, std::int64_t remaining);
  bool advance();
  void materialize();

  std::int64_t n_;
  std::vector<Block> blocks_;
  Overpartition current_;
  bool started_ = false;
  bool done_ = false;
};

/// Largest part minus number of parts; 0 for the empty overpartition.
std::int64_t dyson_rank(const Overpartition& p);

/// ceil(l/2) - n(p) + n(p_o) - chi(p), where p_o are the odd non-overlined
/// parts and chi = 1 iff the largest part is odd and not overlined.
std::int64_t m2_rank(const Overpartition& p);

struct RankTally {
  std::int64_t n = 0;
  std::int64_t even = 0;
  std::int64_t odd = 0;
  std::int64_t diff() const { return even - odd; }
  std::int64_t total() const { return even + odd; }
  friend bool operator==(const RankTally&, const RankTally&) = default;
};

struct RankTallies {
  RankTally dyson;
  RankTally m2;
  friend bool operator==(const RankTallies&, const RankTallies&) = default;
};

/// Exhaustive parity tallies for both ranks, parallel over the choice of
/// largest part. Throws BoundExceeded past kMaxOverpartitionWeight.
RankTallies tally_ranks(std::int64_t n);

RankTally alpha_enum(std::int64_t n);
RankTally alpha2_enum(std::int64_t n);

/// Full Dyson-rank histogram (rank -> count) over the overpartitions of n.
std::map<std::int64_t, std::int64_t> dyson_rank_distribution(std::int64_t n);

/// Number of overpartitions of n, by enumeration.
std::int64_t count_overpartitions(std::int64_t n);

/// Partitions of n with no hook length divisible by 4, by direct hook
/// computation. Throws BoundExceeded past kMaxPartitionWeight.
std::int64_t c4_enum(std::int64_t n);

/// c4_enum for 0..n_max, parallel over n.
std::vector<std::int64_t> c4_enum_table(std::int64_t n_max);

/// prod (1-q^(4n))^4 / (1-q^n).
QSeries c4_series(std::size_t order);

/// prod (1+q^n)/(1-q^n), the overpartition generating function.
QSeries overpartition_series(std::size_t order);

namespace serial {

/// Reference tally: materializes every overpartition through
/// OverpartitionStream and applies dyson_rank / m2_rank.
RankTallies tally_ranks(std::int64_t n);

std::vector<std::int64_t> c4_enum_table(std::int64_t n_max);

}  // namespace serial

}  // namespace rankclass
