#include "rankclass/overpartitions.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rankclass/error.hpp"
#include "rankclass/parallel.hpp"

namespace rankclass {

namespace {

void check_weight(std::int64_t n, std::int64_t ceiling, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
  if (n > ceiling) {
    throw BoundExceeded(std::string(who) + ": n = " + std::to_string(n) +
                        " exceeds the enumeration ceiling " + std::to_string(ceiling) +
                        "; use the generating functions instead");
  }
}

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

void add_parity(RankTally& t, std::int64_t rank, std::int64_t weight = 1) {
  if (rank % 2 == 0) {
    t.even += weight;
  } else {
    t.odd += weight;
  }
}

// Depth-first walk over the blocks below the largest one. The statistics
// needed at a leaf are the largest part (fixed by the caller), the number of
// parts, and the number of odd non-overlined parts.
struct RankWalker {
  std::int64_t largest;
  bool largest_overlined;
  std::array<std::int64_t, 4> counts{};  // [dyson even, dyson odd, m2 even, m2 odd]

  void leaf(std::int64_t parts, std::int64_t odd_plain) {
    const std::int64_t dyson = largest - parts;
    const std::int64_t chi = (largest % 2 == 1 && !largest_overlined) ? 1 : 0;
    const std::int64_t m2 = ceil_half(largest) - parts + odd_plain - chi;
    ++counts[dyson % 2 == 0 ? 0 : 1];
    ++counts[m2 % 2 == 0 ? 2 : 3];
  }

  void walk(std::int64_t remaining, std::int64_t max_size, std::int64_t parts,
            std::int64_t odd_plain) {
    if (remaining == 0) {
      leaf(parts, odd_plain);
      return;
    }
    for (std::int64_t t = std::min(max_size, remaining); t >= 1; --t) {
      for (std::int64_t k = 1; k * t <= remaining; ++k) {
        const std::int64_t odd_k = (t % 2 == 1) ? k : 0;
        walk(remaining - k * t, t - 1, parts + k, odd_plain + odd_k);
        walk(remaining - k * t, t - 1, parts + k, odd_plain + (t % 2 == 1 ? k - 1 : 0));
      }
    }
  }
};

struct TopBlock {
  std::int64_t size;
  std::int64_t multiplicity;
  bool overlined;
};

// Walks the partitions of n with parts <= max_part in decreasing order.
template <class F>
void for_each_partition(std::vector<std::int64_t>& parts, std::int64_t remaining,
                        std::int64_t max_part, F& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::int64_t t = std::min(max_part, remaining); t >= 1; --t) {
    parts.push_back(t);
    for_each_partition(parts, remaining - t, t, visit);
    parts.pop_back();
  }
}

bool is_four_core(const std::vector<std::int64_t>& parts, std::vector<std::int64_t>& conj) {
  if (parts.empty()) return true;
  const std::int64_t width = parts.front();
  conj.assign(static_cast<std::size_t>(width), 0);
  for (std::int64_t p : parts) {
    for (std::int64_t j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto row = parts[i];
    for (std::int64_t j = 0; j < row; ++j) {
      // 0-based: arm = row - j - 1, leg = conj[j] - i - 1.
      const std::int64_t hook =
          row - j + conj[static_cast<std::size_t>(j)] - static_cast<std::int64_t>(i) - 1;
      if (hook % 4 == 0) return false;
    }
  }
  return true;
}

}  // namespace

Overpartition::Overpartition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].size < 1) throw std::invalid_argument("Overpartition: parts must be positive");
    if (i == 0) continue;
    const Part& prev = parts_[i - 1];
    if (prev.size < parts_[i].size) {
      throw std::invalid_argument("Overpartition: parts must be weakly decreasing");
    }
    if (prev.size == parts_[i].size && parts_[i].overlined) {
      throw std::invalid_argument("Overpartition: only the first occurrence may be overlined");
    }
  }
}

std::int64_t Overpartition::weight() const {
  std::int64_t w = 0;
  for (const auto& p : parts_) w += p.size;
  return w;
}

std::string Overpartition::str() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << '+';
    os << parts_[i].size << (parts_[i].overlined ? "'" : "");
  }
  return os.str();
}

Overpartition Overpartition::parse(const std::string& text) {
  if (text == "()" || text.empty()) return Overpartition();
  std::vector<Part> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, '+')) {
    bool over = false;
    if (!tok.empty() && tok.back() == '\'') {
      over = true;
      tok.pop_back();
    }
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("Overpartition::parse: bad part in '" + text + "'");
    }
    parts.push_back({std::stoll(tok), over});
  }
  return Overpartition(std::move(parts));
}

OverpartitionStream::OverpartitionStream(std::int64_t n) : n_(n) {
  check_weight(n, kMaxOverpartitionWeight, "OverpartitionStream");
}

void OverpartitionStream::fill_greedy(std::int64_t from_size, std::int64_t remaining) {
  for (std::int64_t t = from_size; remaining > 0; --t) {
    const std::int64_t k = remaining / t;
    if (k > 0) blocks_.push_back({t, k, false});
    remaining -= k * t;
  }
}

// Options at each size, in order: (k_max, plain), (k_max, overlined), ...,
// (1, plain), (1, overlined), then skip. Advances the deepest block that
// still has an option with a valid completion.
bool OverpartitionStream::advance() {
  while (!blocks_.empty()) {
    std::int64_t before = 0;
    for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
      before += blocks_[i].size * blocks_[i].multiplicity;
    }
    const std::int64_t remaining = n_ - before;
    Block& b = blocks_.back();
    if (!b.overlined) {
      b.overlined = true;
      const std::int64_t size = b.size;
      fill_greedy(size - 1, remaining - b.size * b.multiplicity);
      return true;
    }
    if (b.size >= 2) {
      const std::int64_t size = b.size;
      if (b.multiplicity > 1) {
        b.multiplicity -= 1;
        b.overlined = false;
        fill_greedy(size - 1, remaining - size * b.multiplicity);
      } else {
        blocks_.pop_back();
        fill_greedy(size - 1, remaining);
      }
      return true;
    }
    // Size 1 cannot shed copies: nothing smaller is left to absorb them.
    blocks_.pop_back();
  }
  return false;
}

void OverpartitionStream::materialize() {
  std::vector<Part>& parts = current_.parts_;
  parts.clear();
  for (const auto& b : blocks_) {
    for (std::int64_t i = 0; i < b.multiplicity; ++i) parts.push_back({b.size, b.overlined && i == 0});
  }
}

const Overpartition* OverpartitionStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    fill_greedy(n_, n_);
    materialize();
    return &current_;
  }
  if (!advance()) {
    done_ = true;
    return nullptr;
  }
  materialize();
  return &current_;
}

std::int64_t dyson_rank(const Overpartition& p) {
  if (p.empty()) return 0;
  return p.largest() - p.count();
}

std::int64_t m2_rank(const Overpartition& p) {
  if (p.empty()) return 0;
  std::int64_t odd_plain = 0;
  for (const auto& part : p.parts()) {
    if (part.size % 2 == 1 && !part.overlined) ++odd_plain;
  }
  const Part& top = p.parts().front();
  const std::int64_t chi = (top.size % 2 == 1 && !top.overlined) ? 1 : 0;
  return ceil_half(top.size) - p.count() + odd_plain - chi;
}

RankTallies tally_ranks(std::int64_t n) {
  check_weight(n, kMaxOverpartitionWeight, "tally_ranks");
  RankTallies out;
  out.dyson.n = out.m2.n = n;
  if (n == 0) {
    out.dyson.even = out.m2.even = 1;
    return out;
  }
  std::vector<TopBlock> tops;
  for (std::int64_t size = n; size >= 1; --size) {
    for (std::int64_t k = 1; k * size <= n; ++k) {
      tops.push_back({size, k, false});
      tops.push_back({size, k, true});
    }
  }
  std::vector<std::array<std::int64_t, 4>> partial(tops.size());
  parallel_for(0, static_cast<std::int64_t>(tops.size()), [&](std::int64_t i) {
    const TopBlock& top = tops[static_cast<std::size_t>(i)];
    RankWalker w{top.size, top.overlined};
    const std::int64_t odd_plain =
        top.size % 2 == 1 ? (top.overlined ? top.multiplicity - 1 : top.multiplicity) : 0;
    w.walk(n - top.size * top.multiplicity, top.size - 1, top.multiplicity, odd_plain);
    partial[static_cast<std::size_t>(i)] = w.counts;
  });
  for (const auto& c : partial) {
    out.dyson.even += c[0];
    out.dyson.odd += c[1];
    out.m2.even += c[2];
    out.m2.odd += c[3];
  }
  return out;
}

RankTally alpha_enum(std::int64_t n) { return tally_ranks(n).dyson; }
RankTally alpha2_enum(std::int64_t n) { return tally_ranks(n).m2; }

std::map<std::int64_t, std::int64_t> dyson_rank_distribution(std::int64_t n) {
  std::map<std::int64_t, std::int64_t> hist;
  OverpartitionStream stream(n);
  while (const Overpartition* p = stream.next()) ++hist[dyson_rank(*p)];
  return hist;
}

std::int64_t count_overpartitions(std::int64_t n) {
  OverpartitionStream stream(n);
  std::int64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

std::int64_t c4_enum(std::int64_t n) {
  check_weight(n, kMaxPartitionWeight, "c4_enum");
  std::vector<std::int64_t> parts;
  std::vector<std::int64_t> conj;
  std::int64_t count = 0;
  auto visit = [&](const std::vector<std::int64_t>& p) {
    if (is_four_core(p, conj)) ++count;
  };
  for_each_partition(parts, n, n, visit);
  return count;
}

std::vector<std::int64_t> c4_enum_table(std::int64_t n_max) {
  check_weight(n_max, kMaxPartitionWeight, "c4_enum_table");
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_max) + 1);
  // Largest n first so the long tasks start early.
  parallel_for(0, n_max + 1, [&](std::int64_t i) {
    const std::int64_t n = n_max - i;
    out[static_cast<std::size_t>(n)] = c4_enum(n);
  });
  return out;
}

QSeries c4_series(std::size_t order) {
  const EtaFactor spec[] = {{4, 4}, {1, -1}};
  return eta_product(spec, order);
}

QSeries overpartition_series(std::size_t order) {
  const EtaFactor spec[] = {{2, 1}, {1, -2}};
  return eta_product(spec, order);
}

namespace serial {

RankTallies tally_ranks(std::int64_t n) {
  RankTallies out;
  out.dyson.n = out.m2.n = n;
  OverpartitionStream stream(n);
  while (const Overpartition* p = stream.next()) {
    add_parity(out.dyson, dyson_rank(*p));
    add_parity(out.m2, m2_rank(*p));
  }
  return out;
}

std::vector<std::int64_t> c4_enum_table(std::int64_t n_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(c4_enum(n));
  return out;
}

}  // namespace serial

}  // namespace rankclass
