#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "dunkl/error.hpp"
#include "dunkl/norms.hpp"

namespace dunkl {

namespace {

// The value is max_k v_(k) * mu(|f| >= v_(k)) over the distinct levels. Values
// are grouped into log-scale buckets (8 per octave); a bucket whose upper bound
// cannot beat the best achieved lower bound is never sorted.
constexpr int kSubBits = 3;
constexpr int kOctaves = 80;
constexpr int kBuckets = kOctaves << kSubBits;

int bucket_key(double v) { return static_cast<int>(std::bit_cast<std::uint64_t>(v) >> (52 - kSubBits)); }

struct Bucket {
  double max_v = 0.0;
  double min_v = 0.0;
  double weight = 0.0;
  int count = 0;
};

}  // namespace

double weak_l1_norm(std::span<const double> abs_values, std::span<const double> weights) {
  if (abs_values.size() != weights.size()) throw DomainError("weak norm: values and weights differ in length");
  double top = 0.0;
  for (double v : abs_values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("weak norm needs finite non-negative values");
    top = std::max(top, v);
  }
  if (top == 0.0) return 0.0;

  const int top_key = bucket_key(top);
  const int floor_key = top_key - kBuckets + 1;
  auto index_of = [&](double v) { return std::max(0, bucket_key(v) - floor_key); };

  std::vector<Bucket> buckets(static_cast<std::size_t>(kBuckets));
  for (std::size_t i = 0; i < abs_values.size(); ++i) {
    const double v = abs_values[i];
    if (v == 0.0) continue;
    Bucket& b = buckets[static_cast<std::size_t>(index_of(v))];
    if (b.count == 0) {
      b.max_v = b.min_v = v;
    } else {
      b.max_v = std::max(b.max_v, v);
      b.min_v = std::min(b.min_v, v);
    }
    b.weight += weights[i];
    ++b.count;
  }

  // above[b] = weight of all buckets strictly above b
  std::vector<double> above(static_cast<std::size_t>(kBuckets), 0.0);
  double running = 0.0;
  double best = 0.0;
  for (int b = kBuckets - 1; b >= 0; --b) {
    above[static_cast<std::size_t>(b)] = running;
    const Bucket& bk = buckets[static_cast<std::size_t>(b)];
    if (bk.count == 0) continue;
    running += bk.weight;
    best = std::max(best, bk.min_v * running);  // attained by the bucket minimum
  }

  std::vector<char> candidate(static_cast<std::size_t>(kBuckets), 0);
  bool any = false;
  for (int b = 0; b < kBuckets; ++b) {
    const Bucket& bk = buckets[static_cast<std::size_t>(b)];
    if (bk.count > 0 && bk.max_v * (above[static_cast<std::size_t>(b)] + bk.weight) > best) {
      candidate[static_cast<std::size_t>(b)] = 1;
      any = true;
    }
  }
  if (!any) return best;

  struct Member {
    int bucket;
    double v;
    double w;
  };
  std::vector<Member> members;
  for (std::size_t i = 0; i < abs_values.size(); ++i) {
    if (abs_values[i] == 0.0) continue;
    const int b = index_of(abs_values[i]);
    if (candidate[static_cast<std::size_t>(b)]) members.push_back({b, abs_values[i], weights[i]});
  }
  // Bucket index is monotone in v, so a descending sort keeps buckets contiguous.
  std::sort(members.begin(), members.end(), [](const Member& a, const Member& c) { return a.v > c.v; });
  double cumulative = 0.0;
  int current = -1;
  for (std::size_t i = 0; i < members.size();) {
    if (members[i].bucket != current) {
      current = members[i].bucket;
      cumulative = above[static_cast<std::size_t>(current)];
    }
    std::size_t j = i;
    while (j < members.size() && members[j].v == members[i].v) cumulative += members[j++].w;
    best = std::max(best, members[i].v * cumulative);
    i = j;
  }
  return best;
}

double weak_l1_norm(const GridFunction& f) {
  const std::vector<double> a = f.abs();
  return weak_l1_norm(a, f.grid().weights());
}

}  // namespace dunkl
