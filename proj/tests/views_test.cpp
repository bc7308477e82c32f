// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <atomic>
#include <memory>

#include "properties.hpp"

using namespace segrange;
using namespace segrange::testing;

namespace {

std::vector<long> iota_longs(std::size_t n) {
  std::vector<long> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<long>(i);
  }
  return v;
}

// Segment whose element reads are counted.
struct counting_segment {
  std::shared_ptr<std::atomic<int>> reads;
  std::shared_ptr<std::vector<int>> data;
  std::size_t offset = 0;
  std::size_t length = 0;
  locale_id where{0};

  locale_id rank() const { return where; }
  std::size_t size() const { return length; }
  int operator[](std::size_t i) const {
    reads->fetch_add(1);
    return (*data)[offset + i];
  }
  counting_segment slice(std::size_t o, std::size_t l) const {
    return {reads, data, offset + o, l, where};
  }
};

struct counting_range {
  std::shared_ptr<std::atomic<int>> reads = std::make_shared<std::atomic<int>>(0);
  std::shared_ptr<std::vector<int>> data;
  std::vector<std::size_t> lengths;

  std::size_t size() const { return data->size(); }
  int operator[](std::size_t i) const {
    reads->fetch_add(1);
    return (*data)[i];
  }
  std::vector<counting_segment> segments() const {
    std::vector<counting_segment> out;
    std::size_t at = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      out.push_back({reads, data, at, lengths[k], locale_id{k}});
      at += lengths[k];
    }
    return out;
  }
};

} // namespace

TEST(Transform, DoublesElements) {
  runtime rt(2);
  auto v = make_vector(rt, std::vector<long>{1, 2, 3});
  auto t = views::transform(v, [](long x) { return 2 * x; });
  EXPECT_EQ(flatten_iteration(t), (std::vector<long>{2, 4, 6}));
  EXPECT_EQ(flatten_segments(t), (std::vector<long>{2, 4, 6}));
  EXPECT_EQ(t[1], 4);
}

TEST(Transform, PreservesSegmentation) {
  runtime rt(3);
  auto v = make_vector(rt, iota_longs(10));
  auto t = v | views::transform([](long x) { return x + 1; });
  EXPECT_EQ(segment_lengths(t), (std::vector<std::size_t>{4, 4, 2}));
  EXPECT_EQ(segment_ranks(t), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(distribution_of(t), v.distribution());
}

TEST(Transform, CompositionLaw) {
  runtime rt(3);
  auto v = make_vector(rt, iota_longs(17));
  auto f = [](long x) { return 3 * x - 1; };
  auto g = [](long x) { return x * x; };
  auto twice = views::transform(views::transform(v, f), g);
  auto once = views::transform(v, [&](long x) { return g(f(x)); });
  EXPECT_EQ(flatten_iteration(twice), flatten_iteration(once));
  EXPECT_EQ(flatten_segments(twice), flatten_segments(once));
}

TEST(Transform, RankOfRemoteBase) {
  runtime rt(4);
  distributed_vector<int> v(rt, 16);
  const auto seg = v.segments()[3];
  auto t = views::transform(seg, [](int x) { return x; });
  EXPECT_EQ(segrange::rank(t).value, 3u);
  EXPECT_EQ(segrange::rank(views::take(seg, 2)).value, 3u);
  EXPECT_EQ(segrange::rank(views::drop(t, 1)).value, 3u);
}

TEST(Transform, OwnsTemporaryBase) {
  runtime rt(2);
  auto t = views::transform(make_vector(rt, iota_longs(6)),
                            [](long x) { return x * 10; });
  EXPECT_EQ(flatten_iteration(t), (std::vector<long>{0, 10, 20, 30, 40, 50}));
  auto copy_of_view = t;
  EXPECT_EQ(flatten_segments(copy_of_view), flatten_iteration(t));
}

TEST(TrimSegments, Examples) {
  runtime rt(3);
  auto v = make_partitioned(rt, iota_longs(9), {3, 3, 3});
  const auto segs = v.segments();

  const auto mid = trim_segments(segs, 2, 7);
  ASSERT_EQ(mid.size(), 3u);
  EXPECT_EQ(mid[0].size(), 1u);
  EXPECT_EQ(mid[1].size(), 3u);
  EXPECT_EQ(mid[2].size(), 1u);
  EXPECT_EQ(mid[0].rank().value, 0u);
  EXPECT_EQ(mid[2].rank().value, 2u);
  EXPECT_EQ(mid[1], segs[1]);
  EXPECT_EQ(mid[0][0], 2);
  EXPECT_EQ(mid[2][0], 6);

  EXPECT_EQ(trim_segments(segs, 0, 9), segs);
  EXPECT_TRUE(trim_segments(segs, 4, 4).empty());
  EXPECT_EQ(trim_segments(segs, 3, 6).size(), 1u);
  EXPECT_THROW(trim_segments(segs, 5, 10), index_out_of_bounds);
  EXPECT_THROW(trim_segments(segs, 5, 4), index_out_of_bounds);
}

TEST(TrimSegments, IdentityKeepsEmptySegments) {
  runtime rt(8);
  distributed_vector<int> v(rt, 4);
  EXPECT_EQ(trim_segments(v.segments(), 0, 4).size(), 8u);
  EXPECT_EQ(trim_segments(v.segments(), 1, 4).size(), 3u);
}

TEST(TakeDrop, Examples) {
  runtime rt(3);
  auto v = make_vector(rt, iota_longs(10));
  EXPECT_EQ(flatten_iteration(views::take(v, 5)),
            (std::vector<long>{0, 1, 2, 3, 4}));
  auto d = views::drop(v, 4);
  EXPECT_EQ(segment_lengths(d), (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(segment_ranks(d), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(views::take(v, 1'000'000'000).size(), 10u);
  auto all = views::take(v, 1'000'000'000);
  EXPECT_EQ(flatten_segments(all), iota_longs(10));
  auto none = views::drop(v, 50);
  EXPECT_EQ(none.size(), 0u);
  EXPECT_TRUE(segment_lengths(none).empty());
}

TEST(TakeDrop, LengthsAndSegmentsAcrossBounds) {
  runtime rt(4);
  for (std::size_t n : {0, 1, 5, 13}) {
    auto v = make_vector(rt, iota_longs(n));
    for (std::size_t k = 0; k <= n + 2; ++k) {
      auto t = views::take(v, k);
      auto d = views::drop(v, k);
      const auto m = std::min(k, n);
      ASSERT_EQ(t.size(), m);
      ASSERT_EQ(d.size(), n - m);
      EXPECT_EQ(flatten_segments(t), flatten_iteration(t));
      EXPECT_EQ(flatten_segments(d), flatten_iteration(d));
      EXPECT_EQ(flatten_iteration(t).size(), m);
      // A drop of zero is the identity and keeps the base's empty segments.
      for (const auto &s : d.segments()) {
        if (k == 0) {
          break;
        }
        EXPECT_GT(s.size(), 0u) << "trim emitted an empty segment";
      }
    }
  }
}

TEST(Zip, AlignedZipIsPerIndex) {
  runtime rt(3);
  auto a = make_vector(rt, iota_longs(10));
  auto b = make_vector(rt, iota_longs(10));
  auto z = views::zip(a, b);
  EXPECT_EQ(segment_lengths(z), segment_lengths(a));
  EXPECT_EQ(segment_ranks(z), segment_ranks(a));
  const auto t = read_value(z[7]);
  EXPECT_EQ(t, (std::tuple<long, long>{7, 7}));
}

TEST(Zip, RelaxedRealignsStrictRejects) {
  runtime rt(2);
  const auto vals = iota_longs(8);
  auto a = make_partitioned(rt, vals, {4, 4});
  auto b = make_partitioned(rt, vals, {3, 5});
  auto z = views::zip(zip_mode::relaxed, a, b);
  EXPECT_EQ(segment_lengths(z), (std::vector<std::size_t>{3, 1, 4}));
  EXPECT_EQ(segment_ranks(z), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_THROW(views::zip(zip_mode::strict, a, b), non_aligned_zip);
  {
    scoped_zip_mode strict(zip_mode::strict);
    EXPECT_EQ(default_zip_mode(), zip_mode::strict);
    EXPECT_THROW(views::zip(a, b), non_aligned_zip);
    EXPECT_NO_THROW(views::zip(a, a));
  }
  EXPECT_EQ(default_zip_mode(), zip_mode::relaxed);
}

TEST(Zip, RealignLengthsExamples) {
  EXPECT_EQ(realign_lengths({{4, 4}, {3, 5}}),
            (std::vector<std::size_t>{3, 1, 4}));
  EXPECT_EQ(realign_lengths({{2, 2, 2}, {3, 3}}),
            (std::vector<std::size_t>{2, 1, 1, 2}));
  EXPECT_EQ(realign_lengths({{2, 0, 3}, {2, 0, 3}}),
            (std::vector<std::size_t>{2, 0, 3}));
  EXPECT_EQ(realign_lengths({{0, 5}, {5, 0}}), (std::vector<std::size_t>{5}));
  EXPECT_THROW(realign_lengths({{4}, {3}}), length_mismatch);
}

TEST(Zip, RealignSegmentsOfThreeBases) {
  runtime rt(3);
  const auto vals = iota_longs(6);
  auto a = make_partitioned(rt, vals, {2, 2, 2});
  auto b = make_partitioned(rt, vals, {3, 3});
  auto c = make_partitioned(rt, vals, {1, 5});
  const auto z = realign_segments(a.segments(), b.segments(), c.segments());
  std::vector<std::size_t> lengths;
  for (const auto &s : z) {
    lengths.push_back(s.size());
  }
  EXPECT_EQ(lengths, (std::vector<std::size_t>{1, 1, 1, 1, 2}));
}

TEST(Zip, UnequalLengthsTruncate) {
  runtime rt(2);
  auto a = make_vector(rt, iota_longs(7));
  auto b = make_vector(rt, iota_longs(4));
  auto z = views::zip(a, b);
  EXPECT_EQ(z.size(), 4u);
  EXPECT_EQ(flatten_segments(z).size(), 4u);
  EXPECT_EQ(flatten_segments(z), flatten_iteration(z));
}

TEST(Zip, WithPlainLocalRangeTakesRemoteRank) {
  runtime rt(3);
  distributed_vector<long> v(rt, 9, 1);
  std::vector<long> local{1, 2, 3};
  const auto seg = v.segments()[2];
  auto z = views::zip(seg, local);
  EXPECT_EQ(segrange::rank(z).value, 2u);
  auto z2 = views::zip(v, std::vector<long>(9, 5));
  EXPECT_EQ(segment_ranks(z2), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(reduce(rt, views::transform(z2, [](long a, long b) {
                     return a * b;
                   }),
                   0L),
            45);
}

TEST(Zip, PureLocalZipHasNoRank) {
  std::vector<int> a{1, 2}, b{3, 4};
  auto z = views::zip(a, b);
  static_assert(!remote_range<decltype(z)>);
  static_assert(!segmented_range<decltype(z)>);
  EXPECT_EQ(read_value(z[1]), (std::tuple<int, int>{2, 4}));
}

TEST(Zip, WritableThroughElements) {
  runtime rt(2);
  distributed_vector<long> a(rt, 5), b(rt, 5, 3);
  for (const auto &s : views::zip(a, b).segments()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto [x, y] = s[i];
      x = y + 1;
    }
  }
  EXPECT_EQ(to_host(rt, a), (std::vector<long>(5, 4)));
  auto proxies = views::zip(a, b)[3];
  std::get<0>(proxies).write(9);
  EXPECT_EQ(a.get(3), 9);
}

TEST(Views, ConstructionIsLazy) {
  counting_range base{std::make_shared<std::atomic<int>>(0),
                      std::make_shared<std::vector<int>>(12, 1),
                      {5, 0, 7}};
  auto t = views::transform(base, [](int x) { return x + 1; });
  auto tk = views::take(t, 9);
  auto dr = views::drop(tk, 2);
  auto z = views::zip(dr, views::drop(base, 1));
  auto segs = z.segments();
  auto tsegs = dr.segments();
  EXPECT_EQ(base.reads->load(), 0);
  EXPECT_EQ(read_value(z[0]), (std::tuple<int, int>{2, 1}));
  EXPECT_GT(base.reads->load(), 0);
}

TEST(Views, ConcatenationLawRandomCompositions) {
  const auto r = view_composition_law(200, 99);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.cases, 200u);
}

TEST(Views, RealignmentProperty) {
  std::size_t aligned = 0;
  const auto r = realign_property(100, 5, &aligned);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_GT(aligned, 0u);
}
