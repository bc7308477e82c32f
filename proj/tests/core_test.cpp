// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "test_util.hpp"

using namespace segrange;
using namespace segrange::testing;

namespace adl_demo {

// A segment adapted purely through free functions.
struct block {
  std::vector<int> *data;
  std::size_t where;
  std::size_t size() const { return data->size(); }
  int &operator[](std::size_t i) const { return (*data)[i]; }
};

segrange::locale_id rank(const block &b) { return segrange::locale_id{b.where}; }
std::span<int> local(const block &b) { return *b.data; }

struct sharded {
  std::vector<block> parts;
};

std::vector<block> segments(const sharded &s) { return s.parts; }

} // namespace adl_demo

static_assert(contiguous_remote_range<remote_span<int>>);
static_assert(contiguous_segmented_range<distributed_vector<int>>);
static_assert(remote_range<adl_demo::block>);
static_assert(contiguous_remote_range<adl_demo::block>);
static_assert(segmented_range<adl_demo::sharded>);
static_assert(!remote_range<std::vector<int>>);
static_assert(!segmented_range<std::vector<int>>);

TEST(LocaleId, ValueSemantics) {
  locale_id a{2}, b{2}, c{3};
  EXPECT_EQ(a, b);
  EXPECT_LT(a, c);
  std::ostringstream os;
  os << c;
  EXPECT_EQ(os.str(), "3");
  EXPECT_EQ(std::hash<locale_id>{}(a), std::hash<locale_id>{}(b));
}

TEST(Cpo, AdlAdaptedTypes) {
  std::vector<int> x{1, 2}, y{3};
  adl_demo::sharded s{{{&x, 1}, {&y, 0}}};
  EXPECT_EQ(segrange::rank(s.parts[0]).value, 1u);
  EXPECT_EQ(segrange::local(s.parts[1]).size(), 1u);
  EXPECT_EQ(segrange::segments(s).size(), 2u);
  EXPECT_EQ(distribution_of(s).lengths(), (std::vector<std::size_t>{2, 1}));
}

TEST(Cpo, RankOfSegmentOnLocaleThree) {
  runtime rt(4);
  distributed_vector<int> v(rt, 16);
  EXPECT_EQ(segrange::rank(v.segments()[3]).value, 3u);
}

TEST(Cpo, SliceOfStdSpan) {
  std::vector<int> x{0, 1, 2, 3, 4};
  std::span<int> s(x);
  auto t = segrange::slice(s, 1, 3);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], 1);
}

TEST(Distribution, BlockRuleExamples) {
  EXPECT_EQ(distribution::block(10, 3, 3).lengths(),
            (std::vector<std::size_t>{4, 4, 2}));
  EXPECT_EQ(distribution::block(4, 8, 8).lengths(),
            (std::vector<std::size_t>{1, 1, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(distribution::block(0, 3, 3).segment_count(), 0u);
  const auto d = distribution::block(10, 3, 3);
  EXPECT_EQ(d.ranks(), (std::vector<locale_id>{locale_id{0}, locale_id{1},
                                                locale_id{2}}));
}

TEST(Distribution, BlockRuleExhaustive) {
  for (std::size_t n = 0; n <= 100; ++n) {
    for (std::size_t p = 1; p <= 16; ++p) {
      const auto d = distribution::block(n, p, p);
      if (n == 0) {
        EXPECT_EQ(d.segment_count(), 0u);
        continue;
      }
      const auto s = (n + p - 1) / p;
      ASSERT_EQ(d.segment_count(), p);
      std::size_t offset = 0;
      for (std::size_t i = 0; i < p; ++i) {
        const auto expect = i * s >= n ? 0 : std::min(s, n - i * s);
        EXPECT_EQ(d[i].length, expect) << n << " " << p << " " << i;
        EXPECT_EQ(d[i].global_offset, offset);
        EXPECT_EQ(d[i].rank.value, i);
        offset += d[i].length;
      }
      EXPECT_EQ(offset, n);
      EXPECT_EQ(d.total_length(), n);
    }
  }
}

TEST(Distribution, LocateSkipsEmptySegments) {
  std::vector<locale_id> ranks{locale_id{0}, locale_id{1}, locale_id{2}};
  std::vector<std::size_t> lengths{2, 0, 3};
  distribution d(ranks, lengths);
  EXPECT_EQ(d.locate(1), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(d.locate(2), (std::pair<std::size_t, std::size_t>{2, 0}));
  EXPECT_THROW(d.locate(5), index_out_of_bounds);
  EXPECT_EQ(d.boundaries(), (std::vector<std::size_t>{2}));
}

TEST(LocalView, ChecksLocale) {
  runtime rt(2);
  distributed_vector<int> v(rt, 6);
  const auto seg = v.segments()[1];
  EXPECT_EQ(local_view(seg, locale_id{1}).size(), 3u);
  EXPECT_THROW(local_view(seg, locale_id{0}), off_locale_access);
  distributed_vector<int> w(rt, 1);
  EXPECT_TRUE(local_view(w.segments()[1], locale_id{1}).empty());
}

TEST(LocalView, SpanAliasesElementAccess) {
  runtime rt(3);
  distributed_vector<int> v(rt, 10);
  for (const auto &s : v.segments()) {
    auto l = segrange::local(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(&l[i], &s[i]);
    }
  }
}

TEST(IsAligned, Examples) {
  runtime rt(2);
  distributed_vector<int> a(rt, 8), b(rt, 8);
  EXPECT_TRUE(is_aligned(a, b));
  EXPECT_TRUE(is_aligned(a, a));
  std::vector<int> vals(8, 1);
  auto c = make_partitioned(rt, vals, {4, 4});
  auto d = make_partitioned(rt, vals, {3, 5});
  EXPECT_TRUE(is_aligned(a, c));
  EXPECT_FALSE(is_aligned(c, d));
  EXPECT_FALSE(is_aligned(d, c));
  auto dropped = views::drop(a, 1);
  EXPECT_FALSE(is_aligned(a, dropped));
  EXPECT_TRUE(is_aligned(a, b, c));
  EXPECT_FALSE(is_aligned(a, b, d));
}

TEST(IsAligned, RankMatters) {
  runtime rt(3);
  std::vector<locale_id> r1{locale_id{0}, locale_id{1}};
  std::vector<locale_id> r2{locale_id{0}, locale_id{2}};
  std::vector<std::size_t> lengths{2, 2};
  distributed_vector<int> a(rt, distribution(r1, lengths));
  distributed_vector<int> b(rt, distribution(r2, lengths));
  EXPECT_FALSE(is_aligned(a, b));
}

TEST(ConcatenationLaw, VectorsAcrossSizes) {
  for (std::size_t p : {1, 2, 3, 4, 7}) {
    runtime rt(p);
    for (std::size_t n : {0, 1, 2, 3, 5, 8, 17, 100}) {
      std::vector<int> h(n);
      std::iota(h.begin(), h.end(), 0);
      auto v = make_vector(rt, h);
      EXPECT_EQ(flatten_segments(v), h);
      EXPECT_EQ(flatten_iteration(v), h);
      EXPECT_EQ(distribution_of(v), v.distribution());
    }
  }
}
