// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <segrange/runtime/runtime.hpp>

#include <charconv>
#include <condition_variable>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <mutex>
#include <new>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>

#ifdef __linux__
#include <pthread.h>
#include <sched.h>
#endif

namespace segrange {

namespace {

thread_local std::ptrdiff_t tl_lane = -1;
thread_local std::optional<locale_id> tl_locale;

constexpr std::size_t max_default_locales = 16;
constexpr std::align_val_t block_alignment{64};

void bind_to_cpu([[maybe_unused]] std::thread &t,
                 [[maybe_unused]] std::size_t index) {
#ifdef __linux__
  const auto hw = std::max(1u, std::thread::hardware_concurrency());
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(index % hw, &set);
  pthread_setaffinity_np(t.native_handle(), sizeof(set), &set);
#endif
}

} // namespace

namespace detail {

std::ptrdiff_t current_lane() noexcept { return tl_lane; }

allocation_block::allocation_block(std::shared_ptr<arena_registry> registry,
                                   locale_id owner, std::size_t bytes,
                                   const std::type_info &type)
    : registry_(std::move(registry)), owner_(owner), bytes_(bytes),
      type_(&type) {
  if (bytes_ > 0) {
    data_ = ::operator new(bytes_, block_alignment);
    std::memset(data_, 0, bytes_);
  }
  registry_->on_allocate(owner_, bytes_);
}

allocation_block::~allocation_block() {
  if (alive()) {
    release();
  }
}

void allocation_block::release() {
  if (!alive_.exchange(false, std::memory_order_acq_rel)) {
    throw double_free();
  }
  if (data_ != nullptr) {
    ::operator delete(data_, block_alignment);
    data_ = nullptr;
  }
  registry_->on_release(owner_, bytes_);
}

} // namespace detail

struct runtime::lane {
  std::mutex m;
  std::condition_variable cv;
  std::deque<std::function<void()>> jobs;
  bool stop = false;
  std::thread thread;

  void run(std::ptrdiff_t index, locale_id l) {
    tl_lane = index;
    tl_locale = l;
    for (;;) {
      std::function<void()> job;
      {
        std::unique_lock lock(m);
        cv.wait(lock, [this] { return stop || !jobs.empty(); });
        if (jobs.empty()) {
          return;
        }
        job = std::move(jobs.front());
        jobs.pop_front();
      }
      job();
    }
  }
};

runtime::runtime(std::size_t locale_count, worker_binding binding)
    : locale_count_(locale_count) {
  if (locale_count_ == 0) {
    throw std::invalid_argument("runtime: locale count must be >= 1");
  }
  registry_ = std::make_shared<detail::arena_registry>(locale_count_);
  lanes_.reserve(2 * locale_count_);
  try {
    for (std::size_t i = 0; i < 2 * locale_count_; ++i) {
      auto ln = std::make_unique<lane>();
      const locale_id l{i % locale_count_};
      ln->thread = std::thread(&lane::run, ln.get(),
                               static_cast<std::ptrdiff_t>(i), l);
      if (binding == worker_binding::compact) {
        bind_to_cpu(ln->thread, l.value);
      }
      lanes_.push_back(std::move(ln));
    }
  } catch (...) {
    for (auto &ln : lanes_) {
      {
        std::lock_guard lock(ln->m);
        ln->stop = true;
      }
      ln->cv.notify_all();
      ln->thread.join();
    }
    throw;
  }
}

runtime::~runtime() {
  for (auto &ln : lanes_) {
    {
      std::lock_guard lock(ln->m);
      ln->stop = true;
    }
    ln->cv.notify_all();
  }
  for (auto &ln : lanes_) {
    ln->thread.join();
  }
}

std::size_t runtime::default_locale_count() {
  if (const char *env = std::getenv("SEGRANGE_LOCALES")) {
    std::string_view s(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
      throw std::invalid_argument("SEGRANGE_LOCALES must be a positive "
                                  "integer, got '" +
                                  std::string(s) + "'");
    }
    return value;
  }
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  return std::min(hw, max_default_locales);
}

std::optional<locale_id> runtime::this_locale() noexcept { return tl_locale; }

void runtime::enqueue(std::size_t index, std::function<void()> job) {
  auto &ln = *lanes_[index];
  {
    std::lock_guard lock(ln.m);
    ln.jobs.push_back(std::move(job));
  }
  submitted_.fetch_add(1, std::memory_order_relaxed);
  ln.cv.notify_one();
}

} // namespace segrange
