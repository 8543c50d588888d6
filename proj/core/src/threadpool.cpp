#include "countception/threadpool.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace countception::pool {

namespace {

class Pool {
 public:
  ~Pool() { stop(); }

  void resize(int n) {
    std::lock_guard<std::mutex> api(api_mu_);
    stop();
    n_ = n < 1 ? 1 : n;
    if (n_ == 1) return;
    stopping_ = false;
    for (int i = 0; i < n_ - 1; ++i)
      threads_.emplace_back([this] { worker(); });
  }

  int size() {
    std::lock_guard<std::mutex> api(api_mu_);
    return n_;
  }

  void run(int64_t count, const std::function<void(int64_t)>& fn) {
    std::lock_guard<std::mutex> api(api_mu_);
    if (count <= 0) return;
    if (n_ == 1 || count == 1) {
      for (int64_t i = 0; i < count; ++i) fn(i);
      return;
    }
    {
      std::lock_guard<std::mutex> lk(mu_);
      fn_ = &fn;
      count_ = count;
      next_ = 0;
      done_ = 0;
      errors_.assign(static_cast<size_t>(count), nullptr);
      ++generation_;
    }
    cv_.notify_all();
    help();  // caller participates
    {
      std::unique_lock<std::mutex> lk(mu_);
      cv_done_.wait(lk, [this] { return done_ == count_; });
      fn_ = nullptr;
      for (auto& e : errors_)
        if (e) std::rethrow_exception(e);
    }
  }

 private:
  void worker() {
    uint64_t seen = 0;
    for (;;) {
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return stopping_ || generation_ != seen; });
        if (stopping_) return;
        seen = generation_;
      }
      help();
    }
  }

  void help() {
    for (;;) {
      int64_t i;
      {
        std::lock_guard<std::mutex> lk(mu_);
        if (!fn_ || next_ >= count_) return;
        i = next_++;
      }
      std::exception_ptr err;
      try {
        (*fn_)(i);
      } catch (...) {
        err = std::current_exception();
      }
      std::lock_guard<std::mutex> lk(mu_);
      errors_[static_cast<size_t>(i)] = err;
      if (++done_ == count_) cv_done_.notify_all();
    }
  }

  void stop() {
    {
      std::lock_guard<std::mutex> lk(mu_);
      stopping_ = true;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
    threads_.clear();
  }

  std::mutex api_mu_;  // serializes run()/resize() callers
  std::mutex mu_;
  std::condition_variable cv_, cv_done_;
  std::vector<std::thread> threads_;
  const std::function<void(int64_t)>* fn_ = nullptr;
  int64_t count_ = 0, next_ = 0, done_ = 0;
  uint64_t generation_ = 0;
  bool stopping_ = false;
  int n_ = 1;
  std::vector<std::exception_ptr> errors_;
};

Pool& instance() {
  static Pool* p = new Pool();  // leaked: workers may outlive static dtors
  return *p;
}

}  // namespace

void set_workers(int n) { instance().resize(n); }

int workers() { return instance().size(); }

void parallel_for(int64_t count, const std::function<void(int64_t)>& fn) {
  instance().run(count, fn);
}

}  // namespace countception::pool
