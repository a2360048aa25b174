#pragma once

namespace fankit::par {

// Worker count used by the OpenMP kernels. 1 selects the serial path everywhere.
void set_threads(int n);
int threads();

class ScopedThreads {
public:
    explicit ScopedThreads(int n) : saved_(threads()) { set_threads(n); }
    ~ScopedThreads() { set_threads(saved_); }
    ScopedThreads(const ScopedThreads&) = delete;
    ScopedThreads& operator=(const ScopedThreads&) = delete;

private:
    int saved_;
};

} // namespace fankit::par
