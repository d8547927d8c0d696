#include "seqblocks/kernels.hpp"

#include <stdexcept>

namespace seqblocks {

std::vector<Rat> window_values_serial(const Sequence& a, std::int64_t first, std::int64_t last) {
    if (first < 1 || last < first) throw std::domain_error("bad evaluation window");
    std::vector<Rat> out(static_cast<std::size_t>(last - first + 1));
    for (std::int64_t n = first; n <= last; ++n)
        out[static_cast<std::size_t>(n - first)] = a.at(n);
    return out;
}

std::vector<Rat> window_values_omp(const Sequence& a, std::int64_t first, std::int64_t last) {
    if (first < 1 || last < first) throw std::domain_error("bad evaluation window");
    std::int64_t count = last - first + 1;
    std::vector<Rat> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = a.at(first + i);
    return out;
}

std::vector<Rat> window_values(const Sequence& a, std::int64_t first, std::int64_t last,
                               bool parallel) {
    return parallel ? window_values_omp(a, first, last) : window_values_serial(a, first, last);
}

WindowStats min_max(const std::vector<Rat>& values, std::size_t begin, std::size_t end) {
    if (begin >= end || end > values.size()) throw std::domain_error("bad min_max slice");
    WindowStats s{values[begin], values[begin]};
    for (std::size_t i = begin + 1; i < end; ++i) {
        if (values[i] < s.min) s.min = values[i];
        if (values[i] > s.max) s.max = values[i];
    }
    return s;
}

}  // namespace seqblocks
