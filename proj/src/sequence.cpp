#include "hartman/sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "hartman/json_io.hpp"
#include "hartman/parallel.hpp"

namespace hartman {

namespace {

void check_range(std::int64_t start, std::int64_t len) {
  if (len < 1) throw std::invalid_argument("slice length must be >= 1");
  if (start > std::numeric_limits<std::int64_t>::max() - len) {
    throw std::invalid_argument("slice end overflows int64");
  }
}

void check_window_spec(const CompactificationSpec& spec, const Window& w) {
  if (!(w.spec() == spec)) throw ShapeMismatch("window was built for a different compactification");
}

}  // namespace

double SequenceSlice::at(std::int64_t k) const {
  if (k < start || k >= end()) {
    throw std::out_of_range("index " + std::to_string(k) + " outside slice [" +
                            std::to_string(start) + ", " + std::to_string(end()) + ")");
  }
  return values[static_cast<std::size_t>(k - start)];
}

SequenceSlice hartman_bits(const CompactificationSpec& spec, const Window& w, std::int64_t start,
                           std::int64_t len) {
  check_range(start, len);
  check_window_spec(spec, w);
  SequenceSlice out;
  out.start = start;
  out.bits = true;
  out.values.assign(static_cast<std::size_t>(len), 0.0);
  parallel_chunks(out.values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto p = iota(spec, start + static_cast<std::int64_t>(i));
      out.values[i] = contains_unchecked(w, p) ? 1.0 : 0.0;
    }
  });
  out.descriptor = {{"family", "hartman"},
                    {"spec", spec_to_json(spec)},
                    {"window", window_to_json(w)},
                    {"haar_measure", w.haar_measure()}};
  return out;
}

SequenceSlice sturmian(const RotationNumber& alpha, std::int64_t start, std::int64_t len) {
  if (!(alpha.value() > 0.0 && alpha.value() < 1.0)) {
    throw std::invalid_argument("sturmian rotation number must lie in (0,1)");
  }
  const auto spec = CompactificationSpec::torus({alpha});
  auto out = hartman_bits(spec, Window::arcs(spec, {Arc(alpha.value(), 1.0)}), start, len);
  out.descriptor["family"] = "sturmian";
  return out;
}

SequenceSlice sturmian(double alpha, std::int64_t start, std::int64_t len) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("sturmian rotation number must lie in (0,1)");
  }
  return sturmian(RotationNumber::from_double(alpha), start, len);
}

SequenceSlice lacunary_bits(std::span<const std::int64_t> ts, std::int64_t start, std::int64_t len) {
  check_range(start, len);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 1) throw std::invalid_argument("lacunary terms must be positive");
    if (i > 0 && ts[i] <= ts[i - 1]) {
      throw std::invalid_argument("lacunary terms must be strictly increasing");
    }
  }
  SequenceSlice out;
  out.start = start;
  out.bits = true;
  out.values.assign(static_cast<std::size_t>(len), 0.0);
  const auto end = start + len;
  for (auto it = std::lower_bound(ts.begin(), ts.end(), start); it != ts.end() && *it < end; ++it) {
    out.values[static_cast<std::size_t>(*it - start)] = 1.0;
  }
  out.descriptor = {{"family", "lacunary"}, {"terms", std::vector<std::int64_t>(ts.begin(), ts.end())}};
  return out;
}

ComplexSlice hartman_real(const CompactificationSpec& spec, std::span<const WeightedWindow> terms,
                          std::int64_t start, std::int64_t len) {
  check_range(start, len);
  for (const auto& t : terms) check_window_spec(spec, t.window);
  ComplexSlice out;
  out.start = start;
  out.values.assign(static_cast<std::size_t>(len), {0.0, 0.0});
  parallel_chunks(out.values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto p = iota(spec, start + static_cast<std::int64_t>(i));
      std::complex<double> v{0.0, 0.0};
      for (const auto& t : terms) {
        if (contains_unchecked(t.window, p)) v += t.coefficient;
      }
      out.values[i] = v;
    }
  });
  nlohmann::json list = nlohmann::json::array();
  for (const auto& t : terms) {
    list.push_back({{"window", window_to_json(t.window)},
                    {"coefficient", {t.coefficient.real(), t.coefficient.imag()}}});
  }
  out.descriptor = {{"family", "hartman_real"}, {"spec", spec_to_json(spec)}, {"terms", list}};
  return out;
}

}  // namespace hartman
