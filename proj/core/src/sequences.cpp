#include "apolar/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "apolar/error.hpp"

namespace apolar {

namespace {

std::string join(const std::vector<long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ')';
}

}  // namespace

long HVector::total() const {
  return std::accumulate(values.begin(), values.end(), 0L);
}

bool HVector::is_symmetric() const {
  return std::equal(values.begin(), values.end(), values.rbegin());
}

std::string HVector::to_string() const { return join(values); }

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (long p : parts_)
    if (p < 0) throw InvalidArgument("partition parts must be nonnegative");
  std::erase(parts_, 0L);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const { return join(parts_); }

Partition conjugate_partition(const Partition& p) {
  const auto& parts = p.parts();
  if (parts.empty()) return {};
  std::vector<long> out(static_cast<std::size_t>(parts.front()), 0);
  for (long part : parts)
    for (long k = 0; k < part; ++k) ++out[static_cast<std::size_t>(k)];
  return Partition(std::move(out));
}

HVector parse_hvector(const std::string& text) {
  HVector h;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '(' ||
            text[i] == ')'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "expected a nonnegative integer");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000L) throw ParseError(i, "value too large");
      ++i;
    }
    h.values.push_back(v);
    skip();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError(i, "expected ','");
      ++i;
      skip();
      if (i >= text.size()) throw ParseError(i, "trailing ','");
    }
  }
  if (h.values.empty()) throw ParseError(0, "empty H-vector");
  return h;
}

}  // namespace apolar
