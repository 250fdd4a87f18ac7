#include "invharm/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "invharm/errors.hpp"

namespace invharm {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw InvalidArguments("not a partition: " + to_string());
    }
    if (parts_[i] == 0) throw InvalidArguments("zero part inside partition: " + to_string());
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

HorizontalStripe::HorizontalStripe(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!is_horizontal_stripe(outer_, inner_)) {
    throw InvalidArguments("not a horizontal stripe: " + outer_.to_string() + "/" +
                           inner_.to_string());
  }
}

std::string HorizontalStripe::to_string() const {
  return outer_.to_string() + "/" + inner_.to_string();
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.first()), 0);
  for (int row : p.parts()) {
    for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool is_even(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

bool is_horizontal_stripe(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  const Partition outer_cols = conjugate(outer);
  const Partition inner_cols = conjugate(inner);
  for (std::size_t j = 0; j < outer_cols.length(); ++j) {
    if (outer_cols[j] - inner_cols[j] > 1) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_first_part) {
  if (n < 0) throw InvalidArguments("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_first_part ? std::max(0, *max_first_part) : n);
  return out;
}

std::vector<Partition> even_partitions_of(int n) {
  if (n < 0 || n % 2 != 0) return {};
  std::vector<Partition> out;
  for (const Partition& half : partitions_of(n / 2)) {
    std::vector<int> parts(half.vec());
    for (int& x : parts) x *= 2;
    out.emplace_back(std::move(parts));
  }
  return out;
}

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return out;
}

mpz_class syt_count(const Partition& p) {
  const Partition cols = conjugate(p);
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      const int arm = p[i] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(p.size()) / hooks;
}

std::vector<HorizontalStripe> stripes_with_even_inner(const Partition& outer, int inner_size) {
  std::vector<HorizontalStripe> out;
  if (inner_size < 0 || inner_size % 2 != 0 || inner_size > outer.size()) return out;
  std::vector<int> inner;
  const std::size_t rows = outer.length();
  // Interlacing: outer[i+1] <= inner[i] <= outer[i].
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == rows) {
      if (remaining == 0) out.emplace_back(outer, Partition(inner));
      return;
    }
    int hi = std::min(outer[i], remaining);
    hi -= hi % 2;
    int lo = outer[i + 1];
    lo += lo % 2;
    for (int part = hi; part >= lo; part -= 2) {
      inner.push_back(part);
      rec(i + 1, remaining - part);
      inner.pop_back();
    }
  };
  rec(0, inner_size);
  return out;
}

std::vector<Partition> add_horizontal_stripe(const Partition& inner, int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> rows;
  const std::size_t len = inner.length();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i > len) {
      if (remaining == 0) out.emplace_back(rows);
      return;
    }
    const int base = inner[i];
    const int cap = (i == 0) ? base + remaining : std::min(base + remaining, inner[i - 1]);
    for (int row = cap; row >= base; --row) {
      rows.push_back(row);
      rec(i + 1, remaining - (row - base));
      rows.pop_back();
    }
  };
  rec(0, size);
  return out;
}

}  // namespace invharm
