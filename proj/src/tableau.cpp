#include "invharm/tableau.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "invharm/errors.hpp"

namespace invharm {
namespace {

using Rows = Tableau::Rows;

std::pair<std::size_t, std::size_t> insert_into(Rows& rows, int value) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({value});
      return {r, 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return {r, row.size() - 1};
    }
    std::swap(value, *it);
  }
}

int bump_out(Rows& rows, std::size_t r) {
  if (r >= rows.size() || rows[r].empty()) throw InvalidArguments("reverse_bump: no such row");
  if (r + 1 < rows.size() && rows[r + 1].size() == rows[r].size()) {
    throw InvalidArguments("reverse_bump: last box of row " + std::to_string(r) +
                           " is not a corner");
  }
  int value = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  for (std::size_t rr = r; rr-- > 0;) {
    auto& row = rows[rr];
    auto it = std::lower_bound(row.begin(), row.end(), value);
    // The largest entry strictly smaller than value exists by column strictness.
    --it;
    std::swap(value, *it);
  }
  return value;
}

}  // namespace

Tableau::Tableau(Rows rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw InvalidArguments("tableau: empty row");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw InvalidArguments("tableau: rows do not form a partition shape");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw InvalidArguments("tableau: entries must be positive");
      if (c > 0 && row[c] < row[c - 1]) throw InvalidArguments("tableau: row decreases");
      if (r > 0 && row[c] <= rows_[r - 1][c]) {
        throw InvalidArguments("tableau: column does not increase strictly");
      }
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::size_t Tableau::box_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  out.reserve(box_count());
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Tableau::has_distinct_entries() const {
  const std::vector<int> c = content();
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

bool Tableau::is_standard() const {
  const std::vector<int> c = content();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Tableau Tableau::transpose() const {
  Rows cols;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c == cols.size()) cols.emplace_back();
      cols[c].push_back(rows_[r][c]);
    }
  }
  return Tableau(std::move(cols));
}

std::string Tableau::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << ';';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << rows_[r][c];
    }
  }
  out << ']';
  return out.str();
}

Insertion row_insert(const Tableau& t, int value) {
  if (value < 1) throw InvalidArguments("row_insert: entries must be positive");
  Rows rows = t.rows();
  const auto [r, c] = insert_into(rows, value);
  return {Tableau(std::move(rows)), r, c};
}

std::pair<Tableau, int> reverse_bump(const Tableau& t, std::size_t row) {
  Rows rows = t.rows();
  const int value = bump_out(rows, row);
  return {Tableau(std::move(rows)), value};
}

StripExtraction reverse_insert_strip(const Tableau& t, const HorizontalStripe& strip) {
  if (t.shape() != strip.outer()) {
    throw ShapeMismatch("reverse_insert_strip: tableau shape " + t.shape().to_string() +
                        " differs from " + strip.outer().to_string());
  }
  // Boxes of a horizontal strip occupy distinct columns; visit them right to left.
  std::vector<std::pair<int, std::size_t>> boxes;  // (column, row)
  const Partition& outer = strip.outer();
  const Partition& inner = strip.inner();
  for (std::size_t r = 0; r < outer.length(); ++r) {
    for (int c = inner[r]; c < outer[r]; ++c) boxes.emplace_back(c, r);
  }
  std::sort(boxes.begin(), boxes.end(), std::greater<>());

  Rows rows = t.rows();
  StripExtraction out;
  out.values.reserve(boxes.size());
  for (const auto& [column, row] : boxes) {
    out.values.push_back(bump_out(rows, row));
  }
  out.tableau = Tableau(std::move(rows));
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  Rows rows;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r <= rows.size() && r < shape.length(); ++r) {
      const int len = r < rows.size() ? static_cast<int>(rows[r].size()) : 0;
      if (len >= shape[r]) continue;
      if (r > 0 && len >= static_cast<int>(rows[r - 1].size())) continue;
      if (r == rows.size()) rows.emplace_back();
      rows[r].push_back(next);
      rec(next + 1);
      rows[r].pop_back();
      if (rows[r].empty()) rows.pop_back();
    }
  };
  rec(1);
  return out;
}

RskPair rsk(const IntMatrix& m) {
  Rows p;
  Rows q;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] < 0) throw InvalidMatrix("rsk: negative entry");
      for (int k = 0; k < m[i][j]; ++k) {
        const auto [r, c] = insert_into(p, static_cast<int>(j) + 1);
        if (r == q.size()) q.emplace_back();
        q[r].push_back(static_cast<int>(i) + 1);
        (void)c;
      }
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

IntMatrix rsk_inverse(const RskPair& pair, std::size_t rows, std::size_t cols) {
  if (pair.insertion.shape() != pair.recording.shape()) {
    throw InvalidArguments("rsk_inverse: tableaux of different shapes");
  }
  Rows p = pair.insertion.rows();
  Rows q = pair.recording.rows();
  IntMatrix m(rows, std::vector<int>(cols, 0));
  while (!q.empty()) {
    // Rightmost occurrence of the largest recording entry is a corner.
    std::size_t best_row = 0;
    for (std::size_t r = 0; r < q.size(); ++r) {
      const int v = q[r].back();
      const int best = q[best_row].back();
      if (v > best || (v == best && q[r].size() > q[best_row].size())) best_row = r;
    }
    const int i = q[best_row].back();
    q[best_row].pop_back();
    if (q[best_row].empty()) q.pop_back();
    const int j = bump_out(p, best_row);
    if (static_cast<std::size_t>(i) > rows || static_cast<std::size_t>(j) > cols) {
      throw InvalidArguments("rsk_inverse: entry exceeds matrix size");
    }
    ++m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
  }
  return m;
}

Tableau rsk_symmetric(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidMatrix("rsk_symmetric: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = m[i][j];
      if (v != 0 && v != 1) throw InvalidMatrix("rsk_symmetric: entries must be 0 or 1");
      if (v != m[j][i]) throw InvalidMatrix("rsk_symmetric: matrix is not symmetric");
      if (i == j && v != 0) throw InvalidMatrix("rsk_symmetric: nonzero diagonal");
    }
  }
  RskPair pair = rsk(m);
  if (pair.insertion != pair.recording) {
    throw InvariantViolation("rsk_symmetric: insertion and recording tableaux differ");
  }
  if (!is_even(conjugate(pair.insertion.shape()))) {
    throw InvariantViolation("rsk_symmetric: conjugate shape " +
                             conjugate(pair.insertion.shape()).to_string() + " is not even");
  }
  return std::move(pair.insertion);
}

IntMatrix rsk_symmetric_inverse(const Tableau& p, std::size_t n) {
  if (!is_even(conjugate(p.shape()))) {
    throw NotInImage("rsk_symmetric_inverse: conjugate of " + p.shape().to_string() +
                     " is not even");
  }
  if (!p.has_distinct_entries()) {
    throw NotInImage("rsk_symmetric_inverse: repeated entries in " + p.to_string());
  }
  const std::vector<int> c = p.content();
  const std::size_t largest = c.empty() ? 0 : static_cast<std::size_t>(c.back());
  if (n == 0) n = largest;
  if (largest > n) throw InvalidArguments("rsk_symmetric_inverse: entry exceeds size");
  IntMatrix m = rsk_inverse({p, p}, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 0) throw InvariantViolation("rsk_symmetric_inverse: diagonal entry");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw InvariantViolation("rsk_symmetric_inverse: asymmetric");
    }
  }
  return m;
}

}  // namespace invharm
