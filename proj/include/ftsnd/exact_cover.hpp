#pragma once

// Algorithm X with dancing links. Rows are lists of column indices; a
// solution is a set of rows covering every column exactly once. One-shot:
// a successful solve() leaves the links in the solved state.

#include <cstdint>
#include <optional>
#include <vector>

namespace ftsnd {

class ExactCover {
 public:
  ExactCover(std::size_t columns, const std::vector<std::vector<std::size_t>>& rows) {
    const std::size_t header = columns + 1;  // node 0 is the root
    left_.resize(header);
    right_.resize(header);
    up_.resize(header);
    down_.resize(header);
    col_.resize(header);
    row_.resize(header, 0);
    size_.assign(header, 0);
    for (std::size_t c = 0; c < header; ++c) {
      left_[c] = (c + header - 1) % header;
      right_[c] = (c + 1) % header;
      up_[c] = down_[c] = c;
      col_[c] = c;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t first = 0;
      for (auto c0 : rows[r]) {
        const std::size_t c = c0 + 1;
        const std::size_t node = left_.size();
        left_.push_back(node);
        right_.push_back(node);
        up_.push_back(up_[c]);
        down_.push_back(c);
        col_.push_back(c);
        row_.push_back(r);
        down_[up_[c]] = node;
        up_[c] = node;
        ++size_[c];
        if (first == 0) {
          first = node;
        } else {
          left_[node] = left_[first];
          right_[node] = first;
          right_[left_[first]] = node;
          left_[first] = node;
        }
      }
    }
  }

  /// First solution found (row indices in selection order), or nothing.
  /// `node_limit` bounds the number of search nodes.
  std::optional<std::vector<std::size_t>> solve(std::uint64_t node_limit = UINT64_MAX) {
    nodes_ = 0;
    limit_ = node_limit;
    partial_.clear();
    if (search()) return partial_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted_limit() const { return nodes_ >= limit_; }

 private:
  void cover(std::size_t c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (std::size_t i = down_[c]; i != c; i = down_[i]) {
      for (std::size_t j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --size_[col_[j]];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = up_[c]; i != c; i = up_[i]) {
      for (std::size_t j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  bool search() {
    if (right_[0] == 0) return true;
    if (++nodes_ >= limit_) return false;
    // Column with the fewest remaining options.
    std::size_t c = right_[0];
    for (std::size_t j = right_[c]; j != 0; j = right_[j]) {
      if (size_[j] < size_[c]) c = j;
    }
    if (size_[c] == 0) return false;
    cover(c);
    for (std::size_t r = down_[c]; r != c; r = down_[r]) {
      partial_.push_back(row_[r]);
      for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
      if (search()) return true;
      for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
      partial_.pop_back();
      if (nodes_ >= limit_) break;
    }
    uncover(c);
    return false;
  }

  std::vector<std::size_t> left_, right_, up_, down_, col_, row_, size_;
  std::vector<std::size_t> partial_;
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_ = UINT64_MAX;
};

}  // namespace ftsnd
