#include "netgain/topology.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "netgain/errors.hpp"

namespace netgain {

InterconnectionTopology::InterconnectionTopology(std::vector<BlockDims> blocks,
                                                 Matrix m)
    : blocks_(std::move(blocks)), m_(std::move(m)) {
  if (blocks_.empty()) throw ShapeError("topology: at least one block required");
  row_offsets_.reserve(blocks_.size());
  col_offsets_.reserve(blocks_.size());
  state_offsets_.reserve(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const BlockDims& b = blocks_[i];
    if (b.m < 1 || b.p < 1 || b.n < 0) {
      throw ShapeError("topology: block " + std::to_string(i) +
                       " needs m >= 1, p >= 1, n >= 0");
    }
    row_offsets_.push_back(m_total_);
    col_offsets_.push_back(p_total_);
    state_offsets_.push_back(n_total_);
    m_total_ += b.m;
    p_total_ += b.p;
    n_total_ += b.n;
  }
  if (m_.rows() != static_cast<std::size_t>(m_total_) ||
      m_.cols() != static_cast<std::size_t>(p_total_)) {
    throw ShapeError("topology: M must be " + std::to_string(m_total_) + "x" +
                     std::to_string(p_total_) + ", got " +
                     std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (!std::isfinite(m_(r, c))) {
        throw ValueError("topology: non-finite M entry at (" + std::to_string(r) +
                         ", " + std::to_string(c) + ")");
      }
    }
  }
}

void InterconnectionTopology::check_block(int i) const {
  if (i < 0 || i >= num_blocks()) {
    throw RangeError("topology: block index " + std::to_string(i) +
                     " out of range [0, " + std::to_string(num_blocks()) + ")");
  }
}

const BlockDims& InterconnectionTopology::block(int i) const {
  check_block(i);
  return blocks_[i];
}

int InterconnectionTopology::input_offset(int i) const {
  check_block(i);
  return row_offsets_[i];
}

int InterconnectionTopology::output_offset(int i) const {
  check_block(i);
  return col_offsets_[i];
}

int InterconnectionTopology::state_offset(int i) const {
  check_block(i);
  return state_offsets_[i];
}

std::vector<int> InterconnectionTopology::input_index_set(int i) const {
  check_block(i);
  std::vector<int> idx(blocks_[i].m);
  std::iota(idx.begin(), idx.end(), row_offsets_[i]);
  return idx;
}

std::vector<int> InterconnectionTopology::output_index_set(int i) const {
  check_block(i);
  std::vector<int> idx(blocks_[i].p);
  std::iota(idx.begin(), idx.end(), col_offsets_[i]);
  return idx;
}

double InterconnectionTopology::max_col_abs_sum(int i) const {
  check_block(i);
  double worst = 0.0;
  for (int j = col_offsets_[i]; j < col_offsets_[i] + blocks_[i].p; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < m_.rows(); ++k) sum += std::abs(m_(k, j));
    worst = std::max(worst, sum);
  }
  return worst;
}

double InterconnectionTopology::max_row_abs_sum(int i) const {
  check_block(i);
  double worst = 0.0;
  for (int j = row_offsets_[i]; j < row_offsets_[i] + blocks_[i].m; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < m_.cols(); ++k) sum += std::abs(m_(j, k));
    worst = std::max(worst, sum);
  }
  return worst;
}

InterconnectionTopology build_topology(std::vector<BlockDims> blocks, Matrix m) {
  return InterconnectionTopology(std::move(blocks), std::move(m));
}

InterconnectionTopology three_tank_topology(int n1, int n2, int n3) {
  Matrix m(4, 3);
  m(0, 2) = 1.0;  // u1 row 1 <- y3 (recirculation into tank 1)
  m(2, 0) = 1.0;  // u2 <- y1
  m(3, 1) = 1.0;  // u3 <- y2
  return InterconnectionTopology({{2, 1, n1}, {1, 1, n2}, {1, 1, n3}}, std::move(m));
}

}  // namespace netgain
