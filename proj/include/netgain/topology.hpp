#pragma once

#include <vector>

#include "netgain/linalg.hpp"

namespace netgain {

// Widths of one sub-operator: m inputs, p outputs, n internal states.
struct BlockDims {
  int m = 1;
  int p = 1;
  int n = 0;

  friend bool operator==(const BlockDims&, const BlockDims&) = default;
};

// Block structure of the interconnection plus the coupling matrix M routing
// sub-operator outputs back into sub-operator inputs, u = M y + d. M has one
// row per network input channel (sum of m_i) and one column per output
// channel (sum of p_i). Immutable after construction; all indices exposed by
// this class are 0-based.
class InterconnectionTopology {
 public:
  InterconnectionTopology() = default;
  // Validates shapes and finiteness; throws ShapeError / ValueError.
  InterconnectionTopology(std::vector<BlockDims> blocks, Matrix m);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<BlockDims>& blocks() const { return blocks_; }
  const BlockDims& block(int i) const;
  const Matrix& coupling() const { return m_; }

  int total_inputs() const { return m_total_; }
  int total_outputs() const { return p_total_; }
  int total_states() const { return n_total_; }

  int input_offset(int i) const;   // first row index of block i
  int output_offset(int i) const;  // first column index of block i
  int state_offset(int i) const;

  // Row indices of M owned by block i's inputs, in increasing order.
  std::vector<int> input_index_set(int i) const;
  // Column indices of M owned by block i's outputs.
  std::vector<int> output_index_set(int i) const;

  // max over columns j in output_index_set(i) of sum_k |M(k, j)|
  double max_col_abs_sum(int i) const;
  // max over rows j in input_index_set(i) of sum_k |M(j, k)|
  double max_row_abs_sum(int i) const;

  friend bool operator==(const InterconnectionTopology&,
                         const InterconnectionTopology&) = default;

 private:
  void check_block(int i) const;

  std::vector<BlockDims> blocks_;
  Matrix m_;
  std::vector<int> row_offsets_;
  std::vector<int> col_offsets_;
  std::vector<int> state_offsets_;
  int m_total_ = 0;
  int p_total_ = 0;
  int n_total_ = 0;
};

InterconnectionTopology build_topology(std::vector<BlockDims> blocks, Matrix m);

// The three-tank benchmark interconnection: blocks (m,p) = (2,1),(1,1),(1,1)
// and the 4x3 routing u = (y3, v, y1, y2). State widths of the blocks are a
// modeling choice passed by the caller.
InterconnectionTopology three_tank_topology(int n1, int n2, int n3);

}  // namespace netgain
