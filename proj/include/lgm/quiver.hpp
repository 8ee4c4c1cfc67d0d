#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lgm/ratfun.hpp"

namespace lgm {

// Vertices of the ladder quiver live on a (row, col) grid: rows 0..k, cols
// 1..3, with (0,1) the source sentinel and (k,3) the sink sentinel.
struct Vertex {
  int i = 0, j = 0;
  auto operator<=>(const Vertex&) const = default;
};

struct Arrow {
  Vertex tail, head;
  auto operator<=>(const Arrow&) const = default;
  bool vertical() const { return head.i == tail.i + 1; }
  bool horizontal() const { return head.j == tail.j + 1; }
};

struct Quiver {
  int k = 0;
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  bool has_arrow(const Arrow& a) const;
};

// Q0 for G(2,k+2): 2k+2 vertices and 3k arrows.
Quiver build_quiver(int k);

std::string grid_var_name(int i, int j);  // "a_i_j"

enum class TripletKind { Auxiliary, Original };

// The pipeline state (Q, V, R): an admissible subquiver, the active variable
// set, and a rational-function label per vertex.
struct Triplet {
  int k = 0;
  TripletKind kind = TripletKind::Auxiliary;
  Quiver quiver;
  VarsPtr vars;
  std::map<Vertex, RationalFunction> labels;

  const RationalFunction& label(Vertex v) const;
};

// Auxiliary: variables {a_{i,1}} ∪ {a_{i,2}: i<k} ∪ {a}, R(k,2)=1,
// R(0,1)=R(k,3)=a. Original: all 2k grid variables, R(0,1)=R(k,3)=1.
Triplet build_initial_triplet(int k, TripletKind kind = TripletKind::Auxiliary);

// Monomial pullback sending the auxiliary superpotential to the original
// one: a_{i,j} -> a_{i,j}/a_{k,2}, a -> 1/a_{k,2}.
Substitution aux_to_original_map(int k);

// Sum of R(head)/R(tail) over the given arrows (all must be present).
RationalFunction assemble_rational_function(const Triplet& t, const std::vector<Arrow>& arrows);
RationalFunction superpotential(const Triplet& t);

enum class BlockKind { Horizontal, Vertical, Mixed };

struct Block {
  BlockKind kind = BlockKind::Horizontal;
  int size = 0;       // number of constituent basic blocks
  int start_row = 0;  // first basic index consumed (horizontal/mixed)
  std::vector<Arrow> arrows;
};

struct BlockPlan {
  std::vector<Block> blocks;
  std::vector<int> sorted_degrees;
  std::vector<std::size_t> permutation;  // sorted_degrees[p] == degrees[permutation[p]]
};

// Arrows of the s-th basic horizontal block (vertical arrows of one strip).
std::vector<Arrow> basic_horizontal_arrows(int k, int s);
// The first basic vertical block: all horizontal arrows (i,1)->(i,2).
std::vector<Arrow> basic_vertical_arrows(int k);

// Canonical block placement of the main theorem. Throws input_error unless
// sum(degrees) < k+2.
BlockPlan select_blocks(int k, const std::vector<int>& degrees);

// Block history (M, W, gamma) tracking consumed wide rows.
struct BlockHistory {
  std::vector<int> M, W;  // ascending
  int gamma = 1;
};

struct HistoryCheck {
  bool ok = true;
  std::string reason;
};

HistoryCheck validate_block_history(const BlockHistory& h, int r);

// Weighting Lambda: total on its domain, zero outside.
struct WeightFunction {
  std::map<std::string, long> weights;  // key presence == domain membership
  long at(const std::string& name) const;
};

WeightFunction build_mwgamma_weighting(const BlockHistory& h, int r, int k);

// Weighted degree of one monomial.
long lambda_degree(const WeightFunction& w, const VariableSet& vars, const Exps& exps);

nlohmann::json vertex_to_json(const Vertex& v);
nlohmann::json arrow_to_json(const Arrow& a);
nlohmann::json block_to_json(const Block& b);

}  // namespace lgm
