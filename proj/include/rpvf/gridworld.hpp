#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpvf/mdp.hpp"
#include "rpvf/state_graph.hpp"

namespace rpvf {

enum class CellKind { normal, wall, goal, mine };

/// Rectangular gridworld. Coordinates are (x, y) with (1, 1) the
/// bottom-left cell and (width, height) the top-right cell. Non-wall
/// cells map to MDP states in column-major order (x outer, y inner,
/// bottom to top).
struct GridSpec {
  int width = 0;
  int height = 0;
  std::vector<CellKind> cells;        // indexed (x-1)*height + (y-1)
  std::vector<double> cell_rewards;   // same indexing; 0 for normal, unused for walls
  std::optional<std::uint64_t> seed;  // recorded for mine grids

  int cell_index(int x, int y) const { return (x - 1) * height + (y - 1); }
  bool in_bounds(int x, int y) const {
    return x >= 1 && x <= width && y >= 1 && y <= height;
  }
  CellKind kind(int x, int y) const { return cells[cell_index(x, y)]; }
  double reward(int x, int y) const { return cell_rewards[cell_index(x, y)]; }
  bool is_state(int x, int y) const { return kind(x, y) != CellKind::wall; }

  int n_states() const;
  /// Compact state index of a non-wall cell, -1 for walls.
  int state_index(int x, int y) const;
  /// (x, y) of every state in index order.
  std::vector<std::pair<int, int>> state_coords() const;
  std::optional<int> goal_state_index() const;

  void validate() const;
};

/// Shaping potential, one value per (non-wall) state.
struct PotentialFunction {
  Vector psi;
};

// Actions, in the order used throughout: up, down, right, left.
inline constexpr int kActionUp = 0;
inline constexpr int kActionDown = 1;
inline constexpr int kActionRight = 2;
inline constexpr int kActionLeft = 3;
inline constexpr int kGridActions = 4;

/// n x n grid, goal in the top-right corner, no walls or mines.
GridSpec make_open_goal_grid(int n, double goal_reward);

/// 60 x 21 three-room maze: full-height walls at x = 20 and x = 40 with
/// single-cell doors at y = 11, goal at (60, 1).
GridSpec make_three_room();

/// Unobstructed 60 x 21 grid where the three-room wall cells carry
/// `penalty` as reward instead of blocking movement.
GridSpec make_wall_penalty_grid(double penalty);

/// n x n goal grid with n_mines distinct non-goal mine cells chosen by
/// the seeded generator; each mine pays a fixed reward drawn uniformly
/// from the integers {-1, ..., -5}.
GridSpec make_mine_grid(int n, int n_mines, std::uint64_t seed);

/// Selects which cell reward a transition pays: the cell arrived in
/// (the default) or the cell departed from.
enum class RewardConvention { on_entry, on_exit };

/// Deterministic 4-action MDP over the non-wall cells. Moves into walls
/// or off-grid leave the state unchanged, so the goal self-loops and
/// pays its reward on every step spent there.
TabularMdp grid_to_mdp(const GridSpec& spec, double alpha,
                       RewardConvention convention = RewardConvention::on_entry);

/// Undirected 4-neighbor adjacency over non-wall cells with the
/// per-state cell rewards attached.
StateGraph build_state_graph(const GridSpec& spec);

/// psi(x, y) = (x - 1) * N + y on a square open goal grid: strictly
/// increasing along any up- or right-move.
PotentialFunction potential_psi(const GridSpec& spec);

/// Plain-text round-trip format: one map row per line (top row first,
/// characters . # G M), a blank line, then key=value lines for the goal
/// reward, per-mine rewards, and the generator seed.
std::string serialize_grid(const GridSpec& spec);
GridSpec parse_grid(const std::string& text);
void save_grid(const GridSpec& spec, const std::string& path);
GridSpec load_grid(const std::string& path);

}  // namespace rpvf
