#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advice_rl {

/// Rectangular occupancy grid parsed from the plain-text maze format:
/// '#' wall, '.' corridor, 'o' corridor with a pellet, 'G' ghost spawn,
/// 'P' player spawn. Spawn cells are corridors without pellets. Shortest-path
/// distances between all corridor cell pairs are precomputed on load.
class Maze {
 public:
  static constexpr int kUnreachable = 1 << 20;

  /// Parses the text form; throws std::runtime_error with a descriptive
  /// message for non-rectangular grids, unknown characters, or missing
  /// player/ghost spawns.
  static Maze parse(std::string_view text);
  static Maze load_file(const std::string& path);

  /// The maze every Grid Pursuit experiment uses unless a file is given.
  static const Maze& builtin();
  static std::string_view builtin_text();

  int width() const { return width_; }
  int height() const { return height_; }
  int cell_count() const { return width_ * height_; }

  int cell(int row, int col) const { return row * width_ + col; }
  int row_of(int cell) const { return cell / width_; }
  int col_of(int cell) const { return cell % width_; }

  bool is_corridor(int cell) const { return corridor_[cell]; }

  /// Shortest corridor path length between two corridor cells, or
  /// kUnreachable when disconnected.
  int distance(int from, int to) const { return distances_[corridor_id_[from]][corridor_id_[to]]; }

  /// Neighbor cell one step in the given direction, or -1 when the move is
  /// blocked by a wall or the border. Directions: 0 Up, 1 Down, 2 Left,
  /// 3 Right.
  int neighbor(int cell, int direction) const;

  int player_spawn() const { return player_spawn_; }
  const std::vector<int>& ghost_spawns() const { return ghost_spawns_; }
  const std::vector<int>& pellet_cells() const { return pellet_cells_; }

 private:
  Maze() = default;
  void build_distances();

  int width_ = 0;
  int height_ = 0;
  std::vector<bool> corridor_;
  std::vector<int> corridor_id_;  // cell -> dense corridor index, -1 for walls
  std::vector<std::vector<int>> distances_;
  int player_spawn_ = -1;
  std::vector<int> ghost_spawns_;
  std::vector<int> pellet_cells_;
};

}  // namespace advice_rl
