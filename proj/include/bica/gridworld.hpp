#ifndef BICA_GRIDWORLD_HPP_
#define BICA_GRIDWORLD_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bica::grid {

inline constexpr int kMaxSteps = 80;
inline constexpr int kNumActions = 4;

enum class Heading : int { kN = 0, kE = 1, kS = 2, kW = 3 };
enum class AiAction : int { kForward = 0, kLeft = 1, kRight = 2, kStay = 3 };
enum class DoneReason { kNone, kGoal, kTimeout };
enum class ShiftLevel { kInDistribution, kOod };

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// LEFT walks N -> W -> S -> E.
inline Heading turn_left(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 3) % 4); }
inline Heading turn_right(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 1) % 4); }
inline Heading opposite(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 2) % 4); }
Cell offset(Heading h);
inline Cell operator+(Cell a, Cell b) { return {a.row + b.row, a.col + b.col}; }

const char* heading_name(Heading h);
const char* action_name(AiAction a);
std::optional<AiAction> parse_action(const std::string& name);
std::optional<Heading> parse_heading(const std::string& name);

class MapGenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapInstance {
  int width = 8;
  int height = 8;
  std::vector<uint8_t> obstacles;  // row-major, 1 = obstacle
  Cell start;
  Heading start_heading = Heading::kN;
  Cell goal;
  double obstacle_density = 0.0;
  uint64_t seed = 0;

  bool in_bounds(Cell c) const { return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width; }
  bool obstacle(Cell c) const { return obstacles[static_cast<size_t>(c.row * width + c.col)] != 0; }
  bool blocked(Cell c) const { return !in_bounds(c) || obstacle(c); }
  int index(Cell c) const { return c.row * width + c.col; }
  bool operator==(const MapInstance&) const = default;
};

struct EnvParams {
  int width = 8;
  int height = 8;
  double density_min = 0.2;
  double density_max = 0.3;
  bool ood = false;
  bool operator==(const EnvParams&) const = default;
};

EnvParams shift_environment(const EnvParams& params, ShiftLevel level);

// Heading-free BFS distances from `from`; -1 marks unreachable cells.
std::vector<int> bfs_distances(const MapInstance& map, Cell from);
bool reachable(const MapInstance& map, Cell from, Cell to);

// First move along a shortest path from `from` to the goal (ties: N, E, S, W).
std::optional<Heading> path_direction(const MapInstance& map, Cell from);
// Straight cells the shortest path keeps along its first direction.
int path_run_length(const MapInstance& map, Cell from);

Heading start_heading_for_seed(uint64_t seed);

MapInstance generate_map(uint64_t seed, double density, int width = 8, int height = 8,
                         int max_attempts = 1000);
// Density drawn uniformly from the params' band, then generate_map.
MapInstance sample_map(const EnvParams& params, uint64_t seed);

struct MapState {
  MapInstance map;
  Cell pos;
  Heading heading = Heading::kN;
  int step_count = 0;
  bool done = false;
  DoneReason done_reason = DoneReason::kNone;
};

struct StepEvents {
  bool moved = false;
  bool collided = false;
  bool reached_goal = false;
};

MapState initial_state(MapInstance map);

// Throws std::logic_error when the state is already done.
std::pair<MapState, StepEvents> step(const MapState& state, AiAction action);

double compute_reward(const StepEvents& events, int tokens_this_step);

enum class CellKind : uint8_t { kFree = 0, kObstacle = 1, kWall = 2, kGoal = 3 };

// 3x3 patch: row 0 is ahead of the agent, column 0 is to its left.
struct EgoView {
  std::array<CellKind, 9> cells{};
  Heading heading = Heading::kN;
  bool goal_visible = false;
  bool operator==(const EgoView&) const = default;
};

// World cell seen at patch position (i, j) for an agent at `pos` facing `h`.
Cell ego_cell(Cell pos, Heading h, int i, int j);

EgoView observe_ai(const MapState& state);

struct FullView {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> obstacles;
  Cell pos;
  Heading heading = Heading::kN;
  Cell goal;
  int step_count = 0;
  bool operator==(const FullView&) const = default;
};

FullView observe_human(const MapState& state);

// Plain-text map: header "W H density seed" then rows of # . S G.
std::string serialize_map(const MapInstance& map);
MapInstance parse_map(const std::string& text);

}  // namespace bica::grid

#endif  // BICA_GRIDWORLD_HPP_
