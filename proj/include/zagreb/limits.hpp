#pragma once

namespace zagreb {

// Hard ceilings fixed by the 32-bit vertex and edge masks.
inline constexpr int kHardMaxVertices = 20;
inline constexpr int kMaxOrientationEdges = 30;
inline constexpr int kMaxDistributionEdges = 24;
inline constexpr int kDefaultMaxVertices = 12;

/// Size cap for canonical codes and class enumeration. Defaults to 12;
/// the ZAGREB_MAX_N environment variable overrides it (clamped to
/// kHardMaxVertices). Read once per process.
int max_vertices();

/// Throws SizeLimitError if n exceeds max_vertices().
void check_vertex_limit(int n, const char *what);

} // namespace zagreb
