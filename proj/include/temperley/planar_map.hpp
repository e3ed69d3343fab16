#ifndef TEMPERLEY_PLANAR_MAP_HPP
#define TEMPERLEY_PLANAR_MAP_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "temperley/error.hpp"
#include "temperley/rational.hpp"

namespace temperley {

using VertexId = int;
using EdgeId = int;
using DartId = int;  // dart 2e runs tail->head of edge e, dart 2e+1 is its twin
using FaceId = int;

inline DartId twin_dart(DartId d) { return d ^ 1; }
inline EdgeId edge_of(DartId d) { return d >> 1; }

struct Coord {
  Rational x, y;
};

// An undirected embedded edge carrying one weight per direction. A one-way
// street is an edge whose reverse weight is zero; the reverse dart still
// exists so that face tracing sees both sides of every edge.
struct Edge {
  VertexId tail = -1, head = -1;
  Rational w_fwd = 0, w_rev = 0;
};

// Connected planar multigraph with an explicit rotation system. Immutable
// after build_map(); all operations hand back new maps.
struct PlanarMap {
  int nv = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<DartId>> rot;  // per vertex, incident darts (tail==v), CCW

  // Derived by build_map.
  std::vector<FaceId> face_left;               // per dart, the face on its left
  std::vector<std::vector<DartId>> faces;      // face boundary walks
  FaceId outer = -1;
  std::vector<int> rot_index;                  // per dart, its position in rot[tail]

  // Optional metadata.
  std::vector<std::optional<Coord>> coords;        // per vertex
  std::vector<std::optional<Coord>> dart_dir;      // per dart, direction override
  std::vector<long long> vertex_label;             // user ids (defaults to dense)
  std::vector<std::array<long long, 2>> dart_label;

  int ne() const { return static_cast<int>(edges.size()); }
  int nd() const { return 2 * ne(); }
  int nf() const { return static_cast<int>(faces.size()); }

  VertexId dart_tail(DartId d) const { return (d & 1) ? edges[d >> 1].head : edges[d >> 1].tail; }
  VertexId dart_head(DartId d) const { return (d & 1) ? edges[d >> 1].tail : edges[d >> 1].head; }
  const Rational& dart_weight(DartId d) const { return (d & 1) ? edges[d >> 1].w_rev : edges[d >> 1].w_fwd; }
  bool is_loop(EdgeId e) const { return edges[e].tail == edges[e].head; }

  DartId rot_next(DartId d) const {
    const auto& r = rot[dart_tail(d)];
    int i = rot_index[d];
    return r[(i + 1 == static_cast<int>(r.size())) ? 0 : i + 1];
  }
  DartId rot_prev(DartId d) const {
    const auto& r = rot[dart_tail(d)];
    int i = rot_index[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
  }
  // Face tracing: successor of d along the face on its left.
  DartId face_next(DartId d) const { return rot_next(twin_dart(d)); }

  // Direction of a dart from its tail, from coordinates or the override.
  std::optional<Coord> direction(DartId d) const;

  Rational total_tree_weight_upper_bound() const;  // used by samplers for caps
};

// Validates the rotation system, traces faces and checks Euler's relation.
// outer_dart designates the outer face; defaults to dart 0 (or the single
// face of an edgeless map).
PlanarMap build_map(int vertex_count, std::vector<Edge> edges,
                    std::vector<std::vector<DartId>> rotations,
                    std::optional<DartId> outer_dart = std::nullopt,
                    std::vector<std::optional<Coord>> coords = {},
                    std::vector<std::optional<Coord>> dart_dir = {});

struct DualMap {
  PlanarMap map;  // vertices are the primal faces; dual dart d crosses primal dart d
  // crossing bijection is the identity on dart ids.
};

// Dual map; the dual of dart d leaves the face on d's left and enters the
// face on its right.
DualMap dual(const PlanarMap& m);

// Collapses parallel edges that bound a digon face into a single edge whose
// directed weights are the sums, iterating until no digon between parallel
// edges remains. Weighted arborescence counts are preserved for every root.
PlanarMap merge_parallel_darts(const PlanarMap& m);

// Text format I/O (one record per line):
//   vertex <id> [<x> <y>]
//   dart <id> <tail> <head> <weight> [twin=<id>]
//   rot <vertex> <dart...>
//   outer <dart>
PlanarMap parse_map(std::istream& in);
PlanarMap parse_map_file(const std::string& path);
void write_map(std::ostream& out, const PlanarMap& m);

// Stable face naming for external interfaces: a face is addressed by the
// smallest dart id on its boundary walk.
DartId face_key(const PlanarMap& m, FaceId f);
FaceId face_by_key(const PlanarMap& m, DartId dart);

}  // namespace temperley

#endif
