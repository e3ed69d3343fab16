#include "temperley/planar_map.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace temperley {

std::optional<Coord> PlanarMap::direction(DartId d) const {
  if (!dart_dir.empty() && dart_dir[d]) return dart_dir[d];
  VertexId a = dart_tail(d), b = dart_head(d);
  if (coords.empty() || !coords[a] || !coords[b]) return std::nullopt;
  return Coord{coords[b]->x - coords[a]->x, coords[b]->y - coords[a]->y};
}

PlanarMap build_map(int vertex_count, std::vector<Edge> edges,
                    std::vector<std::vector<DartId>> rotations,
                    std::optional<DartId> outer_dart,
                    std::vector<std::optional<Coord>> coords,
                    std::vector<std::optional<Coord>> dart_dir) {
  PlanarMap m;
  m.nv = vertex_count;
  m.edges = std::move(edges);
  m.rot = std::move(rotations);
  if (static_cast<int>(m.rot.size()) != m.nv)
    throw Error(Errc::RotationMismatch, "rotation list count != vertex count");

  const int nd = m.nd();
  m.rot_index.assign(nd, -1);
  for (VertexId v = 0; v < m.nv; ++v) {
    for (int i = 0; i < static_cast<int>(m.rot[v].size()); ++i) {
      DartId d = m.rot[v][i];
      if (d < 0 || d >= nd)
        throw Error(Errc::RotationMismatch, "unknown dart in rotation of vertex " + std::to_string(v));
      if (m.dart_tail(d) != v)
        throw Error(Errc::RotationMismatch,
                    "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                        " but its tail is " + std::to_string(m.dart_tail(d)));
      if (m.rot_index[d] != -1)
        throw Error(Errc::RotationMismatch, "dart " + std::to_string(d) + " listed twice");
      m.rot_index[d] = i;
    }
  }
  for (DartId d = 0; d < nd; ++d)
    if (m.rot_index[d] == -1)
      throw Error(Errc::RotationMismatch, "dart " + std::to_string(d) + " missing from rotations");
  for (const Edge& e : m.edges)
    if (e.w_fwd < 0 || e.w_rev < 0) throw Error(Errc::BadParameters, "negative dart weight");

  // Connectivity.
  if (m.nv > 0) {
    std::vector<char> seen(m.nv, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : m.rot[v]) {
        VertexId w = m.dart_head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != m.nv) throw Error(Errc::NotConnected, "graph is not connected");
  }

  // Face tracing: next dart = rotation successor of the twin.
  m.face_left.assign(nd, -1);
  for (DartId d0 = 0; d0 < nd; ++d0) {
    if (m.face_left[d0] != -1) continue;
    FaceId f = static_cast<FaceId>(m.faces.size());
    m.faces.emplace_back();
    DartId d = d0;
    do {
      m.face_left[d] = f;
      m.faces[f].push_back(d);
      d = m.face_next(d);
    } while (d != d0);
  }
  if (m.ne() == 0) {
    if (m.nv > 1) throw Error(Errc::NotConnected, "edgeless graph with several vertices");
    m.faces.assign(1, {});
  }

  long long euler = static_cast<long long>(m.nv) - m.ne() + m.nf();
  if (euler != 2)
    throw Error(Errc::EulerViolation,
                "V-E+F = " + std::to_string(euler) + " (rotation system is not spherical)");

  if (outer_dart) {
    if (*outer_dart < 0 || *outer_dart >= std::max(nd, 1))
      throw Error(Errc::ParseError, "outer dart out of range");
    m.outer = m.ne() ? m.face_left[*outer_dart] : 0;
  } else {
    m.outer = 0;  // face containing dart 0 by the tracing order
  }

  if (!coords.empty()) {
    if (static_cast<int>(coords.size()) != m.nv)
      throw Error(Errc::BadParameters, "coordinate count != vertex count");
    m.coords = std::move(coords);
  }
  if (!dart_dir.empty()) {
    if (static_cast<int>(dart_dir.size()) != nd)
      throw Error(Errc::BadParameters, "dart_dir count != dart count");
    m.dart_dir = std::move(dart_dir);
  }
  m.vertex_label.resize(m.nv);
  for (int v = 0; v < m.nv; ++v) m.vertex_label[v] = v;
  m.dart_label.resize(m.ne());
  for (int e = 0; e < m.ne(); ++e) m.dart_label[e] = {2LL * e, 2LL * e + 1};
  return m;
}

DualMap dual(const PlanarMap& m) {
  // Dual edge e: dart 2e from face_left[2e] to face_left[2e+1] (left-to-right
  // crossing of the primal dart 2e).
  std::vector<Edge> dedges(m.ne());
  for (EdgeId e = 0; e < m.ne(); ++e) {
    dedges[e].tail = m.face_left[2 * e];
    dedges[e].head = m.face_left[2 * e + 1];
    dedges[e].w_fwd = 1;
    dedges[e].w_rev = 1;
  }
  // Rotation at a dual vertex f: the walk darts of f, which are exactly the
  // dual darts with tail f.
  std::vector<std::vector<DartId>> drot(m.nf());
  for (FaceId f = 0; f < m.nf(); ++f) drot[f] = m.faces[f];

  std::optional<DartId> outer_dart;
  // The dual face traced from twin(d) corresponds to the primal vertex
  // tail(d); expose the dual face of the primal outer face's... any valid
  // designation works structurally; use the dual dart crossing the primal
  // outer walk's first dart.
  if (m.ne()) outer_dart = twin_dart(m.faces[m.outer].front());
  DualMap dm;
  dm.map = build_map(m.nf(), std::move(dedges), std::move(drot), outer_dart);
  return dm;
}

PlanarMap merge_parallel_darts(const PlanarMap& m) {
  PlanarMap cur = m;
  for (;;) {
    // Find a digon face bounded by two distinct parallel edges (same
    // endpoints, same orientation around the digon).
    int victim_face = -1;
    for (FaceId f = 0; f < cur.nf(); ++f) {
      if (cur.faces[f].size() != 2) continue;
      DartId a = cur.faces[f][0], b = cur.faces[f][1];
      if (edge_of(a) == edge_of(b)) continue;  // a single edge seen from both sides
      if (cur.dart_tail(a) != cur.dart_head(b) || cur.dart_head(a) != cur.dart_tail(b)) continue;
      victim_face = f;
      break;
    }
    if (victim_face < 0) return cur;

    DartId a = cur.faces[victim_face][0], b = cur.faces[victim_face][1];
    // a runs v->w, b runs w->v along the digon; merge edge_of(b) into
    // edge_of(a), summing the directed weights, and delete edge_of(b).
    EdgeId keep = edge_of(a), drop = edge_of(b);
    Rational add_along_a = cur.dart_weight(twin_dart(b));  // weight of drop in a's direction
    Rational add_along_twin_a = cur.dart_weight(b);
    if (a & 1) {
      cur.edges[keep].w_rev += add_along_a;
      cur.edges[keep].w_fwd += add_along_twin_a;
    } else {
      cur.edges[keep].w_fwd += add_along_a;
      cur.edges[keep].w_rev += add_along_twin_a;
    }

    std::vector<Edge> edges2;
    edges2.reserve(cur.ne() - 1);
    std::vector<int> emap(cur.ne(), -1);
    for (EdgeId e = 0; e < cur.ne(); ++e) {
      if (e == drop) continue;
      emap[e] = static_cast<int>(edges2.size());
      edges2.push_back(cur.edges[e]);
    }
    std::vector<std::vector<DartId>> rot2(cur.nv);
    for (VertexId v = 0; v < cur.nv; ++v)
      for (DartId d : cur.rot[v])
        if (edge_of(d) != drop) rot2[v].push_back(2 * emap[edge_of(d)] + (d & 1));
    std::optional<DartId> outer_dart;
    for (DartId d : cur.faces[cur.outer])
      if (edge_of(d) != drop) {
        outer_dart = 2 * emap[edge_of(d)] + (d & 1);
        break;
      }
    cur = build_map(cur.nv, std::move(edges2), std::move(rot2), outer_dart, cur.coords);
  }
}

DartId face_key(const PlanarMap& m, FaceId f) {
  if (f < 0 || f >= m.nf()) throw Error(Errc::UnknownFace, "face " + std::to_string(f));
  if (m.faces[f].empty()) return 0;
  return *std::min_element(m.faces[f].begin(), m.faces[f].end());
}

FaceId face_by_key(const PlanarMap& m, DartId dart) {
  if (m.ne() == 0) return 0;
  if (dart < 0 || dart >= m.nd()) throw Error(Errc::UnknownFace, "no dart " + std::to_string(dart));
  return m.face_left[dart];
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct RawDart {
  long long id, tail, head;
  Rational w;
  bool has_twin = false;
  long long twin_id = 0;
  int line;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

PlanarMap parse_map(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<std::pair<long long, std::optional<Coord>>> verts;
  std::map<long long, int> vindex;
  std::vector<RawDart> raw;
  std::map<long long, int> dindex;
  std::vector<std::pair<long long, std::vector<long long>>> rots;
  std::map<long long, int> rot_seen;
  std::optional<long long> outer_dart_id;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw)) continue;
    if (kw == "vertex") {
      long long id;
      if (!(ss >> id)) fail(lineno, "vertex needs an id");
      if (vindex.count(id)) fail(lineno, "duplicate vertex id " + std::to_string(id));
      std::string xs, ys;
      std::optional<Coord> c;
      if (ss >> xs) {
        if (!(ss >> ys)) fail(lineno, "vertex coordinates need both x and y");
        c = Coord{parse_rational(xs), parse_rational(ys)};
      }
      vindex[id] = static_cast<int>(verts.size());
      verts.emplace_back(id, c);
    } else if (kw == "dart") {
      RawDart rd;
      rd.line = lineno;
      std::string ws;
      if (!(ss >> rd.id >> rd.tail >> rd.head >> ws)) fail(lineno, "dart needs id, tail, head, weight");
      rd.w = parse_rational(ws);
      if (rd.w < 0) fail(lineno, "negative weight");
      std::string extra;
      if (ss >> extra) {
        if (extra.rfind("twin=", 0) != 0) fail(lineno, "expected twin=<id>");
        rd.has_twin = true;
        rd.twin_id = std::stoll(extra.substr(5));
      }
      if (dindex.count(rd.id)) fail(lineno, "duplicate dart id " + std::to_string(rd.id));
      dindex[rd.id] = static_cast<int>(raw.size());
      raw.push_back(rd);
    } else if (kw == "rot") {
      long long v;
      if (!(ss >> v)) fail(lineno, "rot needs a vertex id");
      if (rot_seen.count(v)) fail(lineno, "duplicate rot line for vertex " + std::to_string(v));
      rot_seen[v] = lineno;
      std::vector<long long> ds;
      long long d;
      while (ss >> d) ds.push_back(d);
      rots.emplace_back(v, std::move(ds));
    } else if (kw == "outer") {
      long long d;
      if (!(ss >> d)) fail(lineno, "outer needs a dart id");
      outer_dart_id = d;
    } else {
      fail(lineno, "unknown record '" + kw + "'");
    }
  }

  for (const RawDart& rd : raw) {
    if (!vindex.count(rd.tail)) fail(rd.line, "unknown tail vertex " + std::to_string(rd.tail));
    if (!vindex.count(rd.head)) fail(rd.line, "unknown head vertex " + std::to_string(rd.head));
  }

  // Pair twins into edges. A dart without twin= gets a zero-weight reverse.
  std::vector<Edge> edges;
  std::vector<std::array<long long, 2>> dlabels;
  std::map<long long, DartId> dart_of_id;  // forward side of its edge
  std::vector<char> consumed(raw.size(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (consumed[i]) continue;
    const RawDart& rd = raw[i];
    Edge e;
    e.tail = vindex[rd.tail];
    e.head = vindex[rd.head];
    e.w_fwd = rd.w;
    long long rev_label = rd.id;
    if (rd.has_twin) {
      auto it = dindex.find(rd.twin_id);
      if (it == dindex.end()) fail(rd.line, "twin dart " + std::to_string(rd.twin_id) + " not declared");
      const RawDart& tw = raw[it->second];
      if (consumed[it->second]) fail(rd.line, "twin dart used twice");
      if (!tw.has_twin || tw.twin_id != rd.id) fail(tw.line, "twin relation is not symmetric");
      if (tw.tail != rd.head || tw.head != rd.tail) fail(tw.line, "twin darts must swap tail and head");
      e.w_rev = tw.w;
      rev_label = tw.id;
      consumed[it->second] = 1;
      dart_of_id[tw.id] = 2 * static_cast<DartId>(edges.size()) + 1;
    } else {
      e.w_rev = 0;
    }
    consumed[i] = 1;
    dart_of_id[rd.id] = 2 * static_cast<DartId>(edges.size());
    dlabels.push_back({rd.id, rev_label});
    edges.push_back(e);
  }

  std::vector<std::vector<DartId>> rot(verts.size());
  std::vector<char> placed(2 * edges.size(), 0);
  for (auto& [vid, ds] : rots) {
    if (!vindex.count(vid)) fail(rot_seen[vid], "rot for unknown vertex " + std::to_string(vid));
    int v = vindex[vid];
    for (long long id : ds) {
      auto it = dart_of_id.find(id);
      if (it == dart_of_id.end()) fail(rot_seen[vid], "rot mentions unknown dart " + std::to_string(id));
      DartId d = it->second;
      EdgeId eid = edge_of(d);
      const Edge& e = edges[eid];
      bool twinless = dlabels[eid][0] == dlabels[eid][1];
      DartId chosen;
      if (e.tail == v && !(d & 1) && !placed[d]) {
        chosen = d;
      } else if (e.head == v || (twinless && e.tail == v)) {
        // The declared reverse side, or the implicit reverse side of a
        // twinless dart (named by its forward id, also for self-loops).
        chosen = d | 1;
        if (!twinless && !(d & 1))
          fail(rot_seen[vid], "dart " + std::to_string(id) + " has a twin; name the twin at vertex " +
                                  std::to_string(vid));
      } else {
        fail(rot_seen[vid],
             "dart " + std::to_string(id) + " is not incident to vertex " + std::to_string(vid));
      }
      if (placed[chosen])
        fail(rot_seen[vid], "dart " + std::to_string(id) + " placed twice in rotations");
      placed[chosen] = 1;
      rot[v].push_back(chosen);
    }
  }

  std::optional<DartId> outer;
  if (outer_dart_id) {
    auto it = dart_of_id.find(*outer_dart_id);
    if (it == dart_of_id.end()) throw Error(Errc::ParseError, "outer names an unknown dart");
    outer = it->second;
  }
  std::vector<std::optional<Coord>> coords(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) coords[i] = verts[i].second;
  bool have_coords = std::any_of(coords.begin(), coords.end(), [](auto& c) { return bool(c); });

  PlanarMap m = build_map(static_cast<int>(verts.size()), std::move(edges), std::move(rot), outer,
                          have_coords ? std::move(coords) : std::vector<std::optional<Coord>>{});
  for (std::size_t i = 0; i < verts.size(); ++i) m.vertex_label[i] = verts[i].first;
  m.dart_label = std::move(dlabels);
  return m;
}

PlanarMap parse_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return parse_map(in);
}

void write_map(std::ostream& out, const PlanarMap& m) {
  for (VertexId v = 0; v < m.nv; ++v) {
    out << "vertex " << m.vertex_label[v];
    if (!m.coords.empty() && m.coords[v])
      out << " " << rational_str(m.coords[v]->x) << " " << rational_str(m.coords[v]->y);
    out << "\n";
  }
  for (EdgeId e = 0; e < m.ne(); ++e) {
    const Edge& ed = m.edges[e];
    if (m.dart_label[e][0] == m.dart_label[e][1]) {
      out << "dart " << m.dart_label[e][0] << " " << m.vertex_label[ed.tail] << " "
          << m.vertex_label[ed.head] << " " << rational_str(ed.w_fwd) << "\n";
      continue;
    }
    out << "dart " << m.dart_label[e][0] << " " << m.vertex_label[ed.tail] << " "
        << m.vertex_label[ed.head] << " " << rational_str(ed.w_fwd) << " twin=" << m.dart_label[e][1]
        << "\n";
    out << "dart " << m.dart_label[e][1] << " " << m.vertex_label[ed.head] << " "
        << m.vertex_label[ed.tail] << " " << rational_str(ed.w_rev) << " twin=" << m.dart_label[e][0]
        << "\n";
  }
  for (VertexId v = 0; v < m.nv; ++v) {
    out << "rot " << m.vertex_label[v];
    for (DartId d : m.rot[v]) out << " " << m.dart_label[edge_of(d)][d & 1];
    out << "\n";
  }
  if (m.ne()) {
    DartId d = m.faces[m.outer].front();
    out << "outer " << m.dart_label[edge_of(d)][d & 1] << "\n";
  }
}

}  // namespace temperley
