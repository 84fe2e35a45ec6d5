#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fitdom/scene.hpp"

namespace fitdom {

// Hand-verified fixture scenes. Each builder returns the canonical document;
// the bundled JSON files under scenes/ are exactly dump_scene() of these.

namespace fixture_detail {

inline DirectionDecl dir(std::string id, std::int64_t num, std::int64_t den,
                         std::vector<std::string> in) {
  DirectionDecl d;
  d.id = std::move(id);
  d.eigenvalue.value = make_rat(num, den);
  d.eigenvalue.sign = sign_of(*d.eigenvalue.value);
  d.in = std::move(in);
  return d;
}

inline DirectionDecl dir_t(std::string id, std::int64_t num, std::int64_t den) {
  DirectionDecl d;
  d.id = std::move(id);
  d.eigenvalue.value = make_rat(num, den);
  d.eigenvalue.sign = sign_of(*d.eigenvalue.value);
  d.transversal = true;
  return d;
}

inline PointDecl point(std::string id, std::vector<std::string> comps,
                       std::vector<DirectionDecl> dirs, int dim_w,
                       std::string kind) {
  PointDecl p;
  p.id = std::move(id);
  p.components = std::move(comps);
  p.directions = std::move(dirs);
  if (dim_w > 0) p.dim_w = dim_w;
  p.declared_kind = std::move(kind);
  return p;
}

inline EdgeDecl edge(std::string id, std::string alpha, std::string omega,
                     std::string kind, std::vector<std::string> comps,
                     std::string alpha_dir, std::string omega_dir,
                     std::vector<std::string> sides_alpha = {},
                     std::vector<std::string> sides_omega = {}) {
  EdgeDecl e;
  e.id = std::move(id);
  e.alpha = std::move(alpha);
  e.omega = std::move(omega);
  e.kind = std::move(kind);
  e.components = std::move(comps);
  e.alpha_direction = std::move(alpha_dir);
  e.omega_direction = std::move(omega_dir);
  e.sides_at_alpha = std::move(sides_alpha);
  e.sides_at_omega = std::move(sides_omega);
  return e;
}

inline FaceDecl face(std::string id, std::string comp, std::string alpha,
                     std::string omega,
                     std::vector<std::vector<std::string>> paths) {
  FaceDecl f;
  f.id = std::move(id);
  f.component = std::move(comp);
  f.alpha = std::move(alpha);
  f.omega = std::move(omega);
  f.paths = std::move(paths);
  return f;
}

}  // namespace fixture_detail

// Theta-shaped divisor: three components whose skeleton is a theta graph with
// corner saddles 1 and 5, transversal angle saddles 3 and 4, and four nodes.
inline SceneDoc build_fig3() {
  using namespace fixture_detail;
  SceneDoc doc;
  doc.name = "theta-divisor";
  doc.component_ids = {"D1", "D2", "D3"};
  doc.points = {
      point("1", {"D1", "D2", "D3"},
            {dir("a1", -1, 1, {"D1", "D2"}), dir("a2", 3, 1, {"D2", "D3"}),
             dir("a3", 1, 1, {"D1", "D3"})},
            0, "tangential-saddle"),
      point("2", {"D2"},
            {dir("u1", -1, 1, {"D2"}), dir("u2", -2, 1, {"D2"}),
             dir_t("tr", -3, 2)},
            3, "node-attractor"),
      point("3", {"D1", "D2"},
            {dir("x", 1, 1, {"D1", "D2"}), dir("i1", -1, 1, {"D1"}),
             dir("i2", -2, 1, {"D2"})},
            2, "transversal-saddle"),
      point("4", {"D2", "D3"},
            {dir("x", -1, 1, {"D2", "D3"}), dir("i2", 1, 1, {"D2"}),
             dir("i3", 2, 1, {"D3"})},
            2, "transversal-saddle"),
      point("5", {"D1", "D2", "D3"},
            {dir("a1", -2, 1, {"D1", "D2"}), dir("a2", -1, 1, {"D2", "D3"}),
             dir("a3", -3, 1, {"D1", "D3"})},
            3, "node-attractor"),
      point("6", {"D1"},
            {dir("u1", 1, 1, {"D1"}), dir("u2", 2, 1, {"D1"}),
             dir_t("tr", -1, 1)},
            1, "node-repeller"),
      point("7", {"D2", "D3"},
            {dir("x", 1, 1, {"D2", "D3"}), dir("i2", 2, 1, {"D2"}),
             dir("i3", 3, 2, {"D3"})},
            3, "node-repeller"),
  };
  doc.edges = {
      edge("sk_3_1", "3", "1", "skeleton", {"D1", "D2"}, "x", "a1", {"3+"}),
      edge("sk_3_5", "3", "5", "skeleton", {"D1", "D2"}, "x", "a1", {"3-"}),
      edge("sk_1_4", "1", "4", "skeleton", {"D2", "D3"}, "a2", "x", {}, {"4+"}),
      edge("sk_1_5", "1", "5", "skeleton", {"D1", "D3"}, "a3", "a3"),
      edge("sk_7_4", "7", "4", "skeleton", {"D2", "D3"}, "x", "x", {}, {"4-"}),
      edge("sk_7_5", "7", "5", "skeleton", {"D2", "D3"}, "x", "a2"),
      edge("tr_6_3", "6", "3", "trace", {"D1"}, "u1", "i1", {}, {"3+", "3-"}),
      edge("tr_7_3", "7", "3", "trace", {"D2"}, "i2", "i2", {}, {"3+", "3-"}),
      edge("tr_4_2", "4", "2", "trace", {"D2"}, "i2", "u1", {"4+", "4-"}),
      edge("tr_4_5", "4", "5", "trace", {"D3"}, "i3", "a2", {"4+", "4-"}),
  };
  doc.faces = {
      face("G1", "D1", "6", "5",
           {{"tr_6_3", "sk_3_1", "sk_1_5"}, {"tr_6_3", "sk_3_5"}}),
      face("G2a", "D2", "7", "2",
           {{"tr_7_3", "sk_3_1", "sk_1_4", "tr_4_2"}, {"sk_7_4", "tr_4_2"}}),
      face("G2b", "D2", "7", "5", {{"tr_7_3", "sk_3_5"}, {"sk_7_5"}}),
      face("G3a", "D3", "1", "5", {{"sk_1_4", "tr_4_5"}, {"sk_1_5"}}),
      face("G3b", "D3", "7", "5", {{"sk_7_4", "tr_4_5"}, {"sk_7_5"}}),
  };
  return doc;
}

// Same shape with the corner saddle 1 reweighted so the single skeleton edge
// from 3 to 1 carries an exact weight match (one resonant chain).
inline SceneDoc build_resonant_chain() {
  using namespace fixture_detail;
  SceneDoc doc = build_fig3();
  doc.name = "resonant-chain";
  for (auto& p : doc.points) {
    if (p.id != "1") continue;
    p.directions = {dir("a1", -1, 1, {"D1", "D2"}), dir("a2", 4, 1, {"D2", "D3"}),
                    dir("a3", 2, 1, {"D1", "D3"})};
  }
  return doc;
}

// Theta shape with an extra transversal saddle s in the interior of D1 whose
// outgoing trace edge t2b joins two restriction saddles of D1. That edge is a
// trace saddle connection, so the scene breaks the skeleton-only rule.
inline SceneDoc build_morse_smale_violation() {
  using namespace fixture_detail;
  SceneDoc doc = build_fig3();
  doc.name = "trace-saddle-connection";
  doc.points.push_back(point("s", {"D1"},
                             {dir("u", 1, 1, {"D1"}), dir("v", -1, 1, {"D1"}),
                              dir_t("tr", 2, 1)},
                             2, "transversal-saddle"));
  std::vector<EdgeDecl> edges;
  for (const auto& e : doc.edges)
    if (e.id != "tr_6_3") edges.push_back(e);
  edges.push_back(edge("t2a", "6", "s", "trace", {"D1"}, "u1", "v", {}, {"s+"}));
  edges.push_back(edge("t2b", "s", "3", "trace", {"D1"}, "u", "i1",
                       {"s+", "s-"}, {"3+", "3-"}));
  edges.push_back(edge("t2c", "6", "s", "trace", {"D1"}, "u2", "v", {}, {"s-"}));
  edges.push_back(edge("t2d", "s", "5", "trace", {"D1"}, "u", "a1",
                       {"s+", "s-"}));
  doc.edges = std::move(edges);
  std::vector<FaceDecl> faces;
  faces.push_back(face("F1", "D1", "6", "5", {{"t2a", "t2d"}, {"t2c", "t2d"}}));
  faces.push_back(face("F2", "D1", "6", "5",
                       {{"t2a", "t2b", "sk_3_1", "sk_1_5"},
                        {"t2c", "t2b", "sk_3_5"}}));
  for (const auto& f : doc.faces)
    if (f.id != "G1") faces.push_back(f);
  doc.faces = std::move(faces);
  return doc;
}

// The exceptional two-vertex scene: one component, no edges, one exceptional
// face joining the repeller to the attractor.
inline SceneDoc build_two_node() {
  using namespace fixture_detail;
  SceneDoc doc;
  doc.name = "two-node-exceptional";
  doc.component_ids = {"D1"};
  doc.points = {
      point("p", {"D1"},
            {dir("u1", 1, 1, {"D1"}), dir("u2", 2, 1, {"D1"}), dir_t("tr", 3, 1)},
            3, "node-repeller"),
      point("q", {"D1"},
            {dir("u1", -1, 1, {"D1"}), dir("u2", -2, 1, {"D1"}),
             dir_t("tr", -3, 1)},
            3, "node-attractor"),
  };
  FaceDecl f;
  f.id = "G";
  f.component = "D1";
  f.alpha = "p";
  f.omega = "q";
  f.exceptional = true;
  doc.faces = {f};
  return doc;
}

// Two spherical caps over a band: skeleton circles C_a (points 1, 3) and C_b
// (points 4, 5). Point 1 is a tangential angle saddle, 3 and 4 transversal
// angle saddles, 5 an angle repeller. The dim1_knob turns the three interior
// nodes into saddle nodes by flipping their transversal eigenvalues.
inline SceneDoc build_band7(bool dim1_knob = false) {
  using namespace fixture_detail;
  const std::int64_t k = dim1_knob ? -1 : 1;
  SceneDoc doc;
  doc.name = dim1_knob ? "band-saddle-nodes" : "band";
  doc.component_ids = {"D1", "D2", "D3"};
  doc.points = {
      point("1", {"D1", "D2"},
            {dir("x", -1, 1, {"D1", "D2"}), dir("i1", 1, 1, {"D1"}),
             dir("i2", -2, 1, {"D2"})},
            0, "tangential-saddle"),
      point("2", {"D1"},
            {dir("u1", -1, 1, {"D1"}), dir("u2", -2, 1, {"D1"}),
             dir_t("tr", -3 * k, 1)},
            dim1_knob ? 1 : 3, "node-attractor"),
      point("3", {"D1", "D2"},
            {dir("x", 1, 1, {"D1", "D2"}), dir("i1", -1, 1, {"D1"}),
             dir("i2", -2, 1, {"D2"})},
            2, "transversal-saddle"),
      point("4", {"D2", "D3"},
            {dir("x", -1, 1, {"D2", "D3"}), dir("i2", 1, 1, {"D2"}),
             dir("i3", 2, 1, {"D3"})},
            2, "transversal-saddle"),
      point("5", {"D2", "D3"},
            {dir("x", 1, 1, {"D2", "D3"}), dir("i2", 2, 1, {"D2"}),
             dir("i3", 3, 2, {"D3"})},
            3, "node-repeller"),
      point("6", {"D3"},
            {dir("u1", -1, 1, {"D3"}), dir("u2", -2, 1, {"D3"}),
             dir_t("tr", -3 * k, 1)},
            dim1_knob ? 1 : 3, "node-attractor"),
      point("7", {"D1"},
            {dir("u1", 1, 1, {"D1"}), dir("u2", 2, 1, {"D1"}),
             dir_t("tr", 3 * k, 1)},
            dim1_knob ? 1 : 3, "node-repeller"),
  };
  doc.edges = {
      edge("eA1", "3", "1", "skeleton", {"D1", "D2"}, "x", "x", {"3+"}),
      edge("eA2", "3", "1", "skeleton", {"D1", "D2"}, "x", "x", {"3-"}),
      edge("eB1", "5", "4", "skeleton", {"D2", "D3"}, "x", "x", {}, {"4+"}),
      edge("eB2", "5", "4", "skeleton", {"D2", "D3"}, "x", "x", {}, {"4-"}),
      edge("t1", "1", "2", "trace", {"D1"}, "i1", "u1"),
      edge("t2", "7", "3", "trace", {"D1"}, "u1", "i1", {}, {"3+", "3-"}),
      edge("t3", "5", "3", "trace", {"D2"}, "i2", "i2", {}, {"3+", "3-"}),
      edge("t4", "4", "6", "trace", {"D3"}, "i3", "u1", {"4+", "4-"}),
      edge("t5", "4", "1", "trace", {"D2"}, "i2", "i2", {"4+", "4-"}),
  };
  doc.faces = {
      face("G1", "D1", "7", "2", {{"t2", "eA1", "t1"}, {"t2", "eA2", "t1"}}),
      face("G2a", "D2", "5", "1", {{"t3", "eA1"}, {"eB1", "t5"}}),
      face("G2b", "D2", "5", "1", {{"t3", "eA2"}, {"eB2", "t5"}}),
      face("G3", "D3", "5", "6", {{"eB1", "t4"}, {"eB2", "t4"}}),
  };
  return doc;
}

// One skeleton circle with two transversal angle saddles p and q joined by the
// two half-circles, plus a cap node pair in each component.
inline SceneDoc build_twin_caps() {
  using namespace fixture_detail;
  SceneDoc doc;
  doc.name = "twin-caps";
  doc.component_ids = {"D1", "D2"};
  doc.points = {
      point("p", {"D1", "D2"},
            {dir("x", 1, 1, {"D1", "D2"}), dir("i1", -1, 1, {"D1"}),
             dir("i2", -2, 1, {"D2"})},
            2, "transversal-saddle"),
      point("q", {"D1", "D2"},
            {dir("x", -1, 1, {"D1", "D2"}), dir("i1", 2, 1, {"D1"}),
             dir("i2", 5, 1, {"D2"})},
            2, "transversal-saddle"),
      point("r1", {"D1"},
            {dir("u1", 1, 1, {"D1"}), dir("u2", 2, 1, {"D1"}), dir_t("tr", 3, 1)},
            3, "node-repeller"),
      point("a1", {"D1"},
            {dir("u1", -1, 1, {"D1"}), dir("u2", -2, 1, {"D1"}),
             dir_t("tr", -3, 1)},
            3, "node-attractor"),
      point("r2", {"D2"},
            {dir("u1", 1, 1, {"D2"}), dir("u2", 2, 1, {"D2"}), dir_t("tr", 3, 1)},
            3, "node-repeller"),
      point("a2", {"D2"},
            {dir("u1", -1, 1, {"D2"}), dir("u2", -2, 1, {"D2"}),
             dir_t("tr", -3, 1)},
            3, "node-attractor"),
  };
  doc.edges = {
      edge("u1", "p", "q", "skeleton", {"D1", "D2"}, "x", "x", {"p+"}, {"q+"}),
      edge("u2", "p", "q", "skeleton", {"D1", "D2"}, "x", "x", {"p-"}, {"q-"}),
      edge("t_a", "r1", "p", "trace", {"D1"}, "u1", "i1", {}, {"p+", "p-"}),
      edge("t_b", "q", "a1", "trace", {"D1"}, "i1", "u1", {"q+", "q-"}),
      edge("t_c", "r2", "p", "trace", {"D2"}, "u1", "i2", {}, {"p+", "p-"}),
      edge("t_d", "q", "a2", "trace", {"D2"}, "i2", "u1", {"q+", "q-"}),
  };
  doc.faces = {
      face("GD1", "D1", "r1", "a1",
           {{"t_a", "u1", "t_b"}, {"t_a", "u2", "t_b"}}),
      face("GD2", "D2", "r2", "a2",
           {{"t_c", "u1", "t_d"}, {"t_c", "u2", "t_d"}}),
  };
  return doc;
}

// Faceless fixture for the transition calculus: a three-edge skeleton chain
// from a transversal saddle p through corners c1 (forward step) and c2
// (inverse step) into a transversal saddle q, resonant by construction.
inline SceneDoc build_chain3() {
  using namespace fixture_detail;
  SceneDoc doc;
  doc.name = "chain3";
  doc.component_ids = {"A", "B", "C", "D"};
  doc.points = {
      point("p", {"A", "B"},
            {dir("x", 1, 1, {"A", "B"}), dir("ia", -1, 1, {"A"}),
             dir("ib", -3, 1, {"B"})},
            2, "transversal-saddle"),
      point("c1", {"A", "B", "C"},
            {dir("ab", -1, 1, {"A", "B"}), dir("ac", 1, 1, {"A", "C"}),
             dir("bc", 6, 1, {"B", "C"})},
            0, "tangential-saddle"),
      point("c2", {"B", "C", "D"},
            {dir("bc", -1, 1, {"B", "C"}), dir("cd", -3, 1, {"C", "D"}),
             dir("bd", 2, 1, {"B", "D"})},
            0, "tangential-saddle"),
      point("q", {"B", "D"},
            {dir("x", -2, 1, {"B", "D"}), dir("ib", 1, 1, {"B"}),
             dir("id", 5, 1, {"D"})},
            2, "transversal-saddle"),
  };
  doc.edges = {
      edge("s0", "p", "c1", "skeleton", {"A", "B"}, "x", "ab", {"p+"}),
      edge("s1", "c1", "c2", "skeleton", {"B", "C"}, "bc", "bc"),
      edge("s2", "c2", "q", "skeleton", {"B", "D"}, "bd", "x", {}, {"q+"}),
  };
  return doc;
}

}  // namespace fitdom
