#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fitdom/error.hpp"
#include "fitdom/rational.hpp"

namespace fitdom {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Raw declarations, mirroring the JSON wire format.
// ---------------------------------------------------------------------------

struct EigenvalueDecl {
  std::optional<Rat> value;  // absent for sign-only markers (complex pairs)
  int sign = 0;              // +1 or -1, always set
};

struct DirectionDecl {
  std::string id;
  EigenvalueDecl eigenvalue;
  std::vector<std::string> in;  // component ids containing this direction
  bool transversal = false;     // true when the direction leaves the divisor
};

struct PointDecl {
  std::string id;
  std::vector<std::string> components;
  std::vector<DirectionDecl> directions;  // exactly three
  std::optional<int> dim_w;               // declared, cross-checked
  std::string declared_kind;              // optional, cross-checked
};

struct EdgeDecl {
  std::string id;
  std::string alpha;
  std::string omega;
  std::string kind;  // "skeleton" or "trace"
  std::vector<std::string> components;
  std::string alpha_direction;
  std::string omega_direction;
  std::vector<std::string> sides_at_alpha;  // s-component ids, transversal ends only
  std::vector<std::string> sides_at_omega;
};

struct FaceDecl {
  std::string id;
  std::string component;
  std::string alpha;
  std::string omega;
  std::vector<std::vector<std::string>> paths;  // two edge-id paths
  bool exceptional = false;
};

struct SceneDoc {
  int schema = 1;
  std::string name;
  std::vector<std::string> component_ids;
  std::map<std::string, std::string> component_labels;
  std::vector<PointDecl> points;
  std::vector<EdgeDecl> edges;
  std::vector<FaceDecl> faces;
};

// ---------------------------------------------------------------------------
// JSON parsing
// ---------------------------------------------------------------------------

namespace detail {

inline void require_keys(const Json& obj, const std::string& where,
                         const std::vector<std::string>& required,
                         const std::vector<std::string>& optional) {
  if (!obj.is_object())
    raise(ErrorCode::SchemaViolation, where + " must be an object");
  for (const auto& key : required)
    if (!obj.contains(key))
      raise(ErrorCode::SchemaViolation, where + " missing key '" + key + "'");
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      raise(ErrorCode::SchemaViolation, where + " has unknown key '" + key + "'");
  }
}

inline std::string get_string(const Json& obj, const std::string& key,
                              const std::string& where) {
  if (!obj.at(key).is_string())
    raise(ErrorCode::SchemaViolation, where + "." + key + " must be a string");
  return obj.at(key).get<std::string>();
}

inline std::vector<std::string> get_string_array(const Json& value,
                                                 const std::string& where) {
  if (!value.is_array())
    raise(ErrorCode::SchemaViolation, where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string())
      raise(ErrorCode::SchemaViolation, where + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline EigenvalueDecl parse_eigenvalue(const Json& value, const std::string& where) {
  EigenvalueDecl out;
  if (!value.is_object())
    raise(ErrorCode::SchemaViolation, where + " must be an object");
  if (value.contains("sign")) {
    require_keys(value, where, {"sign"}, {});
    const std::string sign = get_string(value, "sign", where);
    if (sign != "+" && sign != "-")
      raise(ErrorCode::SchemaViolation, where + ".sign must be '+' or '-'");
    out.sign = sign == "+" ? 1 : -1;
    return out;
  }
  require_keys(value, where, {"num", "den"}, {});
  if (!value.at("num").is_number_integer() || !value.at("den").is_number_integer())
    raise(ErrorCode::SchemaViolation, where + ".num/.den must be integers");
  const auto num = value.at("num").get<std::int64_t>();
  const auto den = value.at("den").get<std::int64_t>();
  out.value = make_rat(num, den);
  out.sign = sign_of(*out.value);
  return out;
}

}  // namespace detail

inline SceneDoc parse_scene(const Json& root) {
  using detail::get_string;
  using detail::get_string_array;
  using detail::require_keys;

  SceneDoc doc;
  require_keys(root, "scene", {"schema", "components", "points", "edges", "faces"},
               {"name"});
  if (!root.at("schema").is_number_integer() || root.at("schema").get<int>() != 1)
    raise(ErrorCode::SchemaViolation, "unsupported schema version");
  doc.schema = 1;
  if (root.contains("name")) doc.name = get_string(root, "name", "scene");

  for (const auto& comp : root.at("components")) {
    require_keys(comp, "component", {"id"}, {"label"});
    const std::string id = get_string(comp, "id", "component");
    doc.component_ids.push_back(id);
    if (comp.contains("label"))
      doc.component_labels[id] = get_string(comp, "label", "component");
  }

  for (const auto& pt : root.at("points")) {
    require_keys(pt, "point", {"id", "components", "directions"},
                 {"dim_w", "kind"});
    PointDecl p;
    p.id = get_string(pt, "id", "point");
    p.components = get_string_array(pt.at("components"), "point.components");
    for (const auto& dir : pt.at("directions")) {
      require_keys(dir, "direction", {"id", "eigenvalue", "in"}, {});
      DirectionDecl d;
      d.id = get_string(dir, "id", "direction");
      d.eigenvalue = detail::parse_eigenvalue(dir.at("eigenvalue"),
                                              "direction.eigenvalue");
      if (dir.at("in").is_string()) {
        if (dir.at("in").get<std::string>() != "transversal")
          raise(ErrorCode::SchemaViolation,
                "direction.in must be a component list or 'transversal'");
        d.transversal = true;
      } else {
        d.in = get_string_array(dir.at("in"), "direction.in");
      }
      p.directions.push_back(std::move(d));
    }
    if (pt.contains("dim_w")) {
      if (!pt.at("dim_w").is_number_integer())
        raise(ErrorCode::SchemaViolation, "point.dim_w must be an integer");
      p.dim_w = pt.at("dim_w").get<int>();
    }
    if (pt.contains("kind")) p.declared_kind = get_string(pt, "kind", "point");
    doc.points.push_back(std::move(p));
  }

  for (const auto& ed : root.at("edges")) {
    require_keys(ed, "edge",
                 {"id", "alpha", "omega", "kind", "components", "alpha_direction",
                  "omega_direction"},
                 {"sides_at_alpha", "sides_at_omega"});
    EdgeDecl e;
    e.id = get_string(ed, "id", "edge");
    e.alpha = get_string(ed, "alpha", "edge");
    e.omega = get_string(ed, "omega", "edge");
    e.kind = get_string(ed, "kind", "edge");
    if (e.kind != "skeleton" && e.kind != "trace")
      raise(ErrorCode::SchemaViolation, "edge.kind must be 'skeleton' or 'trace'");
    e.components = get_string_array(ed.at("components"), "edge.components");
    e.alpha_direction = get_string(ed, "alpha_direction", "edge");
    e.omega_direction = get_string(ed, "omega_direction", "edge");
    if (ed.contains("sides_at_alpha"))
      e.sides_at_alpha = get_string_array(ed.at("sides_at_alpha"), "edge.sides_at_alpha");
    if (ed.contains("sides_at_omega"))
      e.sides_at_omega = get_string_array(ed.at("sides_at_omega"), "edge.sides_at_omega");
    doc.edges.push_back(std::move(e));
  }

  for (const auto& fc : root.at("faces")) {
    require_keys(fc, "face", {"id", "component", "alpha", "omega"},
                 {"paths", "exceptional"});
    FaceDecl f;
    f.id = get_string(fc, "id", "face");
    f.component = get_string(fc, "component", "face");
    f.alpha = get_string(fc, "alpha", "face");
    f.omega = get_string(fc, "omega", "face");
    if (fc.contains("exceptional")) {
      if (!fc.at("exceptional").is_boolean())
        raise(ErrorCode::SchemaViolation, "face.exceptional must be a boolean");
      f.exceptional = fc.at("exceptional").get<bool>();
    }
    if (fc.contains("paths")) {
      if (!fc.at("paths").is_array())
        raise(ErrorCode::SchemaViolation, "face.paths must be an array");
      for (const auto& path : fc.at("paths"))
        f.paths.push_back(detail::get_string_array(path, "face.paths entry"));
    }
    if (!f.exceptional && f.paths.size() != 2)
      raise(ErrorCode::SchemaViolation,
            "face '" + f.id + "' must declare exactly two boundary paths");
    if (f.exceptional && !f.paths.empty())
      raise(ErrorCode::SchemaViolation,
            "exceptional face '" + f.id + "' must not declare paths");
    doc.faces.push_back(std::move(f));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Serialization (canonical layout; reserializing a parsed document is
// byte-identical, which the CLI relies on for deterministic output).
// ---------------------------------------------------------------------------

inline Json eigenvalue_to_json(const EigenvalueDecl& e) {
  Json out = Json::object();
  if (e.value) {
    out["num"] = boost::multiprecision::numerator(*e.value).convert_to<std::int64_t>();
    out["den"] = boost::multiprecision::denominator(*e.value).convert_to<std::int64_t>();
  } else {
    out["sign"] = e.sign > 0 ? "+" : "-";
  }
  return out;
}

inline Json serialize_scene(const SceneDoc& doc) {
  Json root = Json::object();
  root["schema"] = doc.schema;
  if (!doc.name.empty()) root["name"] = doc.name;
  root["components"] = Json::array();
  for (const auto& id : doc.component_ids) {
    Json comp = Json::object();
    comp["id"] = id;
    const auto label = doc.component_labels.find(id);
    if (label != doc.component_labels.end()) comp["label"] = label->second;
    root["components"].push_back(comp);
  }
  root["points"] = Json::array();
  for (const auto& p : doc.points) {
    Json pt = Json::object();
    pt["id"] = p.id;
    pt["components"] = p.components;
    pt["directions"] = Json::array();
    for (const auto& d : p.directions) {
      Json dir = Json::object();
      dir["id"] = d.id;
      dir["eigenvalue"] = eigenvalue_to_json(d.eigenvalue);
      if (d.transversal)
        dir["in"] = "transversal";
      else
        dir["in"] = d.in;
      pt["directions"].push_back(dir);
    }
    if (p.dim_w) pt["dim_w"] = *p.dim_w;
    if (!p.declared_kind.empty()) pt["kind"] = p.declared_kind;
    root["points"].push_back(pt);
  }
  root["edges"] = Json::array();
  for (const auto& e : doc.edges) {
    Json ed = Json::object();
    ed["id"] = e.id;
    ed["alpha"] = e.alpha;
    ed["omega"] = e.omega;
    ed["kind"] = e.kind;
    ed["components"] = e.components;
    ed["alpha_direction"] = e.alpha_direction;
    ed["omega_direction"] = e.omega_direction;
    if (!e.sides_at_alpha.empty()) ed["sides_at_alpha"] = e.sides_at_alpha;
    if (!e.sides_at_omega.empty()) ed["sides_at_omega"] = e.sides_at_omega;
    root["edges"].push_back(ed);
  }
  root["faces"] = Json::array();
  for (const auto& f : doc.faces) {
    Json fc = Json::object();
    fc["id"] = f.id;
    fc["component"] = f.component;
    fc["alpha"] = f.alpha;
    fc["omega"] = f.omega;
    if (f.exceptional) {
      fc["exceptional"] = true;
    } else {
      fc["paths"] = Json::array();
      for (const auto& path : f.paths) fc["paths"].push_back(path);
    }
    root["faces"].push_back(fc);
  }
  return root;
}

// ---------------------------------------------------------------------------
// Vertex classification
// ---------------------------------------------------------------------------

enum class VertexKind {
  NodeAttractor,
  NodeRepeller,
  SaddleTangential,
  SaddleTransversal,
};

inline std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::NodeAttractor: return "node-attractor";
    case VertexKind::NodeRepeller: return "node-repeller";
    case VertexKind::SaddleTangential: return "tangential-saddle";
    case VertexKind::SaddleTransversal: return "transversal-saddle";
  }
  return "unknown";
}

struct VertexInfo {
  VertexKind kind = VertexKind::NodeAttractor;
  int e = 0;                 // number of divisor components through the point
  bool is_3d_saddle = false; // eigenvalue signs are mixed
  bool w2_stable = false;    // for 3d saddles: both W2 eigenvalues negative
  std::optional<int> dim_w;  // 3 plain node, 1 saddle node, 2 transversal saddle
  std::string w1_direction;              // direction id of W1 (3d saddles)
  std::vector<std::string> w2_directions;  // two direction ids spanning W2
  std::string w2_component;  // tangential saddles: the component equal to W2
  bool w1_in_skeleton = false;  // membership in S' (W1 contained in Sk(D))
  bool w1_in_divisor = false;   // W1 contained in some divisor component
};

inline bool is_node(const VertexInfo& info) {
  return info.kind == VertexKind::NodeAttractor ||
         info.kind == VertexKind::NodeRepeller;
}

inline bool is_saddle(const VertexInfo& info) { return !is_node(info); }

// Classifies one point from its three direction declarations. The layout per
// e = #components is rigid: e=3 three pairwise axes, e=2 one shared axis plus
// one interior direction per component, e=1 two interior directions plus one
// transversal direction.
inline VertexInfo classify_vertex(const PointDecl& p) {
  VertexInfo info;
  info.e = static_cast<int>(p.components.size());
  if (p.directions.size() != 3)
    raise(ErrorCode::SchemaViolation,
          "point '" + p.id + "' must declare exactly three directions");
  for (const auto& d : p.directions)
    if (d.eigenvalue.sign == 0)
      raise(ErrorCode::InconsistentEigenvalueSigns,
            "direction '" + d.id + "' at point '" + p.id +
                "' has a zero eigenvalue");

  const auto in_count = [&](const DirectionDecl& d) {
    return d.transversal ? 0 : static_cast<int>(d.in.size());
  };
  const auto has_comp = [&](const DirectionDecl& d, const std::string& c) {
    return std::find(d.in.begin(), d.in.end(), c) != d.in.end();
  };

  int positive = 0;
  for (const auto& d : p.directions)
    if (d.eigenvalue.sign > 0) ++positive;
  const bool mixed = positive != 0 && positive != 3;
  info.is_3d_saddle = mixed;

  const auto finish_node = [&]() {
    info.kind = positive == 3 ? VertexKind::NodeRepeller : VertexKind::NodeAttractor;
    info.dim_w = 3;
  };

  if (info.e == 3) {
    // Three axes, one per component pair.
    for (const auto& d : p.directions)
      if (in_count(d) != 2)
        raise(ErrorCode::SchemaViolation,
              "corner point '" + p.id + "' needs three two-component axes");
    if (!mixed) {
      finish_node();
      return info;
    }
    // The minority-sign axis is W1; the other two span the component W2.
    const int minority_sign = positive == 1 ? 1 : -1;
    const DirectionDecl* w1 = nullptr;
    for (const auto& d : p.directions)
      if (d.eigenvalue.sign == minority_sign) w1 = &d;
    info.kind = VertexKind::SaddleTangential;
    info.w1_direction = w1->id;
    info.w1_in_skeleton = true;
    info.w1_in_divisor = true;
    for (const auto& d : p.directions)
      if (&d != w1) info.w2_directions.push_back(d.id);
    // W2 is the unique component containing both majority axes.
    for (const auto& c : p.components) {
      bool in_both = true;
      for (const auto& d : p.directions)
        if (&d != w1 && !has_comp(d, c)) in_both = false;
      if (in_both) info.w2_component = c;
    }
    if (info.w2_component.empty())
      raise(ErrorCode::InconsistentEigenvalueSigns,
            "corner point '" + p.id + "' has no component spanned by the "
            "majority axes");
    return info;
  }

  if (info.e == 2) {
    const DirectionDecl* axis = nullptr;
    const DirectionDecl* di = nullptr;
    const DirectionDecl* dj = nullptr;
    for (const auto& d : p.directions) {
      if (in_count(d) == 2) axis = &d;
      else if (in_count(d) == 1 && has_comp(d, p.components[0])) di = &d;
      else if (in_count(d) == 1 && has_comp(d, p.components[1])) dj = &d;
    }
    if (!axis || !di || !dj)
      raise(ErrorCode::SchemaViolation,
            "angle point '" + p.id +
                "' needs one shared axis and one direction per component");
    if (!mixed) {
      finish_node();
      return info;
    }
    info.w1_in_divisor = true;
    if (di->eigenvalue.sign == dj->eigenvalue.sign) {
      // Axis is the minority: transversal angle saddle, W2 leaves the divisor.
      if (axis->eigenvalue.sign == di->eigenvalue.sign)
        raise(ErrorCode::InconsistentEigenvalueSigns,
              "angle point '" + p.id + "' has no minority direction");
      info.kind = VertexKind::SaddleTransversal;
      info.dim_w = 2;
      info.w1_direction = axis->id;
      info.w1_in_skeleton = true;
      info.w2_directions = {di->id, dj->id};
      info.w2_stable = di->eigenvalue.sign < 0;
      return info;
    }
    // One interior direction is the minority: tangential angle saddle.
    const DirectionDecl* w1 = di->eigenvalue.sign == axis->eigenvalue.sign ? dj : di;
    const DirectionDecl* other = w1 == di ? dj : di;
    info.kind = VertexKind::SaddleTangential;
    info.w1_direction = w1->id;
    info.w1_in_skeleton = false;
    info.w2_directions = {axis->id, other->id};
    info.w2_component = other->in.front();
    return info;
  }

  if (info.e == 1) {
    const DirectionDecl* trans = nullptr;
    std::vector<const DirectionDecl*> plane;
    for (const auto& d : p.directions) {
      if (d.transversal) trans = &d;
      else if (in_count(d) == 1 && has_comp(d, p.components[0])) plane.push_back(&d);
    }
    if (!trans || plane.size() != 2)
      raise(ErrorCode::SchemaViolation,
            "interior point '" + p.id +
                "' needs two in-component directions and one transversal");
    if (!mixed) {
      finish_node();
      return info;
    }
    if (plane[0]->eigenvalue.sign != plane[1]->eigenvalue.sign) {
      // Restriction saddle: W1 is the minority in-plane direction, W2 is the
      // transversal plane spanned by the other in-plane direction and the
      // transversal one (their signs must agree).
      const DirectionDecl* w1 =
          plane[0]->eigenvalue.sign == trans->eigenvalue.sign ? plane[1] : plane[0];
      const DirectionDecl* other = w1 == plane[0] ? plane[1] : plane[0];
      if (other->eigenvalue.sign != trans->eigenvalue.sign)
        raise(ErrorCode::InconsistentEigenvalueSigns,
              "interior point '" + p.id + "' has no coherent stable splitting");
      info.kind = VertexKind::SaddleTransversal;
      info.dim_w = 2;
      info.w1_direction = w1->id;
      info.w1_in_skeleton = false;
      info.w1_in_divisor = true;
      info.w2_directions = {other->id, trans->id};
      info.w2_stable = other->eigenvalue.sign < 0;
      return info;
    }
    // Restriction node; mixed signs mean the transversal direction is W1.
    // The node type follows the restriction, where both in-plane signs agree.
    info.kind = plane[0]->eigenvalue.sign > 0 ? VertexKind::NodeRepeller
                                              : VertexKind::NodeAttractor;
    info.dim_w = 1;
    info.w1_direction = trans->id;
    info.w1_in_skeleton = false;
    info.w1_in_divisor = false;
    info.w2_directions = {plane[0]->id, plane[1]->id};
    info.w2_stable = plane[0]->eigenvalue.sign < 0;
    return info;
  }

  raise(ErrorCode::SchemaViolation,
        "point '" + p.id + "' must lie in one, two, or three components");
}

// ---------------------------------------------------------------------------
// Indexed scene
// ---------------------------------------------------------------------------

struct SComponent {
  std::string id;      // "p" or "p+" / "p-"
  std::string point;   // owning point id
  int side = 0;        // 0 single, +1 / -1 for transversal saddle sides
};

struct Scene {
  SceneDoc doc;
  std::map<std::string, std::size_t> component_index;
  std::map<std::string, std::size_t> point_index;
  std::map<std::string, std::size_t> edge_index;
  std::map<std::string, std::size_t> face_index;
  // Classification per point, in point order. Absent entries record the
  // failure message so validators can report instead of throwing.
  std::vector<std::optional<VertexInfo>> vertex_info;
  std::vector<std::string> vertex_info_error;
  std::vector<SComponent> s_components;
  std::map<std::string, std::size_t> s_component_index;
  std::vector<std::vector<std::size_t>> out_edges;  // per point, edge indices
  std::vector<std::vector<std::size_t>> in_edges;

  const PointDecl& point(const std::string& id) const {
    const auto it = point_index.find(id);
    if (it == point_index.end())
      raise(ErrorCode::DanglingReference, "unknown point '" + id + "'");
    return doc.points[it->second];
  }
  const EdgeDecl& edge(const std::string& id) const {
    const auto it = edge_index.find(id);
    if (it == edge_index.end())
      raise(ErrorCode::DanglingReference, "unknown edge '" + id + "'");
    return doc.edges[it->second];
  }
  const FaceDecl& face(const std::string& id) const {
    const auto it = face_index.find(id);
    if (it == face_index.end())
      raise(ErrorCode::DanglingReference, "unknown face '" + id + "'");
    return doc.faces[it->second];
  }
  const VertexInfo& info(const std::string& point_id) const {
    const auto it = point_index.find(point_id);
    if (it == point_index.end())
      raise(ErrorCode::DanglingReference, "unknown point '" + point_id + "'");
    if (!vertex_info[it->second])
      raise(ErrorCode::InconsistentEigenvalueSigns,
            "point '" + point_id + "' is unclassifiable: " +
                vertex_info_error[it->second]);
    return *vertex_info[it->second];
  }
  const SComponent& s_component(const std::string& id) const {
    const auto it = s_component_index.find(id);
    if (it == s_component_index.end())
      raise(ErrorCode::DanglingReference, "unknown s-component '" + id + "'");
    return s_components[it->second];
  }
  const DirectionDecl& direction(const std::string& point_id,
                                 const std::string& dir_id) const {
    for (const auto& d : point(point_id).directions)
      if (d.id == dir_id) return d;
    raise(ErrorCode::DanglingReference,
          "unknown direction '" + dir_id + "' at point '" + point_id + "'");
  }
  bool has_info(const std::string& point_id) const {
    const auto it = point_index.find(point_id);
    return it != point_index.end() && vertex_info[it->second].has_value();
  }
};

inline Scene build_scene(const SceneDoc& doc) {
  Scene scene;
  scene.doc = doc;

  for (std::size_t i = 0; i < doc.component_ids.size(); ++i) {
    if (!scene.component_index.emplace(doc.component_ids[i], i).second)
      raise(ErrorCode::DuplicateId, "component '" + doc.component_ids[i] + "'");
  }
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    const auto& p = doc.points[i];
    if (!scene.point_index.emplace(p.id, i).second)
      raise(ErrorCode::DuplicateId, "point '" + p.id + "'");
    std::set<std::string> dir_ids;
    for (const auto& d : p.directions) {
      if (!dir_ids.insert(d.id).second)
        raise(ErrorCode::DuplicateId,
              "direction '" + d.id + "' at point '" + p.id + "'");
      for (const auto& c : d.in) {
        if (!scene.component_index.count(c))
          raise(ErrorCode::DanglingReference,
                "direction '" + d.id + "' references component '" + c + "'");
        if (std::find(p.components.begin(), p.components.end(), c) ==
            p.components.end())
          raise(ErrorCode::SchemaViolation,
                "direction '" + d.id + "' lies in component '" + c +
                    "' not listed at point '" + p.id + "'");
      }
    }
    for (const auto& c : p.components)
      if (!scene.component_index.count(c))
        raise(ErrorCode::DanglingReference,
              "point '" + p.id + "' references component '" + c + "'");
  }
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    if (!scene.edge_index.emplace(e.id, i).second)
      raise(ErrorCode::DuplicateId, "edge '" + e.id + "'");
    if (!scene.point_index.count(e.alpha))
      raise(ErrorCode::DanglingReference,
            "edge '" + e.id + "' starts at unknown point '" + e.alpha + "'");
    if (!scene.point_index.count(e.omega))
      raise(ErrorCode::DanglingReference,
            "edge '" + e.id + "' ends at unknown point '" + e.omega + "'");
    for (const auto& c : e.components)
      if (!scene.component_index.count(c))
        raise(ErrorCode::DanglingReference,
              "edge '" + e.id + "' references component '" + c + "'");
    if ((e.kind == "skeleton") != (e.components.size() == 2))
      raise(ErrorCode::SchemaViolation,
            "edge '" + e.id + "' kind disagrees with its component count");
    if (e.components.empty() || e.components.size() > 2)
      raise(ErrorCode::SchemaViolation,
            "edge '" + e.id + "' must lie in one or two components");
  }
  for (std::size_t i = 0; i < doc.faces.size(); ++i) {
    const auto& f = doc.faces[i];
    if (!scene.face_index.emplace(f.id, i).second)
      raise(ErrorCode::DuplicateId, "face '" + f.id + "'");
    if (!scene.component_index.count(f.component))
      raise(ErrorCode::DanglingReference,
            "face '" + f.id + "' references component '" + f.component + "'");
    for (const auto& pid : {f.alpha, f.omega})
      if (!scene.point_index.count(pid))
        raise(ErrorCode::DanglingReference,
              "face '" + f.id + "' references point '" + pid + "'");
    for (const auto& path : f.paths)
      for (const auto& eid : path)
        if (!scene.edge_index.count(eid))
          raise(ErrorCode::DanglingReference,
                "face '" + f.id + "' references edge '" + eid + "'");
  }

  scene.vertex_info.resize(doc.points.size());
  scene.vertex_info_error.resize(doc.points.size());
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    try {
      scene.vertex_info[i] = classify_vertex(doc.points[i]);
    } catch (const Error& err) {
      scene.vertex_info_error[i] = err.what();
    }
  }

  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    const auto& p = doc.points[i];
    const auto& info = scene.vertex_info[i];
    if (info && info->kind == VertexKind::SaddleTransversal) {
      scene.s_components.push_back({p.id + "+", p.id, +1});
      scene.s_components.push_back({p.id + "-", p.id, -1});
    } else {
      scene.s_components.push_back({p.id, p.id, 0});
    }
  }
  for (std::size_t i = 0; i < scene.s_components.size(); ++i) {
    if (!scene.s_component_index.emplace(scene.s_components[i].id, i).second)
      raise(ErrorCode::DuplicateId,
            "s-component '" + scene.s_components[i].id + "'");
  }

  scene.out_edges.resize(doc.points.size());
  scene.in_edges.resize(doc.points.size());
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    scene.out_edges[scene.point_index.at(e.alpha)].push_back(i);
    scene.in_edges[scene.point_index.at(e.omega)].push_back(i);
    // Direction references must resolve.
    scene.direction(e.alpha, e.alpha_direction);
    scene.direction(e.omega, e.omega_direction);
    for (const auto& side : e.sides_at_alpha)
      if (!scene.s_component_index.count(side))
        raise(ErrorCode::DanglingReference,
              "edge '" + e.id + "' side '" + side + "'");
    for (const auto& side : e.sides_at_omega)
      if (!scene.s_component_index.count(side))
        raise(ErrorCode::DanglingReference,
              "edge '" + e.id + "' side '" + side + "'");
  }
  return scene;
}

// The s-components an edge germ touches at the given endpoint. Transversal
// saddle endpoints must carry declared side data; everywhere else the point's
// unique s-component is returned.
inline std::vector<std::string> germ_sides(const Scene& scene, const EdgeDecl& edge,
                                           bool at_alpha) {
  const std::string& pid = at_alpha ? edge.alpha : edge.omega;
  const auto& declared = at_alpha ? edge.sides_at_alpha : edge.sides_at_omega;
  const auto& info = scene.info(pid);
  if (info.kind != VertexKind::SaddleTransversal) {
    if (!declared.empty())
      raise(ErrorCode::SchemaViolation,
            "edge '" + edge.id + "' declares sides at non-transversal point '" +
                pid + "'");
    return {pid};
  }
  if (declared.empty())
    raise(ErrorCode::AmbiguousSide,
          "edge '" + edge.id + "' needs side data at transversal point '" + pid +
              "'");
  for (const auto& side : declared)
    if (scene.s_component(side).point != pid)
      raise(ErrorCode::AmbiguousSide,
            "edge '" + edge.id + "' side '" + side + "' belongs to another point");
  return declared;
}

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

inline SceneDoc load_scene_text(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const std::exception& ex) {
    raise(ErrorCode::SchemaViolation, std::string("invalid JSON: ") + ex.what());
  }
  return parse_scene(root);
}

inline SceneDoc load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    raise(ErrorCode::SchemaViolation, "cannot open scene file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_scene_text(buffer.str());
}

inline std::string dump_scene(const SceneDoc& doc) {
  return serialize_scene(doc).dump(2) + "\n";
}

}  // namespace fitdom
