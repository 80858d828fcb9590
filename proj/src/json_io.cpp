#include "dendro/json_io.hpp"

#include <fstream>
#include <functional>
#include <stdexcept>

namespace dendro {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw ParseError(what);
}

// Nested-array view of a flat row-major tensor.
Json tensor_to_json(const std::vector<Rational>& data, const std::vector<int>& shape) {
  std::function<Json(int, int)> rec = [&](int level, int offset) {
    Json out = Json::array();
    int stride = 1;
    for (size_t t = level + 1; t < shape.size(); ++t) stride *= shape[t];
    for (int i = 0; i < shape[level]; ++i) {
      if (level + 1 == static_cast<int>(shape.size())) {
        out.push_back(rational_to_json(data[offset + i]));
      } else {
        out.push_back(rec(level + 1, offset + i * stride));
      }
    }
    return out;
  };
  if (shape.empty()) return Json::array();
  return rec(0, 0);
}

std::vector<Rational> tensor_from_json(const Json& j, const std::vector<int>& shape) {
  int total = 1;
  for (int s : shape) total *= s;
  std::vector<Rational> data(total, Rational(0));
  std::function<void(const Json&, int, int)> rec = [&](const Json& node, int level, int offset) {
    require(node.is_array() && static_cast<int>(node.size()) == shape[level],
            "tensor shape mismatch");
    int stride = 1;
    for (size_t t = level + 1; t < shape.size(); ++t) stride *= shape[t];
    for (int i = 0; i < shape[level]; ++i) {
      if (level + 1 == static_cast<int>(shape.size())) {
        data[offset + i] = rational_from_json(node[i]);
      } else {
        rec(node[i], level + 1, offset + i * stride);
      }
    }
  };
  if (!shape.empty()) rec(j, 0, 0);
  return data;
}

int get_int(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_integer(), "missing integer field");
  return j[key].get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "rational must be a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw ParseError("malformed rational " + j.get<std::string>());
  }
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  require(j.is_array(), "matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = 0;
  if (rows > 0) {
    require(j[0].is_array(), "matrix row must be an array");
    cols = static_cast<int>(j[0].size());
  }
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    require(j[i].is_array() && static_cast<int>(j[i].size()) == cols, "ragged matrix");
    for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

Json multimap_to_json(const MultiMap& f) {
  Json j;
  j["arity"] = f.arity();
  j["dim_in"] = f.dim_in();
  j["dim_out"] = f.dim_out();
  Json comps = Json::array();
  for (int label = 1; label <= f.arity(); ++label) {
    Json block = Json::array();
    for (int out = 0; out < f.dim_out(); ++out) {
      Json row = Json::array();
      for (int t = 0; t < f.tuples(); ++t) row.push_back(rational_to_json(f.coeff(label, out, t)));
      block.push_back(std::move(row));
    }
    comps.push_back(std::move(block));
  }
  j["components"] = std::move(comps);
  return j;
}

MultiMap multimap_from_json(const Json& j) {
  const int arity = get_int(j, "arity");
  const int dim_in = get_int(j, "dim_in");
  const int dim_out = get_int(j, "dim_out");
  require(arity >= 1 && dim_in >= 0 && dim_out >= 0, "bad multimap header");
  MultiMap f(arity, dim_in, dim_out);
  require(j.contains("components") && j["components"].is_array() &&
              static_cast<int>(j["components"].size()) == arity,
          "components must hold one tensor per label");
  for (int label = 1; label <= arity; ++label) {
    const Json& block = j["components"][label - 1];
    require(block.is_array() && static_cast<int>(block.size()) == dim_out,
            "component tensor shape mismatch");
    for (int out = 0; out < dim_out; ++out) {
      const Json& row = block[out];
      require(row.is_array() && static_cast<int>(row.size()) == f.tuples(),
              "component tensor shape mismatch");
      for (int t = 0; t < f.tuples(); ++t) f.coeff(label, out, t) = rational_from_json(row[t]);
    }
  }
  return f;
}

Json algebra_to_json(const DendriformAlgebra& a) {
  const int d = a.dim();
  Json j;
  j["dim"] = d;
  j["prec"] = tensor_to_json(a.prec_tensor(), {d, d, d});
  j["succ"] = tensor_to_json(a.succ_tensor(), {d, d, d});
  return j;
}

DendriformAlgebra algebra_from_json(const Json& j) {
  const int d = get_int(j, "dim");
  require(d >= 0 && j.contains("prec") && j.contains("succ"), "bad algebra record");
  return DendriformAlgebra(d, tensor_from_json(j["prec"], {d, d, d}),
                           tensor_from_json(j["succ"], {d, d, d}));
}

Json assoc_to_json(const AssociativeAlgebra& a) {
  const int d = a.dim();
  Json j;
  j["dim"] = d;
  j["mult"] = tensor_to_json(a.mult_tensor(), {d, d, d});
  return j;
}

AssociativeAlgebra assoc_from_json(const Json& j) {
  const int d = get_int(j, "dim");
  require(d >= 0 && j.contains("mult"), "bad associative algebra record");
  return AssociativeAlgebra(d, tensor_from_json(j["mult"], {d, d, d}));
}

Json representation_to_json(const Representation& r) {
  const int da = r.dim_a(), dm = r.dim_m();
  Json j;
  j["dim_a"] = da;
  j["dim_m"] = dm;
  j["theta1_prec"] = tensor_to_json(r.tensor(0), {da, dm, dm});
  j["theta1_succ"] = tensor_to_json(r.tensor(1), {da, dm, dm});
  j["theta2_prec"] = tensor_to_json(r.tensor(2), {dm, da, dm});
  j["theta2_succ"] = tensor_to_json(r.tensor(3), {dm, da, dm});
  return j;
}

Representation representation_from_json(const Json& j) {
  const int da = get_int(j, "dim_a");
  const int dm = get_int(j, "dim_m");
  require(da >= 0 && dm >= 0, "bad representation header");
  for (const char* key : {"theta1_prec", "theta1_succ", "theta2_prec", "theta2_succ"})
    require(j.contains(key), "representation tensor missing");
  return Representation(da, dm, tensor_from_json(j["theta1_prec"], {da, dm, dm}),
                        tensor_from_json(j["theta1_succ"], {da, dm, dm}),
                        tensor_from_json(j["theta2_prec"], {dm, da, dm}),
                        tensor_from_json(j["theta2_succ"], {dm, da, dm}));
}

Json deformation_to_json(const TruncatedDeformation& d) {
  Json j;
  j["algebra"] = algebra_to_json(d.algebra);
  j["order"] = d.order;
  Json terms = Json::array();
  for (const MultiMap& t : d.terms) terms.push_back(multimap_to_json(t));
  j["terms"] = std::move(terms);
  return j;
}

TruncatedDeformation deformation_from_json(const Json& j) {
  require(j.contains("algebra"), "deformation needs an algebra");
  DendriformAlgebra a = algebra_from_json(j["algebra"]);
  const int order = get_int(j, "order");
  require(order >= 0 && j.contains("terms") && j["terms"].is_array() &&
              static_cast<int>(j["terms"].size()) == order,
          "terms must hold pi_1 .. pi_N");
  std::vector<MultiMap> terms;
  for (const Json& t : j["terms"]) {
    MultiMap f = multimap_from_json(t);
    require(f.arity() == 2 && f.dim_in() == a.dim() && f.dim_out() == a.dim(),
            "deformation term shape mismatch");
    terms.push_back(std::move(f));
  }
  return TruncatedDeformation{std::move(a), order, std::move(terms)};
}

namespace {

// Shared graded (de)serialization; r = 0 marks the unlabelled A-infinity case.
void emit_graded_op(Json& ops, const GradedSpace& space, const GradedOp& op, int k, int r) {
  const int degs = space.top_degree() + 1;
  std::vector<int> deg_tuple(k, 0);
  do {
    int out_deg = op.degree;
    bool empty = false;
    for (int d : deg_tuple) {
      out_deg += d;
      if (space.dims[d] == 0) empty = true;
    }
    if (empty || out_deg < 0 || out_deg > space.top_degree() || space.dims[out_deg] == 0) continue;
    // row-major local tuple -> global tuple index
    std::vector<int> local(k, 0);
    std::vector<int> cols;
    do {
      std::vector<int> global(k);
      for (int t = 0; t < k; ++t) global[t] = space.offset(deg_tuple[t]) + local[t];
      cols.push_back(op.tuple_index(global));
      for (int t = k - 1; t >= 0; --t) {
        if (++local[t] < space.dims[deg_tuple[t]]) break;
        local[t] = 0;
        if (t == 0) local.clear();
      }
    } while (!local.empty());
    bool nonzero = false;
    Json tensor = Json::array();
    for (int o = 0; o < space.dims[out_deg]; ++o) {
      Json row = Json::array();
      for (int c : cols) {
        const Rational& v = op.at(space.offset(out_deg) + o, c);
        if (v != 0) nonzero = true;
        row.push_back(rational_to_json(v));
      }
      tensor.push_back(std::move(row));
    }
    if (!nonzero) continue;
    Json entry;
    entry["k"] = k;
    if (r > 0) entry["label"] = r;
    entry["deg_in"] = deg_tuple;
    entry["tensor"] = std::move(tensor);
    ops.push_back(std::move(entry));
  } while (next_tuple(deg_tuple, degs));
}

void absorb_graded_op(GradedOp& op, const GradedSpace& space, const Json& entry) {
  const int k = op.arity;
  require(entry.contains("deg_in") && entry["deg_in"].is_array() &&
              static_cast<int>(entry["deg_in"].size()) == k,
          "deg_in must list one degree per input");
  std::vector<int> deg_tuple = entry["deg_in"].get<std::vector<int>>();
  int out_deg = op.degree;
  int block = 1;
  for (int d : deg_tuple) {
    require(d >= 0 && d <= space.top_degree(), "deg_in out of range");
    out_deg += d;
    block *= space.dims[d];
  }
  require(out_deg >= 0 && out_deg <= space.top_degree(), "block output degree out of range");
  std::vector<Rational> data =
      tensor_from_json(entry.at("tensor"), {space.dims[out_deg], block});
  std::vector<int> local(k, 0);
  int col = 0;
  do {
    std::vector<int> global(k);
    for (int t = 0; t < k; ++t) global[t] = space.offset(deg_tuple[t]) + local[t];
    const int tuple = op.tuple_index(global);
    for (int o = 0; o < space.dims[out_deg]; ++o)
      op.at(space.offset(out_deg) + o, tuple) = data[o * block + col];
    ++col;
    for (int t = k - 1; t >= 0; --t) {
      if (++local[t] < space.dims[deg_tuple[t]]) break;
      local[t] = 0;
      if (t == 0) local.clear();
    }
  } while (!local.empty());
}

GradedSpace space_from_json(const Json& j) {
  require(j.contains("dims") && j["dims"].is_array(), "graded system needs dims");
  GradedSpace space{j["dims"].get<std::vector<int>>()};
  for (int d : space.dims) require(d >= 0, "negative dimension");
  require(!space.dims.empty(), "dims must be nonempty");
  return space;
}

}  // namespace

namespace {

// Intrinsic degree per arity; -2 shift for honest systems, constant -1 after
// suspension.
Json op_degrees_json(int bound, const std::function<int(int)>& deg_of) {
  Json degs = Json::array();
  for (int k = 1; k <= bound; ++k) degs.push_back(deg_of(k));
  return degs;
}

std::vector<int> op_degrees_from_json(const Json& j, int bound) {
  require(j.contains("op_degrees") && j["op_degrees"].is_array() &&
              static_cast<int>(j["op_degrees"].size()) == bound,
          "op_degrees must list one degree per arity");
  return j["op_degrees"].get<std::vector<int>>();
}

}  // namespace

Json graded_dend_to_json(const GradedDendSystem& s) {
  Json j;
  j["dims"] = s.space.dims;
  j["arity_bound"] = s.arity_bound;
  j["op_degrees"] = op_degrees_json(s.arity_bound, [&](int k) { return s.op(k, 1).degree; });
  Json ops = Json::array();
  for (int k = 1; k <= s.arity_bound; ++k)
    for (int r = 1; r <= k; ++r) emit_graded_op(ops, s.space, s.op(k, r), k, r);
  j["ops"] = std::move(ops);
  return j;
}

GradedDendSystem graded_dend_from_json(const Json& j) {
  GradedSpace space = space_from_json(j);
  const int bound = get_int(j, "arity_bound");
  require(bound >= 1, "arity_bound must be positive");
  GradedDendSystem s = GradedDendSystem::zero(std::move(space), bound);
  const std::vector<int> degs = op_degrees_from_json(j, bound);
  for (int k = 1; k <= bound; ++k)
    if (degs[k - 1] != s.op(k, 1).degree)
      for (int r = 1; r <= k; ++r) s.op(k, r) = GradedOp(k, degs[k - 1], s.space.total());
  require(j.contains("ops") && j["ops"].is_array(), "graded system needs ops");
  for (const Json& entry : j["ops"]) {
    const int k = get_int(entry, "k");
    const int r = get_int(entry, "label");
    require(k >= 1 && k <= bound && r >= 1 && r <= k, "op (k, label) out of range");
    absorb_graded_op(s.op(k, r), s.space, entry);
  }
  return s;
}

Json graded_ainf_to_json(const GradedAInfSystem& s) {
  Json j;
  j["dims"] = s.space.dims;
  j["arity_bound"] = s.arity_bound;
  j["op_degrees"] = op_degrees_json(s.arity_bound, [&](int k) { return s.op(k).degree; });
  Json ops = Json::array();
  for (int k = 1; k <= s.arity_bound; ++k) emit_graded_op(ops, s.space, s.op(k), k, 0);
  j["ops"] = std::move(ops);
  return j;
}

GradedAInfSystem graded_ainf_from_json(const Json& j) {
  GradedSpace space = space_from_json(j);
  const int bound = get_int(j, "arity_bound");
  require(bound >= 1, "arity_bound must be positive");
  GradedAInfSystem s = GradedAInfSystem::zero(std::move(space), bound);
  const std::vector<int> degs = op_degrees_from_json(j, bound);
  for (int k = 1; k <= bound; ++k)
    if (degs[k - 1] != s.op(k).degree) s.op(k) = GradedOp(k, degs[k - 1], s.space.total());
  require(j.contains("ops") && j["ops"].is_array(), "graded system needs ops");
  for (const Json& entry : j["ops"]) {
    const int k = get_int(entry, "k");
    require(k >= 1 && k <= bound, "op arity out of range");
    require(!entry.contains("label"), "A-infinity ops carry no label");
    absorb_graded_op(s.op(k), s.space, entry);
  }
  return s;
}

Json two_term_to_json(const TwoTermDend& t) {
  const int d0 = t.dim0, d1 = t.dim1;
  Json j;
  j["dim0"] = d0;
  j["dim1"] = d1;
  j["d"] = matrix_to_json(t.d);
  j["mu2_00"] = tensor_to_json(t.mu2_00, {2, d0, d0, d0});
  j["mu2_01"] = tensor_to_json(t.mu2_01, {2, d0, d1, d1});
  j["mu2_10"] = tensor_to_json(t.mu2_10, {2, d1, d0, d1});
  j["mu3"] = tensor_to_json(t.mu3, {3, d0, d0, d0, d1});
  return j;
}

TwoTermDend two_term_from_json(const Json& j) {
  const int d0 = get_int(j, "dim0");
  const int d1 = get_int(j, "dim1");
  require(d0 >= 0 && d1 >= 0, "bad two-term header");
  TwoTermDend t = TwoTermDend::zero(d0, d1);
  require(j.contains("d"), "two-term record needs d");
  RationalMatrix d = matrix_from_json(j["d"]);
  require(d.rows() == d0 && d.cols() == d1, "d shape mismatch");
  t.d = std::move(d);
  t.mu2_00 = tensor_from_json(j.at("mu2_00"), {2, d0, d0, d0});
  t.mu2_01 = tensor_from_json(j.at("mu2_01"), {2, d0, d1, d1});
  t.mu2_10 = tensor_from_json(j.at("mu2_10"), {2, d1, d0, d1});
  t.mu3 = tensor_from_json(j.at("mu3"), {3, d0, d0, d0, d1});
  return t;
}

Json crossed_module_to_json(const CrossedModule& x) {
  Json j;
  j["a"] = algebra_to_json(x.a);
  j["b"] = algebra_to_json(x.b);
  j["dt"] = matrix_to_json(x.dt);
  j["rep"] = representation_to_json(x.rep);
  return j;
}

CrossedModule crossed_module_from_json(const Json& j) {
  require(j.contains("a") && j.contains("b") && j.contains("dt") && j.contains("rep"),
          "crossed module record incomplete");
  DendriformAlgebra a = algebra_from_json(j["a"]);
  DendriformAlgebra b = algebra_from_json(j["b"]);
  RationalMatrix dt = matrix_from_json(j["dt"]);
  Representation rep = representation_from_json(j["rep"]);
  require(dt.rows() == b.dim() && dt.cols() == a.dim(), "dt shape mismatch");
  require(rep.dim_a() == b.dim() && rep.dim_m() == a.dim(), "action shape mismatch");
  return CrossedModule{std::move(a), std::move(b), std::move(dt), std::move(rep)};
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["ok"] = r.ok;
  Json fails = Json::array();
  for (const IdentityFailure& f : r.failures) {
    Json entry;
    entry["identity"] = f.identity;
    entry["basis"] = f.basis;
    Json res = Json::array();
    for (int i = 0; i < f.residual.size(); ++i) res.push_back(rational_to_json(f.residual(i)));
    entry["residual"] = std::move(res);
    fails.push_back(std::move(entry));
  }
  j["failures"] = std::move(fails);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parse error in ") + path + ": " + e.what());
  }
  return j;
}

}  // namespace dendro
