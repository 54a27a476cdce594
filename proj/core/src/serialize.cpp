#include "starks/serialize.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace starks {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos)
      if (auto q = msg.find(": ", p); q != std::string::npos) msg = msg.substr(q + 2);
    throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col), msg);
  }
}

// Schema access with JSON-pointer diagnostics.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void error(const std::string& what) const { throw FormatError(path_.empty() ? "/" : path_, what); }

  Node at(const std::string& key) const {
    if (!j_.is_object()) error("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) error("missing member \"" + key + "\"");
    return Node(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }
  Node at(std::size_t i) const {
    if (!j_.is_array()) error("expected an array");
    if (i >= j_.size()) error("index " + std::to_string(i) + " out of range");
    return Node(j_[i], path_ + "/" + std::to_string(i));
  }
  std::size_t size() const {
    if (!j_.is_array()) error("expected an array");
    return j_.size();
  }
  long long integer() const {
    if (!j_.is_number_integer()) error("expected an integer");
    return j_.get<long long>();
  }
  int small(long long lo, long long hi) const {
    const long long v = integer();
    if (v < lo || v > hi) error("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
  }
  std::string string() const {
    if (!j_.is_string()) error("expected a string");
    return j_.get<std::string>();
  }
  std::vector<int> ints(long long lo, long long hi) const {
    std::vector<int> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i).small(lo, hi);
    return out;
  }
  Pair pair(int n) const {
    if (size() != 2) error("expected a pair [i, j]");
    const int a = at(0).small(1, n), b = at(1).small(1, n);
    if (a == b) error("pair has equal points");
    return Pair::of(a, b);
  }

 private:
  const json& j_;
  std::string path_;
};

void expect_kind(const Node& root, const std::string& kind) {
  const auto k = root.at("kind").string();
  if (k != kind) root.at("kind").error("expected kind \"" + kind + "\", got \"" + k + "\"");
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

json pair_json(Pair p) { return json::array({p.lo, p.hi}); }

constexpr long long kMaxSize = 1 << 20;

}  // namespace

std::string document_kind(std::string_view text) {
  const json j = parse(text);
  return Node(j, "").at("kind").string();
}

std::string write_gh(const GHMatrix& m) {
  return dump(json{{"kind", "gh"}, {"group_order", m.group_order}, {"lambda", m.lambda}, {"rows", m.rows}});
}

GHMatrix read_gh(std::string_view text) {
  const json j = parse(text);
  const Node root(j, "");
  expect_kind(root, "gh");
  GHMatrix m;
  m.group_order = root.at("group_order").small(1, kMaxSize);
  m.lambda = root.at("lambda").small(1, kMaxSize);
  const Node rows = root.at("rows");
  for (std::size_t i = 0; i < rows.size(); ++i) m.rows.push_back(rows.at(i).ints(0, m.group_order - 1));
  return m;
}

std::string write_shadamard(const SHadamard& s) {
  return dump(json{{"kind", "shadamard"},
                   {"order", s.order},
                   {"root_order", s.root_order},
                   {"normalized", s.normalized},
                   {"rows", s.exponents}});
}

SHadamard read_shadamard(std::string_view text) {
  const json j = parse(text);
  const Node root(j, "");
  expect_kind(root, "shadamard");
  SHadamard s;
  s.root_order = root.at("root_order").small(1, kMaxSize);
  const Node rows = root.at("rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s.exponents.push_back(rows.at(i).ints(0, s.root_order - 1));
    if (s.exponents.back().size() != rows.size()) rows.at(i).error("row length differs from the row count");
  }
  s.order = static_cast<int>(s.exponents.size());
  if (root.has("order") && root.at("order").integer() != s.order) root.at("order").error("order does not match the rows");
  s.normalized = root.has("normalized") && root.at("normalized").raw().is_boolean() && root.at("normalized").raw().get<bool>();
  return s;
}

std::string write_kset(const KSSet& k) {
  json vectors = json::array();
  for (std::size_t i = 0; i < k.vectors.size(); ++i) {
    const CycVector v = k.vectors[i].promoted(k.root_order);
    json entry{{"pair", pair_json(k.labels[i])}};
    if (auto e = v.exponents(); e && k.root_order > 1) {
      entry["exponents"] = *e;
    } else {
      json coeffs = json::array();
      for (std::size_t t = 0; t < v.dim(); ++t) {
        const CycInt x = v.entry(t);
        if (auto z = x.as_integer(); z && z->fits_slong_p()) {
          coeffs.push_back(z->get_si());
        } else {
          json c = json::array();
          for (const auto& b : x.coeffs()) {
            if (!b.fits_slong_p()) throw InvalidArgument("coefficient too large to serialize");
            c.push_back(b.get_si());
          }
          coeffs.push_back(std::move(c));
        }
      }
      entry["coeffs"] = std::move(coeffs);
    }
    vectors.push_back(std::move(entry));
  }
  json bases = json::array();
  for (const auto& b : k.bases) {
    json members = json::array();
    for (auto m : b.members) members.push_back(pair_json(k.labels[m]));
    bases.push_back(std::move(members));
  }
  json out{{"kind", "kset"}, {"n_lines", k.n_lines}, {"dim", k.dim}, {"root_order", k.root_order},
           {"vectors", std::move(vectors)}, {"bases", std::move(bases)}};
  if (!k.notes.empty()) out["notes"] = k.notes;
  return dump(out);
}

KSSet read_kset(std::string_view text) {
  const json j = parse(text);
  const Node root(j, "");
  expect_kind(root, "kset");
  KSSet k;
  k.n_lines = root.at("n_lines").small(2, kMaxSize);
  k.dim = root.at("dim").small(1, kMaxSize);
  k.root_order = root.at("root_order").small(1, kMaxSize);
  const int n = k.root_order;
  const Node vectors = root.at("vectors");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Node item = vectors.at(i);
    const Pair label = item.at("pair").pair(k.n_lines);
    if (k.find(label)) item.at("pair").error("duplicate label " + label.to_string());
    CycVector v;
    if (item.has("exponents")) {
      const Node e = item.at("exponents");
      const auto ex = e.ints(0, n - 1);
      if (ex.size() != static_cast<std::size_t>(k.dim)) e.error("expected " + std::to_string(k.dim) + " entries");
      v = CycVector::from_exponents(n, ex);
    } else if (item.has("coeffs")) {
      const Node c = item.at("coeffs");
      if (c.size() != static_cast<std::size_t>(k.dim)) c.error("expected " + std::to_string(k.dim) + " entries");
      v = CycVector(n, static_cast<std::size_t>(k.dim));
      for (std::size_t t = 0; t < c.size(); ++t) {
        const Node e = c.at(t);
        CycInt x(n);
        if (e.raw().is_array()) {
          if (e.size() != static_cast<std::size_t>(n)) e.error("expected " + std::to_string(n) + " coefficients");
          for (std::size_t s = 0; s < e.size(); ++s) x.add_to_coeff(static_cast<int>(s), BigInt(static_cast<long>(e.at(s).integer())));
        } else {
          x = CycInt::integer(n, BigInt(static_cast<long>(e.integer())));
        }
        v.set_entry(t, x);
      }
    } else {
      item.error("vector needs \"exponents\" or \"coeffs\"");
    }
    k.add(label, std::move(v));
  }
  const Node bases = root.at("bases");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Node b = bases.at(i);
    KSBasis basis;
    std::vector<Pair> members;
    for (std::size_t t = 0; t < b.size(); ++t) {
      const Pair p = b.at(t).pair(k.n_lines);
      const auto idx = k.find(p);
      if (!idx) b.at(t).error("basis member " + p.to_string() + " is not a vector label");
      basis.members.push_back(*idx);
      members.push_back(p);
    }
    // The line is the point common to every member, when there is one.
    if (!members.empty()) {
      for (int c : {members[0].lo, members[0].hi})
        if (std::all_of(members.begin(), members.end(), [c](Pair p) { return p.contains(c); })) basis.line = c;
    }
    k.bases.push_back(std::move(basis));
  }
  if (root.has("notes")) {
    const Node notes = root.at("notes");
    for (std::size_t i = 0; i < notes.size(); ++i) k.notes.push_back(notes.at(i).string());
  }
  return k;
}

std::string write_rbibd(const RBIBD& d) {
  return dump(json{{"kind", "rbibd"}, {"v", d.v}, {"b", d.b}, {"r", d.r}, {"k", d.k},
                   {"lambda", d.lambda}, {"blocks", d.blocks}, {"resolution", d.resolution}});
}

RBIBD read_rbibd(std::string_view text) {
  const json j = parse(text);
  const Node root(j, "");
  expect_kind(root, "rbibd");
  RBIBD d;
  d.v = root.at("v").small(1, kMaxSize);
  d.k = root.at("k").small(1, kMaxSize);
  d.lambda = root.at("lambda").small(1, kMaxSize);
  const Node blocks = root.at("blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) d.blocks.push_back(blocks.at(i).ints(1, d.v));
  d.b = static_cast<int>(d.blocks.size());
  const Node res = root.at("resolution");
  for (std::size_t i = 0; i < res.size(); ++i) {
    const auto idx = res.at(i).ints(0, std::max(0, d.b - 1));
    d.resolution.emplace_back(idx.begin(), idx.end());
  }
  d.r = d.resolution.empty() ? 0 : static_cast<int>(d.resolution.size());
  if (root.has("b") && root.at("b").integer() != d.b) root.at("b").error("b does not match the block count");
  if (root.has("r") && root.at("r").integer() != d.r) root.at("r").error("r does not match the class count");
  return d;
}

std::string write_factorization(const Factorization& f) {
  json edges = json::array();
  for (auto e : f.host.edges) edges.push_back(pair_json(e));
  json factors = json::array();
  for (const auto& fac : f.factors) {
    json e = json::array();
    for (auto p : fac) e.push_back(pair_json(p));
    factors.push_back(std::move(e));
  }
  return dump(json{{"kind", "factorization"}, {"n_vertices", f.host.n_vertices}, {"host_edges", std::move(edges)},
                   {"factors", std::move(factors)}});
}

Factorization read_factorization(std::string_view text) {
  const json j = parse(text);
  const Node root(j, "");
  expect_kind(root, "factorization");
  const int n = root.at("n_vertices").small(1, kMaxSize);
  std::vector<Pair> edges;
  const Node he = root.at("host_edges");
  for (std::size_t i = 0; i < he.size(); ++i) edges.push_back(he.at(i).pair(n));
  Factorization f{SimpleGraph(n, edges), {}};
  const Node factors = root.at("factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Pair> fac;
    for (std::size_t t = 0; t < factors.at(i).size(); ++t) fac.push_back(factors.at(i).at(t).pair(n));
    f.factors.push_back(std::move(fac));
  }
  return f;
}

}  // namespace starks
