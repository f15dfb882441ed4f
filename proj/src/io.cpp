#include "tzeta/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "tzeta/error.hpp"

namespace tzeta {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaViolation, where + ": " + what);
}

ojson int_value(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ojson rat_list(const std::vector<Rat>& v) {
  ojson a = ojson::array();
  for (const Rat& r : v) a.push_back(r.str_pq());
  return a;
}

ojson sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }

ojson cell_json(const GammaCell& c) {
  ojson o;
  ojson signs = ojson::array();
  for (Sign s : c.signs) signs.push_back(sign_text(s));
  o["signs"] = signs;
  ojson eqs = ojson::array();
  for (const auto& e : c.equalities) eqs.push_back({{"coeffs", rat_list(e.coeffs)}, {"rhs", e.rhs.str_pq()}});
  o["equalities"] = eqs;
  ojson st = ojson::array();
  for (const auto& e : c.strict)
    st.push_back({{"coeffs", rat_list(e.coeffs)},
                  {"rhs", e.rhs.str_pq()},
                  {"dir", e.dir == Direction::Less ? "<" : ">"}});
  o["strict"] = st;
  return o;
}

ojson gamma_json(const GammaSet& g) {
  ojson o;
  o["ambient"] = g.ambient;
  ojson cells = ojson::array();
  for (const auto& c : g.cells) cells.push_back(cell_json(c));
  o["cells"] = cells;
  return o;
}

const json& field(const json& o, const char* key, const std::string& where) {
  if (!o.is_object()) schema(where, "expected an object");
  auto it = o.find(key);
  if (it == o.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

BigInt read_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_bigint(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  schema(where, "expected an integer");
}

std::int64_t read_small(const json& v, const std::string& where, std::int64_t lo, std::int64_t hi) {
  BigInt b = read_int(v, where);
  if (b < lo || b > hi) schema(where, "value out of range");
  return static_cast<std::int64_t>(b);
}

Rat read_rat(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rat::parse(v.get<std::string>());
    } catch (const Error&) {
      schema(where, "malformed rational \"" + v.get<std::string>() + "\"");
    }
  }
  if (v.is_number_integer()) return Rat(read_int(v, where));
  schema(where, "expected a rational string \"p/q\"");
}

std::vector<Rat> read_rats(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_array()) schema(where, "expected an array");
  if (v.size() != n) schema(where, "expected " + std::to_string(n) + " coefficients");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_rat(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Sign read_sign(const json& v, const std::string& where) {
  if (v == "+") return Sign::Plus;
  if (v == "-") return Sign::Minus;
  schema(where, "sign must be \"+\" or \"-\"");
}

const json& array_field(const json& o, const char* key, const std::string& where, bool optional = false) {
  static const json empty = json::array();
  if (optional && o.is_object() && !o.contains(key)) return empty;
  const json& a = field(o, key, where);
  if (!a.is_array()) schema(where + "." + key, "expected an array");
  return a;
}

GammaSet read_gamma(const json& o, const std::string& where) {
  GammaSet g;
  g.ambient = static_cast<std::size_t>(read_small(field(o, "ambient", where), where + ".ambient", 0, 64));
  const json& cells = array_field(o, "cells", where);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string cw = where + ".cells[" + std::to_string(i) + "]";
    const json& c = cells[i];
    GammaCell cell;
    cell.ambient = g.ambient;
    const json& signs = array_field(c, "signs", cw);
    if (signs.size() != g.ambient) schema(cw + ".signs", "length must equal ambient");
    for (std::size_t k = 0; k < signs.size(); ++k) cell.signs.push_back(read_sign(signs[k], cw + ".signs"));
    const json& eqs = array_field(c, "equalities", cw, true);
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      std::string ew = cw + ".equalities[" + std::to_string(k) + "]";
      cell.equalities.push_back({read_rats(field(eqs[k], "coeffs", ew), ew + ".coeffs", g.ambient),
                                 read_rat(field(eqs[k], "rhs", ew), ew + ".rhs")});
    }
    const json& st = array_field(c, "strict", cw, true);
    for (std::size_t k = 0; k < st.size(); ++k) {
      std::string sw = cw + ".strict[" + std::to_string(k) + "]";
      const json& d = field(st[k], "dir", sw);
      Direction dir;
      if (d == "<") {
        dir = Direction::Less;
      } else if (d == ">") {
        dir = Direction::Greater;
      } else {
        schema(sw + ".dir", "must be \"<\" or \">\"");
      }
      cell.strict.push_back({read_rats(field(st[k], "coeffs", sw), sw + ".coeffs", g.ambient),
                             read_rat(field(st[k], "rhs", sw), sw + ".rhs"), dir});
    }
    g.cells.push_back(std::move(cell));
  }
  return g;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("invalid JSON: ") + e.what());
  }
}

// Re-raises a validation error with the block index prepended.
template <class F>
void in_block(std::size_t i, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    throw Error(e.kind(), "blocks[" + std::to_string(i) + "].gamma: " + e.what());
  }
}

}  // namespace

std::string dump_presentation(const BlockSum& s) {
  ojson o;
  o["ambient_vf_dim"] = s.ambient_vf_dim;
  if (s.q) o["q"] = s.q->str_pq();
  ojson blocks = ojson::array();
  for (const auto& b : s.blocks) {
    ojson res;
    res["grade"] = b.res.grade;
    res["dim"] = b.res.dim;
    res["euler"] = int_value(b.res.euler);
    res["sign"] = sign_text(b.res.sign);
    res["weight"] = b.res.weight.str_pq();
    blocks.push_back({{"res", res}, {"gamma", gamma_json(b.gamma)}});
  }
  o["blocks"] = blocks;
  return o.dump(2) + "\n";
}

BlockSum parse_presentation(std::string_view text) {
  json o = parse_json(text);
  BlockSum s;
  s.ambient_vf_dim = read_small(field(o, "ambient_vf_dim", "$"), "$.ambient_vf_dim", 0, 64);
  if (o.contains("q")) s.q = read_rat(o["q"], "$.q");
  const json& blocks = array_field(o, "blocks", "$");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string bw = "$.blocks[" + std::to_string(i) + "]";
    const json& r = field(blocks[i], "res", bw);
    std::string rw = bw + ".res";
    Block b;
    b.res.grade = read_small(field(r, "grade", rw), rw + ".grade", 0, 64);
    b.res.dim = read_small(field(r, "dim", rw), rw + ".dim", 0, 64);
    b.res.euler = read_int(field(r, "euler", rw), rw + ".euler");
    b.res.sign = read_sign(field(r, "sign", rw), rw + ".sign");
    b.res.weight = read_rat(field(r, "weight", rw), rw + ".weight");
    if (b.res.dim > b.res.grade) schema(rw, "dim exceeds grade");
    b.gamma = read_gamma(field(blocks[i], "gamma", bw), bw + ".gamma");
    in_block(i, [&] { validate(b.gamma); });
    s.blocks.push_back(std::move(b));
  }
  validate_homogeneous(s);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaViolation, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BlockSum load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

void save_presentation(const std::string& path, const BlockSum& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::SchemaViolation, "cannot write " + path);
  out << dump_presentation(s);
}

std::string dump_gamma_set(const GammaSet& g) { return gamma_json(g).dump(2) + "\n"; }

GammaSet parse_gamma_set(std::string_view text) {
  GammaSet g = read_gamma(parse_json(text), "$");
  validate(g);
  return g;
}

GammaSet load_gamma_set(const std::string& path) { return parse_gamma_set(read_file(path)); }

}  // namespace tzeta
