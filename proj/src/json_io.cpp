#include "mukai_lab/json_io.hpp"

#include <nlohmann/json.hpp>

namespace mukai_lab {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

}  // namespace

json int_to_json(const Int& v) {
  if (v <= kSafeMax && v >= -kSafeMax) {
    return json(static_cast<std::int64_t>(v.get_si()));
  }
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    // Accept "p/q" with q == 1 as an integer.
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Rat q = rat_from_json(j);
      if (q.get_den() != 1) fail(Err::bad_input, "expected an integer");
      return q.get_num();
    }
    return Int(s);
  }
  fail(Err::bad_input, "expected an integer or decimal string");
}

json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return int_to_json(q.get_num());
  return json(q.get_num().get_str() + "/" + q.get_den().get_str());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) {
    Rat q;
    if (q.set_str(j.get<std::string>(), 10) != 0)
      fail(Err::bad_input, "malformed rational");
    if (q.get_den() == 0) fail(Err::bad_input, "zero denominator");
    q.canonicalize();
    return q;
  }
  fail(Err::bad_input, "expected a rational (integer or \"p/q\" string)");
}

json vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec vec_from_json(const json& j) {
  if (!j.is_array()) fail(Err::bad_input, "expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

json to_json(const MukaiElement& v) {
  json j{{"a0", int_to_json(v.a0)},
         {"c1", vec_to_json(v.c1)},
         {"a2", int_to_json(v.a2)}};
  if (!v.trans.empty()) j["trans"] = vec_to_json(v.trans);
  return j;
}

MukaiElement mukai_element_from_json(const SurfaceModel& s, const json& j) {
  if (!j.is_object()) fail(Err::bad_input, "expected a Mukai element object");
  MukaiElement v;
  v.a0 = j.contains("a0") ? int_from_json(j.at("a0")) : Int(0);
  v.a2 = j.contains("a2") ? int_from_json(j.at("a2")) : Int(0);
  v.c1 = j.contains("c1") ? vec_from_json(j.at("c1"))
                          : IntVec(s.picard_rank());
  if (j.contains("trans")) v.trans = vec_from_json(j.at("trans"));
  if (v.c1.size() != s.picard_rank())
    fail(Err::dimension_mismatch, "c1 length does not match Picard rank");
  if (!v.trans.empty() && v.trans.size() != s.trans_rank())
    fail(Err::dimension_mismatch, "trans length does not match surface model");
  return v;
}

namespace {

IntMat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    fail(Err::bad_input, "expected a non-empty matrix");
  const std::size_t n = j.size();
  IntMat m(n, j.at(0).size());
  for (std::size_t i = 0; i < n; ++i) {
    IntVec row = vec_from_json(j.at(i));
    if (row.size() != m.cols()) fail(Err::bad_input, "ragged matrix");
    for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
  }
  return m;
}

json mat_to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

}  // namespace

json to_json(const SurfaceModel& s) {
  json j{{"picard_gram", mat_to_json(s.picard_gram)}};
  if (s.sigma_index) j["sigma"] = *s.sigma_index;
  if (s.c_index) j["c"] = *s.c_index;
  if (s.trans_gram) j["trans_gram"] = mat_to_json(*s.trans_gram);
  return j;
}

SurfaceModel surface_from_json(const json& j) {
  if (!j.is_object()) fail(Err::bad_input, "expected a surface object");
  SurfaceModel s;
  s.picard_gram = mat_from_json(j.at("picard_gram"));
  if (j.contains("sigma")) s.sigma_index = j.at("sigma").get<std::size_t>();
  if (j.contains("c")) s.c_index = j.at("c").get<std::size_t>();
  if (j.contains("trans_gram")) s.trans_gram = mat_from_json(j.at("trans_gram"));
  s.validate();
  return s;
}

json to_json(const HilbClass& h) {
  json j{{"pic", vec_to_json(h.pic)}, {"t", int_to_json(h.t)}};
  if (!h.trans.empty()) j["trans"] = vec_to_json(h.trans);
  if (h.scale != 1) j["scale"] = int_to_json(h.scale);
  return j;
}

HilbClass hilb_from_json(const SurfaceModel& s, const json& j) {
  if (!j.is_object()) fail(Err::bad_input, "expected a Hilbert class object");
  HilbClass h;
  h.pic = j.contains("pic") ? vec_from_json(j.at("pic"))
                            : IntVec(s.picard_rank());
  h.t = j.contains("t") ? int_from_json(j.at("t")) : Int(0);
  if (j.contains("trans"))
    h.trans = vec_from_json(j.at("trans"));
  else
    h.trans = IntVec(s.trans_rank());
  if (j.contains("scale")) h.scale = int_from_json(j.at("scale"));
  if (h.pic.size() != s.picard_rank())
    fail(Err::dimension_mismatch, "pic length does not match Picard rank");
  if (h.trans.size() != s.trans_rank())
    fail(Err::dimension_mismatch, "trans length does not match surface model");
  if (h.scale <= 0) fail(Err::bad_input, "scale must be positive");
  h.reduce();
  return h;
}

json to_json(const WallClass& w) {
  return json{{"x", int_to_json(w.x)},
              {"y", int_to_json(w.y)},
              {"l2", int_to_json(w.l_squared)}};
}

json to_json(const IsometryReport& r) {
  return json{{"r", r.r},
              {"n", r.n},
              {"integral", r.integral},
              {"gram_preserved", r.gram_preserved},
              {"disc_vperp_omega", int_to_json(r.disc_vperp_omega)},
              {"disc_lambda_r", int_to_json(r.disc_lambda_r)},
              {"surjective", r.surjective}};
}

}  // namespace mukai_lab
