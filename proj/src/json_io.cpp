#include "triqubit/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace triqubit {

namespace {

Json complex_to_json(cd z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const Matrix2cd& m) {
  // Row-major [[re, im] x 4].
  Json a = Json::array();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) a.push_back(complex_to_json(m(i, j)));
  }
  return a;
}

Json vector_to_json(const Vector2cd& v) {
  return Json::array({complex_to_json(v(0)), complex_to_json(v(1))});
}

cd json_to_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw InputError("amplitude entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Keep a uniform spelling for integral values.
  if (s.find_first_of(".eEnN") == std::string::npos) s += ".0";
  return s;
}

void dump_rec(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump_rec(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_rec(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

void table_rec(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string next =
          prefix.empty() ? it.key() : prefix + "." + it.key();
      table_rec(it.value(), next, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      table_rec(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out += prefix;
    out += " = ";
    if (j.is_number_float()) {
      out += format_double(j.get<double>());
    } else {
      out += j.dump();
    }
    out += '\n';
  }
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

int state_arity(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("state file needs an integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n != 3 && n != 4) {
    throw InputError("only n = 3 and n = 4 states are supported");
  }
  return n;
}

namespace {

template <std::size_t N>
std::array<cd, N> read_amplitudes(const Json& j) {
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
    throw InputError("state file needs an \"amplitudes\" array");
  }
  const Json& a = j["amplitudes"];
  if (a.size() != N) {
    throw InputError("expected " + std::to_string(N) + " amplitudes, got " +
                     std::to_string(a.size()));
  }
  std::array<cd, N> t;
  for (std::size_t i = 0; i < N; ++i) t[i] = json_to_complex(a[i]);
  return t;
}

}  // namespace

PureState3 read_state3(const Json& j) {
  if (state_arity(j) != 3) throw InputError("expected a 3-qubit state");
  return PureState3::normalized(read_amplitudes<8>(j));
}

PureState4 read_state4(const Json& j) {
  if (state_arity(j) != 4) throw InputError("expected a 4-qubit state");
  return PureState4::normalized(read_amplitudes<16>(j));
}

Json state_to_json(const PureState3& s) {
  Json amps = Json::array();
  for (int i = 0; i < 8; ++i) amps.push_back(complex_to_json(s[i]));
  return Json{{"n", 3}, {"amplitudes", amps}};
}

Json state_to_json(const PureState4& s) {
  Json amps = Json::array();
  for (int i = 0; i < 16; ++i) amps.push_back(complex_to_json(s[i]));
  return Json{{"n", 4}, {"amplitudes", amps}};
}

Json to_json(const GaugeRecord& g) {
  return Json{{"uA", matrix_to_json(g.totalA())},
              {"uB", matrix_to_json(g.totalB())},
              {"uC", matrix_to_json(g.totalC())},
              {"phases", Json::array({0.0, 0.0, 0.0, 0.0})}};
}

Json to_json(const Gauge4& g) {
  return Json{{"uA", matrix_to_json(g.uA.matrix())},
              {"uB", matrix_to_json(g.uB.matrix())},
              {"uC", matrix_to_json(g.uC.matrix())},
              {"uD", matrix_to_json(g.uD.matrix())}};
}

Json to_json(const CanonicalForm& f) {
  return Json{{"type", "canonical"},
              {"lambda", f.lambda},
              {"phi", f.phi},
              {"gauge", to_json(f.gauge)}};
}

Json to_json(const SymmetricForm& f) {
  return Json{{"type", "symmetric"},
              {"kappa", f.kappa},
              {"theta", f.theta},
              {"residual", f.residual},
              {"gauge", to_json(f.gauge)}};
}

Json to_json(const GhzDecomposition& f) {
  return Json{{"type", "ghz"},      {"alpha", f.alpha},
              {"beta", f.beta},     {"delta", f.delta},
              {"gamma", f.gamma},   {"gauge", to_json(f.gauge)}};
}

Json to_json(const WeakAsymmetricForm& f) {
  return Json{{"type", "weak-asymmetric"},
              {"eta", f.eta},
              {"phi", f.phi},
              {"degenerateRotation", f.degenerate_rotation},
              {"gauge", to_json(f.gauge)}};
}

Json to_json(const ProductDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    terms.push_back(Json{{"coeff", complex_to_json(t.coeff)},
                         {"vectors", Json::array({vector_to_json(t.a),
                                                  vector_to_json(t.b),
                                                  vector_to_json(t.c)})}});
  }
  return terms;
}

namespace {

std::string bits4(int idx) {
  std::string s(4, '0');
  for (int b = 0; b < 4; ++b) {
    if (idx & (1 << (3 - b))) s[b] = '1';
  }
  return s;
}

}  // namespace

Json to_json(const TwelveTermForm& f) {
  Json indices = Json::array();
  for (int idx : twelve_set_indices()) indices.push_back(bits4(idx));
  Json coeffs = Json::array();
  for (const cd& c : f.coefficients) coeffs.push_back(complex_to_json(c));
  Json real_slots = Json::array();
  for (int idx : f.real_slots) real_slots.push_back(bits4(idx));
  return Json{{"type", "twelve-term"},
              {"rootIndex", f.root_index},
              {"indices", indices},
              {"coefficients", coeffs},
              {"realSlots", real_slots},
              {"excludedResidual", f.excluded_residual},
              {"gauge", to_json(f.gauge)}};
}

Json to_json(const RealBasisResult& r) {
  Json out{{"isReal", r.is_real}};
  switch (r.witness) {
    case RealBasisResult::Witness::PhaseBoundary:
      out["witness"] = "sqrtJ1J2J3";
      break;
    case RealBasisResult::Witness::DeltaJ:
      out["witness"] = "deltaJ";
      break;
    case RealBasisResult::Witness::None:
      out["witness"] = nullptr;
      break;
  }
  if (r.is_real) {
    out["maxImag"] = r.max_imag;
    out["realAmplitudes"] = r.real_amplitudes;
    out["gauge"] = to_json(r.gauge);
  }
  return out;
}

Json invariants_report(const InvariantSet& s) {
  Json identities = Json::object();
  for (const auto& e : check_identities(s.J, s.deltaJ).entries) {
    identities[e.name] = !e.applicable || e.pass;
  }
  return Json{{"I", s.I},
              {"I6", complex_to_json(s.I6)},
              {"J", s.J},
              {"deltaJ", s.deltaJ},
              {"identities", identities},
              {"rangesOk", s.ranges_ok},
              {"conjugationAmbiguous", s.conjugation_ambiguous}};
}

Json classification_report(const PureState3& state, double eps) {
  const EntanglementClass cls = classify(state, eps);
  Json conditions = Json::object();
  for (const auto& c : cls.conditions) conditions[c.name] = c.residual;

  Json out{{"type", class_tag_name(cls.tag)}, {"nu", cls.nu}};
  out["party"] =
      cls.party ? Json(std::string(1, party_letter(*cls.party))) : Json();
  out["conditions"] = conditions;
  out["decomposition"] = to_json(minimal_decomposition(state, cls));
  const RealBasisResult rb = is_real(state, eps);
  Json real{{"isReal", rb.is_real}};
  real["witness"] = rb.witness == RealBasisResult::Witness::PhaseBoundary
                        ? Json("sqrtJ1J2J3")
                    : rb.witness == RealBasisResult::Witness::DeltaJ
                        ? Json("deltaJ")
                        : Json();
  out["real"] = real;
  return out;
}

std::string dump_fixed(const Json& j) {
  std::string out;
  dump_rec(j, out);
  return out;
}

std::string dump_table(const Json& j) {
  std::string out;
  table_rec(j, "", out);
  return out;
}

}  // namespace triqubit
