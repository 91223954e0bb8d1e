#include "coexkit/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace coexkit {

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(Json::array({m.at(i, j).real(), m.at(i, j).imag()}));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw CoexError(Errc::BadInput, "matrix JSON needs {dim, entries}");
  }
  const int n = j.at("dim").get<int>();
  if (n < 1) throw CoexError(Errc::BadInput, "dim must be positive");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(n)) {
    throw CoexError(Errc::BadInput, "entries must hold dim rows");
  }
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = entries.at(static_cast<size_t>(i));
    if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
      throw CoexError(Errc::BadInput, "row " + std::to_string(i) + " must hold dim entries");
    }
    for (int k = 0; k < n; ++k) {
      const Json& cell = row.at(static_cast<size_t>(k));
      if (!cell.is_array() || cell.size() != 2) {
        throw CoexError(Errc::BadInput, "entries are [re, im] pairs");
      }
      m.at(i, k) = Complex{cell.at(0).get<double>(), cell.at(1).get<double>()};
    }
  }
  return m;
}

Json effect_to_json(const Effect& e) {
  Json j = matrix_to_json(e.matrix());
  j["kind"] = kind_name(classify(e).kind);
  return j;
}

Effect effect_from_json(const Json& j) {
  return Effect(HermitianMatrix::symmetrize_validate(matrix_from_json(j)));
}

Json witness_to_json(const CoexWitness& w) {
  return Json{{"E", matrix_to_json(w.e.matrix())},
              {"F", matrix_to_json(w.f.matrix())},
              {"G", matrix_to_json(w.g.matrix())}};
}

CoexWitness witness_from_json(const Json& j) {
  return CoexWitness{effect_from_json(j.at("E")), effect_from_json(j.at("F")),
                     effect_from_json(j.at("G"))};
}

Json verdict_to_json(const CoexVerdict& v) {
  Json j{{"decision", decision_name(v.decision)},
         {"method", method_name(v.method)},
         {"residual", v.residual}};
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

Json simprofile_to_json(const SimProfile& p) {
  Json bits = Json::array();
  for (const bool b : p.membership) bits.push_back(b ? 1 : 0);
  return Json{{"probe_seed", p.probe_seed}, {"scheme", p.scheme}, {"membership", std::move(bits)}};
}

namespace {

const char* flip_name(FlipPolicy f) {
  switch (f) {
    case FlipPolicy::None: return "none";
    case FlipPolicy::All: return "all";
    case FlipPolicy::Hash: return "hash";
  }
  return "none";
}

}  // namespace

Json automorphism_to_json(const AutomorphismSpec& spec) {
  Json table = Json::array();
  for (const auto& [t, gt] : spec.g_table()) table.push_back(Json::array({t, gt}));
  return Json{{"unitary", matrix_to_json(spec.unitary())},
              {"antiunitary", spec.antiunitary()},
              {"g_table", std::move(table)},
              {"g_default", spec.g_default() == GDefault::Identity ? "identity" : "reverse"},
              {"flip", flip_name(spec.flip_policy())}};
}

AutomorphismSpec automorphism_from_json(const Json& j) {
  const Matrix u = matrix_from_json(j.at("unitary"));
  const bool anti = j.value("antiunitary", false);
  FlipPolicy flip = FlipPolicy::None;
  const std::string fs = j.value("flip", "none");
  if (fs == "all") {
    flip = FlipPolicy::All;
  } else if (fs == "hash") {
    flip = FlipPolicy::Hash;
  } else if (fs != "none") {
    throw CoexError(Errc::BadInput, "flip must be none|all|hash");
  }
  const std::string gd = j.value("g_default", "identity");
  if (gd != "identity" && gd != "reverse") {
    throw CoexError(Errc::BadInput, "g_default must be identity|reverse");
  }
  std::map<double, double> table;
  if (j.contains("g_table")) {
    for (const Json& row : j.at("g_table")) {
      table[row.at(0).get<double>()] = row.at(1).get<double>();
    }
  }
  return AutomorphismSpec(u, anti, flip,
                          gd == "identity" ? GDefault::Identity : GDefault::Reverse,
                          std::move(table));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Prefer the shortest representation that round-trips.
  for (int prec = 1; prec <= 16; ++prec) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(shorter, "%lf", &back);
    if (back == v) return shorter;
  }
  return buf;
}

std::string tprofile_to_csv(const TProfile& p) {
  std::string out = "alpha,T\n";
  for (size_t i = 0; i < p.alphas.size(); ++i) {
    out += format_double(p.alphas[i]);
    out += ',';
    out += format_double(p.values[i]);
    out += '\n';
  }
  return out;
}

std::string cone_section_to_csv(const ConeSection& s) {
  std::string out = "theta,coeff,x0,xmu,x3,tag\n";
  for (const SectionPoint& pt : s.points) {
    out += format_double(pt.theta);
    out += ',';
    out += format_double(pt.coeff);
    out += ',';
    out += format_double(pt.x0);
    out += ',';
    out += format_double(pt.xmu);
    out += ',';
    out += format_double(pt.x3);
    out += ',';
    out += pt.tag;
    out += '\n';
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CoexError(Errc::BadInput, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CoexError(Errc::BadInput, "JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CoexError(Errc::BadInput, "cannot open " + tmp + " for writing");
    out << content;
    if (!out.good()) {
      std::filesystem::remove(tmp);
      throw CoexError(Errc::BadInput, "write failed for " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace coexkit
