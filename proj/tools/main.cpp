/*
 * Copyright 2026 The qchord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_writer.hpp"
#include "qchord/cartan.hpp"
#include "qchord/measures.hpp"
#include "qchord/oracle.hpp"
#include "qchord/regions.hpp"
#include "qchord/states.hpp"

namespace {

using namespace qchord;
using qchord::tools::JsonWriter;

constexpr double kPi = std::numbers::pi;

// Exit codes: 0 ok, 2 usage/parse, 3 invalid matrix, 4 precondition
// (not a perfect entangler), 5 I/O failure.
enum ExitCode { kOk = 0, kUsage = 2, kBadMatrix = 3, kPrecondition = 4, kIo = 5 };

struct GateSpec {
  std::string gate;
  std::string coords;
  bool pi_units = false;
  std::string matrix_path;
};

const std::map<std::string, CartanCoord>& named_gates() {
  static const std::map<std::string, CartanCoord> gates = {
      {"I", {0, 0, 0}},
      {"CNOT", {kPi / 2, 0, 0}},
      {"ISWAP", {kPi / 2, kPi / 2, 0}},
      {"SWAP", {kPi / 2, kPi / 2, kPi / 2}},
      {"SQRT_SWAP", {kPi / 4, kPi / 4, kPi / 4}},
      {"SQRT_SWAP_DAG", {kPi / 4, kPi / 4, -kPi / 4}},
      {"SQRT_ISWAP", {kPi / 4, kPi / 4, 0}},
      {"M_SQRT_ISWAP", {kPi / 2, kPi / 4, kPi / 4}},
  };
  return gates;
}

int parse_matrix_file(const std::string& path, Matrix4cd& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open matrix file: " << path << "\n";
    return kIo;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "matrix file parse error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 4) throw std::runtime_error("shape");
    for (int r = 0; r < 4; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != 4) throw std::runtime_error("shape");
      for (int c = 0; c < 4; ++c) {
        const auto& entry = row.at(c);
        if (!entry.is_array() || entry.size() != 2) {
          throw std::runtime_error("shape");
        }
        out(r, c) = Complex(entry.at(0).get<double>(),
                            entry.at(1).get<double>());
      }
    }
  } catch (const std::exception&) {
    std::cerr << "matrix file must hold {\"matrix\": 4x4 [re,im] entries}\n";
    return kUsage;
  }
  if (!is_unitary(out)) {
    std::cerr << "matrix is not unitary\n";
    return kBadMatrix;
  }
  return kOk;
}

// Resolves a gate spec to canonical coordinates; returns an exit code.
int resolve_spec(const GateSpec& spec, CartanCoord& out) {
  const int populated = (spec.gate.empty() ? 0 : 1) +
                        (spec.coords.empty() ? 0 : 1) +
                        (spec.matrix_path.empty() ? 0 : 1);
  if (populated != 1) {
    std::cerr << "exactly one of --gate, --coords, --matrix is required\n";
    return kUsage;
  }
  if (!spec.gate.empty()) {
    const auto it = named_gates().find(spec.gate);
    if (it == named_gates().end()) {
      std::cerr << "unknown gate: " << spec.gate << "\n";
      return kUsage;
    }
    out = canonicalize(it->second);
    return kOk;
  }
  if (!spec.coords.empty()) {
    double v[3];
    char extra = '\0';
    if (std::sscanf(spec.coords.c_str(), "%lf,%lf,%lf%c", &v[0], &v[1], &v[2],
                    &extra) != 3) {
      std::cerr << "--coords expects c1,c2,c3\n";
      return kUsage;
    }
    const double scale = spec.pi_units ? kPi : 1.0;
    out = canonicalize(v[0] * scale, v[1] * scale, v[2] * scale);
    return kOk;
  }
  Matrix4cd u;
  if (const int rc = parse_matrix_file(spec.matrix_path, u); rc != kOk) {
    return rc;
  }
  out = extract_coords(u);
  return kOk;
}

void write_complex(JsonWriter& w, const Complex& z) {
  w.begin_array();
  w.value(z.real());
  w.value(z.imag());
  w.end_array();
}

void write_state(JsonWriter& w, const MagicState& alpha) {
  w.begin_object();
  w.key("magic");
  w.begin_array();
  for (int j = 0; j < 4; ++j) write_complex(w, alpha(j));
  w.end_array();
  w.key("computational");
  const Vector4cd comp = magic_to_computational(alpha);
  w.begin_array();
  for (int j = 0; j < 4; ++j) write_complex(w, comp(j));
  w.end_array();
  w.end_object();
}

void write_pair(JsonWriter& w, const CartanCoord& c,
                const ProductStatePair& pair) {
  w.begin_object();
  w.key("kind");
  switch (pair.kind) {
    case PairKind::Diametral: w.value("diametral"); break;
    case PairKind::Face: w.value("face"); break;
    case PairKind::Quadrilateral: w.value("quadrilateral"); break;
  }
  w.key("indices1");
  w.begin_array();
  for (int i : pair.indices1) w.value(i);
  w.end_array();
  w.key("indices2");
  w.begin_array();
  for (int i : pair.indices2) w.value(i);
  w.end_array();
  w.key("phase_integers1");
  w.begin_array();
  for (int i : pair.phase_integers1) w.value(i);
  w.end_array();
  w.key("phase_integers2");
  w.begin_array();
  for (int i : pair.phase_integers2) w.value(i);
  w.end_array();
  w.key("p");
  if (pair.p) {
    w.value(*pair.p);
  } else {
    w.null();
  }
  w.key("orthogonal");
  w.value(pair.orthogonal);
  w.key("overlap");
  w.value(pair.overlap);
  w.key("phi1");
  write_state(w, pair.phi1);
  w.key("phi2");
  write_state(w, pair.phi2);

  const PairVerification v = verify_pair(c, pair);
  w.key("verification");
  w.begin_object();
  w.key("in_concurrence");
  w.begin_array();
  w.value(v.in_concurrence1);
  w.value(v.in_concurrence2);
  w.end_array();
  w.key("out_concurrence");
  w.begin_array();
  w.value(v.out_concurrence1);
  w.value(v.out_concurrence2);
  w.end_array();
  w.key("overlap");
  w.value(v.overlap);
  w.key("pass");
  w.value(v.pass());
  w.end_object();
  w.end_object();
}

void write_coordinates(JsonWriter& w, const CartanCoord& c) {
  w.key("canonical_coordinates");
  w.begin_object();
  w.key("radians");
  w.begin_array();
  w.value(c.c1);
  w.value(c.c2);
  w.value(c.c3);
  w.end_array();
  w.key("pi_units");
  w.begin_array();
  w.value(c.c1 / kPi);
  w.value(c.c2 / kPi);
  w.value(c.c3 / kPi);
  w.end_array();
  w.end_object();
}

void write_region(JsonWriter& w, const RegionLabel& label, bool pe) {
  w.key("region");
  w.begin_object();
  w.key("kind");
  w.value(to_string(label.kind));
  w.key("label");
  w.value(region_string(label));
  w.key("special");
  if (label.special != SpecialClass::None) {
    w.value(to_string(label.special));
  } else {
    w.null();
  }
  w.key("face");
  if (label.face != Face::None) {
    w.value(to_string(label.face));
  } else {
    w.null();
  }
  w.key("planes");
  w.begin_array();
  for (const auto& [j, k] : label.planes) {
    w.begin_array();
    w.value(j);
    w.value(k);
    w.end_array();
  }
  w.end_array();
  w.key("perfect_entangler");
  w.value(pe);
  w.end_object();
}

void write_zero_simplices(JsonWriter& w, const ZeroSimplexReport& rep) {
  w.key("zero_simplices");
  w.begin_object();
  w.key("hull");
  switch (rep.hull_kind) {
    case HullKind::Point: w.value("point"); break;
    case HullKind::Segment: w.value("segment"); break;
    case HullKind::Triangle: w.value("triangle"); break;
    case HullKind::Quadrilateral: w.value("quadrilateral"); break;
  }
  w.key("containing_triangles");
  w.begin_array();
  for (const auto& tri : rep.containing_triangles) {
    w.begin_array();
    for (int i : tri) w.value(i);
    w.end_array();
  }
  w.end_array();
  w.key("diametral_pairs");
  w.begin_array();
  for (const auto& [j, k] : rep.diametral_pairs) {
    w.begin_array();
    w.value(j);
    w.value(k);
    w.end_array();
  }
  w.end_array();
  w.end_object();
}

void write_measures(JsonWriter& w, const CartanCoord& c) {
  const Vector4cd z = squared_eigenvalues(c);
  const ChordSet ch = chords(z);
  const NonlocalMeasures chord = measures_from_coords(c);
  const NonlocalMeasures matrix = measures_from_matrix(build_nonlocal(c));

  w.key("chords");
  w.begin_object();
  for (const char* which : {"direct", "conjugate"}) {
    w.key(which);
    w.begin_array();
    const auto& lengths =
        std::string(which) == "direct" ? ch.direct : ch.conjugate;
    for (int i = 0; i < 6; ++i) {
      w.begin_object();
      w.key("pair");
      w.begin_array();
      w.value(ChordSet::kPairs[i].first);
      w.value(ChordSet::kPairs[i].second);
      w.end_array();
      w.key("length_sq");
      w.value(lengths[i]);
      w.end_object();
    }
    w.end_array();
  }
  w.end_object();

  w.key("measures");
  w.begin_object();
  w.key("entangling_power");
  w.begin_object();
  w.key("chord");
  w.value(chord.e_p);
  w.key("matrix");
  w.value(matrix.e_p);
  w.end_object();
  w.key("gate_typicality");
  w.begin_object();
  w.key("chord");
  w.value(chord.g_t);
  w.key("anchors");
  w.begin_array();
  for (int anchor = 1; anchor <= 4; ++anchor) {
    w.value(gate_typicality_anchor(ch, anchor));
  }
  w.end_array();
  w.key("cartan");
  w.value(gate_typicality_cartan(c));
  w.key("matrix");
  w.value(matrix.g_t);
  w.end_object();
  w.key("linear_entropy");
  w.begin_object();
  w.key("combined");
  w.value(chord.L);
  w.key("chord");
  w.value(linear_entropy(ch));
  w.key("operator_schmidt");
  w.value(matrix.L);
  w.end_object();
  w.end_object();
}

int cmd_analyze(const GateSpec& spec) {
  CartanCoord c;
  if (const int rc = resolve_spec(spec, c); rc != kOk) return rc;

  JsonWriter w;
  w.begin_object();
  write_coordinates(w, c);
  const EigenPhases h = eigenphases(c);
  w.key("eigenphases");
  w.begin_array();
  for (double hj : h) w.value(hj);
  w.end_array();
  const Vector4cd z = squared_eigenvalues(c);
  w.key("squared_eigenvalues");
  w.begin_array();
  for (int j = 0; j < 4; ++j) write_complex(w, z(j));
  w.end_array();

  write_measures(w, c);
  const RegionLabel label = classify(c);
  write_region(w, label, is_perfect_entangler(c));
  write_zero_simplices(w, zero_simplices(z));

  w.key("pairs");
  w.begin_array();
  if (is_perfect_entangler(c)) {
    for (const auto& pair : construct_pairs(c)) write_pair(w, c, pair);
  }
  w.end_array();
  w.end_object();

  std::cout << w.str() << "\n";
  return kOk;
}

int cmd_states(const GateSpec& spec) {
  CartanCoord c;
  if (const int rc = resolve_spec(spec, c); rc != kOk) return rc;
  if (!is_perfect_entangler(c)) {
    std::cerr << "not a perfect entangler\n";
    return kPrecondition;
  }

  JsonWriter w;
  w.begin_object();
  write_coordinates(w, c);
  w.key("pairs");
  w.begin_array();
  for (const auto& pair : construct_pairs(c)) write_pair(w, c, pair);
  w.end_array();
  w.end_object();
  std::cout << w.str() << "\n";
  return kOk;
}

std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

int cmd_argand(const GateSpec& spec, const std::string& out_path) {
  CartanCoord c;
  if (const int rc = resolve_spec(spec, c); rc != kOk) return rc;

  const Vector4cd z = squared_eigenvalues(c);
  const double cx = 256.0, cy = 256.0, radius = 200.0;
  const auto px = [&](const Complex& p) { return cx + radius * p.real(); };
  const auto py = [&](const Complex& p) { return cy - radius * p.imag(); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" "
         "height=\"512\" viewBox=\"0 0 512 512\">\n";
  svg << "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  svg << "<circle cx=\"256\" cy=\"256\" r=\"200\" fill=\"none\" "
         "stroke=\"#999\" stroke-width=\"1\"/>\n";
  // origin marker
  svg << "<line x1=\"250\" y1=\"256\" x2=\"262\" y2=\"256\" stroke=\"#333\" "
         "stroke-width=\"1\"/>\n";
  svg << "<line x1=\"256\" y1=\"250\" x2=\"256\" y2=\"262\" stroke=\"#333\" "
         "stroke-width=\"1\"/>\n";

  for (int i = 0; i < 6; ++i) {
    const auto [j, k] = ChordSet::kPairs[i];
    const Complex a = z(j - 1);
    const Complex b = z(k - 1);
    if (std::abs(a - b) > 1e-9) {
      svg << "<line x1=\"" << svg_coord(px(a)) << "\" y1=\"" << svg_coord(py(a))
          << "\" x2=\"" << svg_coord(px(b)) << "\" y2=\"" << svg_coord(py(b))
          << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    const Complex bc = std::conj(b);
    if (std::abs(a - bc) > 1e-9) {
      svg << "<line x1=\"" << svg_coord(px(a)) << "\" y1=\"" << svg_coord(py(a))
          << "\" x2=\"" << svg_coord(px(bc)) << "\" y2=\""
          << svg_coord(py(bc))
          << "\" stroke=\"#888\" stroke-width=\"1.2\" "
             "stroke-dasharray=\"6 4\"/>\n";
    }
  }

  for (int j = 0; j < 4; ++j) {
    const Complex p = z(j);
    svg << "<circle cx=\"" << svg_coord(px(p)) << "\" cy=\""
        << svg_coord(py(p)) << "\" r=\"5\" fill=\"#c22\"/>\n";
    // stagger labels radially so coincident points stay readable
    const double f = 1.10 + 0.08 * j;
    const double lx = cx + radius * f * p.real();
    const double ly = cy - radius * f * p.imag();
    svg << "<text x=\"" << svg_coord(lx) << "\" y=\"" << svg_coord(ly)
        << "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\">z"
        << (j + 1) << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kIo;
  }
  out << svg.str();
  if (!out) {
    std::cerr << "write failed: " << out_path << "\n";
    return kIo;
  }
  return kOk;
}

int cmd_sweep(double step, const std::string& out_path) {
  if (!(step > 0.0) || step > kPi / 8.0 + 1e-12) {
    std::cerr << "--step must be in (0, pi/8]\n";
    return kUsage;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kIo;
  }
  out << "c1,c2,c3,e_p,g_t,L,region,planes\n";
  const double eps = step * 1e-9;
  for (double c1 = 0.0; c1 <= kPi / 2.0 + eps; c1 += step) {
    for (double c2 = 0.0; c2 <= c1 + eps; c2 += step) {
      for (double c3 = -c2; c3 <= c2 + eps; c3 += step) {
        const CartanCoord c{c1, c2, c3};
        const NonlocalMeasures m = measures_from_coords(c);
        const RegionLabel label = classify(c);
        out << JsonWriter::format_number(c1) << ','
            << JsonWriter::format_number(c2) << ','
            << JsonWriter::format_number(c3) << ','
            << JsonWriter::format_number(m.e_p) << ','
            << JsonWriter::format_number(m.g_t) << ','
            << JsonWriter::format_number(m.L) << ','
            << region_string(label) << ',';
        for (std::size_t i = 0; i < label.planes.size(); ++i) {
          if (i) out << ';';
          out << label.planes[i].first << '-' << label.planes[i].second;
        }
        out << '\n';
      }
    }
  }
  if (!out) {
    std::cerr << "write failed: " << out_path << "\n";
    return kIo;
  }
  return kOk;
}

int cmd_verify(const GateSpec& spec, std::uint64_t samples,
               std::uint64_t seed) {
  CartanCoord c;
  if (const int rc = resolve_spec(spec, c); rc != kOk) return rc;

  const NonlocalMeasures chord = measures_from_coords(c);
  const NonlocalMeasures matrix = measures_from_matrix(build_nonlocal(c));
  const Estimate mc =
      mc_entangling_power(build_nonlocal(c), {samples, seed});

  const double band = 3.0 * mc.std_error;
  JsonWriter w;
  w.begin_object();
  write_coordinates(w, c);
  w.key("entangling_power");
  w.begin_object();
  w.key("chord");
  w.value(chord.e_p);
  w.key("matrix");
  w.value(matrix.e_p);
  w.key("monte_carlo");
  w.begin_object();
  w.key("mean");
  w.value(mc.mean);
  w.key("std_error");
  w.value(mc.std_error);
  w.key("samples");
  w.value(static_cast<unsigned long long>(samples));
  w.key("seed");
  w.value(static_cast<unsigned long long>(seed));
  w.end_object();
  w.end_object();
  w.key("agreement");
  w.begin_object();
  w.key("chord_vs_matrix");
  w.value(std::abs(chord.e_p - matrix.e_p) <= 1e-9);
  w.key("mc_within_3_sigma");
  w.value(std::abs(mc.mean - chord.e_p) <= std::max(band, 1e-9));
  w.end_object();
  w.end_object();
  std::cout << w.str() << "\n";
  return kOk;
}

void add_spec_flags(CLI::App* cmd, GateSpec& spec) {
  cmd->add_option("--gate", spec.gate,
                  "named gate (I, CNOT, ISWAP, SWAP, SQRT_SWAP, "
                  "SQRT_SWAP_DAG, SQRT_ISWAP, M_SQRT_ISWAP)");
  cmd->add_option("--coords", spec.coords, "coordinates c1,c2,c3");
  cmd->add_flag("--pi-units", spec.pi_units,
                "interpret --coords as multiples of pi");
  cmd->add_option("--matrix", spec.matrix_path, "path to a matrix JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlocal analysis of two-qubit gates"};
  app.require_subcommand(1);

  GateSpec spec;
  std::string out_path;
  double step = kPi / 8.0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "full gate report (JSON)");
  add_spec_flags(analyze, spec);

  CLI::App* states =
      app.add_subcommand("states", "product-state pairs mapped to maximally "
                                   "entangled states (JSON)");
  add_spec_flags(states, spec);

  CLI::App* argand =
      app.add_subcommand("argand", "argand diagram of squared eigenvalues "
                                   "(SVG)");
  add_spec_flags(argand, spec);
  argand->add_option("--out", out_path, "output SVG path")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "chamber atlas (CSV)");
  sweep->add_option("--step", step, "grid step in radians, (0, pi/8]")
      ->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "entangling power by three routes (JSON)");
  add_spec_flags(verify, spec);
  verify->add_option("--samples", samples, "Monte Carlo sample count");
  verify->add_option("--seed", seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(spec);
    if (states->parsed()) return cmd_states(spec);
    if (argand->parsed()) return cmd_argand(spec, out_path);
    if (sweep->parsed()) return cmd_sweep(step, out_path);
    if (verify->parsed()) return cmd_verify(spec, samples, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
