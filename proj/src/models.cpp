#include "fano216/models.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fano216 {

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a 64
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << "0123456789abcdef"[(h >> (i * 4)) & 0xF];
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string default_data_dir() {
  if (const char* env = std::getenv("FANO216_DATA")) return env;
  return FANO216_DATA_DIR;
}

namespace {

std::map<std::string, std::string> load_manifest(const std::string& data_dir) {
  std::map<std::string, std::string> m;
  std::istringstream in(read_file(data_dir + "/models/MANIFEST"));
  std::string name, hash;
  while (in >> name >> hash) m[name] = hash;
  return m;
}

}  // namespace

std::string load_checked(const std::string& data_dir, const std::string& rel_path,
                         bool unchecked) {
  std::string bytes = read_file(data_dir + "/models/" + rel_path);
  if (!unchecked) {
    auto manifest = load_manifest(data_dir);
    auto it = manifest.find(rel_path);
    if (it == manifest.end())
      throw std::runtime_error("model not in manifest (pass --unchecked to override): " +
                               rel_path);
    if (it->second != content_hash(bytes))
      throw std::runtime_error("model hash mismatch: " + rel_path);
  }
  return bytes;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> toks;
  std::string t;
  while (ls >> t) {
    if (!t.empty() && t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

DivisorClass parse_class(const std::vector<std::string>& toks, std::size_t from,
                         std::size_t rank) {
  if (toks.size() != from + rank)
    throw std::invalid_argument("model parse: expected " + std::to_string(rank) +
                                " coordinates");
  DivisorClass c;
  for (std::size_t i = from; i < toks.size(); ++i) c.push_back(Rational::parse(toks[i]));
  return c;
}

// "c0:c1" meaning c0 + c1*u
Poly parse_affine(const std::string& tok) {
  auto colon = tok.find(':');
  if (colon == std::string::npos) return Poly(Rational::parse(tok));
  return Poly({Rational::parse(tok.substr(0, colon)), Rational::parse(tok.substr(colon + 1))});
}

}  // namespace

SurfaceLattice parse_surface(const std::string& text) {
  SurfaceLattice lat;
  std::istringstream in(text);
  std::string line;
  std::size_t gram_row = 0;
  bool in_gram = false;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (in_gram) {
      if (gram_row < lat.rank()) {
        if (toks.size() != lat.rank())
          throw std::invalid_argument("surface parse: gram row length");
        for (std::size_t j = 0; j < lat.rank(); ++j)
          lat.gram(gram_row, j) = Rational::parse(toks[j]);
        ++gram_row;
        if (gram_row == lat.rank()) in_gram = false;
        continue;
      }
    }
    if (key == "surface") {
      lat.name = toks.at(1);
    } else if (key == "basis") {
      lat.basis_names.assign(toks.begin() + 1, toks.end());
      lat.gram = Matrix<Rational>(lat.rank(), lat.rank());
    } else if (key == "gram") {
      in_gram = true;
      gram_row = 0;
    } else if (key == "tracked") {
      lat.tracked_names.push_back(toks.at(1));
      lat.tracked.push_back(parse_class(toks, 2, lat.rank()));
    } else if (key == "eff") {
      lat.eff_generators.push_back(parse_class(toks, 1, lat.rank()));
    } else if (key == "end") {
      break;
    } else {
      throw std::invalid_argument("surface parse: unknown key " + key);
    }
  }
  lat.validate();
  return lat;
}

ThreefoldModel parse_threefold(const std::string& text) {
  ThreefoldModel m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "threefold") {
      m.name = toks.at(1);
    } else if (key == "labels") {
      m.labels = {toks.at(1), toks.at(2)};
    } else if (key == "tensor") {
      const std::string& which = toks.at(1);
      Rational v = Rational::parse(toks.at(2));
      auto slot = [&](char c) { return c == m.labels[0][0] ? 0 : 1; };
      int i = slot(which.at(0)), j = slot(which.at(1)), k = slot(which.at(2));
      // fill all symmetric positions
      int idx[3] = {i, j, k};
      int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (auto& pm : perms) m.tensor[idx[pm[0]]][idx[pm[1]]][idx[pm[2]]] = v;
    } else if (key == "anticanonical") {
      m.anticanonical = {Rational::parse(toks.at(1)), Rational::parse(toks.at(2))};
    } else if (key == "nef") {
      m.nef_gens.push_back({Rational::parse(toks.at(1)), Rational::parse(toks.at(2))});
    } else if (key == "eff") {
      m.eff_gens.push_back({Rational::parse(toks.at(1)), Rational::parse(toks.at(2))});
    } else if (key == "volume") {
      m.anticanonical_cube = Rational::parse(toks.at(1));
    } else if (key == "end") {
      break;
    } else {
      throw std::invalid_argument("threefold parse: unknown key " + key);
    }
  }
  m.validate();
  return m;
}

namespace {

struct RawFlag {
  FlagSurfaceConfig config;
  std::vector<PointSpec> points;
  bool has_blowup = false;
  BlowupSpec blowup;
  // blow-up point specs by curve name, resolved after the blow-up
  struct RawPoint {
    std::string name;
    std::vector<std::tuple<std::string, std::string, Rational>> mults;  // kind, curve, mult
  };
  std::vector<RawPoint> raw_bpoints;
};

std::size_t tracked_index(const SurfaceLattice& lat, const std::string& name) {
  for (std::size_t i = 0; i < lat.tracked_names.size(); ++i)
    if (lat.tracked_names[i] == name) return i;
  throw std::invalid_argument("flag parse: unknown tracked curve " + name);
}

std::size_t fixed_index(const FlagSurfaceConfig& cfg, const std::string& name) {
  for (std::size_t i = 0; i < cfg.fixed_curves.size(); ++i)
    if (cfg.fixed_curves[i].name == name) return i;
  throw std::invalid_argument("flag parse: unknown fixed curve " + name);
}

}  // namespace

namespace {

RawFlag parse_case(const std::string& text, const std::string& data_dir, bool unchecked) {
  RawFlag raw;
  FlagSurfaceConfig& cfg = raw.config;
  std::istringstream in(text);
  std::string line;
  RestrictionPiece* piece = nullptr;
  std::vector<Poly> pending_fixed;
  auto flush_fixed = [&]() {
    if (piece) {
      cfg.fixed_coeffs.push_back(pending_fixed);
      pending_fixed.assign(cfg.fixed_curves.size(), Poly());
    }
  };
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "flag") {
      cfg.name = toks.at(1);
    } else if (key == "surface") {
      cfg.surface = parse_surface(load_checked(data_dir, toks.at(1) + ".surface", unchecked));
    } else if (key == "volume") {
      cfg.volume_normalizer = Rational::parse(toks.at(1));
    } else if (key == "fixed") {
      cfg.fixed_curves.push_back({toks.at(1), parse_class(toks, 2, cfg.surface.rank())});
    } else if (key == "curve") {
      cfg.curve_name = toks.at(1);
    } else if (key == "piece") {
      flush_fixed();
      cfg.pieces.emplace_back();
      piece = &cfg.pieces.back();
      piece->u_lo = Rational::parse(toks.at(1));
      piece->u_hi = Rational::parse(toks.at(2));
      pending_fixed.assign(cfg.fixed_curves.size(), Poly());
    } else if (key == "bclass") {
      if (!piece) throw std::invalid_argument("flag parse: bclass before piece");
      if (toks.size() != cfg.surface.rank() + 1)
        throw std::invalid_argument("flag parse: bclass arity");
      for (std::size_t i = 1; i < toks.size(); ++i)
        piece->b_class.push_back(parse_affine(toks[i]));
    } else if (key == "nfixed") {
      if (!piece) throw std::invalid_argument("flag parse: nfixed before piece");
      std::size_t fi = fixed_index(cfg, toks.at(1));
      pending_fixed[fi] = parse_affine(toks.at(2));
    } else if (key == "point" || key == "bpoint") {
      std::vector<std::tuple<std::string, std::string, Rational>> mults;
      for (std::size_t i = 2; i + 2 < toks.size() + 1; i += 3)
        mults.emplace_back(toks.at(i), toks.at(i + 1), Rational::parse(toks.at(i + 2)));
      if (key == "point") {
        PointSpec ps;
        ps.name = toks.at(1);
        for (const auto& [kind, curve, mult] : mults) {
          if (kind == "tracked")
            ps.tracked_mults[tracked_index(cfg.surface, curve)] = mult;
          else if (kind == "fixed")
            ps.fixed_mults[fixed_index(cfg, curve)] = mult;
          else
            throw std::invalid_argument("flag parse: point kind " + kind);
        }
        raw.points.push_back(std::move(ps));
      } else {
        RawFlag::RawPoint rp;
        rp.name = toks.at(1);
        rp.mults = std::move(mults);
        raw.raw_bpoints.push_back(std::move(rp));
      }
    } else if (key == "blowup") {
      raw.has_blowup = true;
      raw.blowup.type = toks.at(1) == "weighted" ? PltBlowupModel::Type::Weighted
                                                 : PltBlowupModel::Type::Ordinary;
      std::size_t i = 2;
      if (raw.blowup.type == PltBlowupModel::Type::Weighted) {
        raw.blowup.w1 = std::stol(toks.at(2));
        raw.blowup.w2 = std::stol(toks.at(3));
        i = 4;
      }
      for (; i + 2 < toks.size() + 1; i += 3) {
        const std::string& kind = toks.at(i);
        const std::string& curve = toks.at(i + 1);
        Rational mult = Rational::parse(toks.at(i + 2));
        if (kind == "tracked")
          raw.blowup.tracked_mults[tracked_index(cfg.surface, curve)] = mult;
        else if (kind == "fixed")
          raw.blowup.fixed_mults[fixed_index(cfg, curve)] = mult;
        else
          throw std::invalid_argument("flag parse: blowup kind " + kind);
      }
    } else if (key == "end") {
      break;
    } else {
      throw std::invalid_argument("flag parse: unknown key " + key);
    }
  }
  flush_fixed();
  if (cfg.pieces.empty()) throw std::invalid_argument("flag parse: no pieces");
  // consecutive pieces must agree at their shared breakpoint
  for (std::size_t k = 0; k + 1 < cfg.pieces.size(); ++k) {
    const auto& a = cfg.pieces[k];
    const auto& b = cfg.pieces[k + 1];
    if (!(a.u_hi == b.u_lo))
      throw std::invalid_argument("flag parse: pieces do not abut");
    if (a.class_at(a.u_hi) != b.class_at(b.u_lo))
      throw std::invalid_argument("flag parse: restriction pieces disagree at u = " +
                                  a.u_hi.str());
  }
  // resolve the scan curve: a tracked curve, a fixed curve, or a basis combo
  cfg.curve_fixed = std::nullopt;
  bool found = false;
  for (std::size_t i = 0; i < cfg.surface.tracked_names.size(); ++i)
    if (cfg.surface.tracked_names[i] == cfg.curve_name) {
      cfg.curve_class = cfg.surface.tracked[i];
      found = true;
    }
  for (std::size_t i = 0; i < cfg.fixed_curves.size(); ++i)
    if (cfg.fixed_curves[i].name == cfg.curve_name) {
      cfg.curve_class = cfg.fixed_curves[i].cls;
      cfg.curve_fixed = i;
      found = true;
    }
  if (!found)
    throw std::invalid_argument("flag parse: scan curve " + cfg.curve_name +
                                " is neither tracked nor fixed");
  return raw;
}

}  // namespace

FlagCaseData load_flag_case(const std::string& data_dir, const std::string& name,
                            bool unchecked) {
  RawFlag raw = parse_case(load_checked(data_dir, name + ".flag", unchecked), data_dir,
                           unchecked);
  FlagCaseData out;
  out.config = std::move(raw.config);
  out.points = std::move(raw.points);
  out.has_blowup = raw.has_blowup;
  out.blowup = raw.blowup;
  if (out.has_blowup) {
    // resolve blow-up point specs against the blown-up configuration
    auto [blown, model] = blowup_lattice(out.config, out.blowup);
    for (const auto& rp : raw.raw_bpoints) {
      PointSpec ps;
      ps.name = rp.name;
      for (const auto& [kind, curve, mult] : rp.mults) {
        if (kind == "tracked")
          ps.tracked_mults[tracked_index(blown.surface, curve)] = mult;
        else if (kind == "fixed")
          ps.fixed_mults[fixed_index(blown, curve)] = mult;
        else
          throw std::invalid_argument("flag parse: bpoint kind " + kind);
      }
      out.blowup_points.push_back(std::move(ps));
    }
  }
  return out;
}

SurfaceLattice load_surface(const std::string& data_dir, const std::string& name,
                            bool unchecked) {
  return parse_surface(load_checked(data_dir, name + ".surface", unchecked));
}

ThreefoldModel load_threefold(const std::string& data_dir, const std::string& name,
                              bool unchecked) {
  return parse_threefold(load_checked(data_dir, name + ".threefold", unchecked));
}

FlagSurfaceConfig load_flag_config(const std::string& data_dir, const std::string& name,
                                   bool unchecked) {
  return load_flag_case(data_dir, name, unchecked).config;
}

std::vector<std::string> table_row_names(const std::string& data_dir) {
  std::istringstream in(read_file(data_dir + "/models/rows/INDEX"));
  std::vector<std::string> names;
  std::string n;
  while (in >> n) names.push_back(n);
  return names;
}

TableRow load_table_row(const std::string& data_dir, const std::string& name, bool unchecked) {
  TableRow row;
  row.label = name;
  std::istringstream in(load_checked(data_dir, "rows/" + name + ".row", unchecked));
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "row") {
      row.label = toks.at(1);
    } else if (key == "case") {
      row.singular = toks.at(1) == "singular";
    } else if (key == "claimed") {
      row.claimed_type = toks.at(1);
    } else if (key == "gen") {
      // six tokens "scalar@column"
      if (toks.size() != 7) throw std::invalid_argument("row parse: gen needs 6 entries");
      std::array<int, 6> perm{};
      std::array<Cyclo, 6> scale;
      for (int i = 0; i < 6; ++i) {
        const std::string& t = toks[i + 1];
        auto at = t.find('@');
        if (at == std::string::npos)
          throw std::invalid_argument("row parse: gen entry needs scalar@column");
        scale[i] = parse_cyclo(t.substr(0, at));
        perm[i] = std::stoi(t.substr(at + 1));
      }
      row.generators.emplace_back(perm, std::move(scale));
    } else if (key == "plane") {
      if (toks.size() != 7) throw std::invalid_argument("row parse: plane needs 6 entries");
      std::vector<Cyclo> form;
      for (int i = 1; i <= 6; ++i) form.push_back(parse_cyclo(toks[i]));
      row.plane.push_back(std::move(form));
    } else if (key == "relation") {
      if (toks.size() != 7) throw std::invalid_argument("row parse: relation needs 6 entries");
      std::array<Cyclo, 6> rel;
      for (int i = 1; i <= 6; ++i) rel[i - 1] = parse_cyclo(toks[i]);
      row.relations.push_back(std::move(rel));
    } else if (key == "note") {
      row.note = line.substr(line.find("note") + 5);
    } else if (key == "end") {
      break;
    } else {
      throw std::invalid_argument("row parse: unknown key " + key);
    }
  }
  if (row.generators.empty() || row.plane.size() != 3 || row.claimed_type.empty())
    throw std::invalid_argument("row parse: incomplete row " + name);
  return row;
}

QuotientBoundInputs load_quotient_inputs(const std::string& data_dir, bool unchecked) {
  QuotientBoundInputs in;
  std::istringstream s(load_checked(data_dir, "quotient_bounds.case", unchecked));
  std::string line;
  while (std::getline(s, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    auto poly_of = [&]() {
      std::vector<Rational> c;
      for (std::size_t i = 1; i < toks.size(); ++i) c.push_back(Rational::parse(toks[i]));
      return Poly(std::move(c));
    };
    if (key == "quotient_bounds" || key == "end") continue;
    if (key == "smooth_num") in.smooth_num = poly_of();
    else if (key == "smooth_den") in.smooth_den = poly_of();
    else if (key == "reducible_num") in.reducible_num = poly_of();
    else if (key == "reducible_den") in.reducible_den = poly_of();
    else if (key == "delta_surface") in.delta_surface = Rational::parse(toks.at(1));
    else if (key == "dt_square") in.dt_square = poly_of();
    else if (key == "ks_square") in.ks_square = Rational::parse(toks.at(1));
    else throw std::invalid_argument("quotient_bounds parse: unknown key " + key);
  }
  return in;
}

}  // namespace fano216
