#include "toric/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "toric/cech.hpp"
#include "toric/dilation.hpp"
#include "toric/error.hpp"
#include "toric/examples.hpp"
#include "toric/fan_io.hpp"
#include "toric/lab.hpp"
#include "toric/monoid.hpp"
#include "toric/sweep.hpp"

namespace toric::cli {

namespace {

[[noreturn]] void bad_input(const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Integer parse_integer(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(ErrorKind::ParseError, what + ": '" + text + "' is not an integer");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

LatticeVector parse_vector(const std::string& text, const std::string& what) {
  std::vector<Integer> coords;
  for (const auto& part : split(text, ',')) coords.push_back(parse_integer(part, what));
  if (coords.empty()) throw Error(ErrorKind::ParseError, what + " is empty");
  return LatticeVector(std::move(coords));
}

/// "0" stands for the zero weight of any rank.
LatticeVector parse_weight(const std::string& text, std::size_t rank) {
  LatticeVector m = parse_vector(text, "--weight");
  if (m.rank() == 1 && m.is_zero() && rank != 1) return LatticeVector(std::vector<Integer>(rank, Integer(0)));
  if (m.rank() != rank)
    throw Error(ErrorKind::RankMismatch, "--weight has " + std::to_string(m.rank()) + " entries, lattice rank is " +
                                             std::to_string(rank));
  return m;
}

std::vector<long> parse_sequence(const std::string& text) {
  if (trim(text).empty()) return default_dilation_sequence();
  std::vector<long> out;
  for (const auto& part : split(text, ',')) {
    Integer c = parse_integer(part, "--seq");
    if (!c.fits_slong_p() || c < 2) bad_input("--seq entries must be integers >= 2, got '" + trim(part) + "'");
    out.push_back(c.get_si());
  }
  return out;
}

struct FanInput {
  Fan fan;
  std::string name;
  std::string canonical;
};

FanInput fan_input(const Invocation& inv, bool validate_fan = true) {
  const int given = !inv.rays.empty() + !inv.fan_path.empty() + !inv.fixture.empty();
  if (given != 1) bad_input("exactly one of --rays, --fan, --fixture is required");
  FanInput in;
  if (!inv.fan_path.empty()) {
    FanDocument doc = load_fan_document(inv.fan_path);
    in.name = doc.name;
    if (validate_fan) {
      in.fan = fan_from_document(doc);
    } else {
      std::vector<Cone> cones;
      for (const auto& idx : doc.cones) {
        std::vector<LatticeVector> gens;
        for (auto k : idx) gens.push_back(doc.rays[k]);
        cones.push_back(Cone::from_generators(doc.lattice_rank, gens));
      }
      in.fan = Fan::from_cones(doc.lattice_rank, cones);
    }
  } else if (!inv.fixture.empty()) {
    in.fan = examples::fixture(inv.fixture);
    in.name = inv.fixture;
  } else {
    std::vector<LatticeVector> gens;
    for (const auto& part : split(inv.rays, ';')) gens.push_back(parse_vector(part, "--rays"));
    for (const auto& g : gens)
      if (g.rank() != gens.front().rank()) throw Error(ErrorKind::RankMismatch, "--rays entries differ in length");
    for (const auto& g : gens)
      if (g.is_zero()) throw Error(ErrorKind::ZeroVector, "--rays contains the zero vector");
    Cone c = Cone::from_generators(gens.front().rank(), gens);
    in.fan = Fan::from_cones(c.rank(), {c});
    in.name = "cone";
  }
  in.canonical = serialize(to_document(in.fan, in.name));
  return in;
}

Cone cone_input(const Invocation& inv, const FanInput& in) {
  if (!inv.rays.empty()) {
    std::vector<LatticeVector> gens;
    for (const auto& part : split(inv.rays, ';')) gens.push_back(parse_vector(part, "--rays"));
    return Cone::from_generators(gens.front().rank(), gens);
  }
  auto charts = in.fan.maximal_cones();
  if (charts.size() != 1) bad_input("this command needs a single cone; the input fan has " +
                                    std::to_string(charts.size()) + " maximal cones");
  return charts.front();
}

std::string cone_rays_text(const Cone& c) {
  std::string out;
  for (const auto& r : c.rays()) out += (out.empty() ? "" : " ") + r.to_string();
  return out.empty() ? "0" : out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string h_column(std::size_t q) { return "h" + std::to_string(q); }

std::size_t need_p(const Invocation& inv, std::size_t fallback) { return inv.p.value_or(fallback); }

/// Weights for a sweep: the single --weight or the whole box, recording the box.
std::vector<LatticeVector> weights_for(const Invocation& inv, std::size_t rank, Report& r) {
  if (!inv.weight.empty()) return {parse_weight(inv.weight, rank)};
  if (inv.window < 0) bad_input("--window must be nonnegative");
  r.window = inv.window;
  r.window_rank = rank;
  return weight_box(rank, inv.window);
}

Report cone_command(const Invocation& inv, const FanInput& in) {
  const Cone c = cone_input(inv, in);
  Report r;
  r.summary.push_back({"cone", c.to_string()});
  if (inv.action == "dual") {
    const Cone d = dual_cone(c);
    Table t{"dual cone", {"kind", "vector"}, {}};
    for (const auto& v : d.rays()) t.rows.push_back({"ray", v.to_string()});
    for (const auto& v : d.lineality()) t.rows.push_back({"lineality", v.to_string()});
    r.tables.push_back(std::move(t));
    const bool back = dual_cone(d) == c;
    r.check("dual of the dual is the cone", back, "true", bool_text(back), provenance::kOracle);
    bool pairs = true;
    for (const auto& m : d.rays())
      for (const auto& n : c.rays()) pairs = pairs && pairing(m, n) >= 0;
    r.check("dual rays pair nonnegatively with the cone", pairs, "true", bool_text(pairs), provenance::kDefinition);
  } else if (inv.action == "faces") {
    Table t{"faces", {"dim", "rays", "weight"}, {}};
    bool recovered = true;
    for (const auto& f : faces(c)) {
      LatticeVector w = weight_for_face(c, f);
      recovered = recovered && face_of_weight(c, w) == f;
      t.rows.push_back({std::to_string(f.dim()), cone_rays_text(f), w.to_string()});
    }
    r.tables.push_back(std::move(t));
    r.check("each face is cut out by its weight", recovered, "true", bool_text(recovered), provenance::kOracle);
  } else if (inv.action == "classify") {
    const ConeClass k = classify(c);
    r.summary.push_back({"dim", std::to_string(k.dim)});
    r.summary.push_back({"strongly_convex", bool_text(k.strongly_convex)});
    r.summary.push_back({"simplicial", bool_text(k.simplicial)});
    r.summary.push_back({"smooth", bool_text(k.smooth)});
    r.check("smooth cones are simplicial", !k.smooth || k.simplicial, "true", bool_text(!k.smooth || k.simplicial),
            provenance::kDefinition);
  } else {
    throw Error(ErrorKind::UnknownCommand, "cone " + inv.action);
  }
  return r;
}

Report monoid_command(const Invocation& inv, const FanInput& in) {
  const Cone c = cone_input(inv, in);
  const AffineMonoid a = monoid_of(c);
  Report r;
  r.summary.push_back({"cone", c.to_string()});
  if (inv.action == "hilbert") {
    Table t{"hilbert basis of the dual monoid", {"element"}, {}};
    bool inside = true;
    for (const auto& h : hilbert_basis(a)) {
      t.rows.push_back({h.to_string()});
      inside = inside && a.contains(h);
    }
    r.summary.push_back({"size", std::to_string(hilbert_basis(a).size())});
    r.tables.push_back(std::move(t));
    r.check("basis lies in the monoid", inside, "true", bool_text(inside), provenance::kDefinition);
  } else if (inv.action == "split") {
    const PointedSplit& s = pointed_split(a);
    Table units{"unit basis", {"element"}, {}};
    for (const auto& u : s.unit_basis) units.rows.push_back({u.to_string()});
    Table pointed{"hilbert basis of the pointed part", {"element"}, {}};
    for (const auto& h : hilbert_basis(*s.pointed)) pointed.rows.push_back({h.to_string()});
    r.summary.push_back({"unit_rank", std::to_string(s.unit_basis.size())});
    r.summary.push_back({"pointed_rank", std::to_string(s.pointed->rank())});
    r.tables.push_back(std::move(units));
    r.tables.push_back(std::move(pointed));
    const bool ranks = s.unit_basis.size() + s.pointed->rank() == a.rank();
    r.check("unit rank plus pointed rank is the lattice rank", ranks, std::to_string(a.rank()),
            std::to_string(s.unit_basis.size() + s.pointed->rank()), provenance::kDefinition);
    const bool no_units = s.pointed->is_pointed();
    r.check("pointed part has no units", no_units, "true", bool_text(no_units), provenance::kDefinition);
  } else {
    throw Error(ErrorKind::UnknownCommand, "monoid " + inv.action);
  }
  return r;
}

Table fan_table(const std::string& name, const Fan& f) {
  Table t{name, {"dim", "rays"}, {}};
  for (const auto& c : f.maximal_cones()) t.rows.push_back({std::to_string(c.dim()), cone_rays_text(c)});
  return t;
}

LatticeVector ray_input(const Invocation& inv, std::size_t rank) {
  if (inv.ray.empty()) bad_input("--ray is required");
  LatticeVector v = parse_vector(inv.ray, "--ray");
  if (v.rank() != rank) throw Error(ErrorKind::RankMismatch, "--ray has the wrong length");
  return v;
}

bool all_smooth(const Fan& f) {
  return std::all_of(f.cones().begin(), f.cones().end(), [](const Cone& c) { return classify(c).smooth; });
}

Report fan_command(const Invocation& inv) {
  Report r;
  if (inv.action == "validate") {
    FanInput in = fan_input(inv, false);
    r.input_digest = digest(in.canonical);
    FanCheck check = validate(in.fan);
    r.tables.push_back(fan_table("maximal cones", in.fan));
    std::string witnesses;
    for (const auto& c : check.witnesses) witnesses += " " + c.to_string();
    r.check("fan axioms", check.ok, "ok", check.ok ? "ok" : check.axiom + ":" + witnesses, provenance::kDefinition);
    if (check.ok) {
      r.summary.push_back({"cones", std::to_string(in.fan.cones().size())});
      r.summary.push_back({"complete", bool_text(is_complete(in.fan))});
      r.summary.push_back({"smooth", bool_text(all_smooth(in.fan))});
    }
    return r;
  }
  FanInput in = fan_input(inv);
  r.input_digest = digest(in.canonical);
  if (inv.action == "subdivide") {
    const LatticeVector v = ray_input(inv, in.fan.rank());
    Fan g = star_subdivision(in.fan, v);
    r.tables.push_back(fan_table("maximal cones after subdivision", g));
    const bool ok = validate(g).ok;
    r.check("subdivision is a fan", ok, "true", bool_text(ok), provenance::kDefinition);
    const auto rays = g.rays();
    const bool has = std::find(rays.begin(), rays.end(), primitive(v)) != rays.end();
    r.check("new ray is a ray of the subdivision", has, "true", bool_text(has), provenance::kDefinition);
  } else if (inv.action == "resolve") {
    Resolution res = resolve(in.fan);
    Table trail{"trail", {"step", "ray"}, {}};
    for (std::size_t i = 0; i < res.trail.size(); ++i) trail.rows.push_back({std::to_string(i + 1), res.trail[i].to_string()});
    r.tables.push_back(std::move(trail));
    r.tables.push_back(fan_table("maximal cones after resolution", res.fan));
    const bool smooth = all_smooth(res.fan), ok = validate(res.fan).ok;
    r.check("resolution is smooth", smooth, "true", bool_text(smooth), provenance::kDefinition);
    r.check("resolution is a fan", ok, "true", bool_text(ok), provenance::kDefinition);
  } else if (inv.action == "square") {
    const LatticeVector v = ray_input(inv, in.fan.rank());
    BlowupSquare sq = blowup_square(in.fan, v);
    r.summary.push_back({"new_ray", sq.new_ray.to_string()});
    r.summary.push_back({"minimal_cone", sq.minimal_cone.to_string()});
    r.summary.push_back({"degenerate", bool_text(sq.degenerate)});
    r.summary.push_back({"center_rank", std::to_string(sq.v.fan_bar.rank())});
    r.summary.push_back({"exceptional_rank", std::to_string(sq.v_prime.fan_bar.rank())});
    r.tables.push_back(fan_table("maximal cones after subdivision", sq.subdivided));
    r.tables.push_back(fan_table("center fan", sq.v.fan_bar));
    r.tables.push_back(fan_table("exceptional fan", sq.v_prime.fan_bar));
    r.check("cones away from the center agree", sq.complement_matches, "true", bool_text(sq.complement_matches),
            provenance::kDefinition);
  } else {
    throw Error(ErrorKind::UnknownCommand, "fan " + inv.action);
  }
  return r;
}

Report forms_command(const Invocation& inv, const FanInput& in) {
  if (inv.action != "table") throw Error(ErrorKind::UnknownCommand, "forms " + inv.action);
  const Cone c = cone_input(inv, in);
  const std::size_t p = need_p(inv, 1);
  Report r;
  r.summary.push_back({"cone", c.to_string()});
  r.summary.push_back({"degree", std::to_string(p)});
  const auto weights = weights_for(inv, c.rank(), r);
  struct Row {
    std::size_t tilde, image;
    bool contained;
  };
  auto rows = sweep(weights, [&](const LatticeVector& m) {
    auto t = tilde_omega_weight(c, m, p);
    auto i = omega_image_weight(c, m, p);
    return Row{t.dim(), i.dim(), t.space.contains(i.space)};
  }, inv.parallel);
  Table t{"forms", {"weight", "tilde", "image", "coker"}, {}};
  bool contained = true;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    t.rows.push_back({weights[k].to_string(), std::to_string(rows[k].tilde), std::to_string(rows[k].image),
                      std::to_string(rows[k].tilde - rows[k].image)});
    contained = contained && rows[k].contained;
  }
  r.tables.push_back(std::move(t));
  r.check("image contained in tilde", contained, "true", bool_text(contained), provenance::kDefinition);
  return r;
}

Table cohomology_table(const std::string& name, const std::vector<LatticeVector>& weights,
                       const std::vector<std::vector<std::size_t>>& h) {
  std::size_t len = 0;
  for (const auto& row : h) len = std::max(len, row.size());
  Table t{name, {"weight"}, {}};
  for (std::size_t q = 0; q < len; ++q) t.columns.push_back(h_column(q));
  for (std::size_t k = 0; k < weights.size(); ++k) {
    std::vector<std::string> row{weights[k].to_string()};
    for (std::size_t q = 0; q < len; ++q) row.push_back(std::to_string(q < h[k].size() ? h[k][q] : 0));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Report cech_command(const Invocation& inv, const FanInput& in) {
  const CechCover cover(in.fan);
  Report r;
  const auto weights = weights_for(inv, in.fan.rank(), r);
  struct Row {
    std::vector<std::size_t> h;
    bool ok = true;
  };
  std::function<Row(const LatticeVector&)> fn;
  std::optional<BlowupSquare> square;
  std::string name, check_name, check_text;
  if (inv.action == "cohomology") {
    const SheafSpec sheaf = SheafSpec::parse(inv.sheaf);
    r.summary.push_back({"sheaf", sheaf.to_string()});
    name = "cech cohomology of " + sheaf.to_string();
    check_name = "differential squares to zero";
    fn = [&, sheaf](const LatticeVector& m) {
      auto c = cover.complex(sheaf, m).complex;
      return Row{c.cohomology_dims(), c.squares_to_zero()};
    };
  } else if (inv.action == "hyper") {
    const std::size_t t = inv.t.value_or(1);
    r.summary.push_back({"truncation", std::to_string(t)});
    name = "truncated de Rham hypercohomology";
    check_name = "total differential squares to zero";
    fn = [&, t](const LatticeVector& m) {
      auto c = truncated_de_rham(cover, t, m).total();
      return Row{c.cohomology_dims(), c.squares_to_zero()};
    };
  } else if (inv.action == "cone") {
    name = "mapping cone of image 1 -> tilde 1";
    check_name = "H^0 vanishes";
    fn = [&](const LatticeVector& m) {
      auto h = form_mapping_cone(cover, m).total().cohomology_dims();
      const bool ok = h.empty() || h[0] == 0;
      return Row{std::move(h), ok};
    };
  } else if (inv.action == "les") {
    const LatticeVector v = ray_input(inv, in.fan.rank());
    square = blowup_square(in.fan, v);
    const BlowupSquare& sq = *square;
    const std::size_t p = need_p(inv, 1);
    r.summary.push_back({"new_ray", sq.new_ray.to_string()});
    r.summary.push_back({"degree", std::to_string(p)});
    name = "long exact sequence ranks (pullback, difference, connecting)";
    check_name = "sequence is exact";
    fn = [&square, p](const LatticeVector& m) {
      auto rep = blowup_les_check(*square, p, m);
      std::vector<std::size_t> ranks;
      for (std::size_t q = 0; q < rep.rank_pullback.size(); ++q) {
        ranks.push_back(rep.rank_pullback[q]);
        ranks.push_back(rep.rank_difference[q]);
        ranks.push_back(q < rep.rank_connecting.size() ? rep.rank_connecting[q] : 0);
      }
      const bool iso = std::all_of(rep.comparison_iso.begin(), rep.comparison_iso.end(), [](bool b) { return b; });
      return Row{std::move(ranks), rep.exact && iso && rep.alternating_sum == 0};
    };
  } else {
    throw Error(ErrorKind::UnknownCommand, "cech " + inv.action);
  }
  auto rows = sweep(weights, fn, inv.parallel);
  std::vector<std::vector<std::size_t>> h;
  std::string failures;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    h.push_back(rows[k].h);
    if (!rows[k].ok) failures += (failures.empty() ? "" : " ") + weights[k].to_string();
  }
  Table t = cohomology_table(name, weights, h);
  if (inv.action == "les") {
    for (std::size_t q = 1; q < t.columns.size(); ++q) {
      static const char* kinds[] = {"pullback", "difference", "connecting"};
      t.columns[q] = std::string(kinds[(q - 1) % 3]) + std::to_string((q - 1) / 3);
    }
  }
  r.tables.push_back(std::move(t));
  r.check(check_name, failures.empty(), "at every weight", failures.empty() ? "at every weight" : "fails at " + failures,
          provenance::kDefinition);
  return r;
}

Report dilate_command(const Invocation& inv, const FanInput& in) {
  const Cone c = cone_input(inv, in);
  const std::size_t p = need_p(inv, 1);
  const auto seq = parse_sequence(inv.seq);
  if (inv.weight.empty()) bad_input("--weight is required");
  const LatticeVector m = parse_weight(inv.weight, c.rank());
  Report r;
  r.summary.push_back({"cone", c.to_string()});
  r.summary.push_back({"weight", m.to_string()});
  r.summary.push_back({"degree", std::to_string(p)});
  std::vector<std::size_t> seq_sizes(seq.begin(), seq.end());
  r.summary.push_back({"sequence", join(seq_sizes)});
  if (inv.action == "trace") {
    DilationTrace trace = dilation_chain(c, m, p, seq);
    Table t{"image chain", {"step", "weight", "image", "tilde"}, {}};
    for (std::size_t i = 0; i < trace.chain.size(); ++i)
      t.rows.push_back({std::to_string(i), trace.weights[i].to_string(), std::to_string(trace.chain[i].dim()),
                        std::to_string(trace.tilde.dim())});
    r.tables.push_back(std::move(t));
    r.summary.push_back({"stabilized_at", trace.stabilized_at ? std::to_string(*trace.stabilized_at) : "none"});
    const bool ok = trace.stabilized_at.has_value();
    r.check("image chain reaches tilde", ok, std::to_string(trace.tilde.dim()), join(trace.dims()),
            provenance::kDefinition);
  } else if (inv.action == "hh") {
    try {
      auto rep = hh_colimit_check(c, m, p, seq, HochschildOptions{});
      Table t{"Hochschild chain", {"step", "weight", "hochschild", "image"}, {}};
      for (std::size_t i = 0; i < rep.weights.size(); ++i)
        t.rows.push_back({std::to_string(i), rep.weights[i].to_string(), std::to_string(rep.hochschild_dims[i]),
                          std::to_string(rep.image_dims[i])});
      r.tables.push_back(std::move(t));
      r.summary.push_back({"stabilized_at", std::to_string(*rep.stabilized_at)});
      r.check("Hochschild chain reaches tilde", true, std::to_string(rep.tilde_dim), join(rep.hochschild_dims),
              provenance::kOracle);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotStabilized) throw;
      r.check("Hochschild chain reaches tilde", false, "stabilized", e.what(), provenance::kOracle);
    }
  } else {
    throw Error(ErrorKind::UnknownCommand, "dilate " + inv.action);
  }
  return r;
}

Report example_command(const Invocation& inv) {
  if (inv.window < 0) bad_input("--window must be nonnegative");
  if (inv.action == "hugeK1") return lab::run_hugeK1(inv.window, inv.parallel);
  if (inv.action == "huge") return lab::run_huge(inv.window, inv.parallel);
  const bool has_input = !inv.rays.empty() || !inv.fan_path.empty() || !inv.fixture.empty();
  if (inv.action == "k0") {
    Cone c = examples::tau();
    if (has_input) c = cone_input(inv, fan_input(inv));
    return lab::k0_affine_identity(c, inv.window, inv.parallel);
  }
  if (inv.action == "identities") {
    Fan f = has_input ? fan_input(inv).fan : examples::huge();
    return lab::structural_identities(f, inv.window, parse_sequence(inv.seq), inv.parallel);
  }
  throw Error(ErrorKind::UnknownCommand, "example " + inv.action);
}

std::string canonical_flags(const Invocation& inv) {
  std::ostringstream s;
  s << inv.group << " " << inv.action << "\nray=" << inv.ray << "\nweight=" << inv.weight << "\nsheaf=" << inv.sheaf
    << "\nseq=" << inv.seq << "\np=" << (inv.p ? std::to_string(*inv.p) : "") << "\nt="
    << (inv.t ? std::to_string(*inv.t) : "") << "\nwindow=" << inv.window << "\n";
  return s.str();
}

}  // namespace

Report dispatch(const Invocation& inv) {
  Report r;
  std::string input;
  if (inv.group == "fan") {
    r = fan_command(inv);
    input = r.input_digest;
  } else if (inv.group == "example" || inv.group == "paper") {
    r = example_command(inv);
    const bool has_input = !inv.rays.empty() || !inv.fan_path.empty() || !inv.fixture.empty();
    if (has_input) input = fan_input(inv).canonical;
  } else if (inv.group == "cone" || inv.group == "monoid" || inv.group == "forms" || inv.group == "cech" ||
             inv.group == "dilate") {
    FanInput in = fan_input(inv);
    input = in.canonical;
    if (inv.group == "cone") r = cone_command(inv, in);
    else if (inv.group == "monoid") r = monoid_command(inv, in);
    else if (inv.group == "forms") r = forms_command(inv, in);
    else if (inv.group == "cech") r = cech_command(inv, in);
    else r = dilate_command(inv, in);
  } else {
    throw Error(ErrorKind::UnknownCommand, "unknown command group '" + inv.group + "'");
  }
  r.command = inv.echo.empty() ? inv.group + " " + inv.action : inv.echo;
  r.input_digest = digest(canonical_flags(inv) + input);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric invariants: cones, monoids, fans, forms, Cech cohomology, dilations", "toricforms"};
  app.require_subcommand(1);
  Invocation inv;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--rays", inv.rays, "cone generators, e.g. \"1,0,0;1,2,0\"");
    cmd->add_option("--fan", inv.fan_path, "fan document (JSON)");
    cmd->add_option("--fixture", inv.fixture, "built-in fan: tau, huge, p1, p2, a1, orthant, orthant3");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", inv.format, "tsv or structured")->check(CLI::IsMember({"tsv", "structured"}));
    cmd->add_flag("--parallel", inv.parallel, "spread weight sweeps over a thread pool");
  };
  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--window", inv.window, "radius of the weight box")->capture_default_str();
  };

  struct Group {
    const char* name;
    const char* help;
    std::vector<const char*> actions;
  };
  const std::vector<Group> groups = {
      {"cone", "cones given by generators", {"dual", "faces", "classify"}},
      {"monoid", "the dual monoid of a cone", {"hilbert", "split"}},
      {"fan", "fan documents", {"validate", "subdivide", "resolve", "square", "export"}},
      {"forms", "weight pieces of forms on one chart", {"table"}},
      {"cech", "Cech cohomology over the charts of a fan", {"cohomology", "hyper", "cone", "les"}},
      {"dilate", "dilation chains", {"trace", "hh"}},
      {"example", "reference examples with verdicts", {"hugeK1", "huge", "k0", "identities"}},
  };
  for (const auto& g : groups) {
    CLI::App* group = app.add_subcommand(g.name, g.help);
    group->require_subcommand(1);
    if (std::string(g.name) == "example") group->alias("paper");
    for (const char* a : g.actions) {
      CLI::App* cmd = group->add_subcommand(a);
      add_input(cmd);
      add_common(cmd);
      add_window(cmd);
      cmd->add_option("--p", inv.p, "form degree");
      cmd->add_option("--t", inv.t, "truncation degree");
      cmd->add_option("--weight", inv.weight, "weight, e.g. \"1,0,0\"; \"0\" is the zero weight");
      cmd->add_option("--sheaf", inv.sheaf, "structure, tilde:p or image:p")->capture_default_str();
      cmd->add_option("--seq", inv.seq, "dilation factors, e.g. \"2,2,2\"");
      cmd->add_option("--ray", inv.ray, "ray for subdivisions and blow-ups");
      cmd->callback([&inv, g, a] {
        inv.group = g.name;
        inv.action = a;
      });
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& a : args)
    if (a != "--parallel") inv.echo += (inv.echo.empty() ? "" : " ") + a;
  try {
    if (inv.group == "fan" && inv.action == "export") {
      FanInput in = fan_input(inv);
      out << serialize(to_document(in.fan, in.name));
      return 0;
    }
    Report r = dispatch(inv);
    out << (inv.format == "structured" ? r.render_structured() : r.render_tsv());
    return r.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace toric::cli
