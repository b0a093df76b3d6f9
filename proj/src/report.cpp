#include "horofan/classify.hpp"
#include "horofan/cox.hpp"
#include "horofan/document.hpp"
#include "horofan/structure.hpp"

#include <sstream>

namespace horofan::io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json colour_names(const fan::ColourSet& colours, const fan::ColouredLattice& lattice) {
  ordered_json out = ordered_json::array();
  for (fan::ColourIndex c : colours) out.push_back(lattice.colour_name(c));
  return out;
}

ordered_json cone_json(const fan::ColouredCone& sc, const fan::ColouredLattice& lattice) {
  ordered_json out;
  out["rays"] = ordered_json::array();
  for (const auto& r : sc.cone.rays()) out["rays"].push_back(vector_json(r));
  out["colours"] = colour_names(sc.colours, lattice);
  out["dimension"] = sc.cone.dimension();
  return out;
}

ordered_json group_json(const lattice::FGAbelianGroup& g) {
  ordered_json out;
  out["free_rank"] = g.free_rank;
  out["torsion"] = vector_json(g.torsion);
  out["text"] = g.to_string();
  return out;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

std::string cone_text(const fan::ColouredCone& sc, const fan::ColouredLattice& lattice) {
  std::string s = "Cone(";
  for (std::size_t i = 0; i < sc.cone.rays().size(); ++i) s += (i ? ", " : "") + to_string(sc.cone.rays()[i]);
  s += "), {";
  bool first = true;
  for (fan::ColourIndex c : sc.colours) {
    s += (first ? "" : ", ") + lattice.colour_name(c);
    first = false;
  }
  return s + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void add_verdict(ordered_json& out, std::ostringstream& text, const classify::Verdict& v) {
  ordered_json verdict;
  verdict["simplicial"] = v.simplicial;
  verdict["regular"] = v.regular;
  verdict["vivid"] = v.vivid;
  verdict["toroidal"] = v.toroidal;
  verdict["q_factorial"] = v.q_factorial;
  verdict["factorial"] = v.factorial;
  verdict["smooth"] = v.smooth;
  verdict["quotient_singularities"] = v.quotient_singularities;
  out["verdict"] = std::move(verdict);

  text << "q-factorial:            " << yes_no(v.q_factorial) << "\n"
       << "factorial:              " << yes_no(v.factorial) << "\n"
       << "quotient singularities: " << yes_no(v.quotient_singularities) << "\n"
       << "smooth:                 " << yes_no(v.smooth) << "\n"
       << "toroidal:               " << yes_no(v.toroidal) << "\n";
}

void add_classification(ordered_json& out, std::ostringstream& text, const fan::ColouredFan& fan,
                        const dynkin::DynkinData& d) {
  const classify::Verdict v = classify::classify(fan, d);
  out["cones"] = ordered_json::array();
  text << "cones (" << fan.cones().size() << ", " << fan.added_faces() << " added as faces):\n";
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const auto& sc = fan.cones()[i];
    const auto& c = v.cones[i];
    ordered_json cone = cone_json(sc, fan.lattice());
    cone["simplicial"] = c.simplicial;
    cone["regular"] = c.regular;
    cone["vivid"] = c.vivid;
    cone["toroidal"] = c.toroidal;
    out["cones"].push_back(std::move(cone));
    text << "  [" << i << "] " << cone_text(sc, fan.lattice()) << "  simplicial=" << yes_no(c.simplicial)
         << " regular=" << yes_no(c.regular) << " vivid=" << yes_no(c.vivid) << "\n";
  }
  add_verdict(out, text, v);
}

ordered_json cox_json(const cox::CoxData& data, const fan::ColouredLattice& lattice, std::ostringstream& text) {
  ordered_json out;
  out["n_hat_rank"] = data.n_hat_rank;
  out["basis_index"] = ordered_json::array();
  for (const auto& b : data.basis_index) out["basis_index"].push_back(b.label(lattice));
  out["mu"] = matrix_json(data.mu);
  out["class_group"] = group_json(data.class_group);
  out["k_hat_rank"] = data.k_hat_rank;
  out["cox_fan"] = ordered_json::array();
  for (std::size_t i : data.cox_fan.maximal())
    out["cox_fan"].push_back(cone_json(data.cox_fan.cones()[i], data.cox_fan.lattice()));

  text << "rank of N^:  " << data.n_hat_rank << "\n"
       << "basis:       ";
  for (std::size_t i = 0; i < data.basis_index.size(); ++i) text << (i ? ", " : "") << data.basis_index[i].label(lattice);
  text << "\nmu:\n";
  for (std::size_t r = 0; r < data.mu.rows(); ++r) text << "  " << to_string(data.mu.row(r)) << "\n";
  text << "class group: " << data.class_group.to_string() << "\n"
       << "rank of K^:  " << data.k_hat_rank << "\n"
       << "maximal cones of the Cox fan:\n";
  for (std::size_t i : data.cox_fan.maximal())
    text << "  " << cone_text(data.cox_fan.cones()[i], data.cox_fan.lattice()) << "\n";
  return out;
}

ordered_json consistency_json(const cox::ConsistencyReport& c, std::ostringstream& text) {
  ordered_json out;
  out["cox_fan_regular"] = c.cox_fan_regular;
  out["vivid"] = c.vivid;
  out["cox_vivid"] = c.cox_vivid;
  out["cox_smooth"] = c.cox_smooth;
  out["affine"] = c.affine;
  if (c.projective_space_product) out["projective_space_product"] = *c.projective_space_product;
  if (c.cox_affine_space) out["cox_affine_space"] = *c.cox_affine_space;
  out["holds"] = c.holds();
  text << "consistency: " << (c.holds() ? "holds" : "FAILS") << " (vivid " << yes_no(c.vivid) << ", Cox fan vivid "
       << yes_no(c.cox_vivid) << ", Cox fan smooth " << yes_no(c.cox_smooth) << ")\n";
  return out;
}

}  // namespace

Report run(const FanDocument& doc, Command command, const RunOptions& options) {
  const Model model = build(doc);
  const auto& lattice = model.fan.lattice();
  ordered_json out;
  std::ostringstream text;

  switch (command) {
    case Command::classify: {
      out["command"] = "classify";
      add_classification(out, text, model.fan, model.diagram);
      break;
    }
    case Command::cox: {
      out["command"] = "cox";
      const cox::CoxData data = cox::cox_construct(model.fan);
      out["cox"] = cox_json(data, lattice, text);
      out["consistency"] = consistency_json(cox::cox_consistency(model.fan, data, model.diagram), text);
      break;
    }
    case Command::split: {
      out["command"] = "split";
      const cox::TorusSplit split = cox::torus_split(model.fan);
      out["quotient_rank"] = split.quotient_rank;
      out["n_prime_basis"] = ordered_json::array();
      for (const auto& b : split.n_prime_basis) out["n_prime_basis"].push_back(vector_json(b));
      out["restricted_fan"] = ordered_json::array();
      for (std::size_t i : split.restricted_fan.maximal())
        out["restricted_fan"].push_back(cone_json(split.restricted_fan.cones()[i], split.restricted_fan.lattice()));
      text << "rank of N/N': " << split.quotient_rank << "\nbasis of N':";
      for (const auto& b : split.n_prime_basis) text << " " << to_string(b);
      text << "\n";
      const cox::CoxData data = cox::cox_construct_with_torus_factors(model.fan);
      out["cox"] = cox_json(data, lattice, text);
      break;
    }
    case Command::local: {
      out["command"] = "local";
      if (!options.cone || *options.cone >= doc.cones.size())
        throw Error(ErrorCode::InvalidArgument, "local needs --cone with an index below " + std::to_string(doc.cones.size()));
      std::vector<IntVector> rays = doc.cones[*options.cone].rays;
      const auto index = model.fan.find(polyhedral::Cone::from_generators(rays, doc.lattice_rank));
      const auto& sc = model.fan.cones()[*index];
      const structure::LocalModel local = structure::affine_local(sc, lattice, model.diagram);
      out["cone"] = *options.cone;
      ordered_json levi;
      levi["nodes"] = local.levi_diagram.names();
      levi["parabolic"] = ordered_json::array();
      for (dynkin::NodeId v : local.levi_diagram.parabolic()) levi["parabolic"].push_back(local.levi_diagram.name(v));
      levi["torus_rank"] = local.levi_diagram.torus_rank();
      levi["components"] = ordered_json::array();
      for (const auto& comp : local.levi_diagram.components())
        levi["components"].push_back(dynkin::recognize_type(local.levi_diagram, comp).name());
      out["levi"] = std::move(levi);
      out["colour_points"] = ordered_json::object();
      for (std::size_t c = 0; c < local.restricted_lattice.colour_count(); ++c)
        out["colour_points"][local.restricted_lattice.colour_name(c)] = vector_json(local.restricted_lattice.colour_point(c));
      ordered_json cone = cone_json(local.cone, local.restricted_lattice);
      const auto flags = classify::classify_cone(local.cone, local.restricted_lattice, local.levi_diagram);
      cone["simplicial"] = flags.simplicial;
      cone["regular"] = flags.regular;
      cone["vivid"] = flags.vivid;
      cone["toroidal"] = flags.toroidal;
      out["local_cone"] = std::move(cone);

      text << "cone " << *options.cone << ": " << cone_text(local.cone, local.restricted_lattice) << "\nlevi roots:";
      for (const auto& n : local.levi_diagram.names()) text << " " << n;
      text << "\nlevi type:  ";
      bool first = true;
      for (const auto& comp : local.levi_diagram.components()) {
        text << (first ? "" : " x ") << dynkin::recognize_type(local.levi_diagram, comp).name();
        first = false;
      }
      if (first) text << "(torus)";
      text << "\nsimplicial=" << yes_no(flags.simplicial) << " regular=" << yes_no(flags.regular)
           << " vivid=" << yes_no(flags.vivid) << "\n";
      break;
    }
    case Command::decolour: {
      out["command"] = "decolour";
      const fan::ColouredFan result = structure::decolour(model.fan, options.keep);
      const FanDocument decoloured = to_document(doc, result);
      out["document"] = ordered_json::parse(print(decoloured));
      add_classification(out, text, result, model.diagram);
      break;
    }
  }
  return Report{std::move(out), text.str()};
}

}  // namespace horofan::io
