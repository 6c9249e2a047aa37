#include "woundlab/report.hpp"

namespace woundlab {

namespace {
const char* move_name(ReductionMove::Kind k) {
  switch (k) {
    case ReductionMove::Kind::UMove: return "u-move";
    case ReductionMove::Kind::VMoveTrade: return "v-move-trade";
    case ReductionMove::Kind::VMoveErase: return "v-move-erase";
    case ReductionMove::Kind::SelfMove: return "self-move";
    case ReductionMove::Kind::HenselAbsorb: return "hensel-absorb";
    case ReductionMove::Kind::FieldExtension: return "field-extension";
    case ReductionMove::Kind::Normalize: return "normalize";
  }
  return "?";
}
}  // namespace

Json torsor_json(const NormalForm& nf, bool with_trace) {
  Json j;
  j["normal_form"] = nf.reduced.to_string();
  j["trivial"] = nf.trivial;
  if (nf.lang_k)
    j["lang_k"] = *nf.lang_k;
  else
    j["lang_k"] = nullptr;
  if (nf.lang_degree)
    j["lang_n"] = *nf.lang_degree;
  else
    j["lang_n"] = nullptr;
  j["field"] = nf.tower.top()->name;
  if (with_trace) {
    Json trace = Json::array();
    for (auto& mv : nf.trace) {
      Json m;
      m["move"] = move_name(mv.kind);
      if (mv.kind == ReductionMove::Kind::Normalize)
        m["shift"] = mv.depth;
      else if (mv.depth > 0)
        m["depth"] = mv.depth;
      if (!mv.u_piece.is_zero()) m["u"] = mv.u_piece.to_string();
      if (!mv.v_piece.is_zero()) m["v"] = mv.v_piece.to_string();
      m["note"] = mv.note;
      trace.push_back(m);
    }
    j["trace"] = trace;
  }
  return j;
}

Json cohomology_json(const CohomologyReport& rep) {
  Json j;
  j["d"] = rep.d;
  j["r"] = rep.r;
  j["h1G"] = Json{{"torsion", rep.torsion}, {"rank", rep.r}};
  j["h2"] = 0;
  j["h1L_dim"] = rep.h1L_dim;
  j["experimental"] = rep.experimental;
  if (rep.kernel_ext > 0) {
    j["kernel_ext_degree"] = rep.kernel_ext;
    Json basis = Json::array();
    for (auto& vec : rep.kernel_basis) {
      Json row = Json::array();
      for (auto& x : vec) row.push_back(x.to_string());
      basis.push_back(row);
    }
    j["fixed_point_basis"] = basis;
  }
  return j;
}

}  // namespace woundlab
