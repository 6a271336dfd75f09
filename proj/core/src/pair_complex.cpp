#include "ubcw/pair_complex.hpp"

#include "ubcw/errors.hpp"

namespace ubcw {

PairComplex::PairComplex(SemiSimplicialSet total,
                         std::vector<std::set<std::string>> sub_ids)
    : total_(std::move(total)), sub_(std::move(sub_ids)) {}

bool PairComplex::in_sub(int q, const std::string& id) const {
  if (q < 0 || q >= static_cast<int>(sub_.size())) return false;
  return sub_[q].count(id) > 0;
}

int PairComplex::sub_count(int q) const {
  if (q < 0 || q >= static_cast<int>(sub_.size())) return 0;
  return static_cast<int>(sub_[q].size());
}

ValidationReport PairComplex::validate() const {
  ValidationReport rep;
  for (int q = 0; q < static_cast<int>(sub_.size()); ++q) {
    for (const auto& id : sub_[q]) {
      int s = total_.index_of(q, id);
      if (s < 0) {
        rep.issues.push_back("subcomplex id '" + id + "' missing from ambient complex in degree " +
                             std::to_string(q));
        continue;
      }
      if (q >= 1) {
        for (int i = 0; i <= q; ++i) {
          const std::string& fid = total_.id_of(q - 1, total_.face(q, s, i));
          if (!in_sub(q - 1, fid))
            rep.issues.push_back("subcomplex not face-closed: d_" + std::to_string(i) +
                                 " of '" + id + "' escapes in degree " + std::to_string(q));
        }
      }
    }
  }
  return rep;
}

SemiSimplicialSet PairComplex::sub_complex() const {
  SemiSimplicialSet out(total_.name() + "|sub", total_.regular_flag());
  // Degree by degree; faces of a sub simplex are sub simplices (validate()).
  for (int q = 0; q < static_cast<int>(sub_.size()); ++q) {
    for (const auto& id : sub_[q]) {
      int s = total_.index_of(q, id);
      if (s < 0) throw PreconditionError("sub_complex: invalid subcomplex (run validate)");
      std::vector<int> fs;
      if (q >= 1) {
        fs.resize(q + 1);
        for (int i = 0; i <= q; ++i) {
          const std::string& fid = total_.id_of(q - 1, total_.face(q, s, i));
          int fi = out.index_of(q - 1, fid);
          if (fi < 0) throw PreconditionError("sub_complex: not face-closed (run validate)");
          fs[i] = fi;
        }
      }
      out.add_simplex(q, id, fs);
    }
  }
  return out;
}

Rat PairComplex::relative_norm(const Chain& c) const {
  Rat n = 0;
  for (const auto& [id, coef] : c.coeffs)
    if (!in_sub(c.q, id)) n += rat_abs(coef);
  return n;
}

Chain PairComplex::reduce_mod_sub(const Chain& c) const {
  Chain out;
  out.q = c.q;
  for (const auto& [id, coef] : c.coeffs)
    if (!in_sub(c.q, id)) out.coeffs.emplace(id, coef);
  return out;
}

}  // namespace ubcw
