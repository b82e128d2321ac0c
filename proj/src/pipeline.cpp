#include "symlift/pipeline.hpp"

namespace symlift::pipeline {

bool decode_via_gsl(std::uint64_t n, const ce::ColumnSchemeZ& s,
                    const ce::Enumerator& e, perm::Window w,
                    const vspace::Field& field) {
  using vspace::GslElement;
  GslElement W = vspace::delta_embed(field, ce::gen_w(s));
  GslElement G0 = vspace::delta_embed(field, ce::gen_g0(s));
  GslElement G1 = vspace::delta_embed(field, ce::gen_g1(s));
  GslElement B = vspace::delta_embed(field, ce::gen_b(s, e));

  GslElement Bn = B.conj(W.power(-static_cast<long long>(n)));
  GslElement c0 = GslElement::comm(G0, Bn);
  GslElement c1 = GslElement::comm(G1, Bn);
  return vspace::nsim_identity(c0.rep(), w) || vspace::nsim_identity(c1.rep(), w);
}

bool decode_via_ba(std::uint64_t n, const ce::ColumnSchemeZ& s,
                   const ce::Enumerator& e, perm::Window w) {
  if (w.bound < ce::window_covering_column0(s, e.horizon() + 2))
    throw std::invalid_argument(
        "window too small: decode needs column-0 indices up to horizon + 2");
  auto b = ce::gen_b(s, e);
  auto wg = ce::gen_w(s);
  auto transported = perm::conj(b, perm::pow(wg, -static_cast<long long>(n)));
  intalg::InducedAut u0(perm::comm(ce::gen_g0(s), transported));
  intalg::InducedAut u1(perm::comm(ce::gen_g1(s), transported));
  for (std::uint64_t j = 0; j <= e.horizon() + 1; ++j) {
    auto block = intalg::BElem::unit_block(
        static_cast<long long>(s.encode(0, j)));
    if (!(u0.apply(block) == block) || !(u1.apply(block) == block)) return true;
  }
  return false;
}

}  // namespace symlift::pipeline
