#include "symlift/intalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symlift::intalg {

// ---------------------------------------------------------------------------
// Endpoints and normal form

bool Endpoint::operator<(const Endpoint& o) const {
  if (kind == Kind::NegInf) return o.kind != Kind::NegInf;
  if (kind == Kind::PosInf) return false;
  if (o.kind == Kind::NegInf) return false;
  if (o.kind == Kind::PosInf) return true;
  return value < o.value;
}

std::string Endpoint::str() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: return value.str();
  }
  return "?";
}

Endpoint Endpoint::parse(const std::string& text) {
  if (text == "-inf") return neg_inf();
  if (text == "+inf" || text == "inf") return pos_inf();
  return at(Rational::parse(text));
}

BElem BElem::one() { return interval(Endpoint::neg_inf(), Endpoint::pos_inf()); }

BElem BElem::interval(const Endpoint& lo, const Endpoint& hi) {
  return from_intervals({Interval{lo, hi}});
}

BElem BElem::interval(const Rational& lo, const Rational& hi) {
  return interval(Endpoint::at(lo), Endpoint::at(hi));
}

BElem BElem::unit_block(long long n) {
  return interval(Rational(n), Rational(n + 1));
}

BElem BElem::from_intervals(std::vector<Interval> parts) {
  for (const auto& iv : parts)
    if (!(iv.lo < iv.hi))
      throw std::invalid_argument("interval with lo >= hi");
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo;
  });
  BElem out;
  for (const auto& iv : parts) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      // overlap or touch: extend
      if (out.parts_.back().hi < iv.hi) out.parts_.back().hi = iv.hi;
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

bool BElem::is_one() const {
  return parts_.size() == 1 && parts_[0].lo == Endpoint::neg_inf() &&
         parts_[0].hi == Endpoint::pos_inf();
}

bool BElem::contains_point(const Rational& q) const {
  Endpoint e = Endpoint::at(q);
  for (const auto& iv : parts_)
    if (iv.lo <= e && e < iv.hi) return true;
  return false;
}

std::string BElem::str() const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  std::string s;
  for (const auto& iv : parts_) {
    if (!s.empty()) s += ";";
    s += "[" + iv.lo.str() + "," + iv.hi.str() + ")";
  }
  return s;
}

BElem BElem::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  std::vector<Interval> parts;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ';')) {
    if (piece.empty()) continue;
    if (piece.front() != '[' || piece.back() != ')')
      throw std::invalid_argument("interval literal must look like [a,b)");
    auto comma = piece.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("interval literal needs a comma");
    parts.push_back({Endpoint::parse(piece.substr(1, comma - 1)),
                     Endpoint::parse(piece.substr(comma + 1, piece.size() - comma - 2))});
  }
  return from_intervals(std::move(parts));
}

// ---------------------------------------------------------------------------
// Boolean operations

BElem join(const BElem& a, const BElem& b) {
  std::vector<Interval> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return BElem::from_intervals(std::move(parts));
}

BElem meet(const BElem& a, const BElem& b) {
  std::vector<Interval> parts;
  for (const auto& x : a.parts())
    for (const auto& y : b.parts()) {
      Endpoint lo = x.lo < y.lo ? y.lo : x.lo;
      Endpoint hi = x.hi < y.hi ? x.hi : y.hi;
      if (lo < hi) parts.push_back({lo, hi});
    }
  return BElem::from_intervals(std::move(parts));
}

BElem complement(const BElem& a) {
  std::vector<Interval> parts;
  Endpoint cursor = Endpoint::neg_inf();
  for (const auto& iv : a.parts()) {
    if (cursor < iv.lo) parts.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < Endpoint::pos_inf()) parts.push_back({cursor, Endpoint::pos_inf()});
  return BElem::from_intervals(std::move(parts));
}

BElem diff(const BElem& a, const BElem& b) { return meet(a, complement(b)); }

bool leq(const BElem& a, const BElem& b) { return meet(a, b) == a; }

// ---------------------------------------------------------------------------
// Induced automorphisms

InducedAut::InducedAut(perm::ExprPtr p, std::uint64_t piece_budget)
    : p_(std::move(p)), finitary_(perm::finitary_closure(*p_)),
      piece_budget_(piece_budget) {}

Rational InducedAut::apply_point(const Rational& q) const {
  if (q < Rational(0)) return q;
  long long n = q.floor_int();
  perm::Point image = perm::eval(*p_, static_cast<perm::Point>(n));
  return Rational(static_cast<long long>(image)) + q.frac();
}

BElem InducedAut::apply(const BElem& x) const {
  std::vector<Interval> out;
  std::uint64_t pieces = 0;
  for (const auto& iv : x.parts()) {
    // negative portion is fixed pointwise
    Endpoint zero = Endpoint::at(Rational(0));
    if (iv.lo < zero) {
      Endpoint hi = iv.hi < zero ? iv.hi : zero;
      out.push_back({iv.lo, hi});
    }
    Endpoint lo = iv.lo < zero ? zero : iv.lo;
    if (!(lo < iv.hi)) continue;

    long long start = lo.value.floor_int();
    std::optional<long long> stop;  // exclusive block bound, when finite
    if (iv.hi.kind == Endpoint::Kind::Finite) {
      Rational h = iv.hi.value;
      stop = h.frac().is_zero() ? h.floor_int() : h.floor_int() + 1;
    } else {
      // unbounded tail: everything beyond the support is fixed, so a
      // finitary certificate lets the tail pass through unchanged
      if (!finitary_)
        throw std::runtime_error(
            "interval with unbounded non-negative part needs a finitary "
            "permutation");
      long long bound = static_cast<long long>(finitary_->max_support()) + 1;
      if (start >= bound) {
        out.push_back({lo, iv.hi});
        continue;
      }
      stop = bound;
      out.push_back({Endpoint::at(Rational(bound)), iv.hi});
    }
    for (long long n = start; n < *stop; ++n) {
      if (++pieces > piece_budget_)
        throw std::runtime_error("interval image exceeded the piece budget");
      Rational block_lo(n), block_hi(n + 1);
      Rational piece_lo = lo.value < block_lo ? block_lo : lo.value;
      Rational piece_hi = block_hi;
      if (iv.hi.kind == Endpoint::Kind::Finite && iv.hi.value < block_hi)
        piece_hi = iv.hi.value;
      if (!(piece_lo < piece_hi)) continue;
      auto image = static_cast<long long>(
          perm::eval(*p_, static_cast<perm::Point>(n)));
      out.push_back({Endpoint::at(Rational(image) + (piece_lo - block_lo)),
                     Endpoint::at(Rational(image) + (piece_hi - block_lo))});
    }
  }
  return BElem::from_intervals(std::move(out));
}

BElem apply_H(const perm::ExprPtr& p, const BElem& x) {
  return InducedAut(p).apply(x);
}

// ---------------------------------------------------------------------------
// Phi classes

PhiClass PhiClass::finitary(const perm::FinPerm& f) {
  PhiClass c;
  c.fin_ = f;
  c.action_ = perm::fin(f);
  return c;
}

PhiClass PhiClass::certified_infinite(const perm::ExprPtr& e) {
  const perm::Atom* a = nullptr;
  if (auto* node = std::get_if<perm::AtomNode>(&e->node())) a = node->atom.get();
  if (!a || !a->swap_family || !a->fixed_family)
    throw std::invalid_argument(
        "certified class needs an atom with swap and fixed families");
  PhiClass c;
  auto swaps = a->swap_family;
  c.moved_ = [swaps](std::uint64_t k) {
    auto pair = swaps(k / 2);
    return k % 2 == 0 ? pair.a : pair.b;
  };
  c.fixed_ = a->fixed_family;
  c.action_ = e;
  return c;
}

const perm::FinPerm& PhiClass::fin() const {
  if (!fin_) throw std::logic_error("not a finitary class");
  return *fin_;
}

perm::Point PhiClass::kth_moved_int(std::uint64_t k) const {
  if (fin_) {
    auto s = fin_->support();
    if (k >= s.size()) throw std::out_of_range("finitary class: moved index");
    return s[k];
  }
  return moved_(k);
}

perm::Point PhiClass::kth_fixed_int(std::uint64_t k) const {
  if (fin_)
    throw std::logic_error("finitary classes do not enumerate fixed points");
  return fixed_(k);
}

PhiClass PhiClass::conjugate_by(const perm::FinPerm& q) const {
  auto rename = [q](std::function<perm::Point(std::uint64_t)> family) {
    // q only touches finitely many points: the images of the family values
    // below q's bound get re-sorted, the tail is untouched.
    perm::Point bound = q.max_support() + 1;
    std::vector<perm::Point> head;
    std::uint64_t k = 0;
    while (true) {
      perm::Point v = family(k);
      if (v >= bound) break;
      head.push_back(q.apply(v));
      ++k;
    }
    std::sort(head.begin(), head.end());
    std::uint64_t tail_start = k;
    return std::function<perm::Point(std::uint64_t)>(
        [head, tail_start, family](std::uint64_t i) {
          if (i < head.size()) return head[i];
          return family(tail_start + (i - head.size()));
        });
  };

  PhiClass c;
  if (fin_) {
    // q' p q as a finite permutation
    std::map<perm::Point, perm::Point> moves;
    for (auto [a, b] : fin_->moves()) moves.emplace(q.apply(a), q.apply(b));
    c.fin_ = perm::FinPerm(moves);
    c.action_ = perm::fin(*c.fin_);
    return c;
  }
  c.moved_ = rename(moved_);
  c.fixed_ = rename(fixed_);
  c.action_ = perm::conj(action_, perm::fin(q));
  return c;
}

// ---------------------------------------------------------------------------
// Moved regions and the discriminators

MovedRegion moved_region(const PhiClass& c, perm::Window w) {
  std::vector<Interval> blocks;
  if (c.is_finitary()) {
    for (perm::Point n : c.fin().support()) {
      auto b = BElem::unit_block(static_cast<long long>(n));
      blocks.push_back(b.parts()[0]);
    }
    return {BElem::from_intervals(std::move(blocks)), false};
  }
  for (std::uint64_t k = 0;; ++k) {
    perm::Point n = c.kth_moved_int(k);
    if (n >= w.bound) break;
    blocks.push_back(BElem::unit_block(static_cast<long long>(n)).parts()[0]);
  }
  return {BElem::from_intervals(std::move(blocks)), true};
}

namespace {

// True when the unit block [n, n+1) is moved by the class's permutation.
bool block_moved(const PhiClass& c, long long n) {
  if (n < 0) return false;
  return perm::eval(*c.action(), static_cast<perm::Point>(n)) !=
         static_cast<perm::Point>(n);
}

}  // namespace

bool phi_holds(const BElem& u, const PhiClass& c) {
  if (u.is_zero()) return true;
  for (const auto& iv : u.parts()) {
    if (iv.lo.kind == Endpoint::Kind::NegInf) return false;  // negatives are fixed
    if (iv.hi.kind == Endpoint::Kind::PosInf) {
      if (c.is_finitary()) return false;  // fixed tail beyond the support
      // certified classes fix infinitely many blocks, so some fixed block
      // sits inside any tail
      return false;
    }
    long long start = iv.lo.value.floor_int();
    Rational h = iv.hi.value;
    long long stop = h.frac().is_zero() ? h.floor_int() : h.floor_int() + 1;
    for (long long n = start; n < stop; ++n)
      if (!block_moved(c, n)) return false;
  }
  return true;
}

PsiVerdict psi_check(const PhiClass& c, perm::Window w) {
  if (c.is_finitary()) {
    PsiVerdict v;
    v.kind = PsiVerdict::Kind::SupExists;
    v.sup = moved_region(c, w).region;
    return v;
  }
  if (c.kth_moved_int(1) >= w.bound)
    throw std::invalid_argument(
        "window too small to exhibit two moved blocks");

  PsiVerdict v;
  v.kind = PsiVerdict::Kind::NoSupEvidence;
  BElem window_moved = moved_region(c, w).region;
  v.refute = [c, w, window_moved](const BElem& candidate) -> PsiRefutation {
    // Not an upper bound: produce a moved block the candidate misses.
    if (!leq(window_moved, candidate)) {
      for (std::uint64_t k = 0;; ++k) {
        perm::Point n = c.kth_moved_int(k);
        if (n >= w.bound) break;
        BElem block = BElem::unit_block(static_cast<long long>(n));
        if (!leq(block, candidate))
          return {PsiRefutation::Kind::PhiElementNotBelow, block};
      }
      throw std::logic_error("containment failed without a witness block");
    }
    // Upper bound: it must swallow some fixed block, and removing that
    // block leaves a strictly smaller upper bound.
    for (std::uint64_t k = 0;; ++k) {
      perm::Point n = c.kth_fixed_int(k);
      if (n >= w.bound)
        throw std::invalid_argument(
            "window too small: candidate avoids every in-window fixed block");
      BElem block = BElem::unit_block(static_cast<long long>(n));
      if (leq(block, candidate))
        return {PsiRefutation::Kind::SmallerUpperBound, diff(candidate, block)};
    }
  };
  return v;
}

bool psi_conjugation_invariance(const PhiClass& c, const perm::FinPerm& q,
                                perm::Window w) {
  auto base = psi_check(c, w);
  auto conj = psi_check(c.conjugate_by(q), w);
  return base.kind == conj.kind;
}

// ---------------------------------------------------------------------------
// Kernel witness

KernelWitness kernel_witness(const perm::FinPerm& p) {
  if (p.is_identity())
    throw std::invalid_argument("kernel witness needs a nontrivial permutation");
  long long n = static_cast<long long>(p.support().front());
  KernelWitness k;
  k.a = BElem::unit_block(n);
  BElem abar = complement(k.a);
  auto expr = perm::fin(p);
  k.subalgebra = {BElem::zero(), k.a, abar, BElem::one()};
  k.image = {BElem::zero(), apply_H(expr, k.a), apply_H(expr, abar), BElem::one()};
  // the moved block lands wholly off itself, so the image set differs
  bool differs = true;
  for (const auto& el : k.subalgebra)
    if (el == k.image[1]) differs = false;
  if (!differs ||
      meet(k.a, k.image[1]) != BElem::zero())
    throw std::logic_error("kernel witness block was not moved off itself");
  return k;
}

}  // namespace symlift::intalg
