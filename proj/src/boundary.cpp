#include "kkw/boundary.hpp"

#include "kkw/sphere.hpp"

#include <stdexcept>

namespace kkw {

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::aI: return "aI";
    case CaseKind::aII: return "aII";
    case CaseKind::aIII: return "aIII";
    case CaseKind::b: return "b";
    case CaseKind::c: return "c";
  }
  return "?";
}

CaseKind parse_case(const std::string& s) {
  for (CaseKind k : {CaseKind::aI, CaseKind::aII, CaseKind::aIII, CaseKind::b, CaseKind::c})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown case " + s);
}

std::string CaseId::label() const {
  std::string r = "dim" + std::to_string(dim) + "/" + to_string(kind);
  if (part != "all") r += "/" + part;
  return r;
}

BoundaryPipe::BoundaryPipe(PointData data, SymbolSource source)
    : bank_(std::move(data)), source_(source) {
  int n = bank_.dim();
  if (n != 4 && n != 6) throw std::invalid_argument("BoundaryPipe: dimension must be 4 or 6");
  q_m1_ = bank_.q_m1();
  left_ = n == 4 ? q_m1_ : bank_.q_m3();
  bool lemma = source_ == SymbolSource::Lemma;
  sigma_m2_ = lemma ? bank_.q_m2_lemma() : bank_.q_m2_derived();
  if (n == 6) sigma_m4_ = lemma ? bank_.q_m4_lemma() : bank_.q_m4_derived();
}

std::vector<std::string> BoundaryPipe::parts(CaseKind kind) const {
  if (kind == CaseKind::b && dim() == 6) return sigma_m4_.names;
  if (kind == CaseKind::b || kind == CaseKind::c) return sigma_m2_.names;
  return {};
}

void BoundaryPipe::validate(const CaseId& id) const {
  if (id.dim != dim()) throw std::invalid_argument("case dimension does not match the pipe");
  if (id.part == "all") return;
  auto ps = parts(id.kind);
  for (const auto& p : ps)
    if (p == id.part) return;
  throw std::invalid_argument("invalid part " + id.part + " for case " + to_string(id.kind));
}

std::vector<IntegrandTerm> BoundaryPipe::case_terms(const CaseId& id) const {
  validate(id);
  int n = dim();
  std::vector<IntegrandTerm> out;
  const GaussRat minus_half = GaussRat::frac(-1, 2);
  const GaussRat minus_i(0, -1);
  XiRational r_val = q_m1_.restricted();
  XiRational r_plus = pi_plus(r_val);
  switch (id.kind) {
    case CaseKind::aI: {
      // -sum_{i<n} tr[d_{xi_i} pi+ sigma_r x d_{x_i} d_{xi_n} sigma_l]
      for (int i = 1; i < n; ++i) {
        XiRational x = pi_plus(q_m1_.value.d_xi(i).restrict());
        XiRational y = d_xi_n(left_.jet_restricted(i));
        out.push_back({"i=" + std::to_string(i), trace_pair(x, y) * GaussRat(-1)});
      }
      break;
    }
    case CaseKind::aII: {
      // -1/2 tr[pi+ d_{x_n} sigma_r x d_{xi_n}^2 sigma_l]
      XiRational x = pi_plus(q_m1_.jet_restricted(n));
      XiRational y = d_xi_n(d_xi_n(left_.restricted()));
      out.push_back({"j=1", trace_pair(x, y) * minus_half});
      break;
    }
    case CaseKind::aIII: {
      // -1/2 tr[d_{xi_n} pi+ sigma_r x d_{xi_n} d_{x_n} sigma_l]
      XiRational x = d_xi_n(r_plus);
      XiRational y = d_xi_n(left_.jet_restricted(n));
      out.push_back({"k=1", trace_pair(x, y) * minus_half});
      break;
    }
    case CaseKind::b:
    case CaseKind::c: {
      bool r_is_minus2 = id.kind == CaseKind::b ? n == 4 : n == 6;
      const SymbolParts& sp = (id.kind == CaseKind::b && n == 6) ? sigma_m4_ : sigma_m2_;
      for (std::size_t i = 0; i < sp.names.size(); ++i) {
        if (id.part != "all" && id.part != sp.names[i]) continue;
        XiRational part = sp.parts[i].restrict();
        XiRational x, y;
        if (r_is_minus2) {
          // -i tr[pi+ sigma_-2 x d_{xi_n} sigma_l]
          x = pi_plus(part);
          y = d_xi_n(left_.restricted());
        } else {
          // -i tr[pi+ sigma_-1 x d_{xi_n} sigma_l], sigma_l the lower-order part
          x = r_plus;
          y = d_xi_n(part);
        }
        out.push_back({sp.names[i], trace_pair(x, y) * minus_i});
      }
      break;
    }
  }
  return out;
}

XiRational BoundaryPipe::case_integrand(const CaseId& id) const {
  XiRational sum;
  bool first = true;
  for (auto& t : case_terms(id)) {
    if (first) sum = t.integrand, first = false;
    else sum += t.integrand;
  }
  if (first) throw std::logic_error("case_integrand: no terms");
  return sum;
}

CaseResult BoundaryPipe::compute_psi(const CaseId& id) const {
  int n = dim();
  CaseResult r;
  r.label = id.label();
  for (auto& t : case_terms(id)) {
    ProvenanceEntry e;
    e.term = t.term;
    if (!t.integrand.is_zero()) {
      CliffordElem li = line_integral(t.integrand);
      if (!li.is_scalar()) throw std::logic_error("compute_psi: traced integrand is not scalar");
      e.residue = li.identity_component();
      e.value = sphere_integrate(e.residue, n - 1);
    }
    r.value += e.value;
    r.provenance.push_back(std::move(e));
  }
  return r;
}

namespace {

CaseResult merge(const std::string& label, const std::vector<CaseResult>& rs) {
  CaseResult out;
  out.label = label;
  for (const auto& r : rs) {
    out.value += r.value;
    for (const auto& e : r.provenance) {
      ProvenanceEntry p = e;
      p.term = r.label + ":" + e.term;
      out.provenance.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

CaseResult BoundaryPipe::sum_boundary() const {
  std::vector<CaseResult> rs;
  for (CaseKind k : {CaseKind::aI, CaseKind::aII, CaseKind::aIII, CaseKind::b, CaseKind::c})
    rs.push_back(compute_psi({dim(), k, "all"}));
  return merge("dim" + std::to_string(dim()) + "/total", rs);
}

std::vector<CaseResult> BoundaryPipe::partial_sums() const {
  int n = dim();
  std::vector<CaseResult> out;
  out.push_back(merge("dim" + std::to_string(n) + "/a", {compute_psi({n, CaseKind::aI, "all"}),
                                                         compute_psi({n, CaseKind::aII, "all"}),
                                                         compute_psi({n, CaseKind::aIII, "all"})}));
  for (CaseKind k : {CaseKind::b, CaseKind::c}) {
    CaseResult all = compute_psi({n, k, "all"});
    out.push_back(all);
    for (const auto& e : all.provenance)
      out.push_back({CaseId{n, k, e.term}.label(), e.value, {e}});
  }
  return out;
}

std::vector<std::array<int, 5>> enumerate_case_tuples(int n) {
  if (n != 4 && n != 6) throw std::invalid_argument("enumerate_case_tuples: n must be 4 or 6");
  int p2 = n == 4 ? -1 : -3;
  std::vector<std::array<int, 5>> out;
  for (int r = -1; r >= -n; --r)
    for (int l = p2; l >= -n; --l)
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j)
          for (int a = 0; a <= n; ++a)
            if (r - k - a + l - j - 1 == -n) out.push_back({r, l, k, j, a});
  return out;
}

namespace {

Poly units(const PointData& d) { return sym::TrId() * sym::Pi() * sym::Omega(d.n - 1); }

void require_dim6(const PointData& d) {
  if (d.n != 6) throw std::invalid_argument("reference value defined in dimension 6 only");
}

// sum_h A(p,h) (nabla_al J)(e_j)_h = g(J(dx_p), (nabla_al J) e_j)
Poly g_j_nabla(const PointData& d, int p, int al, int j) {
  Poly r;
  for (int h = 1; h <= d.n; ++h) r += d.A(p, h) * d.boundary_nabla_j(al, j, h);
  return r;
}

}  // namespace

Poly reference_a_sum(const PointData& d) {
  require_dim6(d);
  int n = d.n;
  auto a = [&](int up, int low) { return d.A(up, low); };
  Poly tang, norm;
  for (int l = 1; l <= n; ++l) {
    for (int i = 1; i < n; ++i) tang += a(i, l) * a(i, l);
    norm += a(n, l) * a(n, l);
  }
  return (tang * GaussRat::frac(7, 640) + norm * GaussRat::frac(3, 128)) * d.h1 * units(d);
}

Poly reference_psi(CaseKind kind, const PointData& d) {
  require_dim6(d);
  int n = d.n;
  auto a = [&](int up, int low) { return d.A(up, low); };
  // sums shared by both cases
  Poly sq_ni, tr_tang, sq_ln, sq_li, sq_ij;
  for (int i = 1; i < n; ++i) {
    sq_ni += a(i, n) * a(i, n);
    tr_tang += a(i, i);
    for (int j = 1; j < n; ++j) sq_ij += a(i, j) * a(i, j);
  }
  for (int l = 1; l <= n; ++l) {
    sq_ln += a(n, l) * a(n, l);
    for (int i = 1; i < n; ++i) sq_li += a(i, l) * a(i, l);
  }
  Poly ann = a(n, n);
  if (kind == CaseKind::b) {
    Poly g1, g2, g3, da_tang;
    for (int al = 1; al <= n; ++al) g1 += g_j_nabla(d, al, al, n);
    for (int i = 1; i < n; ++i) {
      g2 += g_j_nabla(d, i, n, i);
      g3 += g_j_nabla(d, n, i, i);
      for (int l = 1; l <= n; ++l) da_tang += a(i, l) * d.DA(n, l, i);
    }
    Poly r = sq_ni * GaussRat::frac(1, 16) - tr_tang * ann * GaussRat::frac(1, 16) +
             sq_ln * GaussRat::frac(11, 128) - sq_ni * GaussRat::frac(1, 64) -
             sq_li * GaussRat::frac(23, 320) + sq_ij * GaussRat::frac(1, 64) +
             sq_li * g1 * GaussRat::frac(1, 64) - g2 * GaussRat::frac(1, 16) +
             g3 * GaussRat::frac(1, 16) - sq_ln * g1 * GaussRat::frac(1, 64);
    // the a_l^i d_{x_i} a_l^n term carries no h'(0)
    return (r * d.h1 + da_tang * GaussRat::frac(1, 8)) * units(d);
  }
  if (kind == CaseKind::c) {
    Poly x;  // sum_{l,j} a_l^j d_{x_j} a_l^n
    for (int l = 1; l <= n; ++l)
      for (int j = 1; j <= n; ++j) x += a(j, l) * d.DA(n, l, j);
    Poly no_h1 = -(sq_ln * x) * GaussRat::frac(1, 64) - (sq_li * x) * GaussRat::frac(1, 64) -
                 x * GaussRat::frac(1, 32);
    Poly with_h1 = sq_ln * tr_tang * ann * GaussRat::frac(1, 256) +
                   sq_li * tr_tang * ann * GaussRat::frac(3, 256) +
                   sq_ln * sq_ln * GaussRat::frac(1, 256) + sq_ln * sq_li * GaussRat::frac(49, 1280) -
                   sq_ni * sq_ln * GaussRat::frac(3, 256) - sq_ni * sq_li * GaussRat::frac(5, 256) -
                   sq_ln * sq_ij * GaussRat::frac(1, 64);
    return (no_h1 + with_h1 * d.h1) * units(d);
  }
  throw std::invalid_argument("reference_psi: only cases b and c have closed forms");
}

Poly reference_total(const PointData& d) {
  if (d.n == 4) return Poly();
  require_dim6(d);
  Poly ann = d.A(d.n, d.n);
  return (Poly(1) - ann * ann) * d.h1 * units(d) * GaussRat::frac(-1, 16);
}

Poly substitute_constants(const Poly& p, int n) {
  return p.substitute([n](VarId v) -> std::optional<Poly> {
    switch (var::kind(v)) {
      case SymKind::TrId: return Poly(1L << (n / 2));
      case SymKind::OmegaArea: {
        // area of the unit sphere in R^m
        int m = var::index(v, 0);
        if (m == 3) return Poly(4) * sym::Pi();
        if (m == 4) return Poly(2) * sym::Pi() * sym::Pi();
        if (m == 5) return Poly(GaussRat::frac(8, 3)) * sym::Pi() * sym::Pi();
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  });
}

}  // namespace kkw
