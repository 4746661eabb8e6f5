#include "qvol/potential.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qvol/errors.hpp"

namespace qvol {
namespace {

// Dilogarithm arguments of a non-degenerate crossing term, as (numerator
// port, denominator port, coefficient): Li2 appears with coefficient
// epsilon for the ratio z_num / z_den.
struct DilogPiece {
  int num, den, eps;
};
constexpr DilogPiece kPieces[4] = {
    {1, 0, +1},  // +Li2(z_f / z_e)
    {1, 2, -1},  // -Li2(z_f / z_g)
    {3, 2, +1},  // +Li2(z_h / z_g)
    {3, 0, -1},  // -Li2(z_h / z_e)
};

Complex zv(const Assignment& a, int side) { return a.z.at(side); }

// log(1 - num/den) with the pole guard.
Complex log_one_minus(Complex ratio, double tol, int crossing) {
  const Complex arg = 1.0 - ratio;
  if (std::abs(arg) <= tol)
    throw Error(ErrorCode::ArgumentOnCut,
                "gradient undefined: a z-ratio equals 1",
                {{"crossing", std::to_string(crossing)}});
  return clog(arg);
}

struct ShiftedLogs {
  std::map<int, Complex> lz;
  std::vector<Complex> lw;
};

ShiftedLogs make_logs(const PotentialFunction& pf, const Assignment& a,
                      const std::map<int, int>* z_shifts,
                      const std::vector<int>* w_shifts) {
  const Complex two_pi_i{0.0, 2.0 * kPi};
  ShiftedLogs out;
  for (const int k : pf.z_sides) {
    Complex l = clog(zv(a, k));
    if (z_shifts) {
      const auto it = z_shifts->find(k);
      if (it != z_shifts->end()) l += double(it->second) * two_pi_i;
    }
    out.lz[k] = l;
  }
  out.lw.resize(pf.w_count);
  for (int j = 0; j < pf.w_count; ++j) {
    Complex l = clog(a.w.at(j));
    if (w_shifts && j < int(w_shifts->size()))
      l += double((*w_shifts)[j]) * two_pi_i;
    out.lw[j] = l;
  }
  return out;
}

Complex eval_with_logs(const PotentialFunction& pf, const Assignment& a,
                       const ShiftedLogs& logs) {
  Complex v{};
  for (const CrossingTerm& t : pf.terms) {
    if (!t.degenerate) {
      for (const DilogPiece& p : kPieces)
        v += double(p.eps) * li2(zv(a, t.sides[p.num]) / zv(a, t.sides[p.den]));
    } else {
      const Complex lwe = logs.lw[t.windex[0]], lwf = logs.lw[t.windex[1]],
                    lwg = logs.lw[t.windex[2]];
      const Complex lze = logs.lz.at(t.sides[0]), lzf = logs.lz.at(t.sides[1]),
                    lzg = logs.lz.at(t.sides[2]), lzh = logs.lz.at(t.sides[3]);
      v += -lwe * lze + lwf * lzf - lwg * lzg + (lwe + lwg - lwf) * lzh;
    }
  }
  return v;
}

std::map<int, Complex> grad_z_with_logs(const PotentialFunction& pf,
                                        const Assignment& a,
                                        const ShiftedLogs& logs, double tol) {
  std::map<int, Complex> gr;
  for (const int k : pf.z_sides) gr[k] = Complex{};
  for (const CrossingTerm& t : pf.terms) {
    if (!t.degenerate) {
      for (const DilogPiece& p : kPieces) {
        const Complex l =
            log_one_minus(zv(a, t.sides[p.num]) / zv(a, t.sides[p.den]), tol,
                          t.crossing);
        gr[t.sides[p.num]] -= double(p.eps) * l;
        gr[t.sides[p.den]] += double(p.eps) * l;
      }
    } else {
      const Complex lwe = logs.lw[t.windex[0]], lwf = logs.lw[t.windex[1]],
                    lwg = logs.lw[t.windex[2]];
      gr[t.sides[0]] -= lwe;
      gr[t.sides[1]] += lwf;
      gr[t.sides[2]] -= lwg;
      gr[t.sides[3]] += lwe + lwg - lwf;
    }
  }
  return gr;
}

std::vector<Complex> grad_w_with_logs(const PotentialFunction& pf,
                                      const ShiftedLogs& logs) {
  std::vector<Complex> gw(pf.w_count);
  for (const CrossingTerm& t : pf.terms) {
    if (!t.degenerate) continue;
    const Complex lze = logs.lz.at(t.sides[0]), lzf = logs.lz.at(t.sides[1]),
                  lzg = logs.lz.at(t.sides[2]), lzh = logs.lz.at(t.sides[3]);
    gw[t.windex[0]] = lzh - lze;
    gw[t.windex[1]] = lzf - lzh;
    gw[t.windex[2]] = lzh - lzg;
  }
  return gw;
}

Complex v0_with_logs(const PotentialFunction& pf, const Assignment& a,
                     const ShiftedLogs& logs) {
  Complex v = eval_with_logs(pf, a, logs);
  const auto gz = grad_z_with_logs(pf, a, logs, 1e-12);
  const auto gw = grad_w_with_logs(pf, logs);
  for (const int k : pf.z_sides) v -= gz.at(k) * logs.lz.at(k);
  for (int j = 0; j < pf.w_count; ++j) v -= gw[j] * logs.lw[j];
  return v;
}

// Snapped dilogarithm argument for one piece of the class-reduced potential.
Complex class_ratio(const SimplifiedPotential& sp, const Assignment& a,
                    int num_side, int den_side) {
  const int rn = sp.rep[sp.side_class.at(num_side)];
  const int rd = sp.rep[sp.side_class.at(den_side)];
  return snap_below_cut(a.z.at(rn) / a.z.at(rd));
}

// acc[class] = z_class d(Vhat)/d(z_class), so that r = acc / (pi i).
std::vector<Complex> class_accumulators(const SimplifiedPotential& sp,
                                        const Assignment& a) {
  std::vector<Complex> acc(sp.classes.size());
  for (const CrossingTerm& t : sp.pf.terms) {
    if (t.degenerate) continue;
    for (const DilogPiece& p : kPieces) {
      const Complex u = class_ratio(sp, a, t.sides[p.num], t.sides[p.den]);
      const Complex l = clog(1.0 - u);
      acc[sp.side_class.at(t.sides[p.num])] -= double(p.eps) * l;
      acc[sp.side_class.at(t.sides[p.den])] += double(p.eps) * l;
    }
  }
  return acc;
}

}  // namespace

PotentialFunction build_potential(const LinkDiagram& d,
                                  const std::vector<bool>& degenerate) {
  PotentialFunction pf;
  pf.z_sides = d.sides;
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    const Crossing& c = d.crossings[j];
    CrossingTerm t;
    t.crossing = int(j);
    t.sign = c.sign;
    t.degenerate = degenerate.at(j);
    t.sides = {c.side_at(kPortE), c.side_at(kPortF), c.side_at(kPortG),
               c.side_at(kPortH)};
    if (t.degenerate) {
      t.windex = {pf.w_count, pf.w_count + 1, pf.w_count + 2};
      pf.w_count += 3;
    } else {
      t.windex = {-1, -1, -1};
    }
    pf.terms.push_back(t);
  }
  return pf;
}

Complex eval_potential(const PotentialFunction& pf, const Assignment& a) {
  return eval_with_logs(pf, a, make_logs(pf, a, nullptr, nullptr));
}

std::map<int, Complex> grad_z_all(const PotentialFunction& pf,
                                  const Assignment& a, double tol) {
  return grad_z_with_logs(pf, a, make_logs(pf, a, nullptr, nullptr), tol);
}

Complex grad_z(const PotentialFunction& pf, const Assignment& a, int side,
               double tol) {
  return grad_z_all(pf, a, tol).at(side);
}

std::vector<Complex> grad_w_all(const PotentialFunction& pf,
                                const Assignment& a) {
  return grad_w_with_logs(pf, make_logs(pf, a, nullptr, nullptr));
}

Complex grad_w(const PotentialFunction& pf, const Assignment& a, int crossing,
               int which) {
  const auto gw = grad_w_all(pf, a);
  for (const CrossingTerm& t : pf.terms)
    if (t.crossing == crossing && t.degenerate) return gw[t.windex.at(which)];
  throw Error(ErrorCode::MalformedJob,
              "crossing has no degenerate term",
              {{"crossing", std::to_string(crossing)}});
}

HReport check_saddle(const PotentialFunction& pf, const Assignment& a) {
  HReport rep;
  const auto gz = grad_z_all(pf, a);
  for (const auto& [k, g] : gz) {
    const double res = std::abs(std::exp(g) - 1.0);
    rep.z_residuals[k] = res;
    rep.max_residual = std::max(rep.max_residual, res);
  }
  for (const Complex& g : grad_w_all(pf, a)) {
    const double res = std::abs(std::exp(g) - 1.0);
    rep.w_residuals.push_back(res);
    rep.max_residual = std::max(rep.max_residual, res);
  }
  return rep;
}

Complex eval_V0(const PotentialFunction& pf, const Assignment& a) {
  return v0_with_logs(pf, a, make_logs(pf, a, nullptr, nullptr));
}

Complex eval_V0_shifted(const PotentialFunction& pf, const Assignment& a,
                        const std::map<int, int>& z_shifts,
                        const std::vector<int>& w_shifts) {
  return v0_with_logs(pf, a, make_logs(pf, a, &z_shifts, &w_shifts));
}

SimplifiedPotential build_simplified(const PotentialFunction& pf) {
  SimplifiedPotential sp;
  sp.pf = pf;

  std::map<int, int> parent;
  for (const int k : pf.z_sides) parent[k] = k;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const CrossingTerm& t : pf.terms) {
    if (!t.degenerate) continue;
    for (int i = 1; i < 4; ++i) {
      const int ra = find(t.sides[0]), rb = find(t.sides[i]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (const int k : pf.z_sides) groups[find(k)].push_back(k);
  for (auto& [root, members] : groups) {
    (void)root;
    std::sort(members.begin(), members.end());
    const int id = int(sp.classes.size());
    for (const int k : members) sp.side_class[k] = id;
    sp.rep.push_back(members.front());
    sp.classes.push_back(members);
  }
  return sp;
}

std::vector<Complex> r_values(const SimplifiedPotential& sp,
                              const Assignment& a, bool strict, double tol) {
  const auto acc = class_accumulators(sp, a);
  std::vector<Complex> rs;
  for (const Complex& v : acc) {
    const Complex r = v / Complex{0.0, kPi};
    if (strict && std::abs(r - std::round(r.real())) > tol)
      throw Error(ErrorCode::NotAtSaddle,
                  "class derivative is not an integer multiple of pi i",
                  {{"value", std::to_string(r.real())}});
    rs.push_back(r);
  }
  return rs;
}

Complex eval_Vhat0(const SimplifiedPotential& sp, const Assignment& a) {
  Complex v{};
  for (const CrossingTerm& t : sp.pf.terms) {
    if (t.degenerate) continue;
    for (const DilogPiece& p : kPieces)
      v += double(p.eps) *
           li2(class_ratio(sp, a, t.sides[p.num], t.sides[p.den]));
  }
  const auto acc = class_accumulators(sp, a);
  for (std::size_t k = 0; k < acc.size(); ++k)
    v -= acc[k] * clog(a.z.at(sp.rep[k]));
  return v;
}

}  // namespace qvol
