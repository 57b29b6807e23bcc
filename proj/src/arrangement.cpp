#include "rsq/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rsq/jsonio.hpp"

namespace rsq {

namespace {

std::string vec_key(const Vec3& v) {
  return rational_to_string(v[0]) + "|" + rational_to_string(v[1]) + "|" +
         rational_to_string(v[2]);
}

int sign_dot(const Vec3& l, const Vec3& p) { return sign_of(dot(l, p)); }

// Integer direction (s, t) in the parameter plane of one line.
struct Dir2 {
  BigInt s, t;
};

Dir2 normalize_dir(const Rat& s, const Rat& t) {
  BigInt l = boost::multiprecision::lcm(rat_den(s), rat_den(t));
  BigInt ns = rat_num(s) * (l / rat_den(s));
  BigInt nt = rat_num(t) * (l / rat_den(t));
  BigInt g = boost::multiprecision::gcd(abs(ns), abs(nt));
  if (g != 0) {
    ns /= g;
    nt /= g;
  }
  return Dir2{ns, nt};
}

// Octant index walking counterclockwise from the positive s-axis.
int octant(const Dir2& d) {
  if (d.s > 0 && d.t == 0) return 0;
  if (d.s > 0 && d.t > 0) return 1;
  if (d.s == 0 && d.t > 0) return 2;
  if (d.s < 0 && d.t > 0) return 3;
  if (d.s < 0 && d.t == 0) return 4;
  if (d.s < 0 && d.t < 0) return 5;
  if (d.s == 0 && d.t < 0) return 6;
  return 7;
}

BigInt cross2(const Dir2& a, const Dir2& b) { return a.s * b.t - a.t * b.s; }

bool dir_less(const Dir2& a, const Dir2& b) {
  int oa = octant(a), ob = octant(b);
  if (oa != ob) return oa < ob;
  return cross2(a, b) > 0;
}

Vec3 combine(const BigInt& s, const Vec3& b1, const BigInt& t, const Vec3& b2) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = Rat(s) * b1[i] + Rat(t) * b2[i];
  return r;
}

} // namespace

CellComplex build_cell_complex(const LineArrangement& a) {
  if (a.k < 1) throw DomainError("arrangement: k must be positive");
  if (static_cast<int>(a.lines.size()) != 2 * a.k)
    throw DomainError("arrangement: expected " + std::to_string(2 * a.k) +
                      " lines, got " + std::to_string(a.lines.size()));
  std::vector<Vec3> L;
  std::set<std::string> seen;
  for (size_t i = 0; i < a.lines.size(); ++i) {
    if (is_zero(a.lines[i]))
      throw DomainError("arrangement: line " + std::to_string(i) + " is the zero triple");
    Vec3 nl = projective_normalize(a.lines[i]);
    if (!seen.insert(vec_key(nl)).second)
      throw DomainError("arrangement: line " + std::to_string(i) +
                        " repeats an earlier line");
    L.push_back(nl);
  }
  const int n = static_cast<int>(L.size());

  CellComplex c;
  std::map<std::string, int> pt_index;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec3 p = projective_normalize(cross(L[i], L[j]));
      std::string key = vec_key(p);
      if (pt_index.count(key)) continue;
      pt_index[key] = static_cast<int>(c.points.size());
      ArrPoint ap;
      ap.coords = p;
      for (int m = 0; m < n; ++m)
        if (sign_dot(L[m], p) == 0) ap.lines.push_back(m);
      c.points.push_back(std::move(ap));
    }
  c.V = static_cast<long long>(c.points.size());

  for (int li = 0; li < n; ++li) {
    const Vec3& l = L[li];
    // two independent directions spanning the line
    std::array<Vec3, 3> cand = {Vec3{l[1], -l[0], Rat(0)}, Vec3{l[2], Rat(0), -l[0]},
                                Vec3{Rat(0), l[2], -l[1]}};
    Vec3 b1{}, b2{};
    bool got1 = false, got2 = false;
    for (const auto& cv : cand) {
      if (is_zero(cv)) continue;
      if (!got1) {
        b1 = cv;
        got1 = true;
      } else if (!is_zero(cross(b1, cv))) {
        b2 = cv;
        got2 = true;
        break;
      }
    }
    if (!got1 || !got2) throw InternalError("degenerate basis for a line");
    // invertible coordinate pair for solving v = s*b1 + t*b2
    int r1 = -1, r2 = -1;
    Rat det;
    for (auto [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      det = b1[p] * b2[q] - b1[q] * b2[p];
      if (!(det == 0)) {
        r1 = p;
        r2 = q;
        break;
      }
    }
    if (r1 < 0) throw InternalError("line basis is singular");

    std::vector<int> vs;
    for (size_t pi = 0; pi < c.points.size(); ++pi) {
      const auto& ls = c.points[pi].lines;
      if (std::find(ls.begin(), ls.end(), li) != ls.end())
        vs.push_back(static_cast<int>(pi));
    }
    if (vs.empty()) throw InternalError("a line carries no intersection point");

    size_t before = c.edges.size();
    if (vs.size() == 1) {
      // a single puncture leaves one arc; sample any other direction
      const Vec3& v = c.points[vs[0]].coords;
      Rat s = (v[r1] * b2[r2] - v[r2] * b2[r1]) / det;
      Rat t = (b1[r1] * v[r2] - b1[r2] * v[r1]) / det;
      Dir2 d = normalize_dir(s, t);
      Dir2 w = (d.t == 0) ? Dir2{0, 1} : Dir2{1, 0};
      c.edges.push_back(ArrEdge{li, combine(w.s, b1, w.t, b2), -1, -1});
    } else {
      std::vector<Dir2> reps;
      for (int vi : vs) {
        const Vec3& v = c.points[vi].coords;
        Rat s = (v[r1] * b2[r2] - v[r2] * b2[r1]) / det;
        Rat t = (b1[r1] * v[r2] - b1[r2] * v[r1]) / det;
        Dir2 d = normalize_dir(s, t);
        reps.push_back(d);
        reps.push_back(Dir2{-d.s, -d.t});
      }
      std::sort(reps.begin(), reps.end(), dir_less);
      std::set<std::string> arc_seen;
      for (size_t r = 0; r < reps.size(); ++r) {
        const Dir2& u = reps[r];
        const Dir2& v = reps[(r + 1) % reps.size()];
        Dir2 mid{u.s + v.s, u.t + v.t};
        if (mid.s == 0 && mid.t == 0)
          throw InternalError("consecutive antipodal directions on a line");
        if (mid.s < 0 || (mid.s == 0 && mid.t < 0)) {
          mid.s = -mid.s;
          mid.t = -mid.t;
        }
        BigInt g = boost::multiprecision::gcd(abs(mid.s), abs(mid.t));
        if (g != 0) {
          mid.s /= g;
          mid.t /= g;
        }
        std::string key = mid.s.str() + "|" + mid.t.str();
        if (!arc_seen.insert(key).second) continue;
        c.edges.push_back(ArrEdge{li, combine(mid.s, b1, mid.t, b2), -1, -1});
      }
    }
    if (c.edges.size() - before != vs.size())
      throw InternalError("arc count does not match the vertex count on a line");
  }
  c.E = static_cast<long long>(c.edges.size());

  std::map<std::string, int> face_index;
  for (auto& e : c.edges) {
    std::string raw(n, '?');
    for (int j = 0; j < n; ++j) {
      int s = sign_dot(L[j], e.sample);
      if (j == e.line) {
        if (s != 0) throw InternalError("edge sample left its carrier line");
      } else {
        if (s == 0) throw InternalError("edge sample lies on a second line");
        raw[j] = s > 0 ? '+' : '-';
      }
    }
    for (int side : {+1, -1}) {
      std::string sv = raw;
      sv[e.line] = side > 0 ? '+' : '-';
      std::string canon = sv;
      if (canon[0] == '-')
        for (auto& ch : canon) ch = (ch == '+') ? '-' : '+';
      auto it = face_index.find(canon);
      int fi;
      if (it != face_index.end()) {
        fi = it->second;
      } else {
        fi = static_cast<int>(c.faces.size());
        face_index.emplace(canon, fi);
        int sgn = 1;
        for (char ch : canon)
          if (ch == '-') sgn = -sgn;
        // interior sample: push off the edge on this side, shrinking the step
        // until it crosses no other line
        Rat eps = 1;
        Vec3 q{};
        bool found = false;
        for (int iter = 0; iter < 200; ++iter) {
          Rat step = side > 0 ? eps : -eps;
          for (int i = 0; i < 3; ++i) q[i] = e.sample[i] + step * L[e.line][i];
          bool ok = true;
          for (int j = 0; j < n && ok; ++j) {
            if (j == e.line) continue;
            ok = sign_dot(L[j], q) == (raw[j] == '+' ? 1 : -1);
          }
          if (ok) {
            found = true;
            break;
          }
          eps /= 2;
        }
        if (!found) throw InternalError("no interior sample point for a face");
        c.faces.push_back(ArrFace{canon, sgn, q});
      }
      (side > 0 ? e.face_plus : e.face_minus) = fi;
    }
    if (c.faces[e.face_plus].sign == c.faces[e.face_minus].sign)
      throw InternalError("face signs fail to alternate across an edge");
  }
  c.F = static_cast<long long>(c.faces.size());
  if (c.V - c.E + c.F != 1)
    throw InternalError("cell complex violates V - E + F = 1: V=" + std::to_string(c.V) +
                        " E=" + std::to_string(c.E) + " F=" + std::to_string(c.F));
  return c;
}

std::vector<int> sign_regions(const CellComplex& c) {
  std::vector<int> out;
  out.reserve(c.faces.size());
  for (const auto& f : c.faces) out.push_back(f.sign);
  return out;
}

ArnoldData arnold_euler_data(const LineArrangement& a, const CellComplex& c,
                             std::optional<long long> chi_CA_override) {
  ArnoldData d;
  d.chi_RA = c.V - c.E;
  long long corr = 0;
  for (const auto& p : c.points) corr += p.multiplicity() - 1;
  d.chi_CA = 4LL * a.k - corr;
  long long used = chi_CA_override.value_or(d.chi_CA);
  if ((used + d.chi_RA) % 2 != 0)
    throw DomainError("the substituted nonsingular-model Euler number has the wrong "
                      "parity against this real locus; the smooth-model analysis does "
                      "not apply to this arrangement");
  d.chi_Abar = (used + d.chi_RA) / 2;
  long long fp = 0, fm = 0;
  for (const auto& f : c.faces) (f.sign > 0 ? fp : fm) += 1;
  long long f_chosen = a.region_plus ? fp : fm;
  long long f_branch = a.region_plus ? fm : fp;
  d.chi_W = c.V - c.E + f_chosen;
  d.chi_W_branch = c.V - c.E + f_branch;
  d.w_empty = f_chosen == 0;
  d.chi_Arnold = d.chi_W_branch + d.chi_Abar - d.chi_RA;
  return d;
}

InvariantReport quotient_invariants(const LineArrangement& a, bool perturbed) {
  CellComplex c = build_cell_complex(a);
  std::optional<long long> ov;
  if (perturbed) ov = 2LL - (2LL * a.k - 1) * (2LL * a.k - 2);
  ArnoldData d = arnold_euler_data(a, c, ov);
  InvariantReport r;
  r.k = a.k;
  r.perturbed = perturbed;
  r.region_plus = a.region_plus;
  r.V = c.V;
  r.E = c.E;
  r.F = c.F;
  r.arnold = d;
  r.chi_CA_used = ov.value_or(d.chi_CA);
  r.chi_CX = 6 - r.chi_CA_used;
  r.chi_RX = 2 * d.chi_W - d.chi_RA;
  r.chi_Xbar_route1 = 4 - d.chi_Arnold;
  if ((r.chi_CX + r.chi_RX) % 2 != 0)
    throw InternalError("transfer route produced a non-integral Euler number");
  r.chi_Xbar_route2 = (r.chi_CX + r.chi_RX) / 2;
  if (r.chi_Xbar_route1 != r.chi_Xbar_route2)
    throw InternalError("Euler routes disagree: branched-cover route gives " +
                        std::to_string(r.chi_Xbar_route1) + ", transfer route gives " +
                        std::to_string(r.chi_Xbar_route2));
  r.chi_Xbar = r.chi_Xbar_route1;
  r.b2_plus = static_cast<long long>(a.k - 1) * (a.k - 2) / 2;
  r.sw_gate_applicable = a.k > 3;
  r.sw_note = r.sw_gate_applicable
                  ? "invariant-vanishing conclusion applies (k > 3)"
                  : "invariant-vanishing conclusion withheld: requires k > 3";
  return r;
}

Decomposition decomposition_prediction(const InvariantReport& r,
                                       std::optional<bool> arnold_orientable) {
  Decomposition d;
  if (!arnold_orientable.has_value()) {
    d.kind = Decomposition::Kind::NotApplicable;
    return d;
  }
  if (*arnold_orientable) {
    long long t = r.chi_Xbar - 2;
    if (t % 2 != 0)
      throw InternalError("orientable splitting needs an even Euler defect, got chi = " +
                          std::to_string(r.chi_Xbar));
    if (t < 0)
      throw InternalError("orientable splitting would need a negative summand count");
    d.kind = Decomposition::Kind::Orientable;
    d.s2xs2 = t / 2;
    return d;
  }
  d.kind = Decomposition::Kind::NonOrientable;
  d.cp2 = r.b2_plus;
  d.conj_cp2 = r.chi_Xbar - 2 - d.cp2;
  if (d.conj_cp2 < 0)
    throw InternalError("non-orientable splitting would need a negative summand count");
  return d;
}

SpecialClassReport special_class(const LineArrangement& a, const CellComplex& c) {
  SpecialClassReport r;
  if (c.points.size() == 1) {
    r.kind = SpecialClassReport::Kind::Pencil;
    r.ledger = QuotientLedger{};
    r.ledger.s1xs3 = a.k - 1;
    r.description = "pencil: all " + std::to_string(2 * a.k) +
                    " lines concurrent; the quotient is the connected sum of " +
                    std::to_string(a.k - 1) + " copies of S1 x S3";
    return r;
  }
  int maxm = 0;
  for (const auto& p : c.points) maxm = std::max(maxm, p.multiplicity());
  if (a.k >= 2 && maxm == 2 * a.k - 1) {
    r.kind = SpecialClassReport::Kind::AlmostPencil;
    r.ledger = QuotientLedger{};
    r.description = "almost-pencil: " + std::to_string(2 * a.k - 1) +
                    " lines concurrent plus one more; the quotient is the 4-sphere";
    return r;
  }
  r.kind = SpecialClassReport::Kind::NotSpecial;
  r.description = "not a pencil or almost-pencil";
  return r;
}

EvenBlowupsReport even_multiplicity_blowups(const LineArrangement& a,
                                            const CellComplex& c) {
  EvenBlowupsReport r;
  long long sum_half = 0, sum_m1 = 0;
  for (size_t pi = 0; pi < c.points.size(); ++pi) {
    int m = c.points[pi].multiplicity();
    if (m > 2 && m % 2 == 0) {
      r.point_indices.push_back(static_cast<int>(pi));
      sum_half += m / 2 - 1;
      sum_m1 += m - 1;
    }
  }
  r.blowups = static_cast<long long>(r.point_indices.size());
  r.note = r.point_indices.empty()
               ? "no even-multiplicity points above 2; the branch data descends as is "
                 "and the quotient base is the 4-sphere"
               : "blow up the listed real points (even multiplicity > 2); blowing up at "
                 "a real point does not change the quotient base, which stays the "
                 "4-sphere";
  ArnoldData d = arnold_euler_data(a, c, std::nullopt);
  r.chi_W_after = d.chi_W + sum_half;
  r.chi_RB = d.chi_RA + sum_m1;
  r.chi_CB = d.chi_CA + sum_m1;
  r.chi_CQ = 3 + r.blowups;
  long long num = 2 * r.chi_CQ - r.chi_CB + 2 * r.chi_W_after - r.chi_RB;
  if (num % 2 != 0) throw InternalError("blown-up model Euler number is not integral");
  r.chi_Xbar_after = num / 2;
  return r;
}

LineArrangement generic_arrangement(int k) {
  if (k < 1) throw DomainError("generic arrangement: k must be positive");
  LineArrangement a;
  a.k = k;
  // tangent lines of a conic: no two parallel tricks needed, no three concurrent
  for (int t = 1; t <= 2 * k; ++t)
    a.lines.push_back(Vec3{Rat(2 * t), Rat(-1), Rat(-static_cast<long long>(t) * t)});
  return a;
}

LineArrangement pencil_arrangement(int k) {
  if (k < 1) throw DomainError("pencil: k must be positive");
  LineArrangement a;
  a.k = k;
  for (int i = 0; i < 2 * k; ++i) a.lines.push_back(Vec3{Rat(1), Rat(i), Rat(0)});
  return a;
}

LineArrangement almost_pencil_arrangement(int k) {
  if (k < 2) throw DomainError("almost-pencil: k must be at least 2");
  LineArrangement a;
  a.k = k;
  for (int i = 0; i + 1 < 2 * k; ++i) a.lines.push_back(Vec3{Rat(1), Rat(i), Rat(0)});
  a.lines.push_back(Vec3{Rat(0), Rat(0), Rat(1)});
  return a;
}

LineArrangement arrangement_from_json(const nlohmann::json& j) {
  expect_object(j, "arrangement");
  check_keys(j, "arrangement", {"k", "lines", "region"}, {});
  LineArrangement a;
  long long k = get_int(j, "k", "arrangement");
  if (k < 1 || k > 1000000) throw InputError("arrangement: k out of range");
  a.k = static_cast<int>(k);
  std::string region = get_string(j, "region", "arrangement");
  if (region == "plus")
    a.region_plus = true;
  else if (region == "minus")
    a.region_plus = false;
  else
    throw InputError("arrangement: region must be \"plus\" or \"minus\"");
  expect_array(j.at("lines"), "arrangement.lines");
  for (size_t i = 0; i < j.at("lines").size(); ++i) {
    const auto& lj = j.at("lines")[i];
    std::string where = "arrangement.lines[" + std::to_string(i) + "]";
    expect_array(lj, where);
    if (lj.size() != 3) throw InputError(where + ": expected three coefficients");
    Vec3 v;
    for (int t = 0; t < 3; ++t) {
      const auto& e = lj[t];
      if (e.is_number_integer()) {
        v[t] = Rat(e.get<long long>());
      } else if (e.is_string()) {
        try {
          v[t] = parse_rational(e.get<std::string>());
        } catch (const std::invalid_argument& ex) {
          throw InputError(where + ": " + ex.what());
        }
      } else {
        throw InputError(where + ": coefficients must be integers or \"p/q\" strings");
      }
    }
    a.lines.push_back(v);
  }
  if (static_cast<long long>(a.lines.size()) != 2 * k)
    throw InputError("arrangement: expected " + std::to_string(2 * k) + " lines, got " +
                     std::to_string(a.lines.size()));
  return a;
}

nlohmann::json arrangement_to_json(const LineArrangement& a) {
  nlohmann::json j;
  j["k"] = a.k;
  j["region"] = a.region_plus ? "plus" : "minus";
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : a.lines) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : l) {
      if (rat_den(x) == 1 && rat_num(x) >= std::numeric_limits<long long>::min() &&
          rat_num(x) <= std::numeric_limits<long long>::max())
        row.push_back(static_cast<long long>(rat_num(x)));
      else
        row.push_back(rational_to_string(x));
    }
    lines.push_back(row);
  }
  j["lines"] = lines;
  return j;
}

} // namespace rsq
