#include "mobius3/psl3.hpp"

#include "mobius3/error.hpp"
#include "mobius3/gf.hpp"

#include <algorithm>
#include <set>

namespace mobius3 {

namespace {

const QPoly Q = QPoly::q();

QPoly half(const QPoly& a) { return a * QPoly(Rational(1, 2)); }

struct Row {
  int id;
  const char* name;
  const char* normalizer_name;
  QPoly order;
  QPoly normalizer;  // empty polynomial means "H"
  QPoly mu;
  const char* aschbacher;
  const char* stabilized;
};

std::vector<Row> rows() {
  const QPoly q = Q;
  const QPoly g = group_order_poly();
  const QPoly qm = q - 1;
  const QPoly gl2 = q * qm.pow(2) * (q + 1);
  const QPoly pstab = q.pow(3) * qm.pow(2) * (q + 1);
  return {
      {1, "E_{q^2}:GL(2,q)=G_P", "H", pstab, {}, -1, "C1", "a rational point"},
      {2, "E_{q^2}:GL(2,q)=G_l", "H", pstab, {}, -1, "C1", "a rational line"},
      {3, "(C_{q-1})^2:Sym(3)=G_T", "H", 6 * qm.pow(2), {}, -1, "C2", "a rational triangle"},
      {4, "C_{q^2+q+1}:C_3", "H", 3 * (q * q + q + 1), {}, -1, "C3", "an F_{q^3}\\F_q-rational triangle"},
      {5, "PSL(3,2)=G_Pi", "H", 168, {}, -1, "C5", "a subplane of order 2"},
      {6, "E_q^{1+2}:(C_{q-1})^2", "H", q.pow(3) * qm.pow(2), {}, 1, "C1 (N)",
       "a rational point P and a rational line l, P on l"},
      {7, "GL(2,q)", "H", gl2, {}, 1, "C1 (N)", "a rational point P and a rational line l, P not on l"},
      {8, "E_{q^2}:(C_{q-1})^2=G_{P,Q}", "H:C_2", q * q * qm.pow(2), 2 * q * q * qm.pow(2), 0, "", "two points"},
      {9, "E_{q^2}:(C_{q-1})^2=G_{l,r}", "H:C_2", q * q * qm.pow(2), 2 * q * q * qm.pow(2), 0, "", "two lines"},
      {10, "E_{q^2}:C_{q-1}=G_{P_1,...,P_{q+1}}", "E_{q^2}:GL(2,q)", q * q * qm, pstab, 0, "",
       "every point of a line"},
      {11, "E_{q^2}:C_{q-1}=G_{l_1,...,l_{q+1}}", "E_{q^2}:GL(2,q)", q * q * qm, pstab, 0, "",
       "every line through a point"},
      {12, "E_q:(C_{q-1})^2", "H", q * qm.pow(2), {}, -1, "C1 (N)", "two rational points and two rational lines"},
      {13, "(C_{q-1})^2:C_2", "H", 2 * qm.pow(2), {}, 1, "C1,C2 (N)", "a rational triangle and one of its vertices"},
      {14, "(C_{q-1})^2", "(C_{q-1})^2:Sym(3)", qm.pow(2), 6 * qm.pow(2), 0, "", "each vertex of a triangle"},
      {15, "E_q:C_{q-1}=G_{P_1,...,P_{q+1},l}", "E_{q^2}:(C_{q-1})^2", q * qm, q * q * qm.pow(2), 0, "",
       "every point of a line r and a line l != r"},
      {16, "E_q:C_{q-1}=G_{l_1,...,l_{q+1},P}", "E_{q^2}:(C_{q-1})^2", q * qm, q * q * qm.pow(2), 0, "",
       "every line through a point R and a point P != R"},
      {17, "C_{2(q-1)}", "E_q x C_{q-1}", 2 * qm, q * qm, 0, "", ""},
      {18, "E_q=G_{P_1,...,P_{q+1},l_1,...,l_{q+1}}", "E_q^{1+2}:(C_{q-1})^2", q, q.pow(3) * qm.pow(2), 0, "",
       "every point of a line and every line through a point on it"},
      {19, "C_{q-1}=G_{P_1,...,P_{q+1},l_1,...,l_{q+1}}", "GL(2,q)", qm, gl2, 0, "",
       "every point of a line and every line through a point off it"},
      {20, "Sym(4)=G_{P,Pi}", "H", 24, {}, 1, "C1,C5 (N)", "a subplane Pi of order 2 and a point of Pi"},
      {21, "Sym(4)=G_{l,Pi}", "H", 24, {}, 1, "C1,C5 (N)", "a subplane Pi of order 2 and a line of Pi"},
      {22, "C_7:C_3", "H", 21, {}, 1, "C2,C5 (N)", "a subplane Pi of order 2 and a triangle not in Pi"},
      {23, "D_8", "E_q.E_4", 8, 4 * q, -half(q), "C1,C5 (N)",
       "a subplane Pi of order 2, a point P and a line l, P on l"},
      {24, "C_7<=G_{T,Pi}", "C_{q^2+q+1}:C_3", 7, 3 * (q * q + q + 1), 0, "", ""},
      {25, "Sym(3)", "H x C_{q-1}", 6, 6 * qm, 0, "", ""},
      {26, "C_4", "E_q.E_{2q}", 4, 2 * q * q, 0, "", ""},
      {27, "E_4<=G_{l_1,l_2,l_3}", "E_{q^2}:Sym(3)", 4, 6 * q * q, 0, "", ""},
      {28, "E_4<=G_{P_1,P_2,P_3}", "E_{q^2}:Sym(3)", 4, 6 * q * q, 0, "", ""},
      {29, "C_3", "C_{q^2-1}:C_2", 3, 2 * (q * q - 1), 0, "", ""},
      {30, "C_2", "E_q^{1+2}:C_{q-1}", 2, q.pow(3) * qm, 0, "", ""},
      {31, "{1}", "G", 1, g, 0, "", ""},
  };
}

std::string structure_only(const std::string& name) {
  const auto pos = name.find("=G_");
  return pos == std::string::npos ? name : name.substr(0, pos);
}

int p_of(const Pgl3& ctx) {
  const FieldSpec& f = ctx.field();
  if (f.p() != 2 || f.k() < 3 || !is_prime(f.k()))
    throw Error(ErrorKind::InvalidP, "census needs q = 2^p with p an odd prime");
  return f.k();
}

}  // namespace

QPoly group_order_poly() { return Q.pow(3) * (Q.pow(3) - 1) * (Q.pow(2) - 1); }

void require_odd_prime(int p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidP, "p must be an odd prime");
  if (p > 4096) throw Error(ErrorKind::TooLarge, "p is limited to 4096");
}

BigInt q_of(int p) { return ipow(BigInt(2), static_cast<unsigned>(p)); }

std::vector<ClosedFormLine> table4_symbolic() {
  std::vector<ClosedFormLine> out;
  for (Row& r : rows()) {
    ClosedFormLine l;
    l.id = r.id;
    l.name = r.name;
    l.normalizer_name = r.normalizer_name;
    l.order = r.order;
    l.normalizer_order = r.normalizer.is_zero() ? r.order : r.normalizer;
    l.mu = r.mu;
    l.aschbacher = r.aschbacher;
    l.stabilized = r.stabilized;
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<ClosedFormLine> table4(int p) {
  require_odd_prime(p);
  auto out = table4_symbolic();
  if (p == 3) {
    out[23].normalizer_order = 147;
    out[23].normalizer_name = "(C_7)^2:C_3";
  }
  return out;
}

std::vector<LineValues> evaluate(const std::vector<ClosedFormLine>& lines, int p) {
  const BigInt q = q_of(p);
  const BigInt g = group_order_poly().eval_int(q);
  std::vector<LineValues> out;
  for (const ClosedFormLine& l : lines) {
    auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::VerificationMismatch, "line " + std::to_string(l.id) + " at p = " +
                                                       std::to_string(p) + ": " + what);
    };
    LineValues v;
    v.id = l.id;
    v.order = l.order.eval_int(q);
    v.normalizer_order = l.normalizer_order.eval_int(q);
    v.mu = l.mu.eval_int(q);
    if (v.order <= 0 || g % v.order != 0) fail("order does not divide |G|");
    if (v.normalizer_order % v.order != 0) fail("order does not divide the normalizer order");
    if (g % v.normalizer_order != 0) fail("normalizer order does not divide |G|");
    v.class_size = g / v.normalizer_order;
    if (v.class_size <= 0) fail("class size is not positive");
    out.push_back(std::move(v));
  }
  return out;
}

QPoly global_sum_symbolic(const std::vector<ClosedFormLine>& lines) {
  const QPoly g = group_order_poly();
  QPoly sum = 1;
  for (const ClosedFormLine& l : lines)
    if (!l.mu.is_zero()) sum += g.exact_div(l.normalizer_order) * l.mu;
  return sum;
}

BigInt global_sum_at(const std::vector<ClosedFormLine>& lines, int p) {
  BigInt sum = 1;
  for (const LineValues& v : evaluate(lines, p)) sum += v.class_size * v.mu;
  return sum;
}

BigInt global_sum_direct(int p) {
  require_odd_prime(p);
  const BigInt q = q_of(p);
  const BigInt n = q * q + q + 1;
  const BigInt g = q * q * q * (q * q * q - 1) * (q * q - 1);
  auto exact = [](const BigInt& a, const BigInt& b) {
    if (a % b != 0) throw Error(ErrorKind::VerificationMismatch, "non-integral class size");
    return a / b;
  };
  // (class size, mu) for every class with mu != 0, G included.
  const std::vector<std::pair<BigInt, BigInt>> terms = {
      {1, 1},
      {n, -1},
      {n, -1},
      {exact(q * q * q * (q + 1) * n, 6), -1},
      {exact(q * q * q * (q - 1) * (q - 1) * (q + 1), 3), -1},
      {exact(g, 168), -1},
      {n * (q + 1), 1},
      {n * q * q, 1},
      {n * (q * q + q) * q, -1},
      {exact(n * q * q * q * (q + 1), 2), 1},
      {exact(g, 24), 1},
      {exact(g, 24), 1},
      {exact(g, 21), 1},
      {exact(q * q * (q * q * q - 1) * (q * q - 1), 4), -(q / 2)},
  };
  BigInt sum = 0;
  for (const auto& [size, mu] : terms) sum += size * mu;
  return sum;
}

std::map<BigInt, BigInt> a_n_closed(int p) {
  const auto lines = table4(p);
  const auto vals = evaluate(lines, p);
  const BigInt g = group_order_poly().eval_int(q_of(p));
  std::map<BigInt, BigInt> out;
  out[1] = 1;
  for (const LineValues& v : vals)
    if (v.mu != 0) out[g / v.order] += v.class_size * v.mu;
  return out;
}

MannReport mann_check(int p) {
  const auto vals = evaluate(table4(p), p);
  const BigInt g = group_order_poly().eval_int(q_of(p));
  MannReport rep;
  rep.max_ratio = 0;
  for (const LineValues& v : vals) {
    MannRow row{v.id, abs(v.mu), g / v.order};
    const Rational ratio(row.abs_mu, row.index);
    if (rep.argmax == 0 || ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax = v.id;
    }
    rep.rows.push_back(std::move(row));
  }
  rep.ok = rep.max_ratio <= 1;
  return rep;
}

const std::vector<Table2Row>& table2_fixture() {
  static const std::vector<Table2Row> rows = {
      {"G", 20160, 1, 1},          {"E_16.SL(2,4)", 960, 2, -1}, {"Alt(6)", 360, 3, -1},
      {"PSL(3,2)", 168, 3, -1},    {"PSU(3,2)", 72, 1, -1},      {"E_4^{1+2}:C_3", 192, 1, 1},
      {"Alt(5)", 60, 7, 1},        {"E_9:C_4", 36, 3, 2},        {"Sym(4)", 24, 6, 2},
      {"C_7:C_3", 21, 1, 2},       {"Alt(4)", 12, 6, -2},        {"Alt(4)", 12, 1, -1},
      {"D_10", 10, 1, -3},         {"Q_8", 8, 1, 2},             {"D_8", 8, 3, -4},
      {"Sym(3)", 6, 1, -14},       {"C_4", 4, 3, -8},            {"C_3", 3, 1, 24},
      {"C_2", 2, 1, 544},          {"{1}", 1, 1, -120960},
  };
  return rows;
}

const std::vector<Table1Row>& table1_fixture() {
  static const std::vector<Table1Row> rows = [] {
    const QPoly q = Q;
    return std::vector<Table1Row>{
        {"G", "-", "-", "H", 1},
        {"E_{q^2}:GL(2,q)", "C1", "a rational point", "H", -1},
        {"E_{q^2}:GL(2,q)", "C1", "a rational line", "H", -1},
        {"(C_{q-1})^2:Sym(3)", "C2", "a rational triangle", "H", -1},
        {"C_{q^2+q+1}:C_3", "C3", "an F_{q^3}\\F_q-rational triangle", "H", -1},
        {"PSL(3,2)", "C5", "a subplane of order 2", "H", -1},
        {"E_q^{1+2}:(C_{q-1})^2", "C1 (N)", "a rational point P and a rational line l, P on l", "H", 1},
        {"GL(2,q)", "C1 (N)", "a rational point P and a rational line l, P not on l", "H", 1},
        {"E_q:(C_{q-1})^2", "C1 (N)", "two rational points and two rational lines", "H", -1},
        {"(C_{q-1})^2:C_2", "C1,C2 (N)", "a rational triangle and one of its vertices", "H", 1},
        {"Sym(4)", "C1,C5 (N)", "a subplane Pi of order 2 and a point of Pi", "H", 1},
        {"Sym(4)", "C1,C5 (N)", "a subplane Pi of order 2 and a line of Pi", "H", 1},
        {"C_7:C_3", "C2,C5 (N)", "a subplane Pi of order 2 and a triangle not in Pi", "H", 1},
        {"D_8", "C1,C5 (N)", "a subplane Pi of order 2, a point P and a line l, P on l", "E_q.E_4",
         -half(q)},
    };
  }();
  return rows;
}

ConsistencyReport consistency_table1_vs_table4(const std::vector<ClosedFormLine>& lines) {
  const auto& t1 = table1_fixture();
  std::vector<const ClosedFormLine*> nonzero;
  for (const ClosedFormLine& l : lines)
    if (!l.mu.is_zero()) nonzero.push_back(&l);

  ConsistencyReport rep;
  rep.table1_rows = static_cast<int>(t1.size());
  rep.table4_nonzero = static_cast<int>(nonzero.size()) + 1;
  rep.ok = rep.table1_rows == rep.table4_nonzero;

  ConsistencyRow top{0, "G", t1[0].structure == "G", t1[0].normalizer == "H", t1[0].mu == QPoly(1)};
  rep.ok = rep.ok && top.structure_ok && top.normalizer_ok && top.mu_ok;
  rep.rows.push_back(top);

  const std::size_t n = std::min(nonzero.size(), t1.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const ClosedFormLine& l = *nonzero[i];
    const Table1Row& r = t1[i + 1];
    ConsistencyRow row;
    row.line = l.id;
    row.structure = structure_only(l.name);
    row.structure_ok = row.structure == r.structure && l.aschbacher == r.aschbacher && l.stabilized == r.stabilized;
    row.normalizer_ok = l.normalizer_name == r.normalizer;
    row.mu_ok = l.mu == r.mu;
    rep.ok = rep.ok && row.structure_ok && row.normalizer_ok && row.mu_ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CensusAgainst parse_census_against(const std::string& s) {
  if (s == "nonzero") return CensusAgainst::Nonzero;
  if (s == "all") return CensusAgainst::All;
  throw Error(ErrorKind::InvalidInput, "against must be nonzero or all");
}

std::vector<StatedCount> stated_inventory(int line, int p) {
  require_odd_prime(p);
  const QPoly q = Q;
  const QPoly g = group_order_poly();
  const std::vector<int> maximals = {1, 2, 3, 4, 5};
  const std::vector<int> l67 = {6, 7};
  const QPoly binom = half(q * (q + 1));
  const QPoly a = q.pow(3) * (q - 1);
  switch (line) {
    case 6:
    case 20:
    case 21:
    case 22:
      return {{"maximal", maximals, 2}};
    case 8:
      return {{"maximal", maximals, 3}};
    case 10:
      return {{"maximal", maximals, q + 2}, {"line 6", {6}, q + 1}};
    case 12:
      return {{"maximal", maximals, 4}};
    case 13:
      return {{"maximal", maximals, 3}};
    case 14:
      return {{"maximal", maximals, 7},  {"line 6", {6}, 6},   {"line 7", {7}, 3},
              {"line 13", {13}, 3},      {"line 12", {12}, 6}};
    case 15:
      return {{"maximal", maximals, q + 3}, {"lines 6, 7", l67, 2 * q + 2}, {"line 12", {12}, q}};
    case 17:
      return {{"maximal", maximals, q + 4}, {"lines 6, 7", l67, 4}, {"line 12", {12}, 1}, {"line 13", {13}, q}};
    case 18:
      return {{"maximal", maximals, 2 * q + 2}, {"lines 6, 7", l67, (q + 1).pow(2)}, {"line 12", {12}, q * q}};
    case 19:
      return {{"maximal", maximals, 2 * q + 4 + binom},
              {"lines 6, 7", l67, (q + 2).pow(2)},
              {"line 12", {12}, (q + 1).pow(2) + (q + 1) * q},
              {"line 13", {13}, binom + (q + 1) * q}};
    case 23:
      return {{"maximal", maximals, 2 + half(q)}, {"line 6", {6}, 1}, {"line 20", {20}, half(q)},
              {"line 21", {21}, half(q)}};
    case 24:
      if (p > 3) return {{"maximal", maximals, 1 + (q * q + q + 1) * QPoly(Rational(1, 7))}, {"line 22", {22}, q * q + q + 1}};
      return {{"maximal", maximals, 14}, {"line 6", {6}, 6},   {"line 7", {7}, 3},
              {"line 12", {12}, 6},      {"line 13", {13}, 3}, {"line 22", {22}, 7}};
    case 25:
      return {{"maximal", maximals, 2 * q}, {"line 7", {7}, 1}, {"line 20", {20}, q + 1}, {"line 21", {21}, q + 1}};
    case 26:
      return {{"maximal", maximals, (q * q + 8) * QPoly(Rational(1, 4))},
              {"line 6", {6}, 1},
              {"line 20", {20}, q * q * QPoly(Rational(1, 4))},
              {"line 21", {21}, q * q * QPoly(Rational(1, 4))},
              {"line 23", {23}, half(q)}};
    case 27:
      return {{"maximal", maximals, (q * q + 4 * q + 8) * QPoly(Rational(1, 4))},
              {"line 6", {6}, q + 1},
              {"line 20", {20}, q * q * QPoly(Rational(1, 4))},
              {"line 21", {21}, q * q * QPoly(Rational(3, 4))},
              {"line 23", {23}, q * QPoly(Rational(3, 2))}};
    case 29:
      return {{"maximal", maximals, (4 * q * q + 2) * QPoly(Rational(1, 3))},
              {"line 7", {7}, 1},
              {"line 20", {20}, (q * q - 1) * QPoly(Rational(1, 3))},
              {"line 21", {21}, (q * q - 1) * QPoly(Rational(1, 3))},
              {"line 22", {22}, (q * q - 1) * QPoly(Rational(2, 3))}};
    case 30:
      return {{"maximal", maximals, 2 * q + 2 + half(a) + a * QPoly(Rational(1, 8))},
              {"line 6", {6}, 2 * q + 1},
              {"line 7", {7}, q * q},
              {"line 12", {12}, q * q},
              {"line 13", {13}, half(a)},
              {"line 20", {20}, a * QPoly(Rational(3, 8))},
              {"line 21", {21}, a * QPoly(Rational(3, 8))},
              {"line 23", {23}, q * q * (q - 1) * QPoly(Rational(5, 4))}};
    case 31: {
      const QPoly n = q * q + q + 1;
      return {{"line 1", {1}, n},
              {"line 2", {2}, n},
              {"line 3", {3}, q.pow(3) * (q + 1) * n * QPoly(Rational(1, 6))},
              {"line 4", {4}, q.pow(3) * (q - 1).pow(2) * (q + 1) * QPoly(Rational(1, 3))},
              {"line 5", {5}, g * QPoly(Rational(1, 168))},
              {"line 6", {6}, n * (q + 1)},
              {"line 7", {7}, n * q * q},
              {"line 12", {12}, n * (q * q + q) * q},
              {"line 13", {13}, n * q.pow(3) * (q + 1) * QPoly(Rational(1, 2))},
              {"line 20", {20}, g * QPoly(Rational(1, 24))},
              {"line 21", {21}, g * QPoly(Rational(1, 24))},
              {"line 22", {22}, g * QPoly(Rational(1, 21))},
              {"line 23", {23}, q * q * (q.pow(3) - 1) * (q * q - 1) * QPoly(Rational(1, 4))}};
    }
    default:
      return {};
  }
}

Census::Census(const Pgl3& ctx, ScanOptions opt) : ctx_(&ctx), opt_(opt), p_(p_of(ctx)) {
  lines_ = table4(p_);
  values_ = evaluate(lines_, p_);
}

const SubgroupRec& Census::rep(int line) {
  auto& slot = reps_[line];
  if (!slot) slot = std::make_unique<SubgroupRec>(line_rep(*ctx_, line));
  return *slot;
}

CensusReport Census::run(int line, CensusAgainst against, bool scan_normalizer) {
  if (line < 1 || line > kLineCount) throw Error(ErrorKind::UnsupportedLine, "line must be in 1..31");
  const LineValues& hv = values_[line - 1];
  const SubgroupRec& h = rep(line);
  if (BigInt(h.order()) != hv.order)
    throw Error(ErrorKind::VerificationMismatch, "representative of line " + std::to_string(line) +
                                                     " has order " + std::to_string(h.order()));

  CensusReport rep_out;
  rep_out.line = line;
  rep_out.p = p_;
  rep_out.order = h.order();
  rep_out.normalizer_table = hv.normalizer_order;
  rep_out.mu = hv.mu;

  std::vector<int> candidates;
  for (const LineValues& kv : values_) {
    if (kv.order <= hv.order || kv.order % hv.order != 0) continue;
    if (against == CensusAgainst::Nonzero && kv.mu == 0) continue;
    candidates.push_back(kv.id);
  }

  std::vector<const SubgroupRec*> ks;
  for (int id : candidates) ks.push_back(&rep(id));
  std::vector<std::uint64_t> transporter;
  if (!ks.empty()) transporter = transporter_counts(*ctx_, GroupKind::PSL, h, ks, opt_);

  rep_out.residual = hv.mu + 1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const LineValues& kv = values_[candidates[i] - 1];
    const BigInt t = transporter[i];
    if (t % kv.normalizer_order != 0)
      throw Error(ErrorKind::NonIntegralCount, "transporter count " + t.str() + " for line " +
                                                   std::to_string(kv.id) + " not divisible by " +
                                                   kv.normalizer_order.str());
    CensusEntry e{kv.id, t / kv.normalizer_order, kv.mu};
    rep_out.residual += e.count * e.mu;
    rep_out.entries.push_back(std::move(e));
  }

  if (scan_normalizer) rep_out.normalizer_empirical = normalizer_order(*ctx_, GroupKind::PSL, h, opt_);

  auto empirical_of = [&](int id) -> std::optional<BigInt> {
    for (const CensusEntry& e : rep_out.entries)
      if (e.k_line == id) return e.count;
    return std::nullopt;
  };

  const BigInt q = q_of(p_);
  std::set<int> covered;
  bool uniform_mu = true;
  BigInt stated_sum = 1;
  for (const StatedCount& s : stated_inventory(line, p_)) {
    StatedComparison c;
    c.label = s.label;
    c.lines = s.lines;
    c.stated = s.value.eval_int(q);
    c.empirical = 0;
    bool known = true;
    for (int id : s.lines) {
      covered.insert(id);
      if (auto v = empirical_of(id)) c.empirical += *v;
      else if (values_[id - 1].order > hv.order && values_[id - 1].order % hv.order == 0) known = false;
    }
    c.matches = known && c.stated == c.empirical;
    const BigInt mu0 = values_[s.lines.front() - 1].mu;
    for (int id : s.lines) uniform_mu = uniform_mu && values_[id - 1].mu == mu0;
    stated_sum += c.stated * mu0;
    rep_out.stated.push_back(std::move(c));
  }
  if (!rep_out.stated.empty() && uniform_mu) {
    bool covers = true;
    for (const CensusEntry& e : rep_out.entries)
      if (e.mu != 0 && e.count != 0 && !covered.count(e.k_line)) covers = false;
    if (covers) rep_out.stated_mu = -stated_sum;
  }
  return rep_out;
}

}  // namespace mobius3
