#include "mobius3/error.hpp"
#include "mobius3/eulerchar.hpp"
#include "mobius3/gf.hpp"
#include "mobius3/lattice.hpp"
#include "mobius3/psl3.hpp"
#include "mobius3/scan.hpp"
#include "mobius3/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace mobius3;

namespace {

// Integers beyond 2^53 are written as decimal strings.
json jint(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(v) <= limit) return static_cast<long long>(v);
  return v.str();
}

json jrat(const Rational& v) { return to_string(v); }

json jmat(const Mat3& m) {
  json a = json::array();
  for (Fq x : m) a.push_back(static_cast<int>(x));
  return a;
}

json jvec(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not an integer: '" + tok + "'");
    }
  }
  return out;
}

json fingerprint_json(const Fingerprint& f) {
  json hist = json::object();
  for (const auto& [o, n] : f.order_histogram) hist[std::to_string(o)] = n;
  json j;
  j["order"] = f.order;
  j["exponent"] = f.exponent;
  j["abelian"] = f.abelian;
  j["abelian_invariants"] = f.abelian_invariants;
  j["derived_length"] = f.derived_length;
  j["center_order"] = f.center_order;
  j["order_histogram"] = hist;
  return j;
}

json lattice_json(const OwnedLattice& ol, int q, GroupKind kind, bool with_fingerprint) {
  json j;
  j["group"] = {{"q", q}, {"kind", to_string(kind)}, {"order", ol.indexed->size()}};
  json classes = json::array();
  for (const ConjClass& c : ol.model.classes) {
    json cj;
    cj["order"] = c.order;
    cj["size"] = c.size;
    cj["normalizer_order"] = c.normalizer_order;
    cj["mu"] = jint(c.mu);
    if (with_fingerprint) cj["fingerprint"] = fingerprint_json(c.fingerprint);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  json a = json::object();
  for (const auto& [idx, v] : a_coeffs(ol.model)) a[std::to_string(idx)] = jint(v);
  j["a"] = std::move(a);
  return j;
}

json census_json(const CensusReport& r) {
  json j;
  j["line"] = r.line;
  j["p"] = r.p;
  j["order"] = r.order;
  j["mu"] = jint(r.mu);
  j["normalizer_order_table"] = jint(r.normalizer_table);
  if (r.normalizer_empirical) j["normalizer_order_scan"] = r.normalizer_empirical;
  json entries = json::array();
  for (const CensusEntry& e : r.entries) entries.push_back({{"line", e.k_line}, {"count", jint(e.count)}, {"mu", jint(e.mu)}});
  j["overgroups"] = std::move(entries);
  j["residual"] = jint(r.residual);
  json stated = json::array();
  for (const StatedComparison& s : r.stated)
    stated.push_back({{"label", s.label},
                      {"lines", s.lines},
                      {"stated", jint(s.stated)},
                      {"empirical", jint(s.empirical)},
                      {"matches", s.matches}});
  j["stated_counts"] = std::move(stated);
  if (r.stated_mu) j["mu_from_stated_counts"] = jint(*r.stated_mu);
  return j;
}

struct Output {
  std::string path;
  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    f << text;
  }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw Error(ErrorKind::InvalidInput, "unsupported format '" + f + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Möbius function and subgroup posets of PSL(3,q) and PGL(3,q)"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (0: MOBIUS3_THREADS or all cores)");
  app.add_option("--out", out_path, "write the result to this file instead of stdout");

  int q = 0, p = 0, r = 0, line = 0;
  unsigned n = 0;
  std::string kind_s = "psl3", format = "json", euler_format = "text", mat_s, method = "all", against = "nonzero", aut_s;
  bool order_only = false, symbolic = false, scan_norm = false;

  auto* field = app.add_subcommand("field", "finite field data");
  field->add_option("--q", q)->required();

  auto* group = app.add_subcommand("group", "group order and generators");
  group->add_option("--q", q)->required();
  group->add_option("--kind", kind_s);
  group->add_flag("--order-only", order_only);

  auto* classify_cmd = app.add_subcommand("classify", "classify one element");
  classify_cmd->add_option("--q", q)->required();
  classify_cmd->add_option("--mat", mat_s, "nine comma-separated field indices, row-major")->required();

  auto* linerep = app.add_subcommand("linerep", "representative of a line of the classification");
  linerep->add_option("--p", p)->required();
  linerep->add_option("--line", line)->required();
  linerep->add_flag("--scan-normalizer", scan_norm, "compute the normalizer order by a full scan");

  auto* lattice = app.add_subcommand("lattice", "subgroup lattice up to conjugacy");
  lattice->add_option("--q", q)->required();
  lattice->add_option("--group", kind_s);

  auto* moebius_cmd = app.add_subcommand("moebius", "Möbius values per class");
  moebius_cmd->add_option("--q", q)->required();
  moebius_cmd->add_option("--group", kind_s);
  moebius_cmd->add_option("--format", format);

  auto* hall = app.add_subcommand("hall", "Eulerian function and generation probability");
  hall->add_option("--q", q)->required();
  hall->add_option("--n", n)->required();
  hall->add_option("--group", kind_s);
  hall->add_option("--aut", aut_s, "order of Aut(G), enables d_n");

  auto* table4_cmd = app.add_subcommand("table4", "closed-form classes of PSL(3,2^p)");
  table4_cmd->add_option("--p", p);
  table4_cmd->add_flag("--symbolic", symbolic);
  table4_cmd->add_option("--format", format);

  auto* census_cmd = app.add_subcommand("census", "empirical overgroup census in PSL(3,2^p)");
  census_cmd->add_option("--p", p)->required();
  census_cmd->add_option("--line", line)->required();
  census_cmd->add_option("--against", against);

  auto* euler = app.add_subcommand("eulerchar", "Euler characteristic of the r-subgroup poset of PGL(3,q)");
  euler->add_option("--q", q)->required();
  euler->add_option("--r", r)->required();
  euler->add_option("--method", method);
  euler->add_option("--format", euler_format);

  auto* check = app.add_subcommand("check", "closed-form consistency checks");
  check->require_subcommand(1);
  auto* gsum = check->add_subcommand("global-sum", "sum of class_size * mu over all classes");
  gsum->add_option("--p", p);
  gsum->add_flag("--symbolic", symbolic);
  auto* mann = check->add_subcommand("mann", "|mu(H)| <= [G:H] for every class");
  mann->add_option("--p", p)->required();
  auto* tables = check->add_subcommand("tables", "fixture cross-checks");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  std::string profile = "quick";
  verify->add_option("profile", profile, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const Output out{out_path};
  ScanOptions opt;
  opt.threads = resolve_threads(threads);

  try {
    if (*field) {
      auto pk = prime_power(q);
      if (!pk || q > kMaxFieldSize) throw Error(ErrorKind::InvalidQ, "q must be a prime power <= 128");
      const FieldSpec f = make_field(pk->first, pk->second);
      json j;
      j["q"] = f.q();
      j["p"] = f.p();
      j["k"] = f.k();
      j["modulus"] = f.modulus();
      j["primitive"] = f.primitive();
      out.emit(dump(j));
    } else if (*group) {
      const GroupKind kind = parse_group_kind(kind_s);
      Pgl3 ctx(q);
      if (order_only) {
        out.emit(ctx.group_order(kind).str() + "\n");
      } else {
        json j;
        j["q"] = q;
        j["kind"] = to_string(kind);
        j["order"] = jint(ctx.group_order(kind));
        json gens = json::array();
        for (const Mat3& m : ctx.full_generators(kind)) gens.push_back(jmat(m));
        j["generators"] = std::move(gens);
        out.emit(dump(j));
      }
    } else if (*classify_cmd) {
      Pgl3 ctx(q);
      const GElem g = ctx.elem(ctx.from_entries(parse_csv_ints(mat_s)));
      const ElementClass c = ctx.classify(g.mat);
      json j;
      j["q"] = q;
      j["matrix"] = jmat(g.mat);
      j["tag"] = to_string(c.tag);
      j["order"] = c.order;
      j["fixed_points"] = c.fixed_points;
      j["fixed_lines"] = c.fixed_lines;
      j["center"] = c.center ? jvec(ctx.plane().coords(*c.center)) : json(nullptr);
      j["axis"] = c.axis ? jvec(ctx.plane().coords(*c.axis)) : json(nullptr);
      out.emit(dump(j));
    } else if (*linerep) {
      require_odd_prime(p);
      if (p > 7) throw Error(ErrorKind::TooLarge, "line representatives are limited to p <= 7");
      Pgl3 ctx(1 << p);
      const SubgroupRec h = line_rep(ctx, line);
      const auto lines = table4(p);
      const ClosedFormLine& cl = lines[line - 1];
      json j;
      j["p"] = p;
      j["q"] = ctx.q();
      j["line"] = line;
      j["name"] = cl.name;
      json gens = json::array();
      for (const Mat3& m : h.generators) gens.push_back(jmat(m));
      j["generators"] = std::move(gens);
      j["order"] = h.order();
      j["normalizer_order"] = jint(cl.normalizer_order.eval_int(q_of(p)));
      if (scan_norm) {
        if (p > 3) throw Error(ErrorKind::TooLarge, "normalizer scans are limited to q = 8");
        const std::uint64_t nn = normalizer_order(ctx, GroupKind::PSL, h, opt);
        j["normalizer_order_scan"] = nn;
        if (BigInt(nn) != cl.normalizer_order.eval_int(q_of(p)))
          throw Error(ErrorKind::VerificationMismatch, "scanned normalizer order " + std::to_string(nn) +
                                                           " differs from the closed form");
      }
      out.emit(dump(j));
    } else if (*lattice || *moebius_cmd) {
      const GroupKind kind = parse_group_kind(kind_s);
      if (*moebius_cmd) check_format(format, {"json", "csv"});
      const OwnedLattice ol = build_lattice(q, kind);
      for (const BigInt& res : recursion_residuals(ol.model))
        if (res != 0) throw Error(ErrorKind::VerificationMismatch, "Möbius recursion residual is nonzero");
      if (*lattice) {
        out.emit(dump(lattice_json(ol, q, kind, true)));
      } else if (format == "csv") {
        std::string text = "order,size,normalizer_order,mu\n";
        for (const ConjClass& c : ol.model.classes)
          text += std::to_string(c.order) + "," + std::to_string(c.size) + "," + std::to_string(c.normalizer_order) +
                  "," + c.mu.str() + "\n";
        out.emit(text);
      } else {
        out.emit(dump(lattice_json(ol, q, kind, false)));
      }
    } else if (*hall) {
      const GroupKind kind = parse_group_kind(kind_s);
      const OwnedLattice ol = build_lattice(q, kind);
      json j;
      j["group"] = {{"q", q}, {"kind", to_string(kind)}, {"order", ol.indexed->size()}};
      j["n"] = n;
      j["phi"] = jint(eulerian_phi(ol.model, n));
      j["probability"] = jrat(gen_probability(ol.model, n));
      if (!aut_s.empty()) {
        BigInt aut;
        try {
          aut = BigInt(aut_s);
        } catch (const std::exception&) {
          throw Error(ErrorKind::InvalidInput, "--aut must be an integer");
        }
        j["d"] = jrat(d_k(ol.model, n, aut));
      }
      out.emit(dump(j));
    } else if (*table4_cmd) {
      check_format(format, {"json", "csv"});
      if (!symbolic) require_odd_prime(p);
      else if (p != 0) require_odd_prime(p);
      const auto lines = symbolic ? table4_symbolic() : table4(p);
      const QPoly g = group_order_poly();
      std::vector<LineValues> vals;
      if (!symbolic) vals = evaluate(lines, p);
      if (format == "csv") {
        std::string text = "line,order,normalizer_order,class_size,mu\n";
        for (std::size_t i = 0; i < lines.size(); ++i) {
          const ClosedFormLine& l = lines[i];
          if (symbolic)
            text += std::to_string(l.id) + "," + l.order.str() + "," + l.normalizer_order.str() + "," +
                    g.exact_div(l.normalizer_order).str() + "," + l.mu.str() + "\n";
          else
            text += std::to_string(l.id) + "," + vals[i].order.str() + "," + vals[i].normalizer_order.str() + "," +
                    vals[i].class_size.str() + "," + vals[i].mu.str() + "\n";
        }
        out.emit(text);
      } else {
        json arr = json::array();
        for (std::size_t i = 0; i < lines.size(); ++i) {
          const ClosedFormLine& l = lines[i];
          json j;
          j["line"] = l.id;
          j["name"] = l.name;
          j["normalizer"] = l.normalizer_name;
          if (symbolic) {
            j["order"] = l.order.str();
            j["normalizer_order"] = l.normalizer_order.str();
            j["class_size"] = g.exact_div(l.normalizer_order).str();
            j["mu"] = l.mu.str();
          } else {
            j["order"] = jint(vals[i].order);
            j["normalizer_order"] = jint(vals[i].normalizer_order);
            j["class_size"] = jint(vals[i].class_size);
            j["mu"] = jint(vals[i].mu);
          }
          j["aschbacher"] = l.aschbacher;
          j["stabilized"] = l.stabilized;
          arr.push_back(std::move(j));
        }
        json top;
        if (symbolic) top["q"] = "q";
        else top["q"] = jint(q_of(p));
        top["group_order"] = symbolic ? json(g.str()) : jint(g.eval_int(q_of(p)));
        top["lines"] = std::move(arr);
        out.emit(dump(top));
      }
    } else if (*census_cmd) {
      require_odd_prime(p);
      if (p != 3) throw Error(ErrorKind::TooLarge, "the census runs at p = 3 only");
      const CensusAgainst ag = parse_census_against(against);
      Pgl3 ctx(8);
      Census census(ctx, opt);
      const CensusReport rep = census.run(line, ag);
      if (rep.residual != 0)
        throw Error(ErrorKind::VerificationMismatch, "census residual " + rep.residual.str() + " for line " +
                                                         std::to_string(line));
      if (rep.normalizer_empirical && BigInt(rep.normalizer_empirical) != rep.normalizer_table)
        throw Error(ErrorKind::VerificationMismatch, "scanned normalizer order differs from the closed form");
      out.emit(dump(census_json(rep)));
    } else if (*euler) {
      check_format(euler_format, {"json", "text"});
      if (method != "closed" && method != "brute" && method != "chain" && method != "all")
        throw Error(ErrorKind::InvalidInput, "method must be closed, brute, chain or all");
      const RCase rc = r_case(q, r);
      const BigInt closed = chi_closed(q, r);
      std::optional<BigInt> brute, chain;
      const bool all = method == "all";
      const bool want_brute = method == "brute" || (all && q <= 5);
      const bool want_chain = method == "chain" || (all && q <= 3);
      if (want_brute || want_chain) {
        Pgl3 ctx(q);
        const SubgroupRec full = pgl_full(ctx);
        IndexedGroup g(ctx, full);
        if (want_brute) brute = chi_bruteforce(g, r);
        if (want_chain) chain = chi_chaincount(g, r);
      }
      const bool agree = (!brute || *brute == closed) && (!chain || *chain == closed);
      std::string text;
      if (euler_format == "json") {
        json j;
        j["q"] = q;
        j["r"] = r;
        j["case_tag"] = to_string(rc);
        json v;
        v["closed"] = jint(closed);
        if (brute) v["brute"] = jint(*brute);
        if (chain) v["chain"] = jint(*chain);
        j["values"] = std::move(v);
        j["agree"] = agree;
        text = dump(j);
      } else {
        text = "case: " + to_string(rc) + "\nclosed: " + closed.str() + "\n";
        if (brute) text += "brute: " + brute->str() + "\n";
        if (chain) text += "chain: " + chain->str() + "\n";
        text += std::string("agree: ") + (agree ? "true" : "false") + "\n";
      }
      if (!agree) {
        std::cerr << text;
        throw Error(ErrorKind::VerificationMismatch, "Euler characteristic methods disagree");
      }
      out.emit(text);
    } else if (*gsum) {
      if (!symbolic && p == 0) throw Error(ErrorKind::InvalidInput, "give --p or --symbolic");
      std::string text;
      bool zero;
      if (symbolic) {
        const QPoly res = global_sum_symbolic(table4_symbolic());
        zero = res.is_zero();
        text = "residual: " + res.str() + "\n";
      } else {
        const BigInt a = global_sum_at(table4(p), p);
        const BigInt b = global_sum_direct(p);
        zero = a == 0 && b == 0;
        text = "residual: " + a.str() + "\nresidual_direct: " + b.str() + "\n";
      }
      if (!zero) {
        std::cerr << text;
        throw Error(ErrorKind::VerificationMismatch, "global-sum residual is nonzero");
      }
      out.emit(text);
    } else if (*mann) {
      const MannReport m = mann_check(p);
      std::string text;
      for (const MannRow& row : m.rows)
        text += "line " + std::to_string(row.id) + ": |mu| = " + row.abs_mu.str() + ", index = " + row.index.str() + "\n";
      text += "max ratio: " + to_string(m.max_ratio) + " (line " + std::to_string(m.argmax) + ")\n";
      if (!m.ok) {
        std::cerr << text;
        throw Error(ErrorKind::VerificationMismatch, "mann bound violated");
      }
      out.emit(text);
    } else if (*tables) {
      const ConsistencyReport c = consistency_table1_vs_table4();
      std::string text;
      for (const ConsistencyRow& row : c.rows)
        text += (row.line ? "line " + std::to_string(row.line) : std::string("G")) + " " + row.structure +
                ": structure " + (row.structure_ok ? "ok" : "differs") + ", normalizer " +
                (row.normalizer_ok ? "ok" : "differs") + ", mu " + (row.mu_ok ? "ok" : "differs") + "\n";
      text += "table1 rows: " + std::to_string(c.table1_rows) + ", table4 nonzero: " + std::to_string(c.table4_nonzero) +
              "\n";
      text += "table2 rows: " + std::to_string(table2_fixture().size()) + "\n";
      if (!c.ok || table2_fixture().size() != 20) {
        std::cerr << text;
        throw Error(ErrorKind::VerificationMismatch, "table fixtures disagree");
      }
      out.emit(text);
    } else if (*verify) {
      const VerifyProfile prof = parse_verify_profile(profile);
      const auto results = verify_all(prof, opt);
      std::string text;
      bool ok = true;
      for (const CheckResult& c : results) {
        text += format_line(c) + "\n";
        ok = ok && c.pass;
      }
      if (!ok) {
        std::cerr << text;
        return kExitMismatch;
      }
      out.emit(text);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
