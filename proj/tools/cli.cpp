#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

#include "jordantype/commutant.hpp"
#include "jordantype/jordan.hpp"
#include "jordantype/lefschetz.hpp"
#include "jordantype/tensor_cg.hpp"
#include "spec_doc.hpp"

namespace jt::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string spec;
  std::string element;
  std::string field;
  std::vector<std::string> params;
  bool json = false;
  bool compress = false;
  int trials = 0;  // 0: the command's default
  std::uint64_t seed = 0;
  unsigned workers = 1;
  long bound = 101;
};

// Text lines and structured output built side by side.
struct Output {
  bool compress = false;
  std::vector<std::string> lines;
  Json json = Json::object();

  std::string str(const Partition& p) const { return p.str(compress); }
  void line(std::string s) { lines.push_back(std::move(s)); }
  void kv(const std::string& key, const std::string& text, Json value) {
    lines.push_back(key + " = " + text);
    json[key] = std::move(value);
  }
  void partition(const std::string& key, const Partition& p) { kv(key, str(p), p.parts()); }
};

Json degree_type_json(const JordanDegreeType& d) {
  Json out = Json::array();
  for (const auto& e : d.entries()) out.push_back({e.length, e.degree});
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string optional_flag(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

template <class Fn>
void with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational())
    fn(Field<Rational>());
  else
    fn(Field<Residue>::from_spec(spec));
}

AlgebraSpecDoc load(const Options& o) {
  if (o.spec.empty()) throw Error(ErrorCode::InvalidArgs, "--spec is required");
  auto doc = load_spec_doc(o.spec);
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgs, "--param expects name=value, got " + p);
    doc.parameters[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
  }
  if (!o.field.empty()) doc.ring.field = FieldSpec::parse(o.field);
  return doc;
}

SamplingPlan plan_from(const Options& o, int default_trials) {
  SamplingPlan plan;
  plan.trials = o.trials > 0 ? o.trials : default_trials;
  plan.seed = o.seed;
  plan.workers = o.workers;
  plan.bound = o.bound;
  return plan;
}

Subspace parse_subspace(const std::string& s) {
  if (s == "linear") return Subspace::linear();
  if (s == "maximal") return Subspace::maximal_ideal();
  if (s.rfind("piece:", 0) == 0) {
    try {
      return Subspace::graded_piece(std::stoi(s.substr(6)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgs, "subspace must be linear, maximal or piece:<i>, got " + s);
}

template <class K>
Vec<K> element_of(const AlgebraSpecDoc& doc, const ArtinAlgebra<K>& a, const Options& o) {
  if (o.element.empty()) throw Error(ErrorCode::InvalidArgs, "--element is required");
  return a.normal_form(doc_poly(doc, o.element, a.field()));
}

void add_common(CLI::App* sub, Options& o, bool spec, bool element) {
  if (spec) {
    sub->add_option("--spec", o.spec, "algebra spec document")->required();
    sub->add_option("--field", o.field, "override the field: Q or Fp:<p>");
    sub->add_option("--param", o.params, "override a parameter: name=value");
  }
  if (element) sub->add_option("--element,-e", o.element, "element name or expression");
}

void add_sampling(CLI::App* sub, Options& o) {
  sub->add_option("--trials", o.trials, "number of samples")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "sampling seed");
  sub->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--bound", o.bound, "coefficient bound over Q")->check(CLI::PositiveNumber);
}

// --- algebra commands --------------------------------------------------

void cmd_hilbert(const Options& o, bool gr, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    out.kv("H", hilbert_str(a.hilbert()), a.hilbert());
    out.kv("dim", std::to_string(a.dim()), a.dim());
    out.kv("socle_degree", std::to_string(a.socle_degree()), a.socle_degree());
    out.kv("sperner", std::to_string(a.sperner()), a.sperner());
    out.kv("H_m", hilbert_str(a.m_adic_hilbert()), a.m_adic_hilbert());
    if (gr) {
      if (a.is_graded()) throw Error(ErrorCode::InvalidArgs, "--associated-graded needs a local algebra");
      auto g = associated_graded(a);
      out.kv("gr_H", hilbert_str(g.hilbert()), g.hilbert());
    }
  });
}

void cmd_jordan(const Options& o, const std::string& route, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    if (route == "dual") {
      out.partition("P", jordan_type_via_dual(doc.ring, doc_dual_generator(doc, f), doc_poly(doc, o.element, f), f));
      return;
    }
    auto a = build_from_doc(doc, f);
    out.partition("P", jordan_type(a, element_of(doc, a, o)));
  });
}

void cmd_strings(const Options& o, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    auto strings = jordan_strings(a, element_of(doc, a, o));
    out.partition("P", string_lengths(strings));
    Json list = Json::array();
    for (const auto& s : strings) {
      auto start = a.render_element(s.start);
      out.line("length " + std::to_string(s.length) + "  degree " + std::to_string(s.degree) + "  start " + start);
      list.push_back({{"length", s.length}, {"degree", s.degree}, {"start", start}});
    }
    out.json["strings"] = list;
  });
}

void cmd_degree_type(const Options& o, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    auto d = jordan_degree_type(a, element_of(doc, a, o));
    out.kv("P_D", d.str(), degree_type_json(d));
    out.partition("P", d.partition());
  });
}

void cmd_generic(const Options& o, const std::string& subspace, bool degree, bool products, Output& out) {
  auto doc = load(o);
  auto plan = plan_from(o, SamplingPlan{}.trials);
  plan.subspace = parse_subspace(subspace);
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    out.kv("subspace", plan.subspace.str(), plan.subspace.str());
    out.kv("trials", std::to_string(plan.trials), plan.trials);
    if (products) {
      out.partition("Q", q_partition(a, plan));
      return;
    }
    if (degree) {
      auto g = generic_jordan_degree_type(a, plan);
      out.kv("P_D", g.type.str(), degree_type_json(g.type));
      out.kv("witness", a.render_element(g.witness), a.render_element(g.witness));
      out.kv("witness_trial", std::to_string(g.witness_trial), g.witness_trial);
      return;
    }
    auto g = generic_jordan_type(a, plan);
    out.partition("P", g.type);
    out.kv("witness", a.render_element(g.witness), a.render_element(g.witness));
    out.kv("witness_trial", std::to_string(g.witness_trial), g.witness_trial);
  });
}

bool cmd_bounds(const Options& o, Output& out) {
  auto doc = load(o);
  bool ok = true;
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    auto r = bound_report(a, element_of(doc, a, o));
    out.partition("P_l", r.p_ell);
    if (r.sf_p) out.partition("sfP(H)", *r.sf_p);
    out.partition("P(H)", r.p_h);
    out.partition("H_m^v", r.m_adic_bound);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      out.line(c.lhs + " <= " + c.rhs + ": " + (c.holds ? "holds" : "FAILS") + " (" + dominance_name(c.relation) +
               ")");
      checks.push_back({{"lhs", c.lhs}, {"rhs", c.rhs}, {"relation", dominance_name(c.relation)}, {"holds", c.holds}});
    }
    out.json["checks"] = checks;
    ok = r.all_hold();
  });
  return ok;
}

void cmd_lefschetz(const Options& o, bool search, bool nonhomogeneous, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    if (search) {
      auto plan = plan_from(o, SamplingPlan{}.trials);
      auto r = find_sl_element(a, plan, nonhomogeneous);
      auto w = r.witness ? a.render_element(*r.witness) : std::string("none");
      out.kv("witness", w, r.witness ? Json(w) : Json(nullptr));
      out.kv("linear", yes_no(r.linear), r.linear);
      out.kv("linear_trials", std::to_string(r.linear_trials), r.linear_trials);
      out.kv("other_trials", std::to_string(r.other_trials), r.other_trials);
      out.kv("conflict", yes_no(r.conflict), r.conflict);
      return;
    }
    auto ell = element_of(doc, a, o);
    auto v = classify(a, ell);
    if (v.general_sl) check_lefhilb_equivalence(a, ell);
    out.kv("element", a.render_element(ell), a.render_element(ell));
    out.partition("jordan", v.jordan);
    out.partition("h_conjugate", v.h_conjugate);
    out.kv("sljt", yes_no(v.sljt), v.sljt);
    out.kv("narrow_sl", optional_flag(v.narrow_sl), optional_json(v.narrow_sl));
    out.kv("general_sl", optional_flag(v.general_sl), optional_json(v.general_sl));
    out.kv("weak_l", optional_flag(v.weak_l), optional_json(v.weak_l));
    if (v.failing_witness)
      out.kv("failing_witness",
             "(" + std::to_string(v.failing_witness->first) + "," + std::to_string(v.failing_witness->second) + ")",
             {v.failing_witness->first, v.failing_witness->second});
    else
      out.kv("failing_witness", "none", nullptr);
    out.kv("modular_regime", yes_no(v.modular_regime), v.modular_regime);
  });
}

void cmd_dual(const Options& o, bool generators, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    auto F = doc_dual_generator(doc, f);
    out.kv("length", std::to_string(inverse_system_dim(F, doc.ring, f)), inverse_system_dim(F, doc.ring, f));
    auto a = algebra_from_dual(doc.ring, F, f);
    out.kv("H", hilbert_str(a.hilbert()), a.hilbert());
    if (generators) {
      Json list = Json::array();
      std::string text;
      for (const auto& g : annihilator_generators(doc.ring, F, f)) {
        auto s = render(g, doc.ring);
        text += (text.empty() ? "" : ", ") + s;
        list.push_back(s);
      }
      out.kv("annihilator", text, list);
    }
    if (o.element.empty()) return;
    auto ell = doc_poly(doc, o.element, f);
    Json hs = Json::array();
    auto inter = intermediate_hilberts(doc.ring, F, ell, f);
    for (std::size_t i = 0; i < inter.size(); ++i) {
      out.line("H[" + std::to_string(i) + "] = " + hilbert_str(inter[i]));
      hs.push_back(inter[i]);
    }
    out.json["intermediate"] = hs;
    out.partition("P", jordan_type_via_dual(doc.ring, F, ell, f));
  });
}

void cmd_poset(const Options& o, Output& out) {
  auto doc = load(o);
  with_field(doc.ring.field, [&](const auto& f) {
    auto a = build_from_doc(doc, f);
    auto s = poset_sample(a, plan_from(o, SamplingPlan{}.trials));
    std::string text;
    Json types = Json::array();
    for (const auto& t : s.types) {
      text += (text.empty() ? "" : " ") + out.str(t);
      types.push_back(t.parts());
    }
    out.kv("types", text, types);
    Json covers = Json::array();
    for (auto [i, j] : s.covers) {
      out.line("cover " + out.str(s.types[i]) + " < " + out.str(s.types[j]));
      covers.push_back({s.types[i].parts(), s.types[j].parts()});
    }
    out.json["covers"] = covers;
  });
}

// --- combinatorial commands ----------------------------------------------

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::InvalidArgs, "expected an integer, got " + s);
}

std::vector<std::uint32_t> prime_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<std::uint32_t>(to_int(item)));
  if (out.empty()) throw Error(ErrorCode::InvalidArgs, "empty prime list");
  return out;
}

std::string epsilon_str(const std::vector<int>& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

struct TensorArgs {
  std::vector<int> mn;
  std::uint32_t p = 0;
  std::vector<std::string> table;
  std::vector<std::string> general;
  std::vector<int> degree;
  bool csv = false;
};

void cmd_tensor(const Options& o, const TensorArgs& t, Output& out) {
  if (!t.table.empty()) {
    auto rows = lambda_table(to_int(t.table[0]), to_int(t.table[1]), prime_list(t.table[2]), o.workers);
    Json list = Json::array();
    if (t.csv) out.line("m,n,p,lambda,epsilon");
    for (const auto& r : rows) {
      auto lam = out.str(r.lambda), eps = epsilon_str(r.epsilon);
      if (t.csv)
        out.line(std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.p) + ",\"" + lam + "\",\"" +
                 eps + "\"");
      else
        out.line("m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) + " p=" + std::to_string(r.p) +
                 "  lambda = " + lam + "  epsilon = " + eps);
      list.push_back({{"m", r.m}, {"n", r.n}, {"p", r.p}, {"lambda", r.lambda.parts()}, {"epsilon", r.epsilon}});
    }
    out.json["rows"] = list;
    return;
  }
  if (!t.general.empty()) {
    auto p = Partition::parse(t.general[0]), q = Partition::parse(t.general[1]);
    out.partition("P", cg_general(p, q));
    out.kv("kernel", std::to_string(cg_kernel_dimension(p, q)), cg_kernel_dimension(p, q));
    return;
  }
  if (!t.degree.empty()) {
    auto d = cg_degree(t.degree[0], t.degree[1], t.degree[2], t.degree[3]);
    out.kv("P_D", d.str(), degree_type_json(d));
    return;
  }
  if (t.mn.size() != 2) throw Error(ErrorCode::InvalidArgs, "tensor-cg needs m n, --general, --degree or --table");
  const int m = t.mn[0], n = t.mn[1];
  Partition lambda;
  std::vector<int> eps;
  if (t.p == 0) {
    lambda = cg_block(m, n);
    for (int part : lambda.parts()) eps.push_back(part - std::max(m, n));
  } else {
    auto d = deviation(m, n, t.p);
    lambda = modular_lambda(m, n, t.p);
    eps = d.epsilon;
  }
  out.lines.push_back("lambda = " + out.str(lambda) + "  epsilon = " + epsilon_str(eps));
  out.json["lambda"] = lambda.parts();
  out.json["epsilon"] = eps;
}

struct QpArgs {
  std::string partition;
  std::optional<std::uint32_t> p;
  bool brute = false;
};

void cmd_qp(const Options& o, const QpArgs& q, Output& out) {
  auto p = Partition::parse(q.partition);
  if (q.brute) {
    const std::uint32_t ch = q.p.value_or(3);
    auto r = brute_qp(p, ch);
    out.kv("field", FieldSpec::prime_field(ch).str(), FieldSpec::prime_field(ch).str());
    if (r.maximum)
      out.partition("Q", *r.maximum);
    else
      out.kv("Q", "none", nullptr);
    std::string text;
    Json maximal = Json::array();
    for (const auto& m : r.maximal) {
      text += (text.empty() ? "" : " ") + out.str(m);
      maximal.push_back(m.parts());
    }
    out.kv("maximal", text, maximal);
    out.kv("mode", brute_mode_name(r.mode), brute_mode_name(r.mode));
    out.kv("examined", std::to_string(r.examined), r.examined);
    return;
  }
  const std::uint32_t ch = q.p.value_or(10007);
  auto plan = plan_from(o, 24);
  auto report = [&](const auto& s, const FieldSpec& spec) {
    out.kv("field", spec.str(), spec.str());
    out.partition("Q", s.type);
    out.kv("stable", yes_no(is_stable(s.type)), is_stable(s.type));
    out.kv("parts", std::to_string(s.type.size()), s.type.size());
    out.kv("ar_cover_number", std::to_string(ar_cover_number(p)), ar_cover_number(p));
    out.kv("witness_trial", std::to_string(s.witness_trial), s.witness_trial);
    out.kv("exploratory", yes_no(s.exploratory), s.exploratory);
  };
  if (ch == 0)
    report(sample_qp(p, Field<Rational>(), plan), FieldSpec::rationals());
  else
    report(sample_qp(p, Field<Residue>::from_spec(FieldSpec::prime_field(ch)), plan), FieldSpec::prime_field(ch));
}

void expect_args(const std::vector<std::string>& a, std::size_t n, const std::string& op) {
  if (a.size() != n)
    throw Error(ErrorCode::InvalidArgs, "partition " + op + " takes " + std::to_string(n) + " argument(s)");
}

void cmd_partition(const std::string& op, const std::vector<std::string>& a, Output& out) {
  auto bare = [&](const Partition& p) {
    out.line(out.str(p));
    out.json["result"] = p.parts();
  };
  auto flag = [&](bool b) {
    out.line(yes_no(b));
    out.json["result"] = b;
  };
  auto number = [&](int v) {
    out.line(std::to_string(v));
    out.json["result"] = v;
  };
  auto degree = [&](const JordanDegreeType& d) {
    out.line(d.str());
    out.json["result"] = degree_type_json(d);
  };
  if (op == "conjugate") {
    expect_args(a, 1, op);
    bare(conjugate(Partition::parse(a[0])));
  } else if (op == "compare") {
    expect_args(a, 2, op);
    auto d = dominance_name(dominance_cmp(Partition::parse(a[0]), Partition::parse(a[1])));
    out.line(d);
    out.json["result"] = d;
  } else if (op == "p-of-h") {
    expect_args(a, 1, op);
    bare(p_of_h(parse_hilbert(a[0])));
  } else if (op == "sfp-of-h") {
    expect_args(a, 1, op);
    bare(sf_p_of_h(parse_hilbert(a[0])));
  } else if (op == "degree-type") {
    expect_args(a, 1, op);
    degree(degree_type_of_h(parse_hilbert(a[0])));
  } else if (op == "almost-rectangular") {
    expect_args(a, 2, op);
    bare(almost_rectangular(to_int(a[0]), to_int(a[1])));
  } else if (op == "power") {
    expect_args(a, 2, op);
    bare(power_partition(Partition::parse(a[0]), to_int(a[1])));
  } else if (op == "stable") {
    expect_args(a, 1, op);
    flag(is_stable(Partition::parse(a[0])));
  } else if (op == "ar-cover") {
    expect_args(a, 1, op);
    number(ar_cover_number(Partition::parse(a[0])));
  } else if (op == "sum") {
    expect_args(a, 2, op);
    bare(dominance_sum(Partition::parse(a[0]), Partition::parse(a[1])));
  } else if (op == "collapse") {
    expect_args(a, 1, op);
    auto r = collapse_closure(JordanDegreeType::parse(a[0]));
    degree(r.closure);
    out.json["strategy"] = r.strategy == CollapseStrategy::Exhaustive ? "exhaustive" : "greedy";
  } else if (op == "compatibility") {
    expect_args(a, 2, op);
    auto c = compatibility_name(check_compatibility(Partition::parse(a[0]), Partition::parse(a[1])));
    out.line(c);
    out.json["result"] = c;
  } else {
    throw Error(ErrorCode::InvalidArgs, "unknown partition operation '" + op + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan types of elements of Artinian algebras"};
  app.name("jtype");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "structured output");
  app.add_flag("--compress", o.compress, "print repeated parts as a^k");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and basic invariants");
  add_common(hilbert, o, true, false);
  bool gr = false;
  hilbert->add_flag("--associated-graded", gr, "also report the associated graded algebra");

  auto* jordan = app.add_subcommand("jordan", "Jordan type of multiplication by an element");
  add_common(jordan, o, true, true);
  std::string route = "direct";
  jordan->add_option("--route", route, "direct or dual")->check(CLI::IsMember({"direct", "dual"}));

  auto* strings = app.add_subcommand("strings", "Jordan strings of an element");
  add_common(strings, o, true, true);

  auto* dtype = app.add_subcommand("degree-type", "Jordan degree type of a homogeneous element");
  add_common(dtype, o, true, true);

  auto* generic = app.add_subcommand("generic", "generic Jordan type by sampling");
  add_common(generic, o, true, false);
  add_sampling(generic, o);
  std::string subspace = "linear";
  bool degree = false, products = false;
  generic->add_option("--subspace", subspace, "linear, maximal or piece:<i>");
  generic->add_flag("--degree", degree, "generic Jordan degree type");
  generic->add_flag("--products", products, "partition from products of generic elements");

  auto* bounds = app.add_subcommand("bounds", "Jordan type against the Hilbert function bounds");
  add_common(bounds, o, true, true);

  auto* lef = app.add_subcommand("lefschetz", "Lefschetz properties of an element");
  add_common(lef, o, true, true);
  add_sampling(lef, o);
  bool search = false, linear_only = false;
  lef->add_flag("--search", search, "search for an element of strong Lefschetz Jordan type");
  lef->add_flag("--linear-only", linear_only, "search linear forms only");

  auto* dual = app.add_subcommand("dual", "inverse system of a dual generator");
  add_common(dual, o, true, true);
  bool gens = false;
  dual->add_flag("--generators", gens, "print generators of the annihilator");

  auto* tensor = app.add_subcommand("tensor-cg", "Jordan types of tensor products");
  TensorArgs t;
  tensor->add_option("mn", t.mn, "block sizes m n")->expected(0, 2);
  tensor->add_option("--char", t.p, "prime characteristic");
  tensor->add_option("--table", t.table, "m_max n_max p1,p2,...")->expected(3);
  tensor->add_option("--general", t.general, "two partitions")->expected(2);
  tensor->add_option("--degree", t.degree, "m s n t")->expected(4);
  tensor->add_flag("--csv", t.csv, "CSV table output");
  tensor->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* qp = app.add_subcommand("qp", "generic Jordan type of the nilpotent commutator");
  QpArgs q;
  qp->add_option("--partition", q.partition, "Jordan type of B, e.g. 3,2")->required();
  qp->add_option("--char", q.p, "field characteristic (0 for Q)");
  qp->add_flag("--brute", q.brute, "exhaustive search over a field of size <= 3");
  add_sampling(qp, o);

  auto* poset = app.add_subcommand("poset", "observed Jordan types and their dominance covers");
  add_common(poset, o, true, false);
  add_sampling(poset, o);

  auto* part = app.add_subcommand("partition", "partition combinatorics");
  std::string op;
  std::vector<std::string> part_args;
  part->add_option("op", op,
                   "conjugate, compare, p-of-h, sfp-of-h, degree-type, almost-rectangular, power, stable, "
                   "ar-cover, sum, collapse, compatibility")
      ->required();
  part->add_option("args", part_args, "operands");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output result;
  result.compress = o.compress;
  int code = 0;
  std::string command;
  try {
    if (*hilbert) cmd_hilbert(o, gr, result), command = "hilbert";
    else if (*jordan) cmd_jordan(o, route, result), command = "jordan";
    else if (*strings) cmd_strings(o, result), command = "strings";
    else if (*dtype) cmd_degree_type(o, result), command = "degree-type";
    else if (*generic) cmd_generic(o, subspace, degree, products, result), command = "generic";
    else if (*bounds) {
      command = "bounds";
      if (!cmd_bounds(o, result)) code = 3;
    } else if (*lef) cmd_lefschetz(o, search, !linear_only, result), command = "lefschetz";
    else if (*dual) cmd_dual(o, gens, result), command = "dual";
    else if (*tensor) cmd_tensor(o, t, result), command = "tensor-cg";
    else if (*qp) cmd_qp(o, q, result), command = "qp";
    else if (*poset) cmd_poset(o, result), command = "poset";
    else if (*part) cmd_partition(op, part_args, result), command = "partition";
  } catch (const Error& e) {
    if (is_internal(e.code())) {
      err << "internal error: " << error_code_name(e.code()) << ": " << e.what() << "\n"
          << "this is a bug in jtype; please report it with the command line and spec file\n";
      return 3;
    }
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n"
        << "this is a bug in jtype; please report it with the command line and spec file\n";
    return 3;
  }

  if (o.json) {
    Json doc = Json::object();
    doc["schema"] = kJsonSchema;
    doc["command"] = command;
    for (auto& [key, value] : result.json.items()) doc[key] = value;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : result.lines) out << line << "\n";
  }
  if (code == 3) err << "internal error: a Hilbert function bound failed; please report this\n";
  return code;
}

}  // namespace jt::cli
